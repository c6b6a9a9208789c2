use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "quatdix", version, about = "Forward displacement of spherical parallel manipulators by Dixon elimination")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve for every platform orientation.
    Solve {
        #[command(flatten)]
        angles: AngleSource,
        #[command(flatten)]
        out: Output,
        /// Keep the eight extraneous points, flagged, after the solutions.
        #[arg(long)]
        include_extraneous: bool,
    },
    /// Print the Dixon determinant in the retained unknown.
    DixonDet {
        #[command(flatten)]
        input: SystemSource,
        #[command(flatten)]
        out: Output,
        #[arg(long, value_parser = ["q0", "q1", "q2", "q3"])]
        retain: Option<String>,
    },
    /// Evaluate the four equations at a quaternion.
    Verify {
        #[command(flatten)]
        input: SystemSource,
        #[command(flatten)]
        out: Output,
        /// Four comma-separated coordinates, decimals or "n/d".
        #[arg(long, required = true, allow_hyphen_values = true)]
        point: String,
    },
    /// Brute-force Newton search over the unit sphere.
    #[command(hide = true)]
    Oracle {
        #[command(flatten)]
        input: SystemSource,
        #[command(flatten)]
        out: Output,
        #[arg(long, default_value_t = 24)]
        grid: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct AngleSource {
    /// Motor angles in radians: a,b,c
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// Exact sine/cosine pairs: A1,B1 A2,B2 A3,B3
    #[arg(long, num_args = 3, allow_hyphen_values = true)]
    pub sincos: Option<Vec<String>>,
    /// Motor angles as a JSON file.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct SystemSource {
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    #[arg(long, num_args = 3, allow_hyphen_values = true)]
    pub sincos: Option<Vec<String>>,
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// A quadric system as JSON.
    #[arg(long)]
    pub system: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Significant digits of floating-point output.
    #[arg(long, default_value_t = 17, value_parser = clap::value_parser!(u32).range(1..=60))]
    pub precision: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}
