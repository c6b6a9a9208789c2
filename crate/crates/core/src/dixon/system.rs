use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{MultiPoly, Var};
use crate::rational::{parse_rational, Rational};

/// Four polynomials of degree at most two in three eliminated unknowns. An
/// optional retained unknown and any number of parameters may appear in the
/// coefficients; `bindings` assigns exact values to parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricSystem {
    pub polys: [MultiPoly; 4],
    pub eliminated: [Var; 3],
    pub retained: Option<Var>,
    pub parameters: Vec<Var>,
    pub bindings: BTreeMap<Var, Rational>,
}

impl QuadricSystem {
    pub fn new(
        polys: [MultiPoly; 4],
        eliminated: [Var; 3],
        retained: Option<Var>,
        parameters: Vec<Var>,
    ) -> Result<Self> {
        let sys = QuadricSystem {
            polys,
            eliminated,
            retained,
            parameters,
            bindings: BTreeMap::new(),
        };
        sys.validate()?;
        Ok(sys)
    }

    /// Four quadrics in `q0..q3`, retaining `q0`.
    pub fn quaternion(polys: [MultiPoly; 4]) -> Result<Self> {
        QuadricSystem::new(
            polys,
            [Var::new("q1"), Var::new("q2"), Var::new("q3")],
            Some(Var::new("q0")),
            Vec::new(),
        )
    }

    pub fn with_bindings(mut self, bindings: BTreeMap<Var, Rational>) -> Result<Self> {
        self.bindings = bindings;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let elim: BTreeSet<&Var> = self.eliminated.iter().collect();
        if elim.len() != 3 {
            return Err(Error::InvalidSystem("eliminated unknowns must be distinct".into()));
        }
        let mut others: Vec<&Var> = self.parameters.iter().collect();
        others.extend(self.retained.iter());
        if others.iter().any(|v| elim.contains(v)) {
            return Err(Error::InvalidSystem(
                "eliminated unknowns overlap the retained unknown or parameters".into(),
            ));
        }
        if self.retained.as_ref().is_some_and(|r| self.parameters.contains(r)) {
            return Err(Error::InvalidSystem("retained unknown listed as a parameter".into()));
        }
        for (i, p) in self.polys.iter().enumerate() {
            if p.degree_in(&self.eliminated) > 2 {
                return Err(Error::InvalidSystem(format!(
                    "f{} has degree above two in the eliminated unknowns",
                    i + 1
                )));
            }
            for v in p.unknowns() {
                if !elim.contains(&v) && !others.contains(&&v) {
                    return Err(Error::InvalidSystem(format!(
                        "unknown `{v}` in f{} is not declared",
                        i + 1
                    )));
                }
            }
        }
        for v in self.bindings.keys() {
            if !self.parameters.contains(v) {
                return Err(Error::InvalidSystem(format!("binding for undeclared parameter `{v}`")));
            }
        }
        Ok(())
    }

    /// Substitutes the bound parameters. Remaining parameters stay symbolic.
    pub fn bound(&self) -> QuadricSystem {
        if self.bindings.is_empty() {
            return self.clone();
        }
        let values: HashMap<Var, Rational> = self
            .bindings
            .iter()
            .map(|(v, r)| (v.clone(), r.clone()))
            .collect();
        QuadricSystem {
            polys: self.polys.clone().map(|p| p.substitute_values(&values)),
            eliminated: self.eliminated.clone(),
            retained: self.retained.clone(),
            parameters: self
                .parameters
                .iter()
                .filter(|p| !self.bindings.contains_key(*p))
                .cloned()
                .collect(),
            bindings: BTreeMap::new(),
        }
    }

    /// Parameters without a binding.
    pub fn free_parameters(&self) -> Vec<Var> {
        self.parameters
            .iter()
            .filter(|p| !self.bindings.contains_key(*p))
            .cloned()
            .collect()
    }

    /// The same system with `v` retained instead. The previously retained
    /// unknown takes `v`'s slot among the eliminated ones.
    pub fn with_retained(&self, v: &Var) -> Result<QuadricSystem> {
        if self.retained.as_ref() == Some(v) {
            return Ok(self.clone());
        }
        let old = self
            .retained
            .clone()
            .ok_or_else(|| Error::InvalidSystem("system has no retained unknown".into()))?;
        let slot = self
            .eliminated
            .iter()
            .position(|e| e == v)
            .ok_or_else(|| Error::InvalidSystem(format!("`{v}` is not an eliminated unknown")))?;
        let mut eliminated = self.eliminated.clone();
        eliminated[slot] = old;
        let sys = QuadricSystem {
            eliminated,
            retained: Some(v.clone()),
            ..self.clone()
        };
        sys.validate()?;
        Ok(sys)
    }

    /// All four unknowns `[retained, eliminated...]`, when retained is set.
    pub fn unknowns(&self) -> Vec<Var> {
        self.retained
            .iter()
            .chain(self.eliminated.iter())
            .cloned()
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SystemJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: SystemJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        j.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    polys: Vec<MultiPoly>,
    eliminated: Vec<String>,
    #[serde(default)]
    retained: Option<String>,
    #[serde(default)]
    parameters: Vec<String>,
    #[serde(default)]
    bindings: BTreeMap<String, String>,
}

impl From<&QuadricSystem> for SystemJson {
    fn from(s: &QuadricSystem) -> Self {
        SystemJson {
            polys: s.polys.to_vec(),
            eliminated: s.eliminated.iter().map(|v| v.name().to_string()).collect(),
            retained: s.retained.as_ref().map(|v| v.name().to_string()),
            parameters: s.parameters.iter().map(|v| v.name().to_string()).collect(),
            bindings: s
                .bindings
                .iter()
                .map(|(v, r)| (v.name().to_string(), r.to_string()))
                .collect(),
        }
    }
}

impl TryFrom<SystemJson> for QuadricSystem {
    type Error = Error;

    fn try_from(j: SystemJson) -> Result<Self> {
        let polys: [MultiPoly; 4] = j
            .polys
            .try_into()
            .map_err(|_| Error::Parse("expected exactly four polynomials".into()))?;
        let eliminated: Vec<Var> = j.eliminated.iter().map(|s| Var::new(s)).collect();
        let eliminated: [Var; 3] = eliminated
            .try_into()
            .map_err(|_| Error::Parse("expected exactly three eliminated unknowns".into()))?;
        let bindings = j
            .bindings
            .iter()
            .map(|(k, v)| Ok((Var::new(k), parse_rational(v)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        QuadricSystem::new(
            polys,
            eliminated,
            j.retained.as_deref().map(Var::new),
            j.parameters.iter().map(|s| Var::new(s)).collect(),
        )?
        .with_bindings(bindings)
    }
}
