//! Machine-readable forms of ideals and decompositions.
//!
//! An ideal is `{"ring":["x","y"],"gens":[[2,0],[1,1]]}`; decompositions
//! list components as `{"kind":"primary","gens":[...],"prime":[0,1]}` with
//! 0-based variable indices.

use serde::{Deserialize, Serialize};

use crate::decomposition::{Component, Decomposition};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exp, Monomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: Vec<String>,
    pub gens: Vec<Vec<Exp>>,
}

impl IdealJson {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealJson {
            ring: ideal.ring().names().to_vec(),
            gens: exponent_rows(ideal),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let ring = Ring::new(&self.ring)?;
        let n = ring.nvars();
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            if g.len() != n {
                return Err(Error::WrongArity {
                    expected: n,
                    found: g.len(),
                });
            }
            gens.push(Monomial::new(g.clone()));
        }
        MonomialIdeal::minimalize(&ring, gens)
    }
}

fn exponent_rows(ideal: &MonomialIdeal) -> Vec<Vec<Exp>> {
    ideal.gens().iter().map(|g| g.exps().to_vec()).collect()
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> String {
    serde_json::to_string(&IdealJson::from_ideal(ideal)).expect("plain data")
}

pub fn ideal_from_json(text: &str) -> Result<MonomialIdeal> {
    let parsed: IdealJson = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))?;
    parsed.to_ideal()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub kind: String,
    pub gens: Vec<Vec<Exp>>,
    pub prime: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub ring: Vec<String>,
    pub components: Vec<ComponentJson>,
    pub irredundant: bool,
}

impl DecompositionJson {
    pub fn new<C: Component>(ring: &Ring, d: &Decomposition<C>) -> Self {
        let components = d
            .components
            .iter()
            .map(|c| ComponentJson {
                kind: c.kind().to_string(),
                gens: exponent_rows(c.component_ideal()),
                prime: c.component_prime().as_slice().to_vec(),
            })
            .collect();
        DecompositionJson {
            ring: ring.names().to_vec(),
            components,
            irredundant: d.irredundant,
        }
    }
}
