//! JSON descriptors for semigroups, parametrized instances, lattice paths
//! and posets. These are the wire formats of the command-line tools.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kw::KwSemigroup;
use crate::poset::AperyPoset;
use crate::semigroup::NumericalSemigroup;

/// Tagged semigroup input: either a raw generator list or a Kunz–Waldi
/// parametrization.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum SemigroupDescriptor {
    #[serde(rename = "generators")]
    Generators { gens: Vec<u64> },
    #[serde(rename = "kw")]
    Kw {
        p: u64,
        q: u64,
        x: Vec<u64>,
        y: Vec<u64>,
    },
}

impl SemigroupDescriptor {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::input(format!("bad semigroup descriptor: {e}")))
    }

    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        match self {
            SemigroupDescriptor::Generators { gens } => NumericalSemigroup::new(gens),
            SemigroupDescriptor::Kw { .. } => Ok(self.kw()?.semigroup().clone()),
        }
    }

    /// The parametrized instance; generator lists are rejected since the
    /// parametrization cannot be inferred uniquely in general.
    pub fn kw(&self) -> Result<KwSemigroup> {
        match self {
            SemigroupDescriptor::Kw { p, q, x, y } => KwSemigroup::new(*p, *q, x, y),
            SemigroupDescriptor::Generators { .. } => Err(Error::input(
                "this command needs a {\"type\":\"kw\",...} descriptor".to_string(),
            )),
        }
    }
}

/// Poset commands accept either a semigroup descriptor (the poset is then
/// computed) or raw labeled cover data.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum PosetInput {
    Semigroup(SemigroupDescriptor),
    Covers {
        m: usize,
        covers: Vec<(usize, usize)>,
    },
}

impl PosetInput {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("bad poset input: {e}")))
    }

    pub fn poset(&self) -> Result<AperyPoset> {
        match self {
            PosetInput::Semigroup(d) => Ok(AperyPoset::of_semigroup(&d.semigroup()?)),
            PosetInput::Covers { m, covers } => AperyPoset::from_covers(*m, covers),
        }
    }
}

/// JSON form of a labeled poset.
#[derive(Debug, Clone, Serialize)]
pub struct PosetJson {
    pub m: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apery: Option<Vec<u64>>,
}

impl From<&AperyPoset> for PosetJson {
    fn from(p: &AperyPoset) -> Self {
        PosetJson {
            m: p.modulus(),
            covers: p.covers().iter().copied().collect(),
            apery: p.apery_values().map(|v| v.to_vec()),
        }
    }
}

/// JSON form of a lattice path: corner list inside the parameter rectangle.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticePathJson {
    pub p: u64,
    pub q: u64,
    pub corners: Vec<(u64, u64)>,
}
