//! Level grading and the K-Pieri rule.
//!
//! The level of a pattern is its top-left entry, which is also the number of
//! generators in its decomposition. A factor space at level `K` is nonzero
//! exactly when the classical pattern exists and has level at most `K`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pieri::{
    build_dual_pattern, build_pattern, decompose, pieri_generators, GeneratorMultiset, InterlacingPattern, Orientation,
    PieriGenerator,
};
use crate::weights::{check_rank, SlWeight};

pub fn level(p: &InterlacingPattern) -> u64 {
    p.level()
}

/// A pattern together with a level bound `K >= level(pattern)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeveledPattern {
    pattern: InterlacingPattern,
    level_bound: u64,
}

impl LeveledPattern {
    pub fn new(pattern: InterlacingPattern, level_bound: u64) -> Result<Self> {
        if pattern.level() > level_bound {
            return Err(Error::LevelExceeded { position: 0, level: pattern.level(), bound: level_bound });
        }
        Ok(Self { pattern, level_bound })
    }

    pub fn pattern(&self) -> &InterlacingPattern {
        &self.pattern
    }

    pub fn level_bound(&self) -> u64 {
        self.level_bound
    }

    /// Generator decomposition with the identity `[0,0]` padding the level
    /// up to `K`.
    pub fn decompose(&self) -> GeneratorMultiset {
        let mut gens = decompose(&self.pattern);
        let pad = self.level_bound - self.pattern.level();
        if pad > 0 {
            gens.insert(PieriGenerator::identity(self.pattern.rank(), self.pattern.orientation()), pad);
        }
        gens
    }
}

/// `dim V_{0,3}(λ, rω₁, η, K)`, which is 0 or 1.
pub fn kpieri_dim(lambda: &SlWeight, r: u64, eta: &SlWeight, k: u64) -> Result<u8> {
    let p = build_pattern(lambda, r, eta)?;
    Ok(u8::from(p.is_some_and(|p| r <= k && p.level() <= k)))
}

/// `dim V_{0,3}(λ, sω_{m-1}, η, K)`, which is 0 or 1.
pub fn kpieri_dual_dim(lambda: &SlWeight, s: u64, eta: &SlWeight, k: u64) -> Result<u8> {
    let p = build_dual_pattern(lambda, s, eta)?;
    Ok(u8::from(p.is_some_and(|p| s <= k && p.level() <= k)))
}

/// The four three-point factor types along the caterpillar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FactorKind {
    /// First factor `V(r₁ω₁, r₂ω₁, η)`.
    Ppb,
    /// Interior factor `V(λ, rω₁, η)`.
    Bpb,
    /// Interior factor `V(λ, sω_{m-1}, η)`.
    BpStarB,
    /// Last factor `V(λ, s_{b-1}ω_{m-1}, s_bω_{m-1})`.
    BpStarPStar,
}

impl FactorKind {
    pub fn orientation(self) -> Orientation {
        match self {
            FactorKind::Ppb | FactorKind::Bpb => Orientation::Normal,
            FactorKind::BpStarB | FactorKind::BpStarPStar => Orientation::Dual,
        }
    }

    /// Whether a generator `[i, j]` belongs to this factor's semigroup: the
    /// end factors require their outer leg to be a multiple of `ω₁`
    /// (resp. `ω_{m-1}`), i.e. `i` (resp. `j`) in `{0, m-1}`.
    pub fn admits(self, g: &PieriGenerator) -> bool {
        let m = g.rank();
        let (i, j) = g.indices();
        g.orientation() == self.orientation()
            && match self {
                FactorKind::Ppb => i == 0 || i == m - 1,
                FactorKind::BpStarPStar => j == 0 || j == m - 1,
                _ => true,
            }
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorKind::Ppb => "PPB",
            FactorKind::Bpb => "BPB",
            FactorKind::BpStarB => "BP*B",
            FactorKind::BpStarPStar => "BP*P*",
        })
    }
}

impl FromStr for FactorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "PPB" => Ok(FactorKind::Ppb),
            "BPB" => Ok(FactorKind::Bpb),
            "BP*B" | "BPSB" => Ok(FactorKind::BpStarB),
            "BP*P*" | "BPSPS" => Ok(FactorKind::BpStarPStar),
            other => Err(Error::Parse(format!("unknown factor kind `{other}`"))),
        }
    }
}

/// Level-one generators of a K-Pieri algebra, identity `[0,0]` first:
/// `2m` for the interior factors, 4 for the end factors.
pub fn k_generators(m: usize, kind: FactorKind) -> Result<Vec<PieriGenerator>> {
    check_rank(m)?;
    let o = kind.orientation();
    let mut out = vec![PieriGenerator::identity(m, o)];
    out.extend(pieri_generators(m, o).into_iter().filter(|g| kind.admits(g)));
    Ok(out)
}
