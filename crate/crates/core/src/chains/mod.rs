//! The caterpillar fiber-product semigroups.
//!
//! An element of `Q(a,b)` is a chain of `a + b - 2` interlacing patterns: one
//! PPB factor, `a - 2` BPB factors, `b - 2` BP*B factors and one BP*P*
//! factor, glued so that `∂₁` of each factor is the dual of `∂₂` of the next.
//! Elements of `P(a,b)` additionally carry a level `K` bounding the level of
//! every factor.

mod relations;
mod tuple;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use relations::{swap_pairs, swap_relations, SwapRelation};
pub use tuple::{enumerate_x, enumerate_y, weyl_tuple, zero_split, GeneratorTuple, WeylInvariant};

use crate::error::{Error, Result};
use crate::kpieri::FactorKind;
use crate::pieri::{build_dual_pattern, build_pattern, InterlacingPattern, Orientation};
use crate::weights::{check_rank, SlWeight};

/// The numbers `(m, a, b)` fixing a caterpillar: rank, number of `P` legs and
/// number of `P*` legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChainShape {
    pub m: usize,
    pub a: usize,
    pub b: usize,
}

impl ChainShape {
    pub fn new(m: usize, a: usize, b: usize) -> Result<Self> {
        check_rank(m)?;
        if a < 2 || b < 2 {
            return Err(Error::InvalidInput(format!("need a >= 2 and b >= 2, got a = {a}, b = {b}")));
        }
        Ok(Self { m, a, b })
    }

    /// Entries of a generator tuple.
    pub fn tuple_len(&self) -> usize {
        self.a + self.b - 1
    }

    pub fn factor_count(&self) -> usize {
        self.a + self.b - 2
    }

    /// Kind of the factor at 0-based position `k`.
    pub fn factor_kind(&self, k: usize) -> FactorKind {
        let last = self.factor_count() - 1;
        match k {
            0 => FactorKind::Ppb,
            k if k == last => FactorKind::BpStarPStar,
            k if k < self.a - 1 => FactorKind::Bpb,
            _ => FactorKind::BpStarB,
        }
    }

    pub fn factor_orientation(&self, k: usize) -> Orientation {
        if k < self.a - 1 {
            Orientation::Normal
        } else {
            Orientation::Dual
        }
    }
}

impl fmt::Display for ChainShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} a={} b={}", self.m, self.a, self.b)
    }
}

/// Multidegree `(r⃗, s⃗, K)` of a chain element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightData {
    pub r: Vec<u64>,
    pub s: Vec<u64>,
    pub level: Option<u64>,
}

impl WeightData {
    pub fn zero(a: usize, b: usize, level: Option<u64>) -> Self {
        Self { r: vec![0; a], s: vec![0; b], level }
    }

    pub fn checked_add(&self, other: &WeightData) -> Result<WeightData> {
        if self.r.len() != other.r.len() || self.s.len() != other.s.len() {
            return Err(Error::InvalidInput("weight data of different shapes".into()));
        }
        let add = |x: &[u64], y: &[u64]| x.iter().zip(y).map(|(p, q)| p + q).collect();
        let level = match (self.level, other.level) {
            (Some(x), Some(y)) => Some(x + y),
            (None, None) => None,
            _ => return Err(Error::InvalidInput("cannot add leveled and unleveled weight data".into())),
        };
        Ok(WeightData { r: add(&self.r, &other.r), s: add(&self.s, &other.s), level })
    }
}

impl fmt::Display for WeightData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "r=({}) s=({})", join(&self.r), join(&self.s))?;
        if let Some(k) = self.level {
            write!(f, " K={k}")?;
        }
        Ok(())
    }
}

/// An element of `Q(a,b)` (no level) or `P(a,b)` (with level).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChainElement {
    shape: ChainShape,
    factors: Vec<InterlacingPattern>,
    level: Option<u64>,
}

/// Checks orientation order, boundary matching, the rank-one end legs and
/// the level bound, and assembles the chain.
///
/// The shape is read off the factors: `a - 1` normal factors followed by
/// `b - 1` dual ones. Positions in errors are 1-based factor indices.
pub fn glue(factors: Vec<InterlacingPattern>, level: Option<u64>) -> Result<ChainElement> {
    let first = factors.first().ok_or_else(|| Error::InvalidInput("a chain needs at least two factors".into()))?;
    let m = first.rank();
    if let Some(p) = factors.iter().find(|p| p.rank() != m) {
        return Err(Error::RankMismatch { expected: m, found: p.rank() });
    }
    let normal = factors.iter().take_while(|p| p.orientation() == Orientation::Normal).count();
    if factors[normal..].iter().any(|p| p.orientation() == Orientation::Normal) {
        return Err(Error::InvalidInput("normal factors must precede dual factors".into()));
    }
    let shape = ChainShape::new(m, normal + 1, factors.len() - normal + 1)?;

    if first.boundary_2().multiple_of_fundamental(1).is_none() {
        return Err(Error::InvalidInput("the first factor's outer leg is not a multiple of ω₁".into()));
    }
    let last = &factors[factors.len() - 1];
    if last.boundary_1().multiple_of_fundamental(m - 1).is_none() {
        return Err(Error::InvalidInput("the last factor's outer leg is not a multiple of ω_{m-1}".into()));
    }
    for (k, pair) in factors.windows(2).enumerate() {
        if pair[0].boundary_1() != pair[1].boundary_2().dual() {
            return Err(Error::BoundaryMismatch { position: k + 1 });
        }
    }
    if let Some(bound) = level {
        if let Some((k, p)) = factors.iter().enumerate().find(|(_, p)| p.level() > bound) {
            return Err(Error::LevelExceeded { position: k + 1, level: p.level(), bound });
        }
    }
    Ok(ChainElement { shape, factors, level })
}

impl ChainElement {
    /// Builds the chain with the given multidegree whose internal edges carry
    /// the weights `edges` (`∂₁` of the first `a + b - 3` factors).
    pub fn from_edge_weights(
        shape: ChainShape,
        r: &[u64],
        s: &[u64],
        edges: &[SlWeight],
        level: Option<u64>,
    ) -> Result<Self> {
        let ChainShape { m, a, b } = shape;
        if r.len() != a || s.len() != b || edges.len() != a + b - 3 {
            return Err(Error::InvalidInput("multidegree or edge list does not match the chain shape".into()));
        }
        let mut factors = Vec::with_capacity(shape.factor_count());
        for k in 0..shape.factor_count() {
            let incoming = if k == 0 { SlWeight::fundamental(m, 1).scale(r[0]) } else { edges[k - 1].dual() };
            let outgoing = if k + 1 == shape.factor_count() {
                SlWeight::fundamental(m, m - 1).scale(s[b - 1])
            } else {
                edges[k].clone()
            };
            let built = match shape.factor_orientation(k) {
                Orientation::Normal => build_pattern(&incoming, r[k + 1], &outgoing)?,
                Orientation::Dual => build_dual_pattern(&incoming, s[k - (a - 1)], &outgoing)?,
            };
            let p = built
                .ok_or_else(|| Error::InvalidInput(format!("factor {} has no pattern for these weights", k + 1)))?;
            factors.push(p);
        }
        glue(factors, level)
    }

    pub fn shape(&self) -> ChainShape {
        self.shape
    }

    pub fn factors(&self) -> &[InterlacingPattern] {
        &self.factors
    }

    pub fn level(&self) -> Option<u64> {
        self.level
    }

    pub fn max_factor_level(&self) -> u64 {
        self.factors.iter().map(InterlacingPattern::level).max().unwrap_or(0)
    }

    /// Weights on the internal edges.
    pub fn edge_weights(&self) -> Vec<SlWeight> {
        self.factors[..self.factors.len() - 1].iter().map(InterlacingPattern::boundary_1).collect()
    }

    pub fn weights(&self) -> WeightData {
        let ChainShape { m, a, .. } = self.shape;
        let mut r = Vec::with_capacity(a);
        let mut s = Vec::with_capacity(self.shape.b);
        r.push(self.factors[0].boundary_2().multiple_of_fundamental(1).expect("glued chain"));
        for (k, f) in self.factors.iter().enumerate() {
            if k < a - 1 {
                r.push(f.middle());
            } else {
                s.push(f.middle());
            }
        }
        let last = &self.factors[self.factors.len() - 1];
        s.push(last.boundary_1().multiple_of_fundamental(m - 1).expect("glued chain"));
        WeightData { r, s, level: self.level }
    }

    pub fn checked_add(&self, other: &ChainElement) -> Result<ChainElement> {
        if self.shape != other.shape {
            return Err(Error::InvalidInput(format!("chains of shape {} and {}", self.shape, other.shape)));
        }
        let level = match (self.level, other.level) {
            (Some(x), Some(y)) => Some(x + y),
            (None, None) => None,
            _ => return Err(Error::InvalidInput("cannot add leveled and unleveled chains".into())),
        };
        let factors =
            self.factors.iter().zip(&other.factors).map(|(p, q)| p.checked_add(q)).collect::<Result<Vec<_>>>()?;
        Ok(ChainElement { shape: self.shape, factors, level })
    }

    /// Flat integer coordinates: each factor's long and short rows, then the
    /// level when present. Addition of chains is addition of coordinates.
    pub fn coords(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.factors.iter().flat_map(|p| p.coords()).collect();
        out.extend(self.level);
        out
    }
}

impl fmt::Display for ChainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{p}")?;
        }
        if let Some(k) = self.level {
            write!(f, " @K={k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(m: usize, e: &[u64]) -> SlWeight {
        SlWeight::new(m, e.to_vec()).unwrap()
    }

    #[test]
    fn shape_factor_kinds() {
        let s = ChainShape::new(3, 3, 4).unwrap();
        let kinds: Vec<String> = (0..s.factor_count()).map(|k| s.factor_kind(k).to_string()).collect();
        assert_eq!(kinds, ["PPB", "BPB", "BP*B", "BP*B", "BP*P*"]);
        assert!(ChainShape::new(3, 1, 2).is_err());
        assert!(ChainShape::new(1, 2, 2).is_err());
    }

    #[test]
    fn trivial_chain_glues() {
        let f = vec![InterlacingPattern::zero(3, Orientation::Normal), InterlacingPattern::zero(3, Orientation::Dual)];
        let c = glue(f, Some(0)).unwrap();
        assert_eq!(c.weights(), WeightData::zero(2, 2, Some(0)));
        assert_eq!(c.shape(), ChainShape::new(3, 2, 2).unwrap());
    }

    #[test]
    fn generator_chain_and_level_errors() {
        let t = GeneratorTuple::new(ChainShape::new(3, 2, 2).unwrap(), vec![2, 1, 2]).unwrap();
        let factors = t.chain(Some(1)).factors().to_vec();
        assert!(glue(factors.clone(), Some(1)).is_ok());
        assert_eq!(glue(factors.clone(), Some(0)), Err(Error::LevelExceeded { position: 1, level: 1, bound: 0 }));
        assert!(glue(factors, None).is_ok());
    }

    #[test]
    fn boundary_mismatch_names_the_factor() {
        let shape = ChainShape::new(3, 3, 2).unwrap();
        let c = ChainElement::from_edge_weights(shape, &[1, 1, 1], &[0, 0], &[sl(3, &[1, 0]), sl(3, &[0, 0])], None)
            .unwrap();
        let mut factors = c.factors().to_vec();
        factors[1] = InterlacingPattern::new(Orientation::Normal, vec![1, 1, 0], vec![1, 1]).unwrap();
        assert!(matches!(glue(factors, None), Err(Error::BoundaryMismatch { position: 1 })));
    }

    #[test]
    fn orientation_order_is_enforced() {
        let f = vec![InterlacingPattern::zero(3, Orientation::Dual), InterlacingPattern::zero(3, Orientation::Normal)];
        assert!(glue(f, None).is_err());
        let f = vec![InterlacingPattern::zero(3, Orientation::Normal)];
        assert!(glue(f, None).is_err());
    }

    #[test]
    fn edge_weight_round_trip() {
        let shape = ChainShape::new(3, 2, 2).unwrap();
        for edge in [sl(3, &[1, 0]), sl(3, &[2, 2])] {
            let c =
                ChainElement::from_edge_weights(shape, &[1, 1], &[1, 1], std::slice::from_ref(&edge), None).unwrap();
            assert_eq!(c.edge_weights(), vec![edge]);
            assert_eq!(c.weights(), WeightData { r: vec![1, 1], s: vec![1, 1], level: None });
        }
        assert!(ChainElement::from_edge_weights(shape, &[1, 1], &[1, 1], &[sl(3, &[1, 1])], None).is_err());
    }

    #[test]
    fn addition_is_coordinatewise() {
        let shape = ChainShape::new(3, 2, 2).unwrap();
        let x = enumerate_x(shape.m, shape.a, shape.b, &Default::default()).unwrap();
        for u in &x {
            for v in &x {
                let sum = u.chain(Some(1)).checked_add(&v.chain(Some(1))).unwrap();
                let coords: Vec<u64> =
                    u.chain(Some(1)).coords().iter().zip(v.chain(Some(1)).coords()).map(|(p, q)| p + q).collect();
                assert_eq!(sum.coords(), coords);
                assert_eq!(sum.weights(), u.weights(true).checked_add(&v.weights(true)).unwrap());
                assert!(glue(sum.factors().to_vec(), Some(2)).is_ok());
            }
        }
    }
}
