//! Dimensions of graded pieces as counts of boundary-weight labellings.
//!
//! A basis of `V(r⃗ω₁, s⃗ω_{m-1})^{SL_m}` (and of its level-`K` conformal
//! block subspace) is indexed by the sequences of internal edge weights
//! `λ₁, ..., λ_{a+b-3}` for which every three-point factor along the
//! caterpillar is nonzero. The count runs as a dynamic program whose state is
//! the weight entering the next factor.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::chains::ChainShape;
use crate::error::{Error, Result};
use crate::guard::Limits;
use crate::pieri::Orientation;
use crate::weights::SlWeight;

/// Number of labellings, optionally with the edge-weight sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabellingCount {
    pub dimension: u64,
    pub witnesses: Option<Vec<Vec<SlWeight>>>,
}

/// All `x` with `lo_i <= x_i <= hi_i` and `Σx = sum`, lexicographic.
fn bounded_vectors(lo: &[u64], hi: &[u64], sum: u64) -> Vec<Vec<u64>> {
    fn rec(lo: &[u64], hi: &[u64], rest: u64, i: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == lo.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let min_tail: u64 = lo[i + 1..].iter().sum();
        let max_tail: u64 = hi[i + 1..].iter().sum();
        let from = lo[i].max(rest.saturating_sub(max_tail));
        let to = hi[i].min(rest.saturating_sub(min_tail));
        for v in from..=to {
            if v > rest || rest - v < min_tail {
                break;
            }
            cur.push(v);
            rec(lo, hi, rest - v, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo.iter().zip(hi).all(|(l, h)| l <= h) {
        rec(lo, hi, sum, 0, &mut Vec::with_capacity(lo.len()), &mut out);
    }
    out
}

/// Outgoing edge weights `η` of the factor with incoming weight `lambda`
/// and leg `leg`, whose pattern has level at most `level`.
fn transitions(lambda: &SlWeight, orientation: Orientation, leg: u64, level: Option<u64>) -> Vec<SlWeight> {
    let m = lambda.rank();
    let star = lambda.dual();
    let cap = level.unwrap_or(u64::MAX);
    let mut out = Vec::new();
    match orientation {
        Orientation::Normal => {
            // Long row `λ* + c` over `η`; `c <= leg` since `leg >= long_m = c`.
            for c in 0..=leg {
                let long = star.gl_lift(c);
                if long.entries()[0] > cap {
                    break;
                }
                let long = long.entries();
                let total: u64 = long.iter().sum();
                if total < leg {
                    continue;
                }
                let lo = &long[1..];
                let hi = &long[..m - 1];
                for eta in bounded_vectors(lo, hi, total - leg) {
                    out.push(SlWeight::from_entries_unchecked(m, eta));
                }
            }
        }
        Orientation::Dual => {
            // Long row `η + d` over `λ*`.
            let short = star.entries();
            let top = cap.min(short[0].saturating_add(leg));
            let mut lo = short.to_vec();
            lo.push(0);
            let mut hi = vec![top];
            hi.extend_from_slice(short);
            let total = star.size() + leg;
            for long in bounded_vectors(&lo, &hi, total) {
                let last = long[m - 1];
                out.push(SlWeight::from_entries_unchecked(m, long[..m - 1].iter().map(|&e| e - last).collect()));
            }
        }
    }
    out
}

/// Leg ranges `r₁, ..., r_a, s₁, ..., s_b` and an optional level bound.
struct Problem {
    shape: ChainShape,
    r: Vec<RangeInclusive<u64>>,
    s: Vec<RangeInclusive<u64>>,
    level: Option<u64>,
}

impl Problem {
    fn fixed(m: usize, r: &[u64], s: &[u64], level: Option<u64>) -> Result<Self> {
        let shape = ChainShape::new(m, r.len(), s.len())?;
        let ranges = |v: &[u64]| v.iter().map(|&x| x..=x).collect();
        Ok(Self { shape, r: ranges(r), s: ranges(s), level })
    }

    fn leg(&self, k: usize) -> &RangeInclusive<u64> {
        let a = self.shape.a;
        if k < a - 1 {
            &self.r[k + 1]
        } else {
            &self.s[k - (a - 1)]
        }
    }

    /// Outgoing edges of factor `k` from `lambda`, one entry per labelling.
    fn step(&self, k: usize, lambda: &SlWeight) -> Vec<SlWeight> {
        let o = self.shape.factor_orientation(k);
        self.leg(k).clone().flat_map(|x| transitions(lambda, o, x, self.level)).collect()
    }

    fn accepts(&self, last_edge: &SlWeight) -> bool {
        let m = self.shape.m;
        last_edge.multiple_of_fundamental(m - 1).is_some_and(|sb| self.s[self.shape.b - 1].contains(&sb))
    }

    fn start(&self) -> Vec<SlWeight> {
        let m = self.shape.m;
        self.r[0].clone().map(|r1| SlWeight::fundamental(m, 1).scale(r1)).collect()
    }

    fn count(&self, limits: &Limits) -> Result<u64> {
        let mut layer: BTreeMap<SlWeight, u64> = BTreeMap::new();
        for w in self.start() {
            *layer.entry(w).or_default() += 1;
        }
        let factors = self.shape.factor_count();
        for k in 0..factors {
            limits.check("labelling states", layer.len() as u64)?;
            let last = k + 1 == factors;
            let moves: Vec<(SlWeight, u64)> = layer
                .par_iter()
                .flat_map_iter(|(lambda, &n)| {
                    self.step(k, lambda)
                        .into_iter()
                        .filter(|e| !last || self.accepts(e))
                        .map(move |e| (if last { e } else { e.dual() }, n))
                })
                .collect();
            let mut next: BTreeMap<SlWeight, u64> = BTreeMap::new();
            for (w, n) in moves {
                let slot = next.entry(w).or_default();
                *slot = slot.checked_add(n).ok_or(Error::Overflow("labelling count"))?;
            }
            layer = next;
        }
        layer.values().try_fold(0u64, |acc, &n| acc.checked_add(n).ok_or(Error::Overflow("labelling count")))
    }

    fn list(&self, limits: &Limits) -> Result<Vec<Vec<SlWeight>>> {
        fn rec(
            p: &Problem,
            k: usize,
            lambda: &SlWeight,
            path: &mut Vec<SlWeight>,
            out: &mut Vec<Vec<SlWeight>>,
            limits: &Limits,
        ) -> Result<()> {
            let last = k + 1 == p.shape.factor_count();
            for e in p.step(k, lambda) {
                if last {
                    if p.accepts(&e) {
                        out.push(path.clone());
                        limits.check("labellings", out.len() as u64)?;
                    }
                } else {
                    let next = e.dual();
                    path.push(e);
                    rec(p, k + 1, &next, path, out, limits)?;
                    path.pop();
                }
            }
            Ok(())
        }
        let mut out = Vec::new();
        for w in self.start() {
            rec(self, 0, &w, &mut Vec::new(), &mut out, limits)?;
        }
        Ok(out)
    }
}

/// `dim V(r⃗ω₁, s⃗ω_{m-1})^{SL_m}`.
pub fn dim_invariants(m: usize, r: &[u64], s: &[u64]) -> Result<u64> {
    Problem::fixed(m, r, s, None)?.count(&Limits::default())
}

/// Dimension of the level-`k` conformal blocks with the same legs.
pub fn dim_conformal_blocks(m: usize, r: &[u64], s: &[u64], k: u64) -> Result<u64> {
    Problem::fixed(m, r, s, Some(k))?.count(&Limits::default())
}

/// Labelling count with optional witness listing; `level = None` counts
/// invariants.
pub fn labellings(
    m: usize,
    r: &[u64],
    s: &[u64],
    level: Option<u64>,
    list: bool,
    limits: &Limits,
) -> Result<LabellingCount> {
    let p = Problem::fixed(m, r, s, level)?;
    if list {
        let w = p.list(limits)?;
        Ok(LabellingCount { dimension: w.len() as u64, witnesses: Some(w) })
    } else {
        Ok(LabellingCount { dimension: p.count(limits)?, witnesses: None })
    }
}

/// Dimension of the level-`k` graded piece of `P(a,b)`: the sum of
/// `dim_conformal_blocks(m, r⃗, s⃗, k)` over all legs with entries at most
/// `k`. Level 0 holds only the identity and level 1 the tuples of `X_{a,b}`.
pub fn hilbert_level(m: usize, a: usize, b: usize, k: u64, limits: &Limits) -> Result<u64> {
    let shape = ChainShape::new(m, a, b)?;
    let p = Problem { shape, r: vec![0..=k; a], s: vec![0..=k; b], level: Some(k) };
    p.count(limits)
}
