//! Swap relations between pairs of generator tuples.
//!
//! Two tuples `u`, `v` that agree at position `c` can exchange their tails
//! from `c` on; the chains `u + v` and `u' + v'` have the same factors, so
//! `u · v = u' · v'` holds in the semigroup algebra.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::tuple::{enumerate_x, enumerate_y, GeneratorTuple};
use crate::error::Result;
use crate::guard::Limits;

/// A binomial `lhs.0 · lhs.1 - rhs.0 · rhs.1`. Each side is sorted and the
/// leading side is the lexicographically smaller pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SwapRelation {
    pub lhs: (GeneratorTuple, GeneratorTuple),
    pub rhs: (GeneratorTuple, GeneratorTuple),
}

fn sorted(x: GeneratorTuple, y: GeneratorTuple) -> (GeneratorTuple, GeneratorTuple) {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

impl SwapRelation {
    /// `None` when both sides are the same pair.
    pub fn new(u: GeneratorTuple, v: GeneratorTuple, u2: GeneratorTuple, v2: GeneratorTuple) -> Option<Self> {
        let p = sorted(u, v);
        let q = sorted(u2, v2);
        match p.cmp(&q) {
            std::cmp::Ordering::Less => Some(Self { lhs: p, rhs: q }),
            std::cmp::Ordering::Greater => Some(Self { lhs: q, rhs: p }),
            std::cmp::Ordering::Equal => None,
        }
    }
}

impl fmt::Display for SwapRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{}],[{}])=([{}],[{}])", self.lhs.0, self.lhs.1, self.rhs.0, self.rhs.1)
    }
}

/// Every pair obtained from `{u, v}` by one tail exchange at a shared entry,
/// other than `{u, v}` itself. With `in_y` both new tuples must lie in `Y`.
pub fn swap_pairs(u: &GeneratorTuple, v: &GeneratorTuple, in_y: bool) -> Vec<(GeneratorTuple, GeneratorTuple)> {
    let (eu, ev) = (u.entries(), v.entries());
    let shape = u.shape();
    let mut out = BTreeSet::new();
    for c in 1..eu.len() {
        if eu[c] != ev[c] {
            continue;
        }
        let mut a = eu[..c].to_vec();
        a.extend_from_slice(&ev[c..]);
        let mut b = ev[..c].to_vec();
        b.extend_from_slice(&eu[c..]);
        let a = GeneratorTuple::new(shape, a).expect("tail exchange keeps steps valid");
        let b = GeneratorTuple::new(shape, b).expect("tail exchange keeps steps valid");
        if in_y && !(a.in_y() && b.in_y()) {
            continue;
        }
        let pair = sorted(a, b);
        if pair != sorted(u.clone(), v.clone()) {
            out.insert(pair);
        }
    }
    out.into_iter().collect()
}

/// All swap relations among the level-one generators: over `X_{a,b}` when
/// `leveled` (the algebra of `P(a,b)`), over `Y_{a,b}` otherwise.
pub fn swap_relations(m: usize, a: usize, b: usize, leveled: bool, limits: &Limits) -> Result<Vec<SwapRelation>> {
    let gens = if leveled { enumerate_x(m, a, b, limits)? } else { enumerate_y(m, a, b, limits)? };
    let n = gens.len() as u64;
    limits.check("generator pairs", n.saturating_mul(n + 1) / 2)?;
    let mut out = BTreeSet::new();
    for (i, u) in gens.iter().enumerate() {
        for v in &gens[i..] {
            for (u2, v2) in swap_pairs(u, v, !leveled) {
                out.extend(SwapRelation::new(u.clone(), v.clone(), u2, v2));
            }
        }
    }
    Ok(out.into_iter().collect())
}
