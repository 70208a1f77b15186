//! Level-one generators of the chain semigroups as tuples over `Z/mZ`.
//!
//! A tuple `(i₁, ..., i_{a+b-1})` stands for the chain whose `k`-th factor is
//! the Pieri generator `[i_k, i_{k+1}]`. Validity is local: the end entries
//! lie in `{0, m-1}`, the first `a - 1` steps `i_k - i_{k+1}` lie in `{0, 1}`
//! and the remaining `b - 1` steps in `{0, -1}`, all mod `m`.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{ChainElement, ChainShape, WeightData};
use crate::error::{Error, Result};
use crate::guard::Limits;
use crate::pieri::PieriGenerator;
use crate::weights::parse_list;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorTuple {
    shape: ChainShape,
    entries: Vec<usize>,
}

impl Serialize for GeneratorTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

/// Residues allowed after `prev` at step `k` (0-based), ascending.
fn successors(shape: &ChainShape, k: usize, prev: usize) -> impl Iterator<Item = usize> {
    let m = shape.m;
    let other = if k < shape.a - 1 { (prev + m - 1) % m } else { (prev + 1) % m };
    let (lo, hi) = if prev <= other { (prev, other) } else { (other, prev) };
    std::iter::once(lo).chain((hi != lo).then_some(hi))
}

fn is_end(m: usize, v: usize) -> bool {
    v == 0 || v == m - 1
}

impl GeneratorTuple {
    pub fn new(shape: ChainShape, entries: Vec<usize>) -> Result<Self> {
        let m = shape.m;
        if entries.len() != shape.tuple_len() {
            return Err(Error::InvalidInput(format!(
                "a tuple for a = {}, b = {} has {} entries, got {}",
                shape.a,
                shape.b,
                shape.tuple_len(),
                entries.len()
            )));
        }
        if let Some(v) = entries.iter().find(|&&v| v >= m) {
            return Err(Error::InvalidInput(format!("entry {v} is not a residue mod {m}")));
        }
        if !is_end(m, entries[0]) || !is_end(m, entries[entries.len() - 1]) {
            return Err(Error::InvalidInput(format!("end entries must lie in {{0, {}}}", m - 1)));
        }
        for (k, w) in entries.windows(2).enumerate() {
            if !successors(&shape, k, w[0]).any(|v| v == w[1]) {
                return Err(Error::InvalidInput(format!("step {} ({} -> {}) is not allowed", k + 1, w[0], w[1])));
            }
        }
        Ok(Self { shape, entries })
    }

    pub fn zero(shape: ChainShape) -> Self {
        Self { shape, entries: vec![0; shape.tuple_len()] }
    }

    pub fn parse(shape: ChainShape, text: &str) -> Result<Self> {
        let entries = parse_list(text)?.into_iter().map(|v| v as usize).collect();
        Self::new(shape, entries)
    }

    pub fn shape(&self) -> ChainShape {
        self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    /// Nonzero entries form one nonempty contiguous block.
    pub fn in_y(&self) -> bool {
        let Some(first) = self.entries.iter().position(|&v| v != 0) else {
            return false;
        };
        let last = self.entries.iter().rposition(|&v| v != 0).unwrap();
        self.entries[first..=last].iter().all(|&v| v != 0)
    }

    /// The Pieri generator of the `k`-th factor (0-based).
    pub fn factor(&self, k: usize) -> PieriGenerator {
        PieriGenerator::new(self.shape.m, self.shape.factor_orientation(k), self.entries[k], self.entries[k + 1])
            .expect("valid tuple")
    }

    pub fn chain(&self, level: Option<u64>) -> ChainElement {
        let factors = (0..self.shape.factor_count()).map(|k| self.factor(k).pattern()).collect();
        super::glue(factors, level).expect("generator tuples glue")
    }

    /// Multidegree read off the steps: `r₁ = [i₁ = m-1]`,
    /// `r_{k+1} = [i_k - i_{k+1} = 1]`, `s_k = [i_{a+k-1} - i_{a+k} = -1]`,
    /// `s_b = [i_{a+b-1} = m-1]`, and level 1 when leveled.
    pub fn weights(&self, leveled: bool) -> WeightData {
        let ChainShape { m, a, b } = self.shape;
        let e = &self.entries;
        let ind = |c: bool| u64::from(c);
        let mut r = Vec::with_capacity(a);
        r.push(ind(e[0] == m - 1));
        r.extend((0..a - 1).map(|k| ind((e[k] + m - e[k + 1]) % m == 1)));
        let mut s: Vec<u64> = (a - 1..a + b - 2).map(|k| ind((e[k + 1] + m - e[k]) % m == 1)).collect();
        s.push(ind(e[a + b - 2] == m - 1));
        WeightData { r, s, level: leveled.then_some(1) }
    }

    /// Position of the first zero entry with nonzero entries on both sides.
    fn internal_zero(&self) -> Option<usize> {
        let first = self.entries.iter().position(|&v| v != 0)?;
        let last = self.entries.iter().rposition(|&v| v != 0)?;
        (first..last).find(|&k| self.entries[k] == 0)
    }

    /// Splits into the nonzero blocks, each an element of `Y_{a,b}`; their
    /// product in `Q(a,b)` is this tuple. The zero tuple gives no blocks.
    pub fn y_factors(&self) -> Vec<GeneratorTuple> {
        let mut out = Vec::new();
        let mut rest = self.clone();
        while let Ok((left, right)) = zero_split(&rest) {
            out.push(left);
            rest = right;
        }
        if !rest.is_zero() {
            out.push(rest);
        }
        out
    }
}

impl fmt::Display for GeneratorTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Number of valid tuples, by counting paths through the step automaton.
fn count_x(shape: &ChainShape) -> u64 {
    let m = shape.m;
    let mut counts = vec![0u64; m];
    counts[0] = 1;
    counts[m - 1] = 1;
    for k in 0..shape.tuple_len() - 1 {
        let mut next = vec![0u64; m];
        for (v, &c) in counts.iter().enumerate() {
            for w in successors(shape, k, v) {
                next[w] = next[w].saturating_add(c);
            }
        }
        counts = next;
    }
    if m - 1 == 0 {
        counts[0]
    } else {
        counts[0].saturating_add(counts[m - 1])
    }
}

/// All of `X_{a,b}`, in lexicographic order.
pub fn enumerate_x(m: usize, a: usize, b: usize, limits: &Limits) -> Result<Vec<GeneratorTuple>> {
    let shape = ChainShape::new(m, a, b)?;
    limits.check("X_{a,b}", count_x(&shape))?;
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(shape.tuple_len());
    fn rec(shape: &ChainShape, prefix: &mut Vec<usize>, out: &mut Vec<GeneratorTuple>) {
        let len = prefix.len();
        if len == shape.tuple_len() {
            if is_end(shape.m, prefix[len - 1]) {
                out.push(GeneratorTuple { shape: *shape, entries: prefix.clone() });
            }
            return;
        }
        let nexts: Vec<usize> = successors(shape, len - 1, prefix[len - 1]).collect();
        for v in nexts {
            prefix.push(v);
            rec(shape, prefix, out);
            prefix.pop();
        }
    }
    let mut starts = vec![0, m - 1];
    starts.dedup();
    for start in starts {
        prefix.push(start);
        rec(&shape, &mut prefix, &mut out);
        prefix.pop();
    }
    Ok(out)
}

/// `Y_{a,b}`: the tuples of `X_{a,b}` whose nonzero entries form a single
/// nonempty block. The zero tuple (the identity of `Q(a,b)`) is excluded.
pub fn enumerate_y(m: usize, a: usize, b: usize, limits: &Limits) -> Result<Vec<GeneratorTuple>> {
    Ok(enumerate_x(m, a, b, limits)?.into_iter().filter(GeneratorTuple::in_y).collect())
}

/// `t · 0 = left · right`: cuts `t` at its first internal zero into the part
/// before and the part after, each padded with zeros.
pub fn zero_split(t: &GeneratorTuple) -> Result<(GeneratorTuple, GeneratorTuple)> {
    let k = t.internal_zero().ok_or(Error::NoInternalZero)?;
    let mut left = t.entries.clone();
    left[k..].iter_mut().for_each(|v| *v = 0);
    let mut right = t.entries.clone();
    right[..k].iter_mut().for_each(|v| *v = 0);
    Ok((GeneratorTuple { shape: t.shape, entries: left }, GeneratorTuple { shape: t.shape, entries: right }))
}

/// Weyl's generators of the invariant ring, by 1-based leg indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeylInvariant {
    /// `Δ_I`, `I ⊂ [a]` with `|I| = m`.
    ALegs(Vec<usize>),
    /// `Δ_J`, `J ⊂ [b]` with `|J| = m`.
    BLegs(Vec<usize>),
    /// `P_ij`, `i ∈ [a]`, `j ∈ [b]`.
    Pair(usize, usize),
}

fn leg_set(which: &[usize], size: usize, m: usize, side: char) -> Result<Vec<bool>> {
    if which.len() != m {
        return Err(Error::InvalidInput(format!("a determinant needs {m} legs, got {}", which.len())));
    }
    let mut set = vec![false; size];
    for &i in which {
        if i == 0 || i > size {
            return Err(Error::InvalidInput(format!("leg {i} is outside [{side}] = 1..={size}")));
        }
        if std::mem::replace(&mut set[i - 1], true) {
            return Err(Error::InvalidInput(format!("leg {i} repeated")));
        }
    }
    Ok(set)
}

/// The tuple of `Y_{a,b}` whose multidegree is that of the Weyl generator:
/// `r = 1_I` for `Δ_I`, `s = 1_J` for `Δ_J`, `r = e_i, s = e_j` for `P_ij`.
///
/// Steps are written `i_k - i_{k+1}`, so a unit step on an `a` leg is a
/// decrement and on a `b` leg an increment.
pub fn weyl_tuple(m: usize, a: usize, b: usize, which: &WeylInvariant) -> Result<GeneratorTuple> {
    let shape = ChainShape::new(m, a, b)?;
    let (r, s) = match which {
        WeylInvariant::ALegs(i) => (leg_set(i, a, m, 'a')?, vec![false; b]),
        WeylInvariant::BLegs(j) => (vec![false; a], leg_set(j, b, m, 'b')?),
        WeylInvariant::Pair(i, j) => {
            if *i == 0 || *i > a || *j == 0 || *j > b {
                return Err(Error::InvalidInput(format!("pair ({i},{j}) is outside [a] x [b]")));
            }
            let mut r = vec![false; a];
            let mut s = vec![false; b];
            r[i - 1] = true;
            s[j - 1] = true;
            (r, s)
        }
    };
    let mut entries = Vec::with_capacity(shape.tuple_len());
    let mut cur = if r[0] { m - 1 } else { 0 };
    entries.push(cur);
    for &up in &r[1..] {
        if up {
            cur = (cur + m - 1) % m;
        }
        entries.push(cur);
    }
    for &up in &s[..b - 1] {
        if up {
            cur = (cur + 1) % m;
        }
        entries.push(cur);
    }
    let t = GeneratorTuple::new(shape, entries)?;
    debug_assert_eq!(t.weights(false).s[b - 1], u64::from(s[b - 1]));
    Ok(t)
}
