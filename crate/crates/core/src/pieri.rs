//! The classical Pieri rule as two-row interlacing patterns.
//!
//! A pattern has a long row of `m` entries and a short row of `m - 1` entries
//! with `long_i >= short_i >= long_{i+1}`. In the normal orientation (factors
//! `V(λ, rω₁, η)`) the long row is the `GL_m` lift `λ̄` of `λ*` and the short
//! row is `η`. In the dual orientation (factors `V(λ, sω_{m-1}, η)`) the long
//! row is the lift `η̄` of `η` and the short row is `λ*`. The middle weight is
//! the row-sum difference in both cases.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{check_rank, is_weakly_decreasing, parse_list, write_list, SlWeight};

/// Which leg of the three-point factor carries the rank-one weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Middle weight `rω₁` (factors of type PPB and BPB).
    Normal,
    /// Middle weight `sω_{m-1}` (factors of type BP*B and BP*P*).
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InterlacingPattern {
    m: usize,
    orientation: Orientation,
    top: Vec<u64>,
    bottom: Vec<u64>,
}

impl InterlacingPattern {
    /// `top` is the long row (`m` entries), `bottom` the short row (`m - 1`).
    pub fn new(orientation: Orientation, top: Vec<u64>, bottom: Vec<u64>) -> Result<Self> {
        let m = top.len();
        check_rank(m)?;
        if bottom.len() + 1 != m {
            return Err(Error::InvalidPattern(format!(
                "rows of length {} and {} cannot interlace",
                top.len(),
                bottom.len()
            )));
        }
        let p = Self { m, orientation, top, bottom };
        if !p.interlaces() {
            return Err(Error::InvalidPattern(format!("{p} violates interlacing")));
        }
        Ok(p)
    }

    pub(crate) fn from_rows_unchecked(orientation: Orientation, top: Vec<u64>, bottom: Vec<u64>) -> Self {
        let p = Self { m: top.len(), orientation, top, bottom };
        debug_assert!(p.interlaces());
        p
    }

    pub fn zero(m: usize, orientation: Orientation) -> Self {
        Self { m, orientation, top: vec![0; m], bottom: vec![0; m - 1] }
    }

    fn interlaces(&self) -> bool {
        (0..self.m - 1).all(|i| self.top[i] >= self.bottom[i] && self.bottom[i] >= self.top[i + 1])
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn top(&self) -> &[u64] {
        &self.top
    }

    pub fn bottom(&self) -> &[u64] {
        &self.bottom
    }

    pub fn is_zero(&self) -> bool {
        self.top[0] == 0
    }

    /// Row-sum difference: the `r` (normal) or `s` (dual) of the factor.
    pub fn middle(&self) -> u64 {
        self.top.iter().sum::<u64>() - self.bottom.iter().sum::<u64>()
    }

    /// Top-left entry; see [`crate::kpieri::level`].
    pub fn level(&self) -> u64 {
        self.top[0]
    }

    /// `∂₁`: the weight handed to the next factor of the chain.
    pub fn boundary_1(&self) -> SlWeight {
        match self.orientation {
            Orientation::Normal => SlWeight::from_entries_unchecked(self.m, self.bottom.clone()),
            Orientation::Dual => self.long_row_reduced(),
        }
    }

    /// `∂₂`: the weight received from the previous factor of the chain.
    pub fn boundary_2(&self) -> SlWeight {
        match self.orientation {
            Orientation::Normal => self.long_row_reduced().dual(),
            Orientation::Dual => SlWeight::from_entries_unchecked(self.m, self.bottom.clone()).dual(),
        }
    }

    fn long_row_reduced(&self) -> SlWeight {
        let last = self.top[self.m - 1];
        SlWeight::from_entries_unchecked(self.m, self.top[..self.m - 1].iter().map(|&e| e - last).collect())
    }

    /// Entrywise sum; the sum of two interlacing patterns interlaces.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::RankMismatch { expected: self.m, found: other.m });
        }
        if self.orientation != other.orientation {
            return Err(Error::InvalidInput("cannot add patterns of different orientation".into()));
        }
        let add = |x: &[u64], y: &[u64]| x.iter().zip(y).map(|(a, b)| a + b).collect();
        Ok(Self {
            m: self.m,
            orientation: self.orientation,
            top: add(&self.top, &other.top),
            bottom: add(&self.bottom, &other.bottom),
        })
    }

    /// Parses `top=3,3,1;bottom=3,2`.
    pub fn parse(orientation: Orientation, text: &str) -> Result<Self> {
        let mut top = None;
        let mut bottom = None;
        for part in text.split(';') {
            let (key, value) =
                part.split_once('=').ok_or_else(|| Error::Parse(format!("expected `key=values`, got `{part}`")))?;
            match key.trim() {
                "top" => top = Some(parse_list(value)?),
                "bottom" => bottom = Some(parse_list(value)?),
                other => return Err(Error::Parse(format!("unknown pattern row `{other}`"))),
            }
        }
        match (top, bottom) {
            (Some(t), Some(b)) => Self::new(orientation, t, b),
            _ => Err(Error::Parse("a pattern needs both `top=` and `bottom=`".into())),
        }
    }

    /// Row-major coordinates: long row then short row.
    pub fn coords(&self) -> impl Iterator<Item = u64> + '_ {
        self.top.iter().chain(self.bottom.iter()).copied()
    }
}

impl fmt::Display for InterlacingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("top=")?;
        write_list(f, &self.top)?;
        f.write_str(";bottom=")?;
        write_list(f, &self.bottom)
    }
}

fn check_same_rank(a: &SlWeight, b: &SlWeight) -> Result<usize> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { expected: a.rank(), found: b.rank() });
    }
    Ok(a.rank())
}

/// Solves `numerator = m · x` for a nonnegative integer `x`.
fn exact_quotient(numerator: i128, m: usize) -> Option<u64> {
    let m = m as i128;
    (numerator >= 0 && numerator % m == 0).then(|| (numerator / m) as u64)
}

fn interlaces(long: &[u64], short: &[u64]) -> bool {
    (0..short.len()).all(|i| long[i] >= short[i] && short[i] >= long[i + 1])
}

/// The unique normal pattern with `∂₂ = lambda`, `∂₁ = eta` and row-sum
/// difference `r`, if one exists.
///
/// The long row is `λ* + c·ω_m` with `c = (r + Σ η - Σ λ*) / m`.
pub fn build_pattern(lambda: &SlWeight, r: u64, eta: &SlWeight) -> Result<Option<InterlacingPattern>> {
    let m = check_same_rank(lambda, eta)?;
    let lambda_star = lambda.dual();
    let numerator = r as i128 + eta.size() as i128 - lambda_star.size() as i128;
    let Some(c) = exact_quotient(numerator, m) else {
        return Ok(None);
    };
    let top = lambda_star.gl_lift(c).entries().to_vec();
    let bottom = eta.entries().to_vec();
    if !interlaces(&top, &bottom) {
        return Ok(None);
    }
    Ok(Some(InterlacingPattern::from_rows_unchecked(Orientation::Normal, top, bottom)))
}

/// The unique dual pattern with `∂₂ = lambda`, `∂₁ = eta` and row-sum
/// difference `s`, if one exists.
///
/// The short row is `λ*`, the long row `η + d·ω_m` with
/// `d = (s + Σ λ* - Σ η) / m`.
pub fn build_dual_pattern(lambda: &SlWeight, s: u64, eta: &SlWeight) -> Result<Option<InterlacingPattern>> {
    let m = check_same_rank(lambda, eta)?;
    let lambda_star = lambda.dual();
    let numerator = s as i128 + lambda_star.size() as i128 - eta.size() as i128;
    let Some(d) = exact_quotient(numerator, m) else {
        return Ok(None);
    };
    let top = eta.gl_lift(d).entries().to_vec();
    let bottom = lambda_star.entries().to_vec();
    if !interlaces(&top, &bottom) {
        return Ok(None);
    }
    Ok(Some(InterlacingPattern::from_rows_unchecked(Orientation::Dual, top, bottom)))
}

/// `dim V(λ, rω₁, η)^{SL_m}`, which is 0 or 1.
pub fn pieri_dim(lambda: &SlWeight, r: u64, eta: &SlWeight) -> Result<u8> {
    Ok(u8::from(build_pattern(lambda, r, eta)?.is_some()))
}

/// `dim V(λ, sω_{m-1}, η)^{SL_m}`, which is 0 or 1.
pub fn dual_pieri_dim(lambda: &SlWeight, s: u64, eta: &SlWeight) -> Result<u8> {
    Ok(u8::from(build_dual_pattern(lambda, s, eta)?.is_some()))
}

/// A generator `[i, j]` of a Pieri semigroup, indices in `Z/mZ`.
///
/// Normal generators have `j ∈ {i, i-1}`: `[i,i]` is the pattern with rows
/// `ω_i / ω_i` and `[i+1,i]` the one with rows `ω_{i+1} / ω_i`. Dual
/// generators are labelled so that consecutive chain factors glue when the
/// second index of one equals the first index of the next, which gives
/// `j ∈ {i, i+1}`: `[i,i]` has rows `ω_i / ω_i`, `[i,i+1]` has rows
/// `ω_{i+1} / ω_i`. `[0,0]` is the identity (zero pattern).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PieriGenerator {
    orientation: Orientation,
    i: usize,
    j: usize,
    m: usize,
}

impl PieriGenerator {
    pub fn new(m: usize, orientation: Orientation, i: usize, j: usize) -> Result<Self> {
        check_rank(m)?;
        let (i, j) = (i % m, j % m);
        let ok = match orientation {
            Orientation::Normal => j == i || j == (i + m - 1) % m,
            Orientation::Dual => j == i || j == (i + 1) % m,
        };
        if !ok {
            return Err(Error::InvalidInput(format!("[{i},{j}] is not a {orientation:?} Pieri generator for m = {m}")));
        }
        Ok(Self { orientation, i, j, m })
    }

    pub fn identity(m: usize, orientation: Orientation) -> Self {
        Self { orientation, i: 0, j: 0, m }
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn is_identity(&self) -> bool {
        self.i == 0 && self.j == 0
    }

    /// `(p, q)` such that the generator has rows `ω_p / ω_q` with
    /// `0 <= q <= p <= m`.
    fn shape(&self) -> (usize, usize) {
        let (i, j, m) = (self.i, self.j, self.m);
        match self.orientation {
            Orientation::Normal if i == j => (i, i),
            Orientation::Normal => (if i == 0 { m } else { i }, j),
            Orientation::Dual if i == j => (i, i),
            Orientation::Dual => (i + 1, i),
        }
    }

    fn from_shape(m: usize, orientation: Orientation, p: usize, q: usize) -> Self {
        let (i, j) = match orientation {
            Orientation::Normal => (p % m, q % m),
            Orientation::Dual => (q % m, p % m),
        };
        Self { orientation, i, j, m }
    }

    pub fn pattern(&self) -> InterlacingPattern {
        let (p, q) = self.shape();
        let m = self.m;
        let top = (0..m).map(|k| u64::from(k < p)).collect();
        let bottom = (0..m - 1).map(|k| u64::from(k < q)).collect();
        InterlacingPattern::from_rows_unchecked(self.orientation, top, bottom)
    }

    /// `∂₂` and `∂₁` of the generator pattern: `ω_i*` and `ω_j` under the
    /// chain labelling.
    pub fn boundary(&self) -> (SlWeight, SlWeight) {
        let p = self.pattern();
        (p.boundary_2(), p.boundary_1())
    }
}

impl fmt::Display for PieriGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

/// Multiset of generators, keyed by generator.
pub type GeneratorMultiset = BTreeMap<PieriGenerator, u64>;

/// Writes a pattern as a sum of generators. The coefficient of `[m, m-1]` is
/// `a_m`; of the shape `ω_k / ω_{k-1}` (`k < m`) it is `a_k - b_k`; of
/// `ω_k / ω_k` it is `b_k - a_{k+1}`. The total multiplicity is `a_1`.
pub fn decompose(p: &InterlacingPattern) -> GeneratorMultiset {
    let (m, o) = (p.m, p.orientation);
    let (a, b) = (&p.top, &p.bottom);
    let mut out = GeneratorMultiset::new();
    let mut put = |shape: (usize, usize), c: u64| {
        if c > 0 {
            out.insert(PieriGenerator::from_shape(m, o, shape.0, shape.1), c);
        }
    };
    put((m, m - 1), a[m - 1]);
    for k in 1..m {
        put((k, k - 1), a[k - 1] - b[k - 1]);
        put((k, k), b[k - 1] - a[k]);
    }
    out
}

/// Entrywise sum of generator patterns.
pub fn recompose(m: usize, orientation: Orientation, gens: &GeneratorMultiset) -> Result<InterlacingPattern> {
    check_rank(m)?;
    let mut top = vec![0u64; m];
    let mut bottom = vec![0u64; m - 1];
    for (g, &count) in gens {
        if g.m != m {
            return Err(Error::RankMismatch { expected: m, found: g.m });
        }
        if g.orientation != orientation {
            return Err(Error::InvalidInput(format!("generator {g} has orientation {:?}", g.orientation)));
        }
        let (p, q) = g.shape();
        top[..p].iter_mut().for_each(|e| *e += count);
        bottom[..q].iter_mut().for_each(|e| *e += count);
    }
    debug_assert!(is_weakly_decreasing(&top));
    Ok(InterlacingPattern::from_rows_unchecked(orientation, top, bottom))
}

/// All `2m - 1` non-identity generators of the Pieri semigroup of the given
/// orientation.
pub fn pieri_generators(m: usize, orientation: Orientation) -> Vec<PieriGenerator> {
    let mut out = Vec::with_capacity(2 * m - 1);
    for p in 1..=m {
        out.push(PieriGenerator::from_shape(m, orientation, p, p - 1));
        if p < m {
            out.push(PieriGenerator::from_shape(m, orientation, p, p));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::all_sl_weights;

    fn sl(m: usize, e: &[u64]) -> SlWeight {
        SlWeight::new(m, e.to_vec()).unwrap()
    }

    fn pat(top: &[u64], bottom: &[u64]) -> InterlacingPattern {
        InterlacingPattern::new(Orientation::Normal, top.to_vec(), bottom.to_vec()).unwrap()
    }

    fn gen(m: usize, i: usize, j: usize) -> PieriGenerator {
        PieriGenerator::new(m, Orientation::Normal, i, j).unwrap()
    }

    #[test]
    fn build_pattern_examples() {
        let zero = SlWeight::zero(3);
        assert_eq!(build_pattern(&zero, 0, &zero).unwrap(), Some(InterlacingPattern::zero(3, Orientation::Normal)));
        assert_eq!(build_pattern(&sl(3, &[1, 0]), 1, &sl(3, &[1, 0])).unwrap(), Some(pat(&[1, 1, 0], &[1, 0])));
        assert_eq!(build_pattern(&sl(3, &[1, 0]), 1, &sl(3, &[1, 1])).unwrap(), None);
        assert!(build_pattern(&sl(3, &[1, 0]), 1, &sl(4, &[1, 1, 0])).is_err());
    }

    #[test]
    fn pieri_dim_examples() {
        assert_eq!(pieri_dim(&sl(3, &[1, 0]), 1, &sl(3, &[2, 2])).unwrap(), 1);
        assert_eq!(pieri_dim(&sl(3, &[1, 0]), 1, &sl(3, &[1, 1])).unwrap(), 0);
        for m in 2..=6 {
            assert_eq!(pieri_dim(&SlWeight::zero(m), 0, &SlWeight::zero(m)).unwrap(), 1);
        }
    }

    #[test]
    fn dual_pieri_dim_examples() {
        // ω₂ ⊗ ω₂ has no invariant for SL_3: 4 boxes is not a multiple of 3.
        assert_eq!(dual_pieri_dim(&sl(3, &[1, 1]), 1, &sl(3, &[0, 0])).unwrap(), 0);
        assert_eq!(dual_pieri_dim(&sl(3, &[0, 0]), 0, &sl(3, &[0, 0])).unwrap(), 1);
        // dual image of pieri_dim((1,0), 1, (1,0)) = 1
        assert_eq!(dual_pieri_dim(&sl(3, &[1, 1]), 1, &sl(3, &[1, 1])).unwrap(), 1);
        // ω₁ ⊗ ω₂ ⊗ ω₁: again 4 boxes.
        assert_eq!(dual_pieri_dim(&sl(3, &[1, 0]), 1, &sl(3, &[1, 0])).unwrap(), 0);
    }

    #[test]
    fn dual_pieri_is_pieri_of_duals() {
        for m in 2..=4 {
            let ws = all_sl_weights(m, 3);
            for l in &ws {
                for e in &ws {
                    for s in 0..=5 {
                        let direct = dual_pieri_dim(l, s, e).unwrap();
                        assert_eq!(direct, pieri_dim(&e.dual(), s, &l.dual()).unwrap());
                        assert_eq!(pieri_dim(l, s, e).unwrap(), dual_pieri_dim(&l.dual(), s, &e.dual()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_dim_is_symmetric_in_outer_weights() {
        for m in 2..=4 {
            let ws = all_sl_weights(m, 3);
            for l in &ws {
                for e in &ws {
                    for r in 0..=5 {
                        assert_eq!(pieri_dim(l, r, e).unwrap(), pieri_dim(e, r, l).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&pat(&[1, 1, 1], &[1, 1]));
        assert_eq!(d, GeneratorMultiset::from([(gen(3, 3, 2), 1)]));

        let d = decompose(&pat(&[3, 3, 1], &[3, 2]));
        let want = GeneratorMultiset::from([(gen(3, 3, 2), 1), (gen(3, 2, 2), 1), (gen(3, 2, 1), 1)]);
        assert_eq!(d, want);

        assert!(decompose(&InterlacingPattern::zero(3, Orientation::Normal)).is_empty());
    }

    #[test]
    fn recompose_examples() {
        let doubled = GeneratorMultiset::from([(gen(3, 3, 2), 2)]);
        assert_eq!(recompose(3, Orientation::Normal, &doubled).unwrap(), pat(&[2, 2, 2], &[2, 2]));

        let mixed = GeneratorMultiset::from([(gen(3, 2, 1), 1), (gen(3, 1, 1), 1)]);
        assert_eq!(recompose(3, Orientation::Normal, &mixed).unwrap(), pat(&[2, 1, 0], &[2, 0]));

        let empty = GeneratorMultiset::new();
        assert_eq!(
            recompose(3, Orientation::Normal, &empty).unwrap(),
            InterlacingPattern::zero(3, Orientation::Normal)
        );

        let dual = PieriGenerator::new(3, Orientation::Dual, 1, 2).unwrap();
        let bad = GeneratorMultiset::from([(gen(3, 2, 1), 1), (dual, 1)]);
        assert!(recompose(3, Orientation::Normal, &bad).is_err());
    }

    #[test]
    fn boundary_examples() {
        let p = pat(&[1, 1, 0], &[1, 0]);
        assert_eq!(p.boundary_1(), sl(3, &[1, 0]));
        assert_eq!(p.boundary_2(), sl(3, &[1, 0]));

        let z = InterlacingPattern::zero(3, Orientation::Normal);
        assert!(z.boundary_1().is_zero() && z.boundary_2().is_zero());

        let p = pat(&[2, 2, 1], &[2, 2]);
        assert_eq!(p.boundary_1(), sl(3, &[2, 2]));
        assert_eq!(p.boundary_2(), sl(3, &[1, 0]));
    }

    #[test]
    fn built_patterns_have_requested_boundaries() {
        for m in 2..=4 {
            let ws = all_sl_weights(m, 3);
            for l in &ws {
                for e in &ws {
                    for r in 0..=4 {
                        if let Some(p) = build_pattern(l, r, e).unwrap() {
                            assert_eq!((p.boundary_2(), p.middle(), p.boundary_1()), (l.clone(), r, e.clone()));
                        }
                        if let Some(p) = build_dual_pattern(l, r, e).unwrap() {
                            assert_eq!((p.boundary_2(), p.middle(), p.boundary_1()), (l.clone(), r, e.clone()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generator_labels_match_boundaries() {
        // ∂₂ = ω_i*, ∂₁ = ω_j for every generator, in both orientations.
        for m in 2..=6 {
            for o in [Orientation::Normal, Orientation::Dual] {
                let gens = pieri_generators(m, o);
                assert_eq!(gens.len(), 2 * m - 1);
                for g in gens {
                    let (i, j) = g.indices();
                    let (d2, d1) = g.boundary();
                    assert_eq!(d2, SlWeight::fundamental(m, i).dual(), "{g} {o:?}");
                    assert_eq!(d1, SlWeight::fundamental(m, j), "{g} {o:?}");
                    assert_eq!(g.pattern().level(), 1);
                    assert_eq!(decompose(&g.pattern()), GeneratorMultiset::from([(g, 1)]));
                }
            }
        }
    }

    #[test]
    fn generator_validation() {
        assert!(PieriGenerator::new(3, Orientation::Normal, 1, 2).is_err());
        assert!(PieriGenerator::new(3, Orientation::Dual, 1, 2).is_ok());
        assert!(PieriGenerator::new(3, Orientation::Dual, 2, 1).is_err());
        assert_eq!(gen(3, 3, 3), PieriGenerator::identity(3, Orientation::Normal));
        assert_eq!(gen(3, 3, 2).to_string(), "[0,2]");
    }

    #[test]
    fn decomposition_is_unique_among_small_multisets() {
        // Every multiset of at most 4 generators recomposes to a different pattern.
        for m in 2..=4 {
            for o in [Orientation::Normal, Orientation::Dual] {
                let gens = pieri_generators(m, o);
                let mut seen = std::collections::HashMap::new();
                let mut stack = vec![(0usize, GeneratorMultiset::new(), 0u64)];
                while let Some((start, ms, total)) = stack.pop() {
                    let p = recompose(m, o, &ms).unwrap();
                    assert!(seen.insert(p.clone(), ms.clone()).is_none(), "two decompositions of {p}");
                    assert_eq!(decompose(&p), ms);
                    if total == 4 {
                        continue;
                    }
                    for (k, g) in gens.iter().enumerate().skip(start) {
                        let mut next = ms.clone();
                        *next.entry(*g).or_insert(0) += 1;
                        stack.push((k, next, total + 1));
                    }
                }
            }
        }
    }

    #[test]
    fn pattern_text_round_trip() {
        let p = InterlacingPattern::parse(Orientation::Normal, "top=3,3,1;bottom=3,2").unwrap();
        assert_eq!(p, pat(&[3, 3, 1], &[3, 2]));
        assert_eq!(p.to_string(), "top=3,3,1;bottom=3,2");
        assert!(InterlacingPattern::parse(Orientation::Normal, "top=1,2,3;bottom=1,1").is_err());
        assert!(InterlacingPattern::parse(Orientation::Normal, "top=3,3,1").is_err());
    }

    #[test]
    fn m2_patterns_have_no_special_cases() {
        let p = build_pattern(&sl(2, &[1]), 1, &sl(2, &[0])).unwrap().unwrap();
        assert_eq!((p.top(), p.bottom()), (&[1, 0][..], &[0][..]));
        assert_eq!(decompose(&p), GeneratorMultiset::from([(gen(2, 1, 0), 1)]));
    }
}
