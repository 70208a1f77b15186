//! Gorenstein witnesses for the chain semigroups.
//!
//! Two checks are reported side by side. The first is the gluing condition
//! for fiber products of Gorenstein semigroups: the sum `w_k` of the
//! generators of each factor must have the same image on every shared edge.
//! The second works directly with the cone: it searches sums of generators
//! for the interior elements of least degree and tests `p - w ∈ S` for
//! interior elements `p` sampled with a seeded generator. The semigroup is
//! the set of all lattice points of its cone, so membership of `p - w` is a
//! sign check on the defining inequalities.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{generator_coords, generators};
use crate::chains::{ChainShape, WeightData};
use crate::error::Result;
use crate::guard::Limits;
use crate::kpieri::{k_generators, FactorKind};
use crate::pieri::InterlacingPattern;
use crate::weights::SlWeight;

/// Sum of the generators of one factor semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorSum {
    pub position: usize,
    pub kind: FactorKind,
    pub boundary_2: SlWeight,
    pub boundary_1: SlWeight,
    pub level: Option<u64>,
}

/// Images of consecutive factor sums on their shared edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryComparison {
    /// The edge between factors `position` and `position + 1`.
    pub position: usize,
    pub left: SlWeight,
    pub right: SlWeight,
    pub left_level: Option<u64>,
    pub right_level: Option<u64>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinReport {
    pub m: usize,
    pub a: usize,
    pub b: usize,
    pub leveled: bool,
    pub condition_holds: bool,
    pub factor_sums: Vec<FactorSum>,
    pub comparisons: Vec<BoundaryComparison>,
    /// No interior element was found.
    pub degenerate: bool,
    /// The search stopped at the size guard.
    pub search_truncated: bool,
    pub witness: Option<Vec<i64>>,
    pub witness_multidegree: Option<WeightData>,
    pub witness_degree: Option<usize>,
    /// Interior elements of least degree; a Gorenstein semigroup has one.
    pub minimal_interior: usize,
    /// Sampled interior elements `p` tested for `p - w ∈ S`.
    pub samples_tested: usize,
    pub sampled_interior_ok: bool,
    pub max_degree: usize,
    pub seed: u64,
}

/// Homogeneous inequalities `Σ c_i x_i >= 0` on chain coordinates.
struct Cone {
    rows: Vec<Vec<(usize, i64)>>,
}

impl Cone {
    /// Interlacing and nonnegativity of every factor, plus `K >= top₁` when
    /// leveled. The gluing and end conditions are equalities and hold on
    /// every difference of chain elements.
    fn chains(shape: &ChainShape, leveled: bool) -> Self {
        let m = shape.m;
        let width = 2 * m - 1;
        let level_idx = shape.factor_count() * width;
        let mut rows = Vec::new();
        for f in 0..shape.factor_count() {
            let top = |i: usize| f * width + i;
            let bottom = |i: usize| f * width + m + i;
            for i in 0..m - 1 {
                rows.push(vec![(top(i), 1), (bottom(i), -1)]);
                rows.push(vec![(bottom(i), 1), (top(i + 1), -1)]);
            }
            rows.push(vec![(top(m - 1), 1)]);
            if leveled {
                rows.push(vec![(level_idx, 1), (top(0), -1)]);
            }
        }
        Self { rows }
    }

    fn eval(row: &[(usize, i64)], x: &[i64]) -> i64 {
        row.iter().map(|&(i, c)| c * x[i]).sum()
    }

    fn contains(&self, x: &[i64]) -> bool {
        self.rows.iter().all(|r| Self::eval(r, x) >= 0)
    }

    /// Rows that do not vanish on every generator.
    fn active(&self, gens: &[Vec<i64>]) -> Vec<&[(usize, i64)]> {
        self.rows.iter().filter(|r| gens.iter().any(|g| Self::eval(r, g) != 0)).map(Vec::as_slice).collect()
    }
}

fn sub(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(p, q)| p - q).collect()
}

struct Search {
    witness: Option<(Vec<i64>, usize, WeightData)>,
    minimal_interior: usize,
    truncated: bool,
    samples_tested: usize,
    sampled_ok: bool,
}

/// Breadth-first search over sums of `gens` for the interior elements of
/// least degree, stopping at the size guard; then `samples` random sums `p`
/// of `deg(w) + 1 ..= deg(w) + max_degree` generators, each interior one
/// tested for `p - w` in the cone.
#[allow(clippy::too_many_arguments)]
fn interior_search(
    cone: &Cone,
    gens: &[(Vec<i64>, WeightData)],
    dim: usize,
    zero: WeightData,
    max_degree: usize,
    samples: usize,
    seed: u64,
    limits: &Limits,
) -> Search {
    let vectors: Vec<Vec<i64>> = gens.iter().map(|g| g.0.clone()).collect();
    let active = cone.active(&vectors);
    let is_interior = |x: &[i64]| active.iter().all(|r| Cone::eval(r, x) > 0);

    let mut seen: HashSet<Vec<i64>> = HashSet::from([vec![0; dim]]);
    let mut frontier = vec![(vec![0i64; dim], zero)];
    let mut degree = 0;
    let mut truncated = false;
    let mut interior: BTreeMap<Vec<i64>, WeightData> = BTreeMap::new();
    while interior.is_empty() && !frontier.is_empty() {
        degree += 1;
        let mut next = Vec::new();
        for (x, wx) in &frontier {
            for (g, wg) in gens {
                let y: Vec<i64> = x.iter().zip(g).map(|(p, q)| p + q).collect();
                if seen.insert(y.clone()) {
                    let wy = wx.checked_add(wg).expect("same shape");
                    if is_interior(&y) {
                        interior.insert(y.clone(), wy.clone());
                    }
                    next.push((y, wy));
                }
            }
        }
        if limits.check("semigroup elements", seen.len() as u64).is_err() {
            truncated = interior.is_empty();
            break;
        }
        frontier = next;
    }

    let witness = interior.iter().next().map(|(x, w)| (x.clone(), degree, w.clone()));
    let mut samples_tested = 0;
    let mut sampled_ok = witness.is_some();
    if let Some((w, d, _)) = &witness {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let n = d + rng.gen_range(1..=max_degree.max(1));
            let mut p = vec![0i64; dim];
            for _ in 0..n {
                let g = &gens[rng.gen_range(0..gens.len())].0;
                p.iter_mut().zip(g).for_each(|(s, c)| *s += c);
            }
            if is_interior(&p) {
                samples_tested += 1;
                sampled_ok &= cone.contains(&sub(&p, w));
            }
        }
    }
    Search { minimal_interior: interior.len(), witness, truncated, samples_tested, sampled_ok }
}

fn factor_sum(m: usize, kind: FactorKind, leveled: bool) -> Result<(InterlacingPattern, Option<u64>)> {
    let gens = k_generators(m, kind)?;
    let gens: Vec<_> = if leveled { gens } else { gens.into_iter().filter(|g| !g.is_identity()).collect() };
    let mut sum = InterlacingPattern::zero(m, kind.orientation());
    for g in &gens {
        sum = sum.checked_add(&g.pattern())?;
    }
    Ok((sum, leveled.then_some(gens.len() as u64)))
}

/// Reports the gluing condition on the factor generator sums, the interior
/// witness `w` of least degree, and the sampled test `p - w ∈ S` for interior
/// `p` with `deg(p) - deg(w) <= max_degree`.
#[allow(clippy::too_many_arguments)]
pub fn gorenstein_check(
    m: usize,
    a: usize,
    b: usize,
    leveled: bool,
    max_degree: usize,
    samples: usize,
    seed: u64,
    limits: &Limits,
) -> Result<GorensteinReport> {
    let shape = ChainShape::new(m, a, b)?;
    let mut factor_sums = Vec::new();
    for k in 0..shape.factor_count() {
        let kind = shape.factor_kind(k);
        let (p, level) = factor_sum(m, kind, leveled)?;
        factor_sums.push(FactorSum {
            position: k + 1,
            kind,
            boundary_2: p.boundary_2(),
            boundary_1: p.boundary_1(),
            level,
        });
    }
    let comparisons: Vec<BoundaryComparison> = factor_sums
        .windows(2)
        .map(|f| {
            let left = f[0].boundary_1.clone();
            let right = f[1].boundary_2.dual();
            let matches = left == right && f[0].level == f[1].level;
            BoundaryComparison {
                position: f[0].position,
                left,
                right,
                left_level: f[0].level,
                right_level: f[1].level,
                matches,
            }
        })
        .collect();

    let tuples = generators(m, a, b, leveled, limits)?;
    let gens: Vec<(Vec<i64>, WeightData)> =
        tuples.iter().map(|t| (generator_coords(t, leveled), t.weights(leveled))).collect();
    let dim = shape.factor_count() * (2 * m - 1) + usize::from(leveled);
    let cone = Cone::chains(&shape, leveled);
    let zero = WeightData::zero(a, b, leveled.then_some(0));
    let search = interior_search(&cone, &gens, dim, zero, max_degree, samples, seed, limits);

    Ok(GorensteinReport {
        m,
        a,
        b,
        leveled,
        condition_holds: comparisons.iter().all(|c| c.matches),
        factor_sums,
        comparisons,
        degenerate: search.witness.is_none(),
        search_truncated: search.truncated,
        witness: search.witness.as_ref().map(|w| w.0.clone()),
        witness_degree: search.witness.as_ref().map(|w| w.1),
        witness_multidegree: search.witness.map(|w| w.2),
        minimal_interior: search.minimal_interior,
        samples_tested: search.samples_tested,
        sampled_interior_ok: search.sampled_ok,
        max_degree,
        seed,
    })
}
