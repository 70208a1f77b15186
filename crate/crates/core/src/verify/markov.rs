//! Connectivity of the swap-move graph on each fiber.
//!
//! A fiber is the set of multisets of level-one generators with a given sum.
//! Two multisets are adjacent when one arises from the other by replacing a
//! pair `{u, v}` with a swapped pair `{u', v'}`. Swaps generate the toric
//! ideal in the degrees considered exactly when every fiber is connected.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use super::{generator_coords, generators};
use crate::chains::{swap_pairs, ChainShape, GeneratorTuple, WeightData};
use crate::error::{Error, Result};
use crate::guard::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub multidegree: WeightData,
    /// Coordinates of the common chain element.
    pub element: Vec<i64>,
    pub fiber_size: usize,
    pub connected: bool,
    /// Swap path from the first to the last multiset of a connected fiber.
    pub witness_path: Option<Vec<Vec<GeneratorTuple>>>,
    /// Two multisets in different components of a disconnected fiber.
    pub disconnected_pair: Option<(Vec<GeneratorTuple>, Vec<GeneratorTuple>)>,
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Sorted index multisets of size `d` over `0..n`.
fn multisets(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, d: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            cur.push(i);
            rec(n, d, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, 0, &mut Vec::with_capacity(d), &mut out);
    out
}

struct Fiber {
    nodes: Vec<Vec<usize>>,
}

impl Fiber {
    fn neighbours(&self, node: &[usize], swaps: &HashMap<(usize, usize), Vec<(usize, usize)>>) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for p in 0..node.len() {
            for q in p + 1..node.len() {
                let Some(moves) = swaps.get(&(node[p], node[q])) else { continue };
                for &(x, y) in moves {
                    let mut next = node.to_vec();
                    next[p] = x;
                    next[q] = y;
                    next.sort_unstable();
                    out.push(next);
                }
            }
        }
        out
    }

    /// BFS from the first node: parent pointers, `None` for unreached nodes.
    fn search(&self, swaps: &HashMap<(usize, usize), Vec<(usize, usize)>>) -> Vec<Option<usize>> {
        let index: HashMap<&[usize], usize> = self.nodes.iter().enumerate().map(|(i, n)| (n.as_slice(), i)).collect();
        let mut parent = vec![None; self.nodes.len()];
        parent[0] = Some(0);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for next in self.neighbours(&self.nodes[i], swaps) {
                let j = index[next.as_slice()];
                if parent[j].is_none() {
                    parent[j] = Some(i);
                    queue.push_back(j);
                }
            }
        }
        parent
    }
}

/// Reports for every fiber of sums of at most `max_degree` generators of
/// `P(a,b)` (`leveled`, generators `X_{a,b}`) or `Q(a,b)` (generators
/// `Y_{a,b}`, swaps restricted to `Y`). Ordered by size, then element.
pub fn markov_check(
    m: usize,
    a: usize,
    b: usize,
    leveled: bool,
    max_degree: usize,
    limits: &Limits,
) -> Result<Vec<FiberReport>> {
    let shape = ChainShape::new(m, a, b)?;
    if max_degree == 0 {
        return Err(Error::InvalidInput("max_degree must be at least 1".into()));
    }
    let gens = generators(m, a, b, leveled, limits)?;
    let n = gens.len();
    let total = (1..=max_degree as u64).fold(0u64, |acc, d| acc.saturating_add(binomial(n as u64 + d - 1, d)));
    limits.check("generator multisets", total)?;

    let coords: Vec<Vec<i64>> = gens.iter().map(|t| generator_coords(t, leveled)).collect();
    let index: HashMap<&GeneratorTuple, usize> = gens.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let swaps: HashMap<(usize, usize), Vec<(usize, usize)>> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let moves =
                swap_pairs(&gens[i], &gens[j], !leveled).into_iter().map(|(u, v)| (index[&u], index[&v])).collect();
            ((i, j), moves)
        })
        .collect();

    let mut fibers: BTreeMap<Vec<i64>, Fiber> = BTreeMap::new();
    for d in 1..=max_degree {
        for ms in multisets(n, d) {
            let mut sum = vec![0i64; coords[0].len()];
            for &g in &ms {
                sum.iter_mut().zip(&coords[g]).for_each(|(s, c)| *s += c);
            }
            fibers.entry(sum).or_insert_with(|| Fiber { nodes: Vec::new() }).nodes.push(ms);
        }
    }
    let mut fibers: Vec<(Vec<i64>, Fiber)> = fibers.into_iter().collect();
    fibers.sort_by(|x, y| (x.1.nodes[0].len(), &x.0).cmp(&(y.1.nodes[0].len(), &y.0)));

    let named = |ms: &[usize]| ms.iter().map(|&g| gens[g].clone()).collect::<Vec<_>>();
    let reports = fibers
        .par_iter()
        .map(|(element, fiber)| {
            let multidegree = fiber.nodes[0]
                .iter()
                .map(|&g| gens[g].weights(leveled))
                .reduce(|x, y| x.checked_add(&y).expect("same shape"))
                .unwrap_or_else(|| WeightData::zero(shape.a, shape.b, leveled.then_some(0)));
            let parent = fiber.search(&swaps);
            let unreached = parent.iter().position(Option::is_none);
            let (witness_path, disconnected_pair) = match unreached {
                Some(j) => (None, Some((named(&fiber.nodes[0]), named(&fiber.nodes[j])))),
                None => {
                    let mut path = vec![fiber.nodes.len() - 1];
                    while let Some(&last) = path.last() {
                        let p = parent[last].expect("reached");
                        if p == last {
                            break;
                        }
                        path.push(p);
                    }
                    path.reverse();
                    (Some(path.into_iter().map(|i| named(&fiber.nodes[i])).collect()), None)
                }
            };
            FiberReport {
                multidegree,
                element: element.clone(),
                fiber_size: fiber.nodes.len(),
                connected: unreached.is_none(),
                witness_path,
                disconnected_pair,
            }
        })
        .collect();
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m2_leveled_degree_three_connected() {
        let reports = markov_check(2, 2, 2, true, 3, &Limits::default()).unwrap();
        assert!(reports.iter().all(|r| r.connected));
        assert!(reports.iter().any(|r| r.fiber_size > 1));
    }

    #[test]
    fn degree_one_fibers_are_singletons() {
        let reports = markov_check(3, 2, 2, true, 1, &Limits::default()).unwrap();
        assert_eq!(reports.len(), 6);
        assert!(reports.iter().all(|r| r.fiber_size == 1 && r.connected));
        assert!(reports.iter().all(|r| r.witness_path.as_ref().unwrap().len() == 1));
    }

    #[test]
    fn m3_pairs_connected() {
        let reports = markov_check(3, 2, 2, true, 2, &Limits::default()).unwrap();
        assert!(reports.iter().all(|r| r.connected));
        let big = reports.iter().filter(|r| r.fiber_size > 1).count();
        assert!(big > 0);
    }

    #[test]
    fn witness_paths_are_swap_moves() {
        for r in markov_check(3, 2, 3, false, 3, &Limits::default()).unwrap() {
            let path = r.witness_path.unwrap();
            assert!(!path.is_empty());
            for step in path.windows(2) {
                let mut gone: Vec<_> = step[0].clone();
                let mut came: Vec<_> = Vec::new();
                for t in &step[1] {
                    match gone.iter().position(|g| g == t) {
                        Some(i) => {
                            gone.remove(i);
                        }
                        None => came.push(t.clone()),
                    }
                }
                assert_eq!(gone.len(), 2);
                assert_eq!(came.len(), 2);
            }
        }
    }

    #[test]
    fn guard_and_bad_degree() {
        assert!(matches!(markov_check(3, 3, 3, true, 3, &Limits::new(50)), Err(Error::SizeGuard { .. })));
        assert!(markov_check(3, 2, 2, true, 0, &Limits::default()).is_err());
    }
}
