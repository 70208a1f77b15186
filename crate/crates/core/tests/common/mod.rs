//! Oracles for the integration tests. None of them touches the pattern or
//! labelling code of the library.

#![allow(dead_code)]

use std::collections::HashMap;

use kpieri_core::{glue, ChainElement, InterlacingPattern, Orientation};

/// Permutations of `0..n` with their signs.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if rest.is_empty() {
            out.push((cur.clone(), sign));
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            cur.push(v);
            rec(rest, cur, if k % 2 == 0 { sign } else { -sign }, out);
            cur.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), 1, &mut out);
    out
}

/// Compositions of `n` into `m` nonnegative parts.
fn compositions(n: u64, m: usize) -> Vec<Vec<i64>> {
    if m == 1 {
        return vec![vec![n as i64]];
    }
    (0..=n)
        .flat_map(|first| {
            compositions(n - first, m - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first as i64);
                rest
            })
        })
        .collect()
}

/// `dim (⊗ Sym^{r_i} C^m ⊗ ⊗ Sym^{s_j} (C^m)*)^{SL_m}` from characters: the
/// multiplicity of `det^c` is the alternating sum over `S_m` of weight
/// multiplicities at `c·1 + wρ - ρ`.
pub fn character_invariants(m: usize, r: &[u64], s: &[u64]) -> u64 {
    let total: i64 = r.iter().sum::<u64>() as i64 - s.iter().sum::<u64>() as i64;
    if total.rem_euclid(m as i64) != 0 {
        return 0;
    }
    let c = total / m as i64;
    let mut weights: HashMap<Vec<i64>, i64> = HashMap::from([(vec![0; m], 1)]);
    for (&d, sign) in r.iter().map(|d| (d, 1)).chain(s.iter().map(|d| (d, -1))) {
        let parts = compositions(d, m);
        let mut next: HashMap<Vec<i64>, i64> = HashMap::new();
        for (w, n) in &weights {
            for p in &parts {
                let v: Vec<i64> = w.iter().zip(p).map(|(x, y)| x + sign * y).collect();
                *next.entry(v).or_default() += n;
            }
        }
        weights = next;
    }
    let rho: Vec<i64> = (0..m).map(|i| (m - 1 - i) as i64).collect();
    let mut dim = 0i64;
    for (perm, sign) in signed_permutations(m) {
        let target: Vec<i64> = (0..m).map(|i| c + rho[perm[i]] - rho[i]).collect();
        dim += sign * weights.get(&target).copied().unwrap_or(0);
    }
    assert!(dim >= 0);
    dim as u64
}

/// Every interlacing pattern of the given orientation whose entries are 0 or 1.
fn unit_patterns(m: usize, orientation: Orientation) -> Vec<InterlacingPattern> {
    let mut out = Vec::new();
    for t in 0..=m {
        for u in 0..m {
            let top: Vec<u64> = (0..m).map(|i| u64::from(i < t)).collect();
            let bottom: Vec<u64> = (0..m - 1).map(|i| u64::from(i < u)).collect();
            if let Ok(p) = InterlacingPattern::new(orientation, top, bottom) {
                out.push(p);
            }
        }
    }
    out
}

/// All level-one chains of `P(a,b)`, by trying every product of 0/1 patterns.
pub fn level_one_chains(m: usize, a: usize, b: usize) -> Vec<ChainElement> {
    let normal = unit_patterns(m, Orientation::Normal);
    let dual = unit_patterns(m, Orientation::Dual);
    let slots: Vec<&[InterlacingPattern]> =
        (0..a + b - 2).map(|k| if k < a - 1 { normal.as_slice() } else { dual.as_slice() }).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; slots.len()];
    loop {
        let factors = idx.iter().zip(&slots).map(|(&i, s)| s[i].clone()).collect();
        if let Ok(c) = glue(factors, Some(1)) {
            out.push(c);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                out.sort();
                return out;
            }
            idx[k] += 1;
            if idx[k] < slots[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}
