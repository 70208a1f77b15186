//! Dominant weights of `SL_m` and `GL_m`.
//!
//! An `SL_m` weight is a weakly decreasing list of `m - 1` nonnegative
//! integers, a `GL_m` weight a weakly decreasing list of `m` of them. Both
//! carry their rank so that operations across ranks fail instead of silently
//! truncating.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dominant weight of `SL_m`: `m - 1` weakly decreasing nonnegative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SlWeight {
    m: usize,
    entries: Vec<u64>,
}

/// Positive dominant weight of `GL_m`: `m` weakly decreasing nonnegative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlWeight {
    entries: Vec<u64>,
}

pub(crate) fn is_weakly_decreasing(entries: &[u64]) -> bool {
    entries.windows(2).all(|w| w[0] >= w[1])
}

pub(crate) fn check_rank(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidInput(format!("rank m must be at least 2, got {m}")));
    }
    Ok(())
}

impl SlWeight {
    pub fn new(m: usize, entries: Vec<u64>) -> Result<Self> {
        check_rank(m)?;
        if entries.len() != m - 1 {
            return Err(Error::InvalidWeight(format!("an SL_{m} weight has {} entries, got {}", m - 1, entries.len())));
        }
        if !is_weakly_decreasing(&entries) {
            return Err(Error::InvalidWeight(format!("{entries:?} is not weakly decreasing")));
        }
        Ok(Self { m, entries })
    }

    /// Used where the invariants are established by construction.
    pub(crate) fn from_entries_unchecked(m: usize, entries: Vec<u64>) -> Self {
        debug_assert_eq!(entries.len(), m - 1);
        debug_assert!(is_weakly_decreasing(&entries));
        Self { m, entries }
    }

    pub fn zero(m: usize) -> Self {
        Self { m, entries: vec![0; m - 1] }
    }

    /// The fundamental weight `ω_k`; indices are taken mod `m`, so `ω_m` (and
    /// `ω_0`) is the zero weight.
    pub fn fundamental(m: usize, k: usize) -> Self {
        let k = k % m;
        let entries = (0..m - 1).map(|i| u64::from(i < k)).collect();
        Self { m, entries }
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Number of boxes in the Young diagram.
    pub fn size(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// First entry, or 0 for `m = 1` (never constructed).
    pub fn first(&self) -> u64 {
        self.entries.first().copied().unwrap_or(0)
    }

    /// Highest weight of the dual representation:
    /// `dual(w)_i = w_1 - w_{m+1-i}` with `w_m = 0`.
    pub fn dual(&self) -> SlWeight {
        let m = self.m;
        let first = self.first();
        let at = |j: usize| if j == m { 0 } else { self.entries[j - 1] };
        let entries = (1..m).map(|i| first - at(m + 1 - i)).collect();
        Self { m, entries }
    }

    /// Lifts to the `GL_m` weight `(w_1 + c, ..., w_{m-1} + c, c)`.
    pub fn gl_lift(&self, c: u64) -> GlWeight {
        let mut entries: Vec<u64> = self.entries.iter().map(|&e| e + c).collect();
        entries.push(c);
        GlWeight { entries }
    }

    /// `k · self`.
    pub fn scale(&self, k: u64) -> SlWeight {
        Self { m: self.m, entries: self.entries.iter().map(|&e| e * k).collect() }
    }

    /// `Some(k)` when `self = k · ω_j`.
    pub fn multiple_of_fundamental(&self, j: usize) -> Option<u64> {
        let omega = Self::fundamental(self.m, j);
        if omega.is_zero() {
            return self.is_zero().then_some(0);
        }
        let k = self.entries[0];
        (self.entries.iter().zip(omega.entries()).all(|(&e, &o)| e == k * o)).then_some(k)
    }

    pub fn checked_add(&self, other: &SlWeight) -> Result<SlWeight> {
        if self.m != other.m {
            return Err(Error::RankMismatch { expected: self.m, found: other.m });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Self { m: self.m, entries })
    }

    /// Parses the textual form `2,1,0` (or `0` for the zero weight).
    pub fn parse(m: usize, text: &str) -> Result<Self> {
        check_rank(m)?;
        let text = text.trim();
        if text == "0" {
            return Ok(Self::zero(m));
        }
        Self::new(m, parse_list(text)?)
    }
}

impl Add for &SlWeight {
    type Output = SlWeight;

    fn add(self, rhs: &SlWeight) -> SlWeight {
        self.checked_add(rhs).expect("adding SL weights of different rank")
    }
}

impl fmt::Display for SlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        write_list(f, &self.entries)
    }
}

impl GlWeight {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        check_rank(entries.len())?;
        if !is_weakly_decreasing(&entries) {
            return Err(Error::InvalidWeight(format!("{entries:?} is not weakly decreasing")));
        }
        Ok(Self { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn size(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// The underlying `SL_m` weight `(w_1 - w_m, ..., w_{m-1} - w_m)`.
    pub fn sl_reduce(&self) -> SlWeight {
        let m = self.entries.len();
        let last = self.entries[m - 1];
        SlWeight { m, entries: self.entries[..m - 1].iter().map(|&e| e - last).collect() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_list(text)?)
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.entries)
    }
}

pub fn dual(w: &SlWeight) -> SlWeight {
    w.dual()
}

pub fn sl_reduce(w: &GlWeight) -> SlWeight {
    w.sl_reduce()
}

pub fn gl_lift(w: &SlWeight, c: u64) -> GlWeight {
    w.gl_lift(c)
}

/// Parses `1,2,3` into a list of nonnegative integers.
pub fn parse_list(text: &str) -> Result<Vec<u64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|p| p.trim().parse::<u64>().map_err(|e| Error::Parse(format!("`{}`: {e}", p.trim())))).collect()
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, entries: &[u64]) -> fmt::Result {
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

/// All `SL_m` weights with entries at most `bound`, in lexicographic order.
pub fn all_sl_weights(m: usize, bound: u64) -> Vec<SlWeight> {
    fn rec(m: usize, cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<SlWeight>) {
        if prefix.len() == m - 1 {
            out.push(SlWeight::from_entries_unchecked(m, prefix.clone()));
            return;
        }
        for v in 0..=cap {
            prefix.push(v);
            rec(m, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, bound, &mut Vec::new(), &mut out);
    out.sort();
    out
}
