//! Validated parameter triples (n, k, s).

use std::fmt;

use crate::error::{Error, Result};

/// A validated triple: ground-set size `n`, subset size `k`, stability `s`,
/// plus the derived slack `r = n - s*k`.
///
/// Validation admits every triple with `k >= 1`, `s >= 2`, `n >= s*k`; the
/// degenerate boundary `n = s*k` is allowed here and gated per use site,
/// since several statements additionally require `n >= s*k + 1` or `s >= 3`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Params {
    n: usize,
    k: usize,
    s: usize,
    r: usize,
}

impl Params {
    pub fn new(n: usize, k: usize, s: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParams("k must be at least 1".into()));
        }
        if s < 2 {
            return Err(Error::InvalidParams(format!(
                "s must be at least 2, got {s}"
            )));
        }
        let sk = s
            .checked_mul(k)
            .ok_or_else(|| Error::InvalidParams("s*k overflows".into()))?;
        if n < sk {
            return Err(Error::InvalidParams(format!(
                "n must be at least s*k = {sk}, got {n}"
            )));
        }
        Ok(Params { n, k, s, r: n - sk })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Slack r = n - s*k.
    pub fn r(&self) -> usize {
        self.r
    }

    /// n = s*k, where the stable Kneser graph collapses to K_s.
    pub fn is_degenerate(&self) -> bool {
        self.r == 0
    }

    /// n >= s(k+1) - 1, where the auxiliary graph is a cycle power.
    pub fn in_cycle_power_regime(&self) -> bool {
        self.n + 1 >= self.s * (self.k + 1)
    }

    /// 1-based ground-set label for an internal residue (0 prints as n).
    pub fn one_based_label(&self, residue: usize) -> usize {
        debug_assert!(residue < self.n);
        if residue == 0 {
            self.n
        } else {
            residue
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, k={}, s={})", self.n, self.k, self.s)
    }
}
