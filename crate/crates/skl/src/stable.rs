//! Enumeration of s-stable k-subsets and their gap vectors.
//!
//! Elements are residues 0..n-1; the 1-based ground set maps in via x mod n
//! (so the label n becomes residue 0). A subset is s-stable when every two of
//! its elements are at circular distance at least s on the n-cycle, which for
//! the sorted element sequence is equivalent to all k consecutive circular
//! gaps being at least s.

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::params::Params;

/// A sorted s-stable k-subset of residues together with its circular gaps.
///
/// `gaps[i] = elements[i+1] - elements[i]` for i < k-1 and
/// `gaps[k-1] = elements[0] + n - elements[k-1]`; all gaps are >= s (for
/// k >= 2) and they sum to n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct StableSet {
    n: usize,
    elements: Vec<usize>,
    gaps: Vec<usize>,
}

impl StableSet {
    /// Validates sortedness and the gap condition for the given stability.
    pub fn new(p: &Params, elements: Vec<usize>) -> Result<Self> {
        if elements.len() != p.k() {
            return Err(Error::InvalidParams(format!(
                "expected {} elements, got {}",
                p.k(),
                elements.len()
            )));
        }
        if elements.iter().any(|&e| e >= p.n()) {
            return Err(Error::InvalidParams(format!(
                "element out of range 0..{}",
                p.n()
            )));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParams(
                "elements must be strictly increasing".into(),
            ));
        }
        let gaps = circular_gaps(p.n(), &elements);
        if p.k() >= 2 && gaps.iter().any(|&g| g < p.s()) {
            return Err(Error::InvalidParams(format!(
                "subset {elements:?} is not {}-stable in [{}]",
                p.s(),
                p.n()
            )));
        }
        debug_assert_eq!(gaps.iter().sum::<usize>(), p.n());
        Ok(StableSet {
            n: p.n(),
            elements,
            gaps,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// The k circular gaps, in element order.
    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn contains(&self, residue: usize) -> bool {
        self.elements.binary_search(&residue).is_ok()
    }

    pub fn is_disjoint(&self, other: &StableSet) -> bool {
        let (mut a, mut b) = (
            self.elements.iter().peekable(),
            other.elements.iter().peekable(),
        );
        while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
            match x.cmp(&y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Image under a ground map, re-sorted. The result is only a valid
    /// StableSet if the map preserves circular distances.
    pub fn map_elements(&self, f: impl Fn(usize) -> usize) -> Vec<usize> {
        let mut mapped: Vec<usize> = self.elements.iter().map(|&e| f(e)).collect();
        mapped.sort_unstable();
        mapped
    }

    /// Sorted 1-based ground-set labels for display (residue 0 prints as n).
    pub fn one_based_labels(&self) -> Vec<usize> {
        let mut labels: Vec<usize> = self
            .elements
            .iter()
            .map(|&e| if e == 0 { self.n } else { e })
            .collect();
        labels.sort_unstable();
        labels
    }
}

fn circular_gaps(n: usize, elements: &[usize]) -> Vec<usize> {
    let k = elements.len();
    let mut gaps = Vec::with_capacity(k);
    for i in 0..k.saturating_sub(1) {
        gaps.push(elements[i + 1] - elements[i]);
    }
    if k >= 1 {
        gaps.push(elements[0] + n - elements[k - 1]);
    }
    gaps
}

/// All s-stable k-subsets of residues 0..n-1, in lexicographic order of their
/// sorted element sequences.
///
/// Elements are placed left to right with every gap at least s and the
/// closing gap back to the first element at least s, so the work is linear in
/// the output.
pub fn enumerate_stable_sets(p: &Params) -> Vec<StableSet> {
    let (n, k) = (p.n(), p.k());
    let mut out = Vec::new();
    if k == 1 {
        for a in 0..n {
            out.push(StableSet::new(p, vec![a]).expect("singleton is stable"));
        }
        return out;
    }
    let mut prefix = Vec::with_capacity(k);
    for first in 0..n {
        prefix.push(first);
        place_rest(p, &mut prefix, &mut out);
        prefix.pop();
    }
    debug_assert!(out.windows(2).all(|w| w[0].elements < w[1].elements));
    out
}

fn place_rest(p: &Params, prefix: &mut Vec<usize>, out: &mut Vec<StableSet>) {
    let (n, k, s) = (p.n(), p.k(), p.s());
    if prefix.len() == k {
        out.push(StableSet::new(p, prefix.clone()).expect("construction preserves stability"));
        return;
    }
    let first = prefix[0];
    let last = *prefix.last().unwrap();
    let remaining_after = k - prefix.len() - 1;
    // The last element may not exceed first + n - s (closing gap), and must
    // leave room for `remaining_after` further elements spaced s apart.
    let closing_cap = first + n - s;
    let hi = (n - 1).min(closing_cap.saturating_sub(remaining_after * s));
    let lo = last + s;
    for next in lo..=hi {
        prefix.push(next);
        place_rest(p, prefix, out);
        prefix.pop();
    }
}

/// Exact count of s-stable k-subsets via the closed formula
/// (n/k) * C(n-(s-1)k-1, k-1). The product is always divisible by k; a
/// non-zero remainder is reported as an internal invariant violation rather
/// than rounded.
pub fn stable_set_count(p: &Params) -> Result<u64> {
    let (n, k, s) = (p.n() as u128, p.k() as u128, p.s() as u128);
    let top = n - (s - 1) * k - 1;
    let product = n * binomial(top, k - 1);
    if product % k != 0 {
        return Err(Error::Internal(format!(
            "count formula n*C(n-(s-1)k-1, k-1) = {product} is not divisible by k = {k} for {p}",
        )));
    }
    Ok((product / k) as u64)
}

/// The independence number formula C(n-(s-1)k-1, k-1): the common size of
/// every star of stable sets through a fixed residue.
pub fn star_size_formula(p: &Params) -> u64 {
    let (n, k, s) = (p.n() as u128, p.k() as u128, p.s() as u128);
    binomial(n - (s - 1) * k - 1, k - 1) as u64
}
