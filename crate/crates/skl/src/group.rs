//! Small permutation groups stored as explicit element sets.
//!
//! Desk-scale groups here have at most a few hundred elements (dihedral
//! groups, small symmetric groups), so the whole element set is materialized
//! and compared exactly; generator-only representations would make set
//! equality approximate.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    /// Sorted, deduplicated.
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
            generators: vec![],
        }
    }

    /// Wraps an element set that is already known to be a group (for example
    /// the output of an exhaustive automorphism search). Sorts and dedups.
    pub fn from_elements(
        degree: usize,
        elements: Vec<Permutation>,
        generators: Vec<Permutation>,
    ) -> Self {
        let mut set: BTreeSet<Permutation> = elements.into_iter().collect();
        set.insert(Permutation::identity(degree));
        PermutationGroup {
            degree,
            elements: set.into_iter().collect(),
            generators,
        }
    }

    /// The group generated by `generators`, as a full element set.
    ///
    /// Breadth-first products; a finite set of permutations closed under
    /// composition is automatically closed under inverse. Aborts once the
    /// element count would exceed `max_order`.
    pub fn closure(degree: usize, generators: &[Permutation], max_order: usize) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    actual: g.degree(),
                });
            }
        }
        let mut elements: BTreeSet<Permutation> = BTreeSet::new();
        let mut queue: Vec<Permutation> = vec![Permutation::identity(degree)];
        elements.insert(Permutation::identity(degree));
        while let Some(current) = queue.pop() {
            for g in generators {
                let next = g.compose(&current);
                if !elements.contains(&next) {
                    if elements.len() >= max_order {
                        return Err(Error::GroupOrderLimit { max_order });
                    }
                    elements.insert(next.clone());
                    queue.push(next);
                }
            }
        }
        Ok(PermutationGroup {
            degree,
            elements: elements.into_iter().collect(),
            generators: generators.to_vec(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Exact element-set equality. Degrees must match.
    pub fn same_elements(&self, other: &PermutationGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                actual: other.degree,
            });
        }
        Ok(self.elements == other.elements)
    }

    /// Vertex orbits under the group, sorted by minimum element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut dsu = DisjointSets::new(self.degree);
        for p in &self.elements {
            for v in 0..self.degree {
                dsu.union(v, p.apply(v));
            }
        }
        dsu.partition()
    }
}

/// Plain union-find with path halving, used only for orbit computation.
struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn partition(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let r = self.find(v);
            classes[r].push(v);
        }
        classes.retain(|c| !c.is_empty());
        classes
    }
}
