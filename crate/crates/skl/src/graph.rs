//! Immutable labeled-free undirected graphs with bitset adjacency rows.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An undirected graph on vertices `0..num_vertices`, one bitset row per
/// vertex. Rows are symmetric and loop-free by construction; the type offers
/// no mutation, so instances are safe to share across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; endpoints
    /// out of range and self-loops are rejected.
    pub fn new(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut rows = vec![BitSet::new(num_vertices); num_vertices];
        for &(a, b) in edges {
            if a >= num_vertices {
                return Err(Error::EndpointOutOfRange {
                    endpoint: a,
                    num_vertices,
                });
            }
            if b >= num_vertices {
                return Err(Error::EndpointOutOfRange {
                    endpoint: b,
                    num_vertices,
                });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            rows[a].insert(b);
            rows[b].insert(a);
        }
        Ok(Graph { rows })
    }

    /// Builds a graph from an adjacency predicate, queried once per pair i<j.
    pub fn from_pred(num_vertices: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut rows = vec![BitSet::new(num_vertices); num_vertices];
        for i in 0..num_vertices {
            for j in (i + 1)..num_vertices {
                if adjacent(i, j) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        Graph { rows }
    }

    pub fn complete(num_vertices: usize) -> Self {
        Self::from_pred(num_vertices, |_, _| true)
    }

    pub fn num_vertices(&self) -> usize {
        self.rows.len()
    }

    pub fn num_edges(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    /// Edges as (i, j) with i < j, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for i in 0..self.num_vertices() {
            for j in self.rows[i].iter() {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.num_vertices();
        self.rows.iter().all(|row| row.count() == n - 1)
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = self.rows.iter().map(BitSet::count);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// True iff `p` preserves adjacency: for all i < j, (i,j) is an edge
    /// exactly when (p(i), p(j)) is.
    pub fn is_automorphism(&self, p: &Permutation) -> Result<bool> {
        let n = self.num_vertices();
        if p.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                actual: p.degree(),
            });
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if self.has_edge(i, j) != self.has_edge(p.apply(i), p.apply(j)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.num_vertices(),
            self.num_edges(),
            self.edges()
        )
    }
}
