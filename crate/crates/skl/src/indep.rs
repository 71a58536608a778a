//! Exact maximum-independent-set machinery: the branch-and-bound solver,
//! exhaustive enumeration of all maximum independent sets, and the star
//! families that are expected to realize them on stable Kneser graphs.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::families::StableKneserGraph;
use crate::graph::Graph;

/// For each residue i, the set of vertices whose subset contains i.
///
/// Every star is an independent set (its members share an element, so they
/// are never disjoint), each vertex lies in exactly k stars, and for
/// n >= sk+1 the n stars are pairwise distinct.
#[derive(Clone, Debug)]
pub struct StarFamily {
    stars: Vec<BitSet>,
}

impl StarFamily {
    pub fn len(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    pub fn star(&self, residue: usize) -> &BitSet {
        &self.stars[residue]
    }

    pub fn stars(&self) -> &[BitSet] {
        &self.stars
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.stars.iter().map(BitSet::count).collect()
    }

    pub fn all_distinct(&self) -> bool {
        let mut sorted = self.stars.clone();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// How many stars contain each vertex.
    pub fn cover_counts(&self, num_vertices: usize) -> Vec<usize> {
        let mut counts = vec![0usize; num_vertices];
        for star in &self.stars {
            for v in star.iter() {
                counts[v] += 1;
            }
        }
        counts
    }
}

/// Builds the n stars from the vertex labels and verifies each against the
/// adjacency; a star containing an edge would contradict the construction of
/// the Kneser adjacency and is an internal invariant violation.
pub fn build_stars(kg: &StableKneserGraph) -> Result<StarFamily> {
    let n = kg.params().n();
    let nv = kg.num_vertices();
    let mut stars = vec![BitSet::new(nv); n];
    for v in 0..nv {
        for &x in kg.vertex_set(v).elements() {
            stars[x].insert(v);
        }
    }
    for (i, star) in stars.iter().enumerate() {
        for v in star.iter() {
            if !kg.graph().neighbors(v).is_disjoint(star) {
                return Err(Error::Internal(format!(
                    "star {i} contains an edge at vertex {v}"
                )));
            }
        }
    }
    Ok(StarFamily { stars })
}

/// Exact independence number with a witness set.
///
/// Branches on the highest-degree vertex of the residual graph and bounds by
/// a greedy clique cover of the candidates.
pub fn maximum_independent_set(g: &Graph, budget: u64) -> Result<(usize, BitSet)> {
    let n = g.num_vertices();
    let mut search = MisSearch {
        graph: g,
        budget,
        nodes: 0,
    };
    let mut best = 0usize;
    let mut best_witness = BitSet::new(n);
    let mut current = BitSet::new(n);
    search.maximize(BitSet::full(n), &mut current, &mut best, &mut best_witness)?;
    Ok((best, best_witness))
}

/// Every independent set of size exactly `alpha`, in deterministic order.
/// `alpha` must be the independence number for the result to mean "all
/// maximum independent sets".
pub fn all_maximum_independent_sets(g: &Graph, alpha: usize, budget: u64) -> Result<Vec<BitSet>> {
    let n = g.num_vertices();
    let mut search = MisSearch {
        graph: g,
        budget,
        nodes: 0,
    };
    let mut out = Vec::new();
    let mut current = BitSet::new(n);
    search.enumerate(BitSet::full(n), &mut current, alpha, &mut out)?;
    out.sort();
    Ok(out)
}

struct MisSearch<'a> {
    graph: &'a Graph,
    budget: u64,
    nodes: u64,
}

impl MisSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted {
                budget: self.budget,
                nodes: self.nodes,
            });
        }
        Ok(())
    }

    fn maximize(
        &mut self,
        candidates: BitSet,
        current: &mut BitSet,
        best: &mut usize,
        best_witness: &mut BitSet,
    ) -> Result<()> {
        self.tick()?;
        let size = current.count();
        if size > *best {
            *best = size;
            *best_witness = current.clone();
        }
        if candidates.is_empty() {
            return Ok(());
        }
        if size + candidates.count() <= *best {
            return Ok(());
        }
        if size + clique_cover_bound(self.graph, &candidates) <= *best {
            return Ok(());
        }
        let v = branch_vertex(self.graph, &candidates);
        // Include v.
        let mut included = candidates.difference(self.graph.neighbors(v));
        included.remove(v);
        current.insert(v);
        self.maximize(included, current, best, best_witness)?;
        current.remove(v);
        // Exclude v.
        let mut excluded = candidates;
        excluded.remove(v);
        self.maximize(excluded, current, best, best_witness)
    }

    fn enumerate(
        &mut self,
        candidates: BitSet,
        current: &mut BitSet,
        alpha: usize,
        out: &mut Vec<BitSet>,
    ) -> Result<()> {
        self.tick()?;
        let size = current.count();
        if size == alpha {
            out.push(current.clone());
            return Ok(());
        }
        if candidates.is_empty() || size + candidates.count() < alpha {
            return Ok(());
        }
        if size + clique_cover_bound(self.graph, &candidates) < alpha {
            return Ok(());
        }
        let v = branch_vertex(self.graph, &candidates);
        let mut included = candidates.difference(self.graph.neighbors(v));
        included.remove(v);
        current.insert(v);
        self.enumerate(included, current, alpha, out)?;
        current.remove(v);
        let mut excluded = candidates;
        excluded.remove(v);
        self.enumerate(excluded, current, alpha, out)
    }
}

/// Highest residual degree, lowest index on ties.
fn branch_vertex(g: &Graph, candidates: &BitSet) -> usize {
    let mut best = usize::MAX;
    let mut best_degree = 0usize;
    for v in candidates.iter() {
        let degree = g.neighbors(v).intersection_count(candidates);
        if best == usize::MAX || degree > best_degree {
            best = v;
            best_degree = degree;
        }
    }
    best
}

/// Size of a greedy clique partition of `candidates`: an independent set
/// meets each clique at most once, so this bounds the independent sets inside
/// `candidates`.
fn clique_cover_bound(g: &Graph, candidates: &BitSet) -> usize {
    let mut order: Vec<usize> = candidates.to_vec();
    order.sort_by_key(|&v| std::cmp::Reverse(g.neighbors(v).intersection_count(candidates)));
    // For each open clique, the set of vertices adjacent to all its members.
    let mut admissible: Vec<BitSet> = Vec::new();
    for v in order {
        match admissible.iter_mut().find(|common| common.contains(v)) {
            Some(common) => common.intersect_with(g.neighbors(v)),
            None => admissible.push(g.neighbors(v).clone()),
        }
    }
    admissible.len()
}
