//! Constructors for the graph families under study: stable Kneser graphs,
//! their auxiliary graphs on the ground set, cycle powers and circulants.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::Params;
use crate::stable::{enumerate_stable_sets, StableSet};

/// A stable Kneser graph together with the subset carried by each vertex.
///
/// Vertices are the s-stable k-subsets in lexicographic order of their
/// element sequences; two vertices are adjacent exactly when their subsets
/// are disjoint. All cross-module vertex references use this order.
#[derive(Clone, Debug)]
pub struct StableKneserGraph {
    params: Params,
    graph: Graph,
    sets: Vec<StableSet>,
}

impl StableKneserGraph {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn num_vertices(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[StableSet] {
        &self.sets
    }

    pub fn vertex_set(&self, v: usize) -> &StableSet {
        &self.sets[v]
    }

    /// Vertex index of a sorted element sequence, if it names a vertex.
    pub fn index_of(&self, elements: &[usize]) -> Option<usize> {
        self.sets
            .binary_search_by(|set| set.elements().cmp(elements))
            .ok()
    }
}

pub fn stable_kneser_graph(p: &Params) -> StableKneserGraph {
    let sets = enumerate_stable_sets(p);
    let graph = Graph::from_pred(sets.len(), |i, j| sets[i].is_disjoint(&sets[j]));
    StableKneserGraph {
        params: *p,
        graph,
        sets,
    }
}

/// The auxiliary graph on the ground set, straight from its definition:
/// residues i and j are adjacent iff no s-stable k-subset contains both.
pub fn auxiliary_graph_definitional(p: &Params) -> Result<Graph> {
    if p.is_degenerate() {
        return Err(Error::InvalidParams(format!(
            "auxiliary graph requires n >= s*k + 1, got {p}"
        )));
    }
    let n = p.n();
    let mut covered = vec![false; n * n];
    for set in enumerate_stable_sets(p) {
        let elements = set.elements();
        for (idx, &a) in elements.iter().enumerate() {
            for &b in &elements[idx + 1..] {
                covered[a * n + b] = true;
                covered[b * n + a] = true;
            }
        }
    }
    Ok(Graph::from_pred(n, |i, j| !covered[i * n + j]))
}

/// The distances forbidden in the band regime sk+1 <= n <= s(k+1)-2: the
/// union of {d*s, ..., d*s + r} over d = 1..k-1, with r = n - s*k.
pub fn forbidden_distance_bands(p: &Params) -> Vec<usize> {
    let (k, s, r) = (p.k(), p.s(), p.r());
    let mut bands = Vec::new();
    for d in 1..k {
        for t in 0..=r {
            bands.push(d * s + t);
        }
    }
    bands
}

/// The auxiliary graph from the closed-form description: a cycle power for
/// n >= s(k+1)-1, otherwise the circulant avoiding the forbidden bands.
///
/// The band union is symmetric under x -> n-x, so reading the distance as a
/// plain difference or as a circular one gives the same graph; this symmetry
/// is re-checked here instead of being assumed.
pub fn auxiliary_graph_closed_form(p: &Params) -> Result<Graph> {
    if p.is_degenerate() {
        return Err(Error::InvalidParams(format!(
            "auxiliary graph requires n >= s*k + 1, got {p}"
        )));
    }
    if p.s() < 3 {
        return Err(Error::InvalidParams(format!(
            "closed form requires s >= 3, got {p}"
        )));
    }
    if p.k() < 2 {
        return Err(Error::InvalidParams(format!(
            "closed form requires k >= 2, got {p}"
        )));
    }
    let n = p.n();
    if p.in_cycle_power_regime() {
        return cycle_power(n, p.s() - 1);
    }
    let mut forbidden = vec![false; n];
    for d in forbidden_distance_bands(p) {
        forbidden[d] = true;
    }
    for x in 1..n {
        if forbidden[x] != forbidden[n - x] {
            return Err(Error::Internal(format!(
                "forbidden-band union is not symmetric under x -> n-x at x={x} for {p}"
            )));
        }
    }
    Ok(Graph::from_pred(n, |i, j| !forbidden[j - i]))
}

/// The d-th power of the n-cycle: vertices at circular distance <= d are
/// adjacent. Requires d < n/2, so the result is never complete.
pub fn cycle_power(n: usize, d: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "cycle power needs n >= 3, got n={n}"
        )));
    }
    if d < 1 || d >= n / 2 {
        return Err(Error::InvalidParams(format!(
            "cycle power needs 1 <= d < n/2, got n={n}, d={d}"
        )));
    }
    Ok(Graph::from_pred(n, |i, j| {
        let diff = j - i;
        diff.min(n - diff) <= d
    }))
}
