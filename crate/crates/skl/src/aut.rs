//! Exhaustive automorphism-group enumeration by individualization-refinement
//! backtracking.
//!
//! The search carries two colorings of the same graph: the left one fixes a
//! canonical individualization sequence, the right one ranges over candidate
//! images. Both are refined in lockstep by classical color refinement
//! (partition by multiset of neighbor colors); whenever the class signatures
//! diverge the branch dies. A leaf where both partitions are discrete
//! proposes the mapping "left class i -> right class i", which is accepted
//! only if it passes a full adjacency check, so refinement subtleties can
//! cost time but never correctness. Every automorphism is collected
//! explicitly; there is no canonical-form shortcut.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermutationGroup;
use crate::perm::Permutation;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// The complete automorphism group of `g` as an explicit element set.
///
/// `node_budget` caps the number of search nodes (roughly: refinement
/// invocations); exceeding it aborts with `Error::BudgetExhausted`.
pub fn automorphism_group(g: &Graph, node_budget: u64) -> Result<PermutationGroup> {
    let n = g.num_vertices();
    let mut search = Search {
        graph: g,
        budget: node_budget,
        nodes: 0,
        found: Vec::new(),
    };
    let initial = vec![0u32; n];
    let ncolors = if n == 0 { 0 } else { 1 };
    search.recurse(initial.clone(), initial, ncolors)?;
    let generators = search.found.clone();
    Ok(PermutationGroup::from_elements(n, search.found, generators))
}

type Coloring = Vec<u32>;

struct Search<'a> {
    graph: &'a Graph,
    budget: u64,
    nodes: u64,
    found: Vec<Permutation>,
}

impl Search<'_> {
    fn recurse(
        &mut self,
        mut left: Coloring,
        mut right: Coloring,
        mut ncolors: usize,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted {
                budget: self.budget,
                nodes: self.nodes,
            });
        }
        if !refine_pair(self.graph, &mut left, &mut right, &mut ncolors) {
            return Ok(());
        }
        let n = self.graph.num_vertices();
        if ncolors == n {
            self.emit_leaf(&left, &right)?;
            return Ok(());
        }
        // Target cell: first smallest non-singleton class; individualize its
        // lowest-index vertex on the left against every right candidate.
        let mut sizes = vec![0u32; ncolors];
        for &c in &left {
            sizes[c as usize] += 1;
        }
        let target = (0..ncolors)
            .filter(|&c| sizes[c] >= 2)
            .min_by_key(|&c| (sizes[c], c))
            .expect("non-discrete partition has a non-singleton class");
        let v = (0..n)
            .find(|&v| left[v] as usize == target)
            .expect("target class is non-empty");
        for w in 0..n {
            if right[w] as usize != target {
                continue;
            }
            let mut left_child = left.clone();
            let mut right_child = right.clone();
            left_child[v] = ncolors as u32;
            right_child[w] = ncolors as u32;
            self.recurse(left_child, right_child, ncolors + 1)?;
        }
        Ok(())
    }

    fn emit_leaf(&mut self, left: &Coloring, right: &Coloring) -> Result<()> {
        let n = self.graph.num_vertices();
        let mut right_vertex_of_class = vec![0usize; n];
        for w in 0..n {
            right_vertex_of_class[right[w] as usize] = w;
        }
        let images: Vec<usize> = (0..n)
            .map(|v| right_vertex_of_class[left[v] as usize])
            .collect();
        let p = Permutation::from_images(images)
            .map_err(|e| Error::Internal(format!("discrete leaf produced a non-bijection: {e}")))?;
        if self.graph.is_automorphism(&p)? {
            self.found.push(p);
        }
        Ok(())
    }
}

/// Refines both colorings to their common equitable partition. Returns false
/// as soon as a pass produces different class signatures on the two sides,
/// meaning no automorphism is compatible with the current individualization.
fn refine_pair(g: &Graph, left: &mut Coloring, right: &mut Coloring, ncolors: &mut usize) -> bool {
    loop {
        let (new_left, classes_left) = refine_step(g, left, *ncolors);
        let (new_right, classes_right) = refine_step(g, right, *ncolors);
        if classes_left != classes_right {
            return false;
        }
        *left = new_left;
        *right = new_right;
        let grown = classes_left.len();
        if grown == *ncolors {
            return true;
        }
        *ncolors = grown;
    }
}

/// One refinement pass. Every vertex gets the signature
/// (current color, neighbor count per class); vertices are re-colored by the
/// rank of their signature. Returns the new coloring and the ordered list of
/// (signature, class size), which is what the two search sides compare.
fn refine_step(g: &Graph, colors: &Coloring, ncolors: usize) -> (Coloring, Vec<(Vec<u32>, u32)>) {
    let n = g.num_vertices();
    let mut tagged: Vec<(Vec<u32>, usize)> = Vec::with_capacity(n);
    for v in 0..n {
        let mut sig = vec![0u32; ncolors + 1];
        sig[0] = colors[v];
        for u in g.neighbors(v).iter() {
            sig[1 + colors[u] as usize] += 1;
        }
        tagged.push((sig, v));
    }
    tagged.sort_unstable();
    let mut new_colors = vec![0u32; n];
    let mut classes: Vec<(Vec<u32>, u32)> = Vec::new();
    for (sig, v) in tagged {
        match classes.last_mut() {
            Some((last, size)) if *last == sig => *size += 1,
            _ => classes.push((sig, 1)),
        }
        new_colors[v] = (classes.len() - 1) as u32;
    }
    (new_colors, classes)
}
