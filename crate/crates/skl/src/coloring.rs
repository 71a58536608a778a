//! Exact chromatic number and the certified fractional chromatic number.
//!
//! The chromatic solver is iterative deepening over a saturation-ordered
//! backtracking colorability test. The fractional value is certified, not
//! LP-solved: weighting every star by 1/k covers each vertex with total
//! weight exactly 1 (upper certificate n/k), and |V|/alpha is the matching
//! lower certificate. Certificates are exact rationals; no floating point.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::families::StableKneserGraph;
use crate::graph::Graph;
use crate::indep::StarFamily;
use crate::params::Params;

/// Matching upper and lower certificates for the fractional chromatic number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalCertificate {
    /// |V| / alpha.
    pub lower: Ratio<u64>,
    /// Total weight of the star covering: n * (1/k) = n/k.
    pub upper: Ratio<u64>,
    /// Weight placed on each of the n stars.
    pub star_weight: Ratio<u64>,
}

impl FractionalCertificate {
    /// The certified value is pinned exactly when both sides agree.
    pub fn is_tight(&self) -> bool {
        self.lower == self.upper
    }
}

/// Validates the star covering (every vertex in exactly k stars, hence
/// covered with total weight k * 1/k = 1) and returns both certificates.
pub fn fractional_chromatic_certificate(
    p: &Params,
    kg: &StableKneserGraph,
    stars: &StarFamily,
    alpha: usize,
) -> Result<FractionalCertificate> {
    let nv = kg.num_vertices();
    for (vertex, &count) in stars.cover_counts(nv).iter().enumerate() {
        if count != p.k() {
            return Err(Error::InvalidCover {
                vertex,
                count,
                expected: p.k(),
            });
        }
    }
    if alpha == 0 {
        return Err(Error::InvalidParams("alpha must be positive".into()));
    }
    let lower = Ratio::new(nv as u64, alpha as u64);
    let star_weight = Ratio::new(1, p.k() as u64);
    let upper = Ratio::from_integer(p.n() as u64) * star_weight;
    if lower > upper {
        return Err(Error::Internal(format!(
            "lower certificate {lower} exceeds upper certificate {upper} for {p}"
        )));
    }
    Ok(FractionalCertificate {
        lower,
        upper,
        star_weight,
    })
}

/// ceil(n/k) <= chi <= n - (k-1)s.
pub fn chromatic_bounds_hold(p: &Params, chi: usize) -> bool {
    let lower = p.n().div_ceil(p.k());
    let upper = p.n() - (p.k() - 1) * p.s();
    lower <= chi && chi <= upper
}

/// Exact chromatic number by iterative deepening: test q-colorability for
/// q from a greedy clique lower bound up to a greedy coloring upper bound.
///
/// On budget exhaustion the error reports the interval [q, ub] still open.
pub fn chromatic_number(g: &Graph, budget: u64) -> Result<usize> {
    let n = g.num_vertices();
    if n == 0 {
        return Ok(0);
    }
    if g.num_edges() == 0 {
        return Ok(1);
    }
    let clique = greedy_clique(g);
    let lower = clique.len();
    let upper = dsatur_greedy_count(g);
    debug_assert!(lower <= upper);
    let mut nodes = 0u64;
    for q in lower..upper {
        match q_colorable(g, q, &clique, budget, &mut nodes) {
            Ok(true) => return Ok(q),
            Ok(false) => continue,
            Err(Error::BudgetExhausted { .. }) => {
                return Err(Error::ChromaticBudget {
                    budget,
                    lower: q,
                    upper,
                });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(upper)
}

/// Backtracking q-colorability with saturation-degree vertex selection.
///
/// Color classes are canonical: the vertices of a fixed clique are pinned to
/// colors 0..c-1 and every other vertex may only open the next unused color,
/// so each coloring is visited once per color-class renaming.
fn q_colorable(
    g: &Graph,
    q: usize,
    clique: &[usize],
    budget: u64,
    nodes: &mut u64,
) -> Result<bool> {
    debug_assert!(clique.len() <= q);
    let n = g.num_vertices();
    let mut search = ColorSearch {
        graph: g,
        q,
        colors: vec![None; n],
        neighbor_colors: vec![vec![0u32; q]; n],
        saturation: vec![0; n],
        residual: (0..n).map(|v| g.degree(v) as u32).collect(),
        budget,
        nodes,
    };
    for (c, &v) in clique.iter().enumerate() {
        search.assign(v, c);
    }
    search.extend(clique.len())
}

struct ColorSearch<'a> {
    graph: &'a Graph,
    q: usize,
    colors: Vec<Option<u32>>,
    /// neighbor_colors[v][c]: how many neighbors of v currently wear c.
    neighbor_colors: Vec<Vec<u32>>,
    /// Number of distinct colors among each vertex's neighbors.
    saturation: Vec<u32>,
    /// Number of uncolored neighbors.
    residual: Vec<u32>,
    budget: u64,
    nodes: &'a mut u64,
}

impl ColorSearch<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        debug_assert_eq!(self.neighbor_colors[v][c], 0);
        self.colors[v] = Some(c as u32);
        for u in self.graph.neighbors(v).iter() {
            self.residual[u] -= 1;
            let cell = &mut self.neighbor_colors[u][c];
            if *cell == 0 {
                self.saturation[u] += 1;
            }
            *cell += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        for u in self.graph.neighbors(v).iter() {
            self.residual[u] += 1;
            let cell = &mut self.neighbor_colors[u][c];
            *cell -= 1;
            if *cell == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Uncolored vertex with maximum saturation, breaking ties by residual
    /// degree, then by index.
    fn select(&self) -> Option<usize> {
        let mut best: Option<(u32, u32, usize)> = None;
        for v in 0..self.graph.num_vertices() {
            if self.colors[v].is_some() {
                continue;
            }
            let better = match best {
                None => true,
                Some((sat, deg, _)) => {
                    self.saturation[v] > sat
                        || (self.saturation[v] == sat && self.residual[v] > deg)
                }
            };
            if better {
                best = Some((self.saturation[v], self.residual[v], v));
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn extend(&mut self, used: usize) -> Result<bool> {
        *self.nodes += 1;
        if *self.nodes > self.budget {
            return Err(Error::BudgetExhausted {
                budget: self.budget,
                nodes: *self.nodes,
            });
        }
        let Some(v) = self.select() else {
            return Ok(true);
        };
        let limit = (used + 1).min(self.q);
        for c in 0..limit {
            if self.neighbor_colors[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            let colored = self.extend(used.max(c + 1))?;
            self.unassign(v, c);
            if colored {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Greedy clique grown from the highest-degree vertex; a lower bound for chi
/// and the seed for canonical pre-coloring.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.num_vertices();
    let start = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
    let Some(start) = start else {
        return Vec::new();
    };
    let mut clique = vec![start];
    let mut candidates = g.neighbors(start).clone();
    while let Some(next) = {
        let mut best: Option<(usize, usize)> = None;
        for v in candidates.iter() {
            let degree = g.neighbors(v).intersection_count(&candidates);
            let better = match best {
                None => true,
                Some((bd, _)) => degree > bd,
            };
            if better {
                best = Some((degree, v));
            }
        }
        best.map(|(_, v)| v)
    } {
        clique.push(next);
        candidates.intersect_with(g.neighbors(next));
    }
    clique
}

/// DSATUR greedy coloring; its color count is an upper bound for chi.
fn dsatur_greedy_count(g: &Graph) -> usize {
    let n = g.num_vertices();
    let mut colors: Vec<Option<u32>> = vec![None; n];
    let mut used = 0usize;
    for _ in 0..n {
        let v = select_vertex_greedy(g, &colors);
        let mut forbidden = vec![false; used + 1];
        for u in g.neighbors(v).iter() {
            if let Some(c) = colors[u] {
                forbidden[c as usize] = true;
            }
        }
        let c = (0..=used).find(|&c| !forbidden[c]).unwrap();
        colors[v] = Some(c as u32);
        used = used.max(c + 1);
    }
    used
}

fn select_vertex_greedy(g: &Graph, colors: &[Option<u32>]) -> usize {
    let mut best: Option<(usize, usize, usize)> = None;
    for v in 0..g.num_vertices() {
        if colors[v].is_some() {
            continue;
        }
        let mut seen = std::collections::BTreeSet::new();
        for u in g.neighbors(v).iter() {
            if let Some(c) = colors[u] {
                seen.insert(c);
            }
        }
        let residual = g
            .neighbors(v)
            .iter()
            .filter(|&u| colors[u].is_none())
            .count();
        let better = match best {
            None => true,
            Some((bs, bd, _)) => seen.len() > bs || (seen.len() == bs && residual > bd),
        };
        if better {
            best = Some((seen.len(), residual, v));
        }
    }
    best.expect("an uncolored vertex exists").2
}
