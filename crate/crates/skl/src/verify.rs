//! The check registry and sweep driver behind `skl verify`.
//!
//! Each parameter triple runs a fixed catalog of checks. A check that cannot
//! apply (hypotheses unmet, degenerate triple, resource budget exhausted)
//! reports `skipped` with a reason; a failing check always carries a witness.
//! Every registered check id appears exactly once per triple.

use std::rc::Rc;

use rayon::prelude::*;
use serde_json::json;

use crate::aut::automorphism_group;
use crate::coloring::{chromatic_bounds_hold, chromatic_number, fractional_chromatic_certificate};
use crate::dihedral::{
    certify_dihedral, ground_dihedral_cert, induced_dihedral, rotation,
    sends_consecutive_to_consecutive,
};
use crate::error::{Error, Result};
use crate::families::{
    auxiliary_graph_closed_form, auxiliary_graph_definitional, cycle_power,
    forbidden_distance_bands, stable_kneser_graph, StableKneserGraph,
};
use crate::graph::Graph;
use crate::group::PermutationGroup;
use crate::indep::{
    all_maximum_independent_sets, build_stars, maximum_independent_set, StarFamily,
};
use crate::params::Params;
use crate::perm::Permutation;
use crate::report::{CheckRecord, Status, TripleReport, TripleSummary};
use crate::stable::{stable_set_count, star_size_formula};
use crate::starmap::star_map;

pub use crate::aut::DEFAULT_NODE_BUDGET;

pub const DEFAULT_MAX_VERTICES: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Aut,
    GStructure,
    Independence,
    Coloring,
    Transitivity,
    Degenerate,
}

impl Suite {
    pub fn all() -> Vec<Suite> {
        vec![
            Suite::Degenerate,
            Suite::GStructure,
            Suite::Aut,
            Suite::Independence,
            Suite::Transitivity,
            Suite::Coloring,
        ]
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub node_budget: u64,
    pub max_vertices: usize,
    pub suites: Vec<Suite>,
    /// Record wall time per check; off by default so replays byte-match.
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            max_vertices: DEFAULT_MAX_VERTICES,
            suites: Suite::all(),
            timing: false,
        }
    }
}

/// Which n values a sweep visits for fixed (s, k).
#[derive(Clone, Copy, Debug)]
pub enum NSpec {
    /// Inclusive absolute range.
    Absolute(usize, usize),
    /// Inclusive offsets from s*k (offset 0 is the degenerate boundary).
    Offset(usize, usize),
}

#[derive(Clone, Copy, Debug)]
pub struct SweepSpec {
    pub s: (usize, usize),
    pub k: (usize, usize),
    pub n: NSpec,
}

impl SweepSpec {
    /// Valid triples in (s, k, n) order; combinations with n < s*k drop out.
    pub fn triples(&self) -> Vec<Params> {
        let mut out = Vec::new();
        for s in self.s.0..=self.s.1 {
            for k in self.k.0..=self.k.1 {
                let (lo, hi) = match self.n {
                    NSpec::Absolute(lo, hi) => (lo, hi),
                    NSpec::Offset(lo, hi) => (s * k + lo, s * k + hi),
                };
                for n in lo..=hi {
                    if let Ok(p) = Params::new(n, k, s) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

/// Runs the selected suites on every triple, in parallel, with output order
/// canonicalized by the triple order of the spec.
pub fn run_sweep(spec: &SweepSpec, config: &VerifyConfig) -> Vec<TripleReport> {
    spec.triples()
        .into_par_iter()
        .map(|p| run_triple(p, config))
        .collect()
}

pub fn run_triple(params: Params, config: &VerifyConfig) -> TripleReport {
    let mut ctx = TripleCtx::new(params, config);
    let mut checks = Vec::new();
    for def in REGISTRY {
        if !config.suites.contains(&def.suite) {
            continue;
        }
        let started = std::time::Instant::now();
        let outcome = (def.run)(&mut ctx);
        let elapsed = started.elapsed().as_millis() as u64;
        checks.push(CheckRecord {
            s: params.s(),
            k: params.k(),
            n: params.n(),
            id: def.id.to_string(),
            status: outcome.status,
            reason: outcome.reason,
            witness: outcome.witness,
            elapsed_ms: config.timing.then_some(elapsed),
        });
    }
    let count = |status: Status| checks.iter().filter(|c| c.status == status).count();
    TripleReport {
        summary: TripleSummary {
            s: params.s(),
            k: params.k(),
            n: params.n(),
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            skipped: count(Status::Skipped),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            deterministic: !config.timing,
        },
        checks,
    }
}

pub struct CheckDef {
    pub id: &'static str,
    pub suite: Suite,
    run: fn(&mut TripleCtx) -> Outcome,
}

pub static REGISTRY: &[CheckDef] = &[
    CheckDef {
        id: "degen.complete",
        suite: Suite::Degenerate,
        run: check_degen_complete,
    },
    CheckDef {
        id: "degen.aut-order",
        suite: Suite::Degenerate,
        run: check_degen_aut_order,
    },
    CheckDef {
        id: "g.band-symmetry",
        suite: Suite::GStructure,
        run: check_band_symmetry,
    },
    CheckDef {
        id: "g.def-vs-closed",
        suite: Suite::GStructure,
        run: check_def_vs_closed,
    },
    CheckDef {
        id: "g.case1-cycle-power",
        suite: Suite::GStructure,
        run: check_case1_cycle_power,
    },
    CheckDef {
        id: "g.rotation-automorphism",
        suite: Suite::GStructure,
        run: check_rotation_automorphism,
    },
    CheckDef {
        id: "aut.kg-dihedral",
        suite: Suite::Aut,
        run: check_kg_dihedral,
    },
    CheckDef {
        id: "aut.g-dihedral",
        suite: Suite::Aut,
        run: check_g_dihedral,
    },
    CheckDef {
        id: "aut.g-consecutive",
        suite: Suite::Aut,
        run: check_g_consecutive,
    },
    CheckDef {
        id: "aut.star-map",
        suite: Suite::Aut,
        run: check_star_map,
    },
    CheckDef {
        id: "indep.count-formula",
        suite: Suite::Independence,
        run: check_count_formula,
    },
    CheckDef {
        id: "indep.alpha-formula",
        suite: Suite::Independence,
        run: check_alpha_formula,
    },
    CheckDef {
        id: "indep.stars-distinct",
        suite: Suite::Independence,
        run: check_stars_distinct,
    },
    CheckDef {
        id: "indep.double-counting",
        suite: Suite::Independence,
        run: check_double_counting,
    },
    CheckDef {
        id: "indep.max-sets-are-stars",
        suite: Suite::Independence,
        run: check_max_sets_are_stars,
    },
    CheckDef {
        id: "trans.orbit-count",
        suite: Suite::Transitivity,
        run: check_orbit_count,
    },
    CheckDef {
        id: "color.fractional",
        suite: Suite::Coloring,
        run: check_fractional,
    },
    CheckDef {
        id: "color.chi",
        suite: Suite::Coloring,
        run: check_chi,
    },
];

struct Outcome {
    status: Status,
    reason: Option<String>,
    witness: Option<serde_json::Value>,
}

impl Outcome {
    fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            reason: None,
            witness: None,
        }
    }

    fn fail(witness: serde_json::Value) -> Self {
        Outcome {
            status: Status::Fail,
            reason: None,
            witness: Some(witness),
        }
    }

    fn skip(reason: impl Into<String>) -> Self {
        Outcome {
            status: Status::Skipped,
            reason: Some(reason.into()),
            witness: None,
        }
    }

    fn from_error(e: &Error) -> Self {
        if e.is_resource_limit() {
            Outcome::skip(e.to_string())
        } else {
            Outcome::fail(json!({ "error": e.to_string() }))
        }
    }

    fn verdict(ok: bool, witness: impl FnOnce() -> serde_json::Value) -> Self {
        if ok {
            Outcome::pass()
        } else {
            Outcome::fail(witness())
        }
    }
}

macro_rules! ctx_try {
    ($expr:expr) => {
        match $expr {
            Ok(value) => value,
            Err(e) => return Outcome::from_error(&e),
        }
    };
}

/// Lazily built per-triple artifacts, shared across the checks of one triple.
pub struct TripleCtx<'a> {
    params: Params,
    config: &'a VerifyConfig,
    kg: Option<Result<Rc<StableKneserGraph>>>,
    kg_aut: Option<Result<Rc<PermutationGroup>>>,
    g_def: Option<Result<Rc<Graph>>>,
    g_aut: Option<Result<Rc<PermutationGroup>>>,
    stars: Option<Result<Rc<StarFamily>>>,
    alpha: Option<Result<usize>>,
}

impl<'a> TripleCtx<'a> {
    pub fn new(params: Params, config: &'a VerifyConfig) -> Self {
        TripleCtx {
            params,
            config,
            kg: None,
            kg_aut: None,
            g_def: None,
            g_aut: None,
            stars: None,
            alpha: None,
        }
    }

    fn kg(&mut self) -> Result<Rc<StableKneserGraph>> {
        if self.kg.is_none() {
            let params = self.params;
            let ceiling = self.config.max_vertices;
            self.kg = Some((|| {
                let vertices = stable_set_count(&params)?;
                if vertices > ceiling as u64 {
                    return Err(Error::VertexCeiling { vertices, ceiling });
                }
                Ok(Rc::new(stable_kneser_graph(&params)))
            })());
        }
        self.kg.as_ref().unwrap().clone()
    }

    fn kg_aut(&mut self) -> Result<Rc<PermutationGroup>> {
        if self.kg_aut.is_none() {
            let budget = self.config.node_budget;
            let result = self
                .kg()
                .and_then(|kg| automorphism_group(kg.graph(), budget).map(Rc::new));
            self.kg_aut = Some(result);
        }
        self.kg_aut.as_ref().unwrap().clone()
    }

    fn g_def(&mut self) -> Result<Rc<Graph>> {
        if self.g_def.is_none() {
            self.g_def = Some(auxiliary_graph_definitional(&self.params).map(Rc::new));
        }
        self.g_def.as_ref().unwrap().clone()
    }

    fn g_aut(&mut self) -> Result<Rc<PermutationGroup>> {
        if self.g_aut.is_none() {
            let budget = self.config.node_budget;
            let result = self
                .g_def()
                .and_then(|g| automorphism_group(&g, budget).map(Rc::new));
            self.g_aut = Some(result);
        }
        self.g_aut.as_ref().unwrap().clone()
    }

    fn stars(&mut self) -> Result<Rc<StarFamily>> {
        if self.stars.is_none() {
            let result = self.kg().and_then(|kg| build_stars(&kg).map(Rc::new));
            self.stars = Some(result);
        }
        self.stars.as_ref().unwrap().clone()
    }

    fn alpha(&mut self) -> Result<usize> {
        if self.alpha.is_none() {
            let budget = self.config.node_budget;
            let result = self
                .kg()
                .and_then(|kg| maximum_independent_set(kg.graph(), budget))
                .map(|(alpha, _)| alpha);
            self.alpha = Some(result);
        }
        self.alpha.as_ref().unwrap().clone()
    }
}

fn factorial(x: usize) -> usize {
    (1..=x).product()
}

// --- Degenerate boundary n = s*k ---------------------------------------

fn check_degen_complete(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if !p.is_degenerate() {
        return Outcome::skip("requires n = s*k");
    }
    let kg = ctx_try!(ctx.kg());
    let complete = kg.graph().is_complete();
    Outcome::verdict(kg.num_vertices() == p.s() && complete, || {
        json!({
            "vertices": kg.num_vertices(),
            "expected_vertices": p.s(),
            "complete": complete,
        })
    })
}

fn check_degen_aut_order(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if !p.is_degenerate() {
        return Outcome::skip("requires n = s*k");
    }
    let aut = ctx_try!(ctx.kg_aut());
    let expected = factorial(p.s());
    Outcome::verdict(
        aut.order() == expected,
        || json!({ "aut_order": aut.order(), "expected": expected }),
    )
}

// --- Auxiliary-graph structure ------------------------------------------

/// Common gate for statements about G(n,k,s) under the closed form.
fn gate_g_structure(p: &Params) -> Option<Outcome> {
    if p.is_degenerate() {
        return Some(Outcome::skip("requires n >= s*k + 1"));
    }
    if p.s() < 3 {
        return Some(Outcome::skip("hypothesis s >= 3 unmet"));
    }
    if p.k() < 2 {
        return Some(Outcome::skip("requires k >= 2"));
    }
    None
}

fn check_band_symmetry(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if let Some(gate) = gate_g_structure(&p) {
        return gate;
    }
    if p.in_cycle_power_regime() {
        return Outcome::skip("cycle-power regime: no forbidden bands");
    }
    let bands = forbidden_distance_bands(&p);
    let n = p.n();
    let asymmetric: Vec<usize> = bands
        .iter()
        .copied()
        .filter(|&x| !bands.contains(&(n - x)))
        .collect();
    Outcome::verdict(
        asymmetric.is_empty(),
        || json!({ "bands": bands, "asymmetric_at": asymmetric }),
    )
}

fn check_def_vs_closed(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if let Some(gate) = gate_g_structure(&p) {
        return gate;
    }
    let definitional = ctx_try!(ctx.g_def());
    let closed = ctx_try!(auxiliary_graph_closed_form(&p));
    Outcome::verdict(*definitional == closed, || {
        let row = (0..p.n())
            .find(|&v| definitional.neighbors(v) != closed.neighbors(v))
            .unwrap_or(0);
        json!({
            "first_differing_vertex": row,
            "definitional_row": definitional.neighbors(row).to_vec(),
            "closed_form_row": closed.neighbors(row).to_vec(),
        })
    })
}

fn check_case1_cycle_power(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if let Some(gate) = gate_g_structure(&p) {
        return gate;
    }
    if !p.in_cycle_power_regime() {
        return Outcome::skip("band regime: sk+1 <= n <= s(k+1)-2");
    }
    let definitional = ctx_try!(ctx.g_def());
    let power = ctx_try!(cycle_power(p.n(), p.s() - 1));
    Outcome::verdict(
        *definitional == power,
        || json!({ "cycle_power_degree": 2 * (p.s() - 1) }),
    )
}

fn check_rotation_automorphism(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if p.is_degenerate() {
        return Outcome::skip("requires n >= s*k + 1");
    }
    if p.k() < 2 {
        return Outcome::skip("requires k >= 2");
    }
    let g = ctx_try!(ctx.g_def());
    let rot = rotation(p.n(), 1);
    let ok = ctx_try!(g.is_automorphism(&rot));
    Outcome::verdict(ok, || json!({ "rotation": rot.to_string() }))
}

// --- Automorphism groups -------------------------------------------------

fn check_kg_dihedral(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if p.is_degenerate() {
        return Outcome::skip("requires n >= s*k + 1");
    }
    if p.k() < 2 {
        return Outcome::skip("requires k >= 2");
    }
    let kg = ctx_try!(ctx.kg());
    let cert = ctx_try!(induced_dihedral(&kg));
    let aut = ctx_try!(ctx.kg_aut());
    Outcome::verdict(certify_dihedral(&aut, &cert), || {
        json!({
            "aut_order": aut.order(),
            "induced_order": cert.elements().len(),
            "expected_order": 2 * p.n(),
            "faithful": cert.is_faithful(),
        })
    })
}

fn check_g_dihedral(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if let Some(gate) = gate_g_structure(&p) {
        return gate;
    }
    let aut = ctx_try!(ctx.g_aut());
    let cert = ctx_try!(ground_dihedral_cert(p.n()));
    Outcome::verdict(certify_dihedral(&aut, &cert), || {
        json!({
            "aut_order": aut.order(),
            "expected_order": 2 * p.n(),
        })
    })
}

fn check_g_consecutive(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if let Some(gate) = gate_g_structure(&p) {
        return gate;
    }
    let aut = ctx_try!(ctx.g_aut());
    let offender = aut
        .elements()
        .iter()
        .find(|perm| !sends_consecutive_to_consecutive(perm));
    Outcome::verdict(
        offender.is_none(),
        || json!({ "offender": offender.map(|p| p.to_string()) }),
    )
}

fn check_star_map(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if let Some(gate) = gate_g_structure(&p) {
        return gate;
    }
    let kg = ctx_try!(ctx.kg());
    let stars = ctx_try!(ctx.stars());
    let kg_aut = ctx_try!(ctx.kg_aut());
    let g_aut = ctx_try!(ctx.g_aut());

    let mut images: Vec<Permutation> = Vec::with_capacity(kg_aut.order());
    for alpha in kg_aut.elements() {
        images.push(ctx_try!(star_map(&kg, &stars, alpha)).ground);
    }

    // Injective, lands in Aut(G), and matches its order (hence onto).
    let mut deduped = images.clone();
    deduped.sort();
    deduped.dedup();
    if deduped.len() != images.len() {
        return Outcome::fail(json!({ "property": "injective", "distinct": deduped.len() }));
    }
    if let Some(outside) = images.iter().find(|ground| !g_aut.contains(ground)) {
        return Outcome::fail(json!({
            "property": "image-in-aut-g",
            "offender": outside.to_string(),
        }));
    }
    if images.len() != g_aut.order() {
        return Outcome::fail(json!({
            "property": "onto",
            "kg_aut_order": images.len(),
            "g_aut_order": g_aut.order(),
        }));
    }

    // Composition is preserved: the full table on small groups, otherwise a
    // fixed deterministic sample of 100 pairs.
    let order = kg_aut.order();
    let pairs: Vec<(usize, usize)> = if p.n() <= p.s() * p.k() + 3 {
        (0..order)
            .flat_map(|a| (0..order).map(move |b| (a, b)))
            .collect()
    } else {
        (0..100)
            .map(|i| ((7 * i + 3) % order, (11 * i + 5) % order))
            .collect()
    };
    for (a, b) in pairs {
        let alpha = &kg_aut.elements()[a];
        let beta = &kg_aut.elements()[b];
        let composed = ctx_try!(star_map(&kg, &stars, &alpha.compose(beta))).ground;
        let expected = images[a].compose(&images[b]);
        if composed != expected {
            return Outcome::fail(json!({
                "property": "homomorphism",
                "pair": [a, b],
                "composed": composed.to_string(),
                "expected": expected.to_string(),
            }));
        }
    }
    Outcome::pass()
}

// --- Counting and independence -------------------------------------------

fn check_count_formula(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if p.is_degenerate() {
        return Outcome::skip("requires n >= s*k + 1");
    }
    let count = ctx_try!(stable_set_count(&p));
    let kg = ctx_try!(ctx.kg());
    Outcome::verdict(
        kg.num_vertices() as u64 == count,
        || json!({ "enumerated": kg.num_vertices(), "formula": count }),
    )
}

fn check_alpha_formula(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if p.is_degenerate() {
        return Outcome::skip("requires n >= s*k + 1");
    }
    let alpha = ctx_try!(ctx.alpha());
    let stars = ctx_try!(ctx.stars());
    let expected = star_size_formula(&p) as usize;
    let sizes_ok = stars.sizes().iter().all(|&size| size == expected);
    Outcome::verdict(alpha == expected && sizes_ok, || {
        json!({
            "solver_alpha": alpha,
            "formula": expected,
            "star_sizes": stars.sizes(),
        })
    })
}

fn check_stars_distinct(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if p.is_degenerate() {
        return Outcome::skip("requires n >= s*k + 1");
    }
    let stars = ctx_try!(ctx.stars());
    Outcome::verdict(
        stars.all_distinct(),
        || json!({ "stars": stars.stars().iter().map(|s| s.to_vec()).collect::<Vec<_>>() }),
    )
}

fn check_double_counting(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    let kg = ctx_try!(ctx.kg());
    let stars = ctx_try!(ctx.stars());
    let total: usize = stars.sizes().iter().sum();
    let expected = p.k() * kg.num_vertices();
    Outcome::verdict(
        total == expected,
        || json!({ "sum_of_star_sizes": total, "k_times_vertices": expected }),
    )
}

fn check_max_sets_are_stars(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if p.is_degenerate() {
        return Outcome::skip("requires n >= s*k + 1");
    }
    if p.s() < 3 {
        return Outcome::skip("star structure asserted only for s >= 3");
    }
    let kg = ctx_try!(ctx.kg());
    let alpha = ctx_try!(ctx.alpha());
    let stars = ctx_try!(ctx.stars());
    let budget = ctx.config.node_budget;
    let all = ctx_try!(all_maximum_independent_sets(kg.graph(), alpha, budget));
    let mut expected = stars.stars().to_vec();
    expected.sort();
    Outcome::verdict(all == expected, || {
        json!({
            "maximum_sets": all.len(),
            "stars": expected.len(),
            "alpha": alpha,
        })
    })
}

// --- Vertex transitivity ---------------------------------------------------

fn check_orbit_count(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if p.is_degenerate() {
        return Outcome::skip("requires n >= s*k + 1");
    }
    if p.k() < 2 {
        return Outcome::skip("requires k >= 2");
    }
    let aut = ctx_try!(ctx.kg_aut());
    let orbits = aut.orbits();
    let transitive = orbits.len() == 1;
    let expected = p.n() == p.s() * p.k() + 1;
    Outcome::verdict(transitive == expected, || {
        json!({
            "orbit_count": orbits.len(),
            "expected_transitive": expected,
            "orbit_sizes": orbits.iter().map(Vec::len).collect::<Vec<_>>(),
        })
    })
}

// --- Coloring ---------------------------------------------------------------

fn check_fractional(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if p.is_degenerate() {
        return Outcome::skip("requires n >= s*k + 1");
    }
    let kg = ctx_try!(ctx.kg());
    let stars = ctx_try!(ctx.stars());
    let alpha = ctx_try!(ctx.alpha());
    let cert = ctx_try!(fractional_chromatic_certificate(&p, &kg, &stars, alpha));
    Outcome::verdict(cert.is_tight(), || {
        json!({
            "lower": cert.lower.to_string(),
            "upper": cert.upper.to_string(),
        })
    })
}

fn check_chi(ctx: &mut TripleCtx) -> Outcome {
    let p = ctx.params;
    if p.is_degenerate() {
        return Outcome::skip("requires n >= s*k + 1");
    }
    let kg = ctx_try!(ctx.kg());
    let chi = ctx_try!(chromatic_number(kg.graph(), ctx.config.node_budget));
    let bounds_ok = chromatic_bounds_hold(&p, chi);
    let tight_point_ok = p.n() != p.s() * p.k() + 1 || chi == p.s() + 1;
    Outcome::verdict(bounds_ok && tight_point_ok, || {
        json!({
            "chi": chi,
            "lower_bound": p.n().div_ceil(p.k()),
            "upper_bound": p.n() - (p.k() - 1) * p.s(),
            "expected_at_tight_point": p.s() + 1,
        })
    })
}
