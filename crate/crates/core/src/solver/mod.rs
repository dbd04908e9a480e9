//! Exact γ and γ_cer with certificates.
//!
//! [`gamma_cer_solve`] splits the graph into components, tries a closed form
//! per component, and otherwise runs branch-and-bound with every support
//! vertex forced into the set. Ties between optimal sets are broken towards
//! the lexicographically smallest ascending vertex list, so the solver and the
//! subset-enumeration oracles return identical certificates.

mod oracle;
mod search;

pub use oracle::{
    all_min_certified_dominating_sets_bounded, all_min_dominating_sets, all_min_dominating_sets_bounded,
    find_dd2_pair_oracle, gamma_cer_oracle, gamma_cer_oracle_bounded, gamma_oracle, gamma_oracle_bounded,
    DEFAULT_ORACLE_BOUND,
};

use std::num::NonZeroU64;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::domination::{is_certified_dominating, is_dd2_pair, is_dominating, DD2Pair};
use crate::graph::Graph;
use crate::structure;
use search::{Assignment, Objective, Search};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Support forcing, the constructive initial incumbent and the γ floor.
    pub use_reductions: bool,
    /// Closed-form values for recognized components.
    pub use_closed_forms: bool,
    /// Total search nodes allowed per call.
    pub node_limit: Option<NonZeroU64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            use_reductions: true,
            use_closed_forms: true,
            node_limit: None,
        }
    }
}

impl SolverConfig {
    /// Pure branch-and-bound: no reductions, no closed forms.
    pub fn plain() -> Self {
        Self {
            use_reductions: false,
            use_closed_forms: false,
            node_limit: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes_expanded: u64,
    pub forced_vertices: u64,
    pub components_split: u64,
    pub closed_form_hits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub certificate: VertexSet,
    pub stats: SolveStats,
    /// False when the node limit cut the search short; `value` is then only
    /// an upper bound.
    pub proven: bool,
}

/// Exact certified domination number with the lexicographically smallest
/// minimum certified dominating set.
pub fn gamma_cer_solve(g: &Graph, cfg: &SolverConfig) -> SolveResult {
    solve_by_components(g, cfg, Objective::Certified)
}

/// Exact domination number with the lexicographically smallest minimum
/// dominating set.
pub fn gamma_solve(g: &Graph, cfg: &SolverConfig) -> SolveResult {
    solve_by_components(g, cfg, Objective::Dominating)
}

/// A `(D, D₂)` pair with `|D|` minimum, or `None` when the graph has no pair
/// with `|D| <= max_d_size`.
///
/// Graphs with `δ ≥ 1` and no weak support take the constructive route: the
/// minimum certified dominating set `D` has size γ and only illuminated
/// members, so `(D, V \ D)` is a pair. Everything else is searched exactly
/// for the smallest `D` whose members all have two neighbours outside `D`.
pub fn find_dd2_pair(g: &Graph, max_d_size: Option<usize>) -> Option<DD2Pair> {
    let n = g.order();
    let cap = max_d_size.unwrap_or(n).min(n);
    let cfg = SolverConfig::default();
    if n > 0 && g.min_degree() >= Some(1) && g.weak_supports().is_empty() {
        let d = gamma_cer_solve(g, &cfg).certificate;
        let pair = DD2Pair { d, d2: d.complement(n) };
        if is_dd2_pair(g, &pair) {
            return (pair.d.len() <= cap).then_some(pair);
        }
    }
    let d = solve_by_components_bounded(g, &cfg, Objective::Dd2, cap + 1)?;
    Some(DD2Pair { d, d2: d.complement(n) })
}

fn solve_by_components(g: &Graph, cfg: &SolverConfig, objective: Objective) -> SolveResult {
    let mut budget = Budget::new(cfg.node_limit);
    let components = g.components();
    let mut stats = SolveStats {
        components_split: if components.len() > 1 {
            components.len() as u64
        } else {
            0
        },
        ..Default::default()
    };
    let mut certificate = VertexSet::new();
    let mut proven = true;
    for (vertices, h) in &components {
        let part = solve_component(h, cfg, objective, &mut budget, &mut stats);
        proven &= part.proven;
        let map: Vec<usize> = vertices.iter().collect();
        for v in &part.set {
            certificate.insert(map[v]);
        }
    }
    SolveResult {
        value: certificate.len(),
        certificate,
        stats,
        proven,
    }
}

/// Per-component search for the DD₂ objective, which may be infeasible.
fn solve_by_components_bounded(g: &Graph, cfg: &SolverConfig, objective: Objective, bound: usize) -> Option<VertexSet> {
    let mut budget = Budget::new(cfg.node_limit);
    let mut stats = SolveStats::default();
    let mut certificate = VertexSet::new();
    for (vertices, h) in g.components() {
        let root = Assignment::new(VertexSet::new(), VertexSet::new());
        let best = run(&h, objective, root, h.order() + 1, 0, &mut budget, &mut stats, false)?;
        let part = lex_min(&h, objective, VertexSet::new(), best, &mut budget, &mut stats);
        let map: Vec<usize> = vertices.iter().collect();
        for v in &part {
            certificate.insert(map[v]);
        }
        if certificate.len() >= bound {
            return None;
        }
    }
    Some(certificate)
}

struct ComponentSolution {
    set: VertexSet,
    proven: bool,
}

struct Budget {
    remaining: Option<u64>,
    exhausted: bool,
}

impl Budget {
    fn new(limit: Option<NonZeroU64>) -> Self {
        Self {
            remaining: limit.map(NonZeroU64::get),
            exhausted: false,
        }
    }

    fn charge(&mut self, nodes: u64, exhausted: bool) {
        if let Some(r) = self.remaining.as_mut() {
            *r = r.saturating_sub(nodes);
        }
        self.exhausted |= exhausted;
    }
}

#[allow(clippy::too_many_arguments)]
fn run(
    h: &Graph,
    objective: Objective,
    root: Assignment,
    below: usize,
    floor: usize,
    budget: &mut Budget,
    stats: &mut SolveStats,
    first_only: bool,
) -> Option<VertexSet> {
    if budget.exhausted {
        return None;
    }
    let mut search = Search::new(h, objective)
        .below(below)
        .floor(floor)
        .node_limit(budget.remaining);
    if first_only {
        search = search.first_only();
    }
    let out = search.run(root);
    budget.charge(out.nodes, out.exhausted);
    stats.nodes_expanded += out.nodes;
    stats.forced_vertices += out.forced;
    out.best
}

fn solve_component(
    h: &Graph,
    cfg: &SolverConfig,
    objective: Objective,
    budget: &mut Budget,
    stats: &mut SolveStats,
) -> ComponentSolution {
    let n = h.order();
    let certified = objective == Objective::Certified;
    let forced = if certified && cfg.use_reductions {
        let s = h.supports();
        stats.forced_vertices += s.len() as u64;
        s
    } else {
        VertexSet::new()
    };

    let closed = if certified && cfg.use_closed_forms {
        structure::closed_form(h).map(|(_, value)| value)
    } else {
        None
    };

    let witness = match closed {
        Some(value) => {
            stats.closed_form_hits += 1;
            let root = Assignment::new(forced, VertexSet::new());
            match run(h, objective, root, value + 1, value, budget, stats, true) {
                Some(w) => w,
                None => {
                    return ComponentSolution {
                        set: h.vertices(),
                        proven: false,
                    }
                }
            }
        }
        None => {
            let (incumbent, floor) = initial_incumbent(h, cfg, objective, stats);
            if incumbent.len() <= floor {
                incumbent
            } else {
                let root = Assignment::new(forced, VertexSet::new());
                run(h, objective, root, incumbent.len(), floor, budget, stats, false).unwrap_or(incumbent)
            }
        }
    };
    if budget.exhausted {
        return ComponentSolution {
            set: witness,
            proven: false,
        };
    }
    debug_assert!(n == 0 || !witness.is_empty());
    let set = lex_min(h, objective, forced, witness, budget, stats);
    ComponentSolution {
        set,
        proven: !budget.exhausted,
    }
}

/// Turns an optimal witness into the lexicographically smallest optimal set:
/// vertices are fixed in ascending order, each included whenever some optimal
/// solution extends the choices made so far.
fn lex_min(
    h: &Graph,
    objective: Objective,
    forced: VertexSet,
    mut witness: VertexSet,
    budget: &mut Budget,
    stats: &mut SolveStats,
) -> VertexSet {
    let k = witness.len();
    let mut fixed_in = forced;
    let mut fixed_out = VertexSet::new();
    for v in 0..h.order() {
        if fixed_in.contains(v) {
            continue;
        }
        if witness.contains(v) {
            fixed_in.insert(v);
            continue;
        }
        let mut trial = fixed_in;
        trial.insert(v);
        match run(
            h,
            objective,
            Assignment::new(trial, fixed_out),
            k + 1,
            0,
            budget,
            stats,
            true,
        ) {
            Some(w) => {
                fixed_in = trial;
                witness = w;
            }
            None if budget.exhausted => return witness,
            None => {
                fixed_out.insert(v);
            }
        }
    }
    witness
}

/// Upper-bound solution and a proven lower bound for one component.
fn initial_incumbent(
    h: &Graph,
    cfg: &SolverConfig,
    objective: Objective,
    stats: &mut SolveStats,
) -> (VertexSet, usize) {
    match objective {
        Objective::Dominating => (greedy_dominating_set(h), 0),
        Objective::Certified if cfg.use_reductions => {
            let inner = SolverConfig {
                node_limit: None,
                ..*cfg
            };
            let gamma = gamma_solve(h, &inner);
            stats.nodes_expanded += gamma.stats.nodes_expanded;
            (certified_incumbent(h, &gamma.certificate), gamma.value)
        }
        Objective::Certified | Objective::Dd2 => (h.vertices(), 0),
    }
}

fn greedy_dominating_set(h: &Graph) -> VertexSet {
    let all = h.vertices();
    let mut d = VertexSet::new();
    let mut undominated = all;
    while !undominated.is_empty() {
        let best = (0..h.order())
            .max_by_key(|&v| {
                (
                    h.closed_neighbours(v).intersection_len(&undominated),
                    std::cmp::Reverse(v),
                )
            })
            .expect("non-empty graph");
        d.insert(best);
        undominated = undominated.difference(&h.closed_neighbours(best));
    }
    d
}

/// Certified dominating set of size at most `γ + |S₁|` built from a minimum
/// dominating set of a connected graph: leaves are swapped for their supports,
/// half-shadowed non-supports are shifted onto their outside neighbour, and the
/// leaf of every remaining half-shadowed weak support is added. Falls back to
/// `V` minus the leaves of strong supports if the result is not certified.
pub(crate) fn certified_incumbent(h: &Graph, gamma_set: &VertexSet) -> VertexSet {
    let n = h.order();
    let mut fallback = h.vertices();
    for s in &h.strong_supports() {
        for l in &h.neighbours(s).intersection(&h.leaves()) {
            fallback.remove(l);
        }
    }
    debug_assert!(is_certified_dominating(h, &fallback));
    if n < 3 {
        return fallback;
    }

    let leaves = h.leaves();
    let weak = h.weak_supports();
    let mut d = *gamma_set;
    for l in &d.intersection(&leaves) {
        let s = h.support_of(l).expect("leaf");
        d.remove(l);
        d.insert(s);
    }
    let half_shadowed = |d: &VertexSet| d.iter().filter(|&v| h.neighbours(v).difference(d).len() == 1).count();
    for _ in 0..n {
        let Some(v) = d
            .iter()
            .find(|&v| !weak.contains(v) && h.neighbours(v).difference(&d).len() == 1)
        else {
            break;
        };
        let u = h.neighbours(v).difference(&d).first().expect("one outside neighbour");
        let mut next = d;
        next.remove(v);
        next.insert(u);
        if !is_dominating(h, &next) || half_shadowed(&next) >= half_shadowed(&d) {
            break;
        }
        d = next;
    }
    for s in &d.intersection(&weak) {
        if h.neighbours(s).difference(&d).len() == 1 {
            if let Ok(l) = h.leaf_of(s) {
                d.insert(l);
            }
        }
    }
    if is_certified_dominating(h, &d) && d.len() < fallback.len() {
        d
    } else {
        fallback
    }
}

#[cfg(test)]
mod tests;
