//! Bound reports, edge and vertex modification sweeps, and
//! Nordhaus–Gaddum quantities.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{
    all_min_dominating_sets_bounded, gamma_cer_solve, gamma_solve, SolverConfig, DEFAULT_ORACLE_BOUND,
};
use crate::structure::{check_gamma_cer_equals_n, recognize_corona};

/// Largest order accepted by [`nordhaus_gaddum`]; the complement of a sparse
/// graph is dense and slow to solve beyond this.
pub const NG_MAX_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub name: &'static str,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

impl Bound {
    fn new(name: &'static str, lhs: usize, rhs: usize) -> Self {
        Self {
            name,
            lhs,
            rhs,
            holds: lhs <= rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub holds: bool,
    /// A minimum dominating set `D` with `N(s) \ L ⊄ D` for every weak
    /// support `s`.
    pub lemma43_witness: Option<VertexSet>,
    /// As `lemma43_witness`, additionally containing no leaf. Unlike the plain
    /// witness, its existence matches `holds` (P₄ has a plain witness).
    pub leaf_free_witness: Option<VertexSet>,
    /// False when the graph was too large to list its minimum dominating sets.
    pub witness_searched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub gamma: usize,
    pub gamma_cer: usize,
    pub s1_size: usize,
    pub s2_size: usize,
    pub strong_support_leaf_count: usize,
    pub bounds: Vec<Bound>,
    pub equality_gamma: EqualityReport,
}

/// First set in `sets` avoiding `N(s) \ L ⊆ D` for every weak support `s`.
pub fn lemma43_witness(g: &Graph, sets: &[VertexSet]) -> Option<VertexSet> {
    find_witness(g, sets, false)
}

/// As [`lemma43_witness`], restricted to sets without leaves.
pub fn lemma43_leaf_free_witness(g: &Graph, sets: &[VertexSet]) -> Option<VertexSet> {
    find_witness(g, sets, true)
}

fn find_witness(g: &Graph, sets: &[VertexSet], leaf_free: bool) -> Option<VertexSet> {
    let leaves = g.leaves();
    let weak = g.weak_supports();
    sets.iter()
        .filter(|d| !leaf_free || d.is_disjoint(&leaves))
        .find(|d| weak.iter().all(|s| !g.neighbours(s).difference(&leaves).is_subset(d)))
        .copied()
}

pub fn bound_report(g: &Graph) -> BoundReport {
    let cfg = SolverConfig::default();
    let n = g.order();
    let gamma = gamma_solve(g, &cfg).value;
    let gamma_cer = gamma_cer_solve(g, &cfg).value;
    let s1 = g.weak_supports().len();
    let s2 = g.strong_supports().len();
    let k = g.strong_support_leaf_count();
    let bounds = vec![
        Bound::new("gamma <= gamma_cer", gamma, gamma_cer),
        Bound::new("gamma_cer <= n", gamma_cer, n),
        Bound::new("gamma_cer <= n - k", gamma_cer, n - k),
        Bound::new("gamma_cer <= n - 2|S2|", gamma_cer, n - 2 * s2),
        Bound::new("gamma_cer <= gamma + |S1|", gamma_cer, gamma + s1),
        Bound::new("gamma_cer <= 2 gamma", gamma_cer, 2 * gamma),
    ];
    let sets = all_min_dominating_sets_bounded(g, DEFAULT_ORACLE_BOUND).ok();
    BoundReport {
        n,
        gamma,
        gamma_cer,
        s1_size: s1,
        s2_size: s2,
        strong_support_leaf_count: k,
        bounds,
        equality_gamma: EqualityReport {
            holds: gamma == gamma_cer,
            lemma43_witness: sets.as_deref().and_then(|s| lemma43_witness(g, s)),
            leaf_free_witness: sets.as_deref().and_then(|s| lemma43_leaf_free_witness(g, s)),
            witness_searched: sets.is_some(),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Change {
    EdgeDel { u: usize, v: usize },
    EdgeAdd { u: usize, v: usize },
    VertexDel { v: usize },
    VertexAdd { neighbours: VertexSet },
}

/// Status of the monotonicity claim attached to a modification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundStatus {
    /// No bound is claimed for this kind of modification.
    NoClaim,
    /// A bound exists but its hypothesis fails here.
    NotApplicable,
    Holds,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Modification {
    #[serde(flatten)]
    pub change: Change,
    pub new_value: usize,
    pub delta: i64,
    pub bound: BoundStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModificationReport {
    pub base_value: usize,
    pub records: Vec<Modification>,
    pub violations: usize,
}

impl ModificationReport {
    fn new(base_value: usize, records: Vec<Modification>) -> Self {
        let violations = records.iter().filter(|r| r.bound == BoundStatus::Violated).count();
        Self {
            base_value,
            records,
            violations,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeScope {
    AllDeletions,
    AllAdditions,
    Delete(usize, usize),
    Add(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexScope {
    AllDeletions,
    Add(VertexSet),
}

fn gamma_cer(g: &Graph) -> usize {
    gamma_cer_solve(g, &SolverConfig::default()).value
}

fn evaluate(
    base: usize,
    changes: Vec<(Change, Graph)>,
    status: impl Fn(&Change, usize) -> BoundStatus + Sync,
) -> Vec<Modification> {
    changes
        .into_par_iter()
        .map(|(change, h)| {
            let new_value = gamma_cer(&h);
            Modification {
                bound: status(&change, new_value),
                change,
                new_value,
                delta: new_value as i64 - base as i64,
            }
        })
        .collect()
}

/// γ_cer after each edge deletion or addition. Additions to a connected graph
/// must not increase γ_cer; additions to a disconnected graph carry no such
/// guarantee and are marked not applicable.
pub fn edge_effects(g: &Graph, scope: EdgeScope) -> Result<ModificationReport> {
    let base = gamma_cer(g);
    let changes: Vec<(Change, Graph)> = match scope {
        EdgeScope::AllDeletions => g
            .edges()
            .map(|(u, v)| Ok((Change::EdgeDel { u, v }, g.without_edge(u, v)?)))
            .collect::<Result<_>>()?,
        EdgeScope::AllAdditions => g
            .non_edges()
            .map(|(u, v)| Ok((Change::EdgeAdd { u, v }, g.with_edge(u, v)?)))
            .collect::<Result<_>>()?,
        EdgeScope::Delete(u, v) => vec![(
            Change::EdgeDel {
                u: u.min(v),
                v: u.max(v),
            },
            g.without_edge(u, v)?,
        )],
        EdgeScope::Add(u, v) => {
            if g.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!("{u}-{v} is already an edge")));
            }
            vec![(
                Change::EdgeAdd {
                    u: u.min(v),
                    v: u.max(v),
                },
                g.with_edge(u, v)?,
            )]
        }
    };
    let connected = g.is_connected();
    let records = evaluate(base, changes, |change, new_value| match change {
        Change::EdgeAdd { .. } if !connected => BoundStatus::NotApplicable,
        Change::EdgeAdd { .. } if new_value <= base => BoundStatus::Holds,
        Change::EdgeAdd { .. } => BoundStatus::Violated,
        _ => BoundStatus::NoClaim,
    });
    Ok(ModificationReport::new(base, records))
}

/// γ_cer after each vertex deletion, or after adding one vertex with the given
/// neighbours. A non-leaf addition raises γ_cer by at most one; a leaf
/// addition is reported without a bound.
pub fn vertex_effects(g: &Graph, scope: &VertexScope) -> Result<ModificationReport> {
    let base = gamma_cer(g);
    let changes: Vec<(Change, Graph)> = match scope {
        VertexScope::AllDeletions => (0..g.order())
            .map(|v| Ok((Change::VertexDel { v }, g.without_vertex(v)?)))
            .collect::<Result<_>>()?,
        VertexScope::Add(neighbours) => {
            if neighbours.is_empty() {
                return Err(Error::InvalidArgument(
                    "the added vertex needs at least one neighbour".into(),
                ));
            }
            vec![(
                Change::VertexAdd {
                    neighbours: *neighbours,
                },
                g.with_vertex(neighbours)?,
            )]
        }
    };
    let records = evaluate(base, changes, |change, new_value| match change {
        Change::VertexAdd { neighbours } if neighbours.len() < 2 => BoundStatus::NoClaim,
        Change::VertexAdd { .. } if new_value <= base + 1 => BoundStatus::Holds,
        Change::VertexAdd { .. } => BoundStatus::Violated,
        _ => BoundStatus::NoClaim,
    });
    Ok(ModificationReport::new(base, records))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    MinDelta0,
    MinDelta1,
    MinDeltaGe2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NgCheck {
    pub theorem: &'static str,
    pub bound: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NGReport {
    pub n: usize,
    pub gcer_g: usize,
    pub gcer_gbar: usize,
    pub sum: usize,
    pub product: usize,
    /// `min(δ(G), δ(Ḡ))`, absent for the null graph.
    pub regime: Option<Regime>,
    pub corona_g: bool,
    pub corona_gbar: bool,
    pub checks: Vec<NgCheck>,
}

/// Published `(sum, product)` table for orders 2, 3 and 4.
pub fn small_order_pairs(n: usize) -> &'static [(usize, usize)] {
    match n {
        2 => &[(4, 4)],
        3 => &[(4, 3)],
        4 => &[(3, 2), (5, 4), (6, 6), (8, 16)],
        _ => &[],
    }
}

/// The pairs that actually occur for orders 2, 3 and 4, by enumeration. At
/// order 4, C₄ and 2K₂ give `(6, 8)`; `(6, 6)` has no integer solution.
pub fn small_order_pairs_enumerated(n: usize) -> &'static [(usize, usize)] {
    match n {
        4 => &[(3, 2), (5, 4), (6, 8), (8, 16)],
        _ => small_order_pairs(n),
    }
}

pub fn nordhaus_gaddum(g: &Graph) -> Result<NGReport> {
    let n = g.order();
    if n > NG_MAX_ORDER {
        return Err(Error::OverOracleBound { n, bound: NG_MAX_ORDER });
    }
    let gbar = g.complement();
    let (a, b) = rayon::join(|| gamma_cer(g), || gamma_cer(&gbar));
    let (sum, product) = (a + b, a * b);
    let min_delta = g.min_degree().zip(gbar.min_degree()).map(|(x, y)| x.min(y));
    let regime = min_delta.map(|d| match d {
        0 => Regime::MinDelta0,
        1 => Regime::MinDelta1,
        _ => Regime::MinDeltaGe2,
    });
    let corona_g = recognize_corona(g).is_some();
    let corona_gbar = recognize_corona(&gbar).is_some();

    let mut checks = Vec::new();
    let mut check = |theorem, bound: String, holds| checks.push(NgCheck { theorem, bound, holds });
    if regime == Some(Regime::MinDeltaGe2) {
        check("COR7.1", format!("sum <= {}", n / 2 + 2), sum <= n / 2 + 2);
        check("COR7.1", format!("product <= {n}"), product <= n);
    }
    let table = small_order_pairs(n);
    if !table.is_empty() {
        check(
            "OBS7.2",
            format!("(sum, product) in {table:?}"),
            table.contains(&(sum, product)),
        );
        let found = small_order_pairs_enumerated(n);
        check(
            "OBS7.2.ENUMERATED",
            format!("(sum, product) in {found:?}"),
            found.contains(&(sum, product)),
        );
    }
    if n >= 3 && regime == Some(Regime::MinDelta0) {
        let c = [g, &gbar].iter().any(|h| isolated_plus_corona(h));
        check("THM7.4", format!("sum <= {}", n + 1), sum <= n + 1);
        check("THM7.4", format!("product <= {n}"), product <= n);
        check(
            "THM7.4",
            "sum = n+1 <=> product = n <=> edgeless or corona plus isolated vertices".into(),
            (sum == n + 1) == (product == n) && (product == n) == c,
        );
    }
    if n >= 5 {
        let c = corona_g || corona_gbar;
        check("THM7.5", format!("sum <= {}", n + 2), sum <= n + 2);
        check("THM7.5", format!("product <= {}", 2 * n), product <= 2 * n);
        check(
            "THM7.5",
            "sum = n+2 <=> product = 2n <=> corona".into(),
            (sum == n + 2) == (product == 2 * n) && (product == 2 * n) == c,
        );
    }
    Ok(NGReport {
        n,
        gcer_g: a,
        gcer_gbar: b,
        sum,
        product,
        regime,
        corona_g,
        corona_gbar,
        checks,
    })
}

/// At least one isolated vertex, every other component a corona.
fn isolated_plus_corona(h: &Graph) -> bool {
    !h.isolated_vertices().is_empty() && check_gamma_cer_equals_n(h)
}
