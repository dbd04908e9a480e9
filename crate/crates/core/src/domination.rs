//! Domination predicates over (graph, vertex set) pairs.
//!
//! All functions are total: vertices of `d` outside the graph are ignored.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Status of a vertex relative to a set `D`, by how many neighbours it has
/// outside `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexStatus {
    /// Not a member of `D`.
    Outside,
    /// In `D`, no neighbour outside.
    Shadowed,
    /// In `D`, exactly one neighbour outside.
    HalfShadowed,
    /// In `D`, at least two neighbours outside.
    Illuminated,
}

/// A pair of disjoint sets, `d` meant to dominate and `d2` to 2-dominate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DD2Pair {
    pub d: VertexSet,
    pub d2: VertexSet,
}

pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    g.closed_neighbourhood_of(&d.intersection(&g.vertices())) == g.vertices()
}

pub fn classify_vertex(g: &Graph, d: &VertexSet, v: usize) -> VertexStatus {
    if !d.contains(v) {
        return VertexStatus::Outside;
    }
    match g.neighbours(v).difference(d).len() {
        0 => VertexStatus::Shadowed,
        1 => VertexStatus::HalfShadowed,
        _ => VertexStatus::Illuminated,
    }
}

/// Status of every vertex of `g`, in vertex order.
pub fn classify_all(g: &Graph, d: &VertexSet) -> Vec<VertexStatus> {
    (0..g.order()).map(|v| classify_vertex(g, d, v)).collect()
}

/// Dominating, and no member of `d` has exactly one neighbour outside `d`.
pub fn is_certified_dominating(g: &Graph, d: &VertexSet) -> bool {
    is_dominating(g, d)
        && d.iter()
            .filter(|&v| v < g.order())
            .all(|v| g.neighbours(v).difference(d).len() != 1)
}

/// Dominating, and every vertex outside `x` has at least two neighbours in `x`.
pub fn is_2dominating(g: &Graph, x: &VertexSet) -> bool {
    is_dominating(g, x)
        && (0..g.order())
            .filter(|&v| !x.contains(v))
            .all(|v| g.neighbours(v).intersection_len(x) >= 2)
}

pub fn is_dd2_pair(g: &Graph, p: &DD2Pair) -> bool {
    p.d.is_disjoint(&p.d2) && is_dominating(g, &p.d) && is_2dominating(g, &p.d2)
}

/// True iff `d` dominates and no `d \ {v}` does.
pub fn is_minimal_dominating(g: &Graph, d: &VertexSet) -> bool {
    is_dominating(g, d)
        && d.iter().all(|v| {
            let mut smaller = *d;
            smaller.remove(v);
            !is_dominating(g, &smaller)
        })
}
