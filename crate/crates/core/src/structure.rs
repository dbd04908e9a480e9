//! Recognizers for the graph classes with a known γ_cer, by direct structural
//! tests rather than isomorphism.

use std::fmt;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum StructureClass {
    HasUniversalVertex(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `m <= n`.
    CompleteBipartite(usize, usize),
    /// Total vertex count, hub included.
    Wheel(usize),
    EmptyGraph(usize),
    /// Base vertex set `B` with `G = G[B] ∘ K₁`.
    CoronaOf(VertexSet),
    /// Base vertex set and the strong support carrying the extra leaf.
    DiademOf(VertexSet, usize),
    None,
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::HasUniversalVertex(v) => write!(f, "universal vertex {v}"),
            Self::Path(n) => write!(f, "path {n}"),
            Self::Cycle(n) => write!(f, "cycle {n}"),
            Self::Complete(n) => write!(f, "complete {n}"),
            Self::CompleteBipartite(m, n) => write!(f, "complete bipartite {m} {n}"),
            Self::Wheel(n) => write!(f, "wheel {n}"),
            Self::EmptyGraph(n) => write!(f, "empty {n}"),
            Self::CoronaOf(b) => write!(f, "corona of {b}"),
            Self::DiademOf(b, s) => write!(f, "diadem of {b} at {s}"),
            Self::None => f.write_str("none"),
        }
    }
}

/// Smallest vertex of degree `n - 1`.
pub fn find_universal_vertex(g: &Graph) -> Option<usize> {
    let n = g.order();
    (0..n).find(|&v| g.degree(v) + 1 == n)
}

/// Base set `B` such that `g` is `G[B] ∘ K₁`, checked component by component.
/// K₂ components contribute their lower vertex; K₁ components rule the graph
/// out.
pub fn recognize_corona(g: &Graph) -> Option<VertexSet> {
    let mut base = VertexSet::new();
    for (vertices, h) in g.components() {
        let map: Vec<usize> = vertices.iter().collect();
        base = base.union(&lift(&corona_base_connected(&h)?, &map));
    }
    Some(base)
}

fn corona_base_connected(h: &Graph) -> Option<VertexSet> {
    match h.order() {
        0 | 1 => None,
        2 => Some(VertexSet::singleton(0)),
        _ => {
            let leaves = h.leaves();
            let inner = h.vertices().difference(&leaves);
            let ok =
                leaves.len() == inner.len() && inner.iter().all(|v| h.neighbours(v).intersection_len(&leaves) == 1);
            ok.then_some(inner)
        }
    }
}

fn lift(set: &VertexSet, map: &[usize]) -> VertexSet {
    set.iter().map(|v| map[v]).collect()
}

/// `(B, s)` when `g` is a corona `G[B] ∘ K₁` with one extra leaf on the
/// support `s ∈ B`.
pub fn recognize_diadem(g: &Graph) -> Option<(VertexSet, usize)> {
    let strong = g.strong_supports();
    if strong.len() != 1 {
        return None;
    }
    let s = strong.first()?;
    let extra = g.neighbours(s).intersection(&g.leaves());
    if extra.len() != 2 {
        return None;
    }
    let l = extra.iter().last()?;
    let reduced = g.without_vertex(l).ok()?;
    // Vertices above `l` shift down by one in `reduced`.
    let map: Vec<usize> = (0..g.order()).filter(|&v| v != l).collect();
    let mut base = lift(&recognize_corona(&reduced)?, &map);
    if !base.contains(s) {
        // Only possible when s sits in a K₂ component, whose base is arbitrary.
        let partner = extra.difference(&VertexSet::singleton(l)).first()?;
        base.remove(partner);
        base.insert(s);
    }
    Some((base, s))
}

fn is_path(g: &Graph) -> bool {
    let n = g.order();
    n >= 1 && g.is_connected() && g.edge_count() == n - 1 && g.max_degree() <= Some(2)
}

fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && (0..g.order()).all(|v| g.degree(v) == 2)
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    n >= 1 && g.edge_count() == n * (n - 1) / 2
}

/// Part sizes `(m, n)` with `m <= n`.
fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    if g.order() < 2 || !g.is_connected() {
        return None;
    }
    let side = g.neighbours(0).iter().next().map(|u| *g.neighbours(u))?;
    let other = g.vertices().difference(&side);
    let ok = side.iter().all(|v| *g.neighbours(v) == other) && other.iter().all(|v| *g.neighbours(v) == side);
    ok.then(|| (side.len().min(other.len()), side.len().max(other.len())))
}

fn is_wheel(g: &Graph) -> bool {
    let n = g.order();
    n >= 4
        && (0..n)
            .filter(|&h| g.degree(h) == n - 1)
            .any(|h| is_cycle(&g.without_vertex(h).expect("vertex in range")))
}

fn path_value(n: usize) -> usize {
    match n {
        1 | 3 => 1,
        2 => 2,
        4 => 4,
        _ => n.div_ceil(3),
    }
}

fn complete_value(n: usize) -> usize {
    if n == 2 {
        2
    } else {
        1
    }
}

/// Every recognized class of a connected graph with its γ_cer, in priority
/// order.
pub fn closed_form_matches(g: &Graph) -> Vec<(StructureClass, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    if let Some(v) = find_universal_vertex(g) {
        out.push((StructureClass::HasUniversalVertex(v), complete_value(n)));
    }
    if is_complete(g) {
        out.push((StructureClass::Complete(n), complete_value(n)));
    }
    if let Some((a, b)) = complete_bipartite_parts(g) {
        out.push((
            StructureClass::CompleteBipartite(a, b),
            if a == 1 && b > 1 { 1 } else { 2 },
        ));
    }
    if is_path(g) {
        out.push((StructureClass::Path(n), path_value(n)));
    }
    if is_cycle(g) {
        out.push((StructureClass::Cycle(n), n.div_ceil(3)));
    }
    if is_wheel(g) {
        out.push((StructureClass::Wheel(n), 1));
    }
    if g.edge_count() == 0 {
        out.push((StructureClass::EmptyGraph(n), n));
    }
    if let Some(base) = recognize_corona(g) {
        out.push((StructureClass::CoronaOf(base), n));
    }
    out
}

/// The first recognized class of a connected graph and its γ_cer.
pub fn closed_form(g: &Graph) -> Option<(StructureClass, usize)> {
    closed_form_matches(g).into_iter().next()
}

/// Predicts `γ_cer(G) = n`: every component is K₁ or a corona.
pub fn check_gamma_cer_equals_n(g: &Graph) -> bool {
    g.components().iter().all(|(_, h)| is_k1_or_corona(h))
}

fn is_k1_or_corona(h: &Graph) -> bool {
    h.order() == 1 || corona_base_connected(h).is_some()
}

/// Predicts `γ_cer(G) = n - 2`: exactly one component is C₃, C₄ or a diadem,
/// and the others are K₁ or coronas.
pub fn check_gamma_cer_equals_n_minus_2(g: &Graph) -> Result<bool> {
    if g.order() < 3 {
        return Err(Error::InvalidArgument(format!(
            "the n-2 predictor needs at least 3 vertices, got {}",
            g.order()
        )));
    }
    let mut special = 0;
    for (_, h) in g.components() {
        let small_cycle = is_cycle(&h) && h.order() <= 4;
        if small_cycle || recognize_diadem(&h).is_some() {
            special += 1;
        } else if !is_k1_or_corona(&h) {
            return Ok(false);
        }
    }
    Ok(special == 1)
}
