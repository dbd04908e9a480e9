//! Simple undirected graphs stored as per-vertex neighbourhood bitsets.

mod family;
mod io;
mod leaves;

pub use family::{fig1_certified_set, fig1_dd2_pair, FamilySpec, FIG3A_MARKED_EDGE, FIG3B_DASHED_EDGE};
pub use io::{encode_graph6, parse_edge_list, parse_graph6, to_edge_list};

use std::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `0..n`.
///
/// `adj[v]` is the open neighbourhood of `v`. Every constructor checks
/// symmetry and irreflexivity, so a `Graph` value always satisfies both.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Self {
            n,
            adj: vec![VertexSet::new(); n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood sets, rejecting asymmetric or looped input.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        for (v, nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if nb.bound() > n {
                return Err(Error::VertexOutOfRange {
                    vertex: nb.bound() - 1,
                    n,
                });
            }
            if let Some(u) = nb.iter().find(|&u| !adj[u].contains(v)) {
                return Err(Error::InvalidArgument(format!(
                    "adjacency not symmetric: {v} lists {u} but not vice versa"
                )));
            }
        }
        Ok(Self { n, adj })
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbours(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    /// `N[X]`, the closed neighbourhood of a vertex set.
    pub fn closed_neighbourhood_of(&self, set: &VertexSet) -> VertexSet {
        set.iter().fold(*set, |acc, v| acc.union(&self.adj[v]))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `δ(G)`; `None` for the null graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// `Δ(G)`; `None` for the null graph.
    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Vertex pairs `(u, v)`, `u < v`, that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.adj[u].contains(v))
                .map(move |v| (u, v))
        })
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut s = all.difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `set`, reindexed `0..|set|` in ascending original order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Graph {
        let map: Vec<usize> = set.iter().filter(|&v| v < self.n).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| self.adj[v].intersection(set).iter().map(|u| index[u]).collect())
            .collect();
        Graph { n: map.len(), adj }
    }

    /// Connected components in order of their smallest vertex, each with its
    /// vertex set and induced subgraph.
    pub fn components(&self) -> Vec<(VertexSet, Graph)> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let comp = self.component_of(start);
            seen = seen.union(&comp);
            out.push((comp, self.induced_subgraph(&comp)));
        }
        out
    }

    /// Vertex set of the component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for u in &frontier {
                next = next.union(&self.adj[u]);
            }
            frontier = next.difference(&comp);
            comp = comp.union(&frontier);
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0).len() == self.n
    }

    /// Copy with the edge `uv` added. Adding an existing edge is a no-op.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Copy with the edge `uv` removed; errors if `uv` is not an edge.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::InvalidArgument(format!("{{{u},{v}}} is not an edge")));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// Copy with a new vertex `n` joined to every vertex of `neighbours`.
    pub fn with_vertex(&self, neighbours: &VertexSet) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        if let Some(bad) = neighbours.iter().find(|&u| u >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let mut g = self.clone();
        let v = self.n;
        g.n += 1;
        g.adj.push(*neighbours);
        for u in neighbours {
            g.adj[u].insert(v);
        }
        Ok(g)
    }

    /// Copy with vertex `v` deleted; later vertices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        Ok(self.induced_subgraph(&keep))
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let shift = self.n;
        Graph::from_edges(
            n,
            self.edges().chain(other.edges().map(|(u, v)| (u + shift, v + shift))),
        )
    }

    /// Degree sequence in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(Graph::empty(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn complement_examples() {
        let k3 = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.complement(), Graph::empty(3).unwrap());
        let p4 = path(4);
        assert_eq!(p4.complement().complement(), p4);

        // C5 relabelled along 0,2,4,1,3 is its own complement.
        let c5 = cycle(5);
        let order = [0, 2, 4, 1, 3];
        let relabelled = Graph::from_edges(5, (0..5).map(|i| (order[i], order[(i + 1) % 5]))).unwrap();
        assert_eq!(c5.complement(), relabelled);
    }

    #[test]
    fn components_examples() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let sizes: Vec<_> = g.components().iter().map(|(s, h)| (s.len(), h.order())).collect();
        assert_eq!(sizes, vec![(2, 2), (1, 1)]);
        assert_eq!(cycle(6).components().len(), 1);
        assert_eq!(Graph::empty(4).unwrap().components().len(), 4);
        assert!(Graph::empty(0).unwrap().components().is_empty());
    }

    #[test]
    fn induced_subgraph_examples() {
        assert_eq!(cycle(4).induced_subgraph(&VertexSet::new()).order(), 0);
        let s: VertexSet = [1, 2, 3].into_iter().collect();
        assert_eq!(cycle(4).induced_subgraph(&s), path(3));
        let s: VertexSet = [0, 2, 4].into_iter().collect();
        assert_eq!(path(5).induced_subgraph(&s), Graph::empty(3).unwrap());
    }

    #[test]
    fn vertex_and_edge_modifications() {
        let p3 = path(3);
        assert_eq!(p3.with_edge(0, 2).unwrap(), cycle(3));
        assert_eq!(cycle(3).without_edge(0, 2).unwrap(), p3);
        assert!(p3.without_edge(0, 2).is_err());
        let p4 = p3.with_vertex(&VertexSet::singleton(2)).unwrap();
        assert_eq!(p4, path(4));
        assert_eq!(p4.without_vertex(3).unwrap(), p3);
        assert_eq!(
            path(5).without_vertex(2).unwrap(),
            Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()
        );
    }

    #[test]
    fn disjoint_union_shifts_second_operand() {
        let g = path(2).disjoint_union(&path(3)).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3), (3, 4)]);
    }
}
