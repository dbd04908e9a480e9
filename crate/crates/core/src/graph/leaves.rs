use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

impl Graph {
    /// `L_G`: vertices of degree one.
    pub fn leaves(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Number of leaf neighbours of `v`.
    pub fn leaf_degree(&self, v: usize) -> usize {
        self.neighbours(v).iter().filter(|&u| self.degree(u) == 1).count()
    }

    /// `S₁(G)`: vertices adjacent to exactly one leaf.
    pub fn weak_supports(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.leaf_degree(v) == 1).collect()
    }

    /// `S₂(G)`: vertices adjacent to at least two leaves.
    pub fn strong_supports(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.leaf_degree(v) >= 2).collect()
    }

    /// All support vertices, `S₁(G) ∪ S₂(G)`.
    pub fn supports(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.leaf_degree(v) >= 1).collect()
    }

    /// `supp_G(leaf)`.
    pub fn support_of(&self, leaf: usize) -> Result<usize> {
        self.check_vertex(leaf)?;
        if self.degree(leaf) != 1 {
            return Err(Error::NotALeaf(leaf));
        }
        Ok(self.neighbours(leaf).first().expect("leaf has a neighbour"))
    }

    /// `leaf_G(s)` for a weak support `s`.
    pub fn leaf_of(&self, weak_support: usize) -> Result<usize> {
        self.check_vertex(weak_support)?;
        let mut leaves = self.neighbours(weak_support).iter().filter(|&u| self.degree(u) == 1);
        match (leaves.next(), leaves.next()) {
            (Some(l), None) => Ok(l),
            _ => Err(Error::NotAWeakSupport(weak_support)),
        }
    }

    /// Total number of leaves hanging off strong supports.
    pub fn strong_support_leaf_count(&self) -> usize {
        self.strong_supports().iter().map(|s| self.leaf_degree(s)).sum()
    }
}
