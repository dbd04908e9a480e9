//! Branch-and-bound over partial assignments (inside / outside / undecided).

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Objective {
    /// Plain domination.
    Dominating,
    /// Dominating, every member with zero or at least two neighbours outside.
    Certified,
    /// Dominating, every member with at least two neighbours outside, i.e. the
    /// complement is 2-dominating.
    Dd2,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Assignment {
    pub inside: VertexSet,
    pub outside: VertexSet,
}

impl Assignment {
    pub fn new(inside: VertexSet, outside: VertexSet) -> Self {
        Self { inside, outside }
    }
}

pub(crate) struct Search<'g> {
    g: &'g Graph,
    all: VertexSet,
    objective: Objective,
    /// Solutions must be strictly smaller than this.
    best_len: usize,
    best: Option<VertexSet>,
    /// A solution of this size is known optimal; stop when one is found.
    floor: usize,
    first_only: bool,
    node_limit: Option<u64>,
    done: bool,
    pub nodes: u64,
    pub forced: u64,
    pub exhausted: bool,
}

impl<'g> Search<'g> {
    pub fn new(g: &'g Graph, objective: Objective) -> Self {
        Self {
            g,
            all: g.vertices(),
            objective,
            best_len: g.order() + 1,
            best: None,
            floor: 0,
            first_only: false,
            node_limit: None,
            done: false,
            nodes: 0,
            forced: 0,
            exhausted: false,
        }
    }

    /// Only look for solutions of size `< bound`.
    pub fn below(mut self, bound: usize) -> Self {
        self.best_len = bound;
        self
    }

    pub fn floor(mut self, floor: usize) -> Self {
        self.floor = floor;
        self
    }

    pub fn first_only(mut self) -> Self {
        self.first_only = true;
        self
    }

    /// Limit on nodes expanded by this search.
    pub fn node_limit(mut self, limit: Option<u64>) -> Self {
        self.node_limit = limit;
        self
    }

    pub fn run(mut self, root: Assignment) -> SearchOutcome {
        self.dfs(root);
        SearchOutcome {
            best: self.best,
            nodes: self.nodes,
            forced: self.forced,
            exhausted: self.exhausted,
        }
    }

    fn dfs(&mut self, mut st: Assignment) {
        if self.done {
            return;
        }
        if self.node_limit.is_some_and(|limit| self.nodes >= limit) {
            self.exhausted = true;
            self.done = true;
            return;
        }
        self.nodes += 1;
        if !self.propagate(&mut st) {
            return;
        }
        let size = st.inside.len();
        if size >= self.best_len {
            return;
        }
        let undominated = self.all.difference(&self.g.closed_neighbourhood_of(&st.inside));
        if undominated.is_empty() {
            debug_assert!(self.check_leaf(&st.inside));
            self.best = Some(st.inside);
            self.best_len = size;
            if self.first_only || size <= self.floor {
                self.done = true;
            }
            return;
        }

        let undecided = self.all.difference(&st.inside).difference(&st.outside);
        let (lower, pivot) = self.packing_bound(&undominated, &undecided);
        if size + lower >= self.best_len {
            return;
        }

        // Branch over the dominators of the most constrained undominated vertex;
        // candidates tried earlier are excluded in later branches.
        let mut candidates: Vec<(usize, usize)> = self
            .g
            .closed_neighbours(pivot)
            .intersection(&undecided)
            .iter()
            .map(|w| (self.g.closed_neighbours(w).intersection_len(&undominated), w))
            .collect();
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut excluded = VertexSet::new();
        for (_, w) in candidates {
            let mut child = st;
            child.inside.insert(w);
            child.outside = child.outside.union(&excluded);
            self.dfs(child);
            if self.done {
                return;
            }
            excluded.insert(w);
        }
    }

    /// Applies forcing rules to a fixpoint. Returns false when the assignment
    /// cannot be completed.
    fn propagate(&mut self, st: &mut Assignment) -> bool {
        loop {
            let undecided = self.all.difference(&st.inside).difference(&st.outside);
            let dominated = self.g.closed_neighbourhood_of(&st.inside);
            let mut force_in = VertexSet::new();
            let mut force_out = VertexSet::new();

            for v in &self.all.difference(&dominated) {
                let candidates = self.g.closed_neighbours(v).intersection(&undecided);
                match candidates.len() {
                    0 => return false,
                    1 => force_in = force_in.union(&candidates),
                    _ => {}
                }
            }

            match self.objective {
                Objective::Dominating => {}
                Objective::Certified => {
                    for d in &st.inside {
                        let nb = self.g.neighbours(d);
                        let out = nb.intersection_len(&st.outside);
                        let open = nb.intersection(&undecided);
                        match (out, open.len()) {
                            (1, 0) => return false,
                            (0, 1) => force_in = force_in.union(&open),
                            _ => {}
                        }
                    }
                }
                Objective::Dd2 => {
                    for d in &st.inside {
                        let nb = self.g.neighbours(d);
                        let out = nb.intersection_len(&st.outside);
                        let open = nb.intersection(&undecided);
                        if out + open.len() < 2 {
                            return false;
                        }
                        if out < 2 && out + open.len() == 2 {
                            force_out = force_out.union(&open);
                        }
                    }
                }
            }

            if !force_in.is_disjoint(&force_out) {
                return false;
            }
            if force_in.is_empty() && force_out.is_empty() {
                return true;
            }
            self.forced += (force_in.len() + force_out.len()) as u64;
            st.inside = st.inside.union(&force_in);
            st.outside = st.outside.union(&force_out);
        }
    }

    /// Greedy packing of undominated vertices with pairwise disjoint candidate
    /// dominator sets. Each packed vertex needs its own new dominator. Also
    /// returns the undominated vertex with the fewest candidates.
    fn packing_bound(&self, undominated: &VertexSet, undecided: &VertexSet) -> (usize, usize) {
        let mut items: Vec<(usize, usize, VertexSet)> = undominated
            .iter()
            .map(|u| {
                let c = self.g.closed_neighbours(u).intersection(undecided);
                (c.len(), u, c)
            })
            .collect();
        items.sort_unstable_by_key(|&(len, u, _)| (len, u));
        let pivot = items[0].1;
        let mut used = VertexSet::new();
        let mut count = 0;
        for (_, _, c) in &items {
            if c.is_disjoint(&used) {
                used = used.union(c);
                count += 1;
            }
        }
        (count, pivot)
    }

    fn check_leaf(&self, d: &VertexSet) -> bool {
        let g = self.g;
        match self.objective {
            Objective::Dominating => crate::domination::is_dominating(g, d),
            Objective::Certified => crate::domination::is_certified_dominating(g, d),
            Objective::Dd2 => {
                crate::domination::is_dominating(g, d) && d.iter().all(|v| g.neighbours(v).difference(d).len() >= 2)
            }
        }
    }
}

pub(crate) struct SearchOutcome {
    pub best: Option<VertexSet>,
    pub nodes: u64,
    pub forced: u64,
    pub exhausted: bool,
}
