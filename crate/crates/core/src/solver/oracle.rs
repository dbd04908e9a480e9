//! Subset-enumeration ground truth.
//!
//! Subsets are visited by cardinality, then in lexicographic order of their
//! ascending vertex lists, so the first hit is the lexicographically smallest
//! minimum set.

use super::{SolveResult, SolveStats};
use crate::bitset::VertexSet;
use crate::domination::{is_certified_dominating, is_dd2_pair, is_dominating, DD2Pair};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ORACLE_BOUND: usize = 20;

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `false`.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&VertexSet) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let set: VertexSet = idx.iter().copied().collect();
        if !f(&set) {
            return;
        }
        // Advance to the next combination.
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn check_bound(g: &Graph, bound: usize) -> Result<()> {
    if g.order() > bound {
        Err(Error::OverOracleBound { n: g.order(), bound })
    } else {
        Ok(())
    }
}

fn first_subset(g: &Graph, bound: usize, pred: impl Fn(&Graph, &VertexSet) -> bool) -> Result<SolveResult> {
    check_bound(g, bound)?;
    let n = g.order();
    let mut checked = 0u64;
    for k in 0..=n {
        let mut found = None;
        for_each_subset(n, k, |s| {
            checked += 1;
            if pred(g, s) {
                found = Some(*s);
                false
            } else {
                true
            }
        });
        if let Some(certificate) = found {
            return Ok(SolveResult {
                value: k,
                certificate,
                stats: SolveStats {
                    nodes_expanded: checked,
                    ..Default::default()
                },
                proven: true,
            });
        }
    }
    unreachable!("the full vertex set satisfies every predicate checked here")
}

pub fn gamma_oracle(g: &Graph) -> Result<SolveResult> {
    gamma_oracle_bounded(g, DEFAULT_ORACLE_BOUND)
}

pub fn gamma_oracle_bounded(g: &Graph, bound: usize) -> Result<SolveResult> {
    first_subset(g, bound, is_dominating)
}

pub fn gamma_cer_oracle(g: &Graph) -> Result<SolveResult> {
    gamma_cer_oracle_bounded(g, DEFAULT_ORACLE_BOUND)
}

pub fn gamma_cer_oracle_bounded(g: &Graph, bound: usize) -> Result<SolveResult> {
    first_subset(g, bound, is_certified_dominating)
}

/// Every minimum dominating set, in lexicographic order.
pub fn all_min_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    all_min_dominating_sets_bounded(g, DEFAULT_ORACLE_BOUND)
}

pub fn all_min_dominating_sets_bounded(g: &Graph, bound: usize) -> Result<Vec<VertexSet>> {
    let gamma = gamma_oracle_bounded(g, bound)?.value;
    let mut out = Vec::new();
    for_each_subset(g.order(), gamma, |s| {
        if is_dominating(g, s) {
            out.push(*s);
        }
        true
    });
    Ok(out)
}

/// Every minimum certified dominating set, in lexicographic order.
pub fn all_min_certified_dominating_sets_bounded(g: &Graph, bound: usize) -> Result<Vec<VertexSet>> {
    let value = gamma_cer_oracle_bounded(g, bound)?.value;
    let mut out = Vec::new();
    for_each_subset(g.order(), value, |s| {
        if is_certified_dominating(g, s) {
            out.push(*s);
        }
        true
    });
    Ok(out)
}

/// Brute-force `(D, V \ D)` search with `|D|` minimum (and at most
/// `max_d_size`), smallest `D` first.
pub fn find_dd2_pair_oracle(g: &Graph, max_d_size: Option<usize>, bound: usize) -> Result<Option<DD2Pair>> {
    check_bound(g, bound)?;
    let n = g.order();
    let cap = max_d_size.unwrap_or(n).min(n);
    for k in 0..=cap {
        let mut found = None;
        for_each_subset(n, k, |d| {
            let pair = DD2Pair {
                d: *d,
                d2: d.complement(n),
            };
            if is_dd2_pair(g, &pair) {
                found = Some(pair);
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_in_lex_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let mut count = 0;
        for_each_subset(3, 0, |s| {
            assert!(s.is_empty());
            count += 1;
            true
        });
        assert_eq!(count, 1);
        for_each_subset(2, 3, |_| panic!("no 3-subsets of a 2-set"));
    }

    #[test]
    fn bound_is_enforced() {
        let g = Graph::empty(21).unwrap();
        assert_eq!(gamma_oracle(&g), Err(Error::OverOracleBound { n: 21, bound: 20 }));
        assert!(gamma_cer_oracle_bounded(&g, 21).is_ok());
        assert!(all_min_dominating_sets(&g).is_err());
    }
}
