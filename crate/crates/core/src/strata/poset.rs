use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use super::label_a::{enumerate_strata_A_with_budget, StratumLabelA};
use super::label_bc::{enumerate_strata_BC_with_budget, SStratumLabel};
use super::{budget, Family};
use crate::error::Result;

/// What the poset code needs from a label type.
pub trait StratumLabel: Clone + Ord + Hash + fmt::Display + Send + Sync {
    /// Number of points, which is also the dimension of the stratum.
    fn len(&self) -> usize;
    fn is_d_nontrivial(&self) -> bool;
    /// One-step merges, optionally keeping labels that are not d-nontrivial.
    fn merges(&self, keep_empty: bool) -> Vec<Self>;
}

impl StratumLabel for StratumLabelA {
    fn len(&self) -> usize {
        StratumLabelA::len(self)
    }
    fn is_d_nontrivial(&self) -> bool {
        StratumLabelA::is_d_nontrivial(self)
    }
    fn merges(&self, keep_empty: bool) -> Vec<Self> {
        StratumLabelA::merges(self, keep_empty)
    }
}

impl StratumLabel for SStratumLabel {
    fn len(&self) -> usize {
        SStratumLabel::len(self)
    }
    fn is_d_nontrivial(&self) -> bool {
        SStratumLabel::is_d_nontrivial(self)
    }
    fn merges(&self, keep_empty: bool) -> Vec<Self> {
        SStratumLabel::merges(self, keep_empty)
    }
}

/// Reflexive-transitive closure of simple degenerations, sorted.
pub fn closure<L: StratumLabel>(label: &L) -> Vec<L> {
    let mut seen = BTreeSet::from([label.clone()]);
    let mut stack = vec![label.clone()];
    while let Some(l) = stack.pop() {
        for m in l.merges(false) {
            if seen.insert(m.clone()) {
                stack.push(m);
            }
        }
    }
    seen.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetNode {
    pub label: String,
    /// Number of points in the label.
    pub n: usize,
    /// Dimension of the stratum; absent for labels whose stratum is empty.
    pub dimension: Option<usize>,
}

/// Strata as nodes, simple degenerations as `(parent, child)` edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDag {
    pub family: Family,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub d: usize,
    pub nodes: Vec<PosetNode>,
    pub edges: Vec<(usize, usize)>,
}

impl PosetDag {
    fn from_labels<L: StratumLabel>(family: Family, big_n: usize, d: usize, strata: Vec<L>, include_empty: bool) -> Self {
        let mut all: BTreeSet<L> = strata.iter().cloned().collect();
        if include_empty {
            // Everything comparable below a stratum, reached by unfiltered merges.
            let mut stack: Vec<L> = strata.clone();
            while let Some(l) = stack.pop() {
                for m in l.merges(true) {
                    if all.insert(m.clone()) {
                        stack.push(m);
                    }
                }
            }
        }
        let nodes: Vec<L> = all.into_iter().collect();
        let index: BTreeMap<&L, usize> = nodes.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let nontrivial: BTreeSet<&L> = strata.iter().collect();
        let mut edges = Vec::new();
        for (i, l) in nodes.iter().enumerate() {
            let keep_empty = include_empty;
            for m in l.merges(keep_empty) {
                if let Some(&j) = index.get(&m) {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let nodes = nodes
            .iter()
            .map(|l| PosetNode {
                label: l.to_string(),
                n: l.len(),
                dimension: nontrivial.contains(l).then(|| l.len()),
            })
            .collect();
        PosetDag { family, big_n, d, nodes, edges }
    }

    /// Edges as label pairs, convenient for comparisons.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges.iter().map(|&(a, b)| (self.nodes[a].label.clone(), self.nodes[b].label.clone())).collect()
    }

    /// Whether both ends of an edge are strata (solid) rather than empty.
    pub fn is_solid(&self, edge: (usize, usize)) -> bool {
        self.nodes[edge.0].dimension.is_some() && self.nodes[edge.1].dimension.is_some()
    }
}

/// The degeneration poset of Gr(N,d) or sGr(N,d) under the default budget.
pub fn build_poset(n: usize, d: usize, family: Family, include_empty: bool) -> Result<PosetDag> {
    build_poset_with_budget(n, d, family, include_empty, budget())
}

pub fn build_poset_with_budget(
    n: usize,
    d: usize,
    family: Family,
    include_empty: bool,
    budget: usize,
) -> Result<PosetDag> {
    Ok(match family {
        Family::A => {
            let strata = enumerate_strata_A_with_budget(n, d, budget)?;
            PosetDag::from_labels(family, n, d, strata, include_empty)
        }
        Family::BC => {
            let strata = enumerate_strata_BC_with_budget(n, d, budget)?;
            PosetDag::from_labels(family, n, d, strata, include_empty)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: &str, b: &str) -> (String, String) {
        (a.to_string(), b.to_string())
    }

    #[test]
    fn gr23_poset() {
        let p = build_poset(2, 3, Family::A, false).unwrap();
        assert_eq!(p.nodes.len(), 2);
        assert_eq!(p.edge_labels(), vec![pair("((1,0),(1,0))", "((1,1))")]);
    }

    #[test]
    fn gr24_with_empty_nodes() {
        let p = build_poset(2, 4, Family::A, true).unwrap();
        let empty: BTreeSet<String> =
            p.nodes.iter().filter(|n| n.dimension.is_none()).map(|n| n.label.clone()).collect();
        let expect: BTreeSet<String> =
            ["((3,0),(1,0))", "((2,0),(1,1))", "((3,1))", "((4,0))"].iter().map(|s| s.to_string()).collect();
        assert_eq!(empty, expect);
        let solid = p.edges.iter().filter(|&&e| p.is_solid(e)).count();
        assert_eq!(solid, 9);
    }

    #[test]
    fn point_grassmannian() {
        let p = build_poset(2, 2, Family::A, false).unwrap();
        assert!(p.nodes.is_empty() && p.edges.is_empty());
    }

    #[test]
    fn closure_of_top_is_everything() {
        let top = StratumLabelA::parse("((1,0),(1,0),(1,0),(1,0))", 2, 4).unwrap();
        assert_eq!(closure(&top).len(), 7);
        let bottom = StratumLabelA::parse("((2,2))", 2, 4).unwrap();
        assert_eq!(closure(&bottom), vec![bottom]);
        let top = SStratumLabel::parse("((0,1),(0,1),(0,1),(0,1))", 4, 6).unwrap();
        assert_eq!(closure(&top).len(), 9);
    }
}
