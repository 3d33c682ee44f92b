use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use super::multiset::multisets;
use super::{budget, check_size, split_groups};
use crate::error::{Error, Result};
use crate::rep::{invariant_dim_A, tensor_product_gl};
use crate::weights::Partition;

/// A multiset of nonzero partitions labelling a stratum of Gr(N,d).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StratumLabelA {
    n: usize,
    d: usize,
    parts: Vec<Partition>,
}

/// Larger size first, then lexicographically larger first.
fn element_cmp(a: &Partition, b: &Partition) -> Ordering {
    b.size().cmp(&a.size()).then_with(|| b.cmp(a))
}

impl StratumLabelA {
    /// Sorts `parts` into canonical order. No nontriviality check.
    pub fn new(n: usize, d: usize, mut parts: Vec<Partition>) -> Result<Self> {
        if let Some(bad) = parts.iter().find(|p| p.n() != n) {
            return Err(Error::InvalidArgument(format!("{bad} does not have {n} parts")));
        }
        if parts.iter().any(Partition::is_zero) {
            return Err(Error::InvalidArgument("stratum labels have nonzero partitions only".into()));
        }
        parts.sort_by(element_cmp);
        Ok(StratumLabelA { n, d, parts })
    }

    /// Parses `((1,1),(1,0),(1,0))`.
    pub fn parse(s: &str, n: usize, d: usize) -> Result<Self> {
        let mut parts = Vec::new();
        for (group, k) in split_groups(s)? {
            if k.is_some() {
                return Err(Error::Parse(format!("unexpected _k suffix in type A label {s:?}")));
            }
            parts.push(Partition::parse(&group, n)?);
        }
        StratumLabelA::new(n, d, parts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn parts(&self) -> &[Partition] {
        &self.parts
    }

    /// Number of points; also the dimension of the stratum.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sizes `|λ^{(s)}|` in canonical order.
    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Partition::size).collect()
    }

    pub fn invariant_dim(&self) -> u64 {
        invariant_dim_A(&self.parts, self.n)
    }

    /// Nonzero parts fitting the box, `|Λ| = N(d−N)`, nonzero invariants.
    pub fn is_d_nontrivial(&self) -> bool {
        let w = self.d.saturating_sub(self.n);
        self.d >= self.n
            && self.parts.iter().all(|p| !p.is_zero() && p.first() <= w)
            && self.parts.iter().map(Partition::size).sum::<usize>() == self.n * w
            && self.invariant_dim() > 0
    }

    /// Labels obtained by merging one pair of entries into a component of
    /// their tensor product. With `keep_empty` the d-nontriviality filter is
    /// skipped.
    pub fn merges(&self, keep_empty: bool) -> Vec<StratumLabelA> {
        let mut out = BTreeSet::new();
        let mut seen_pairs = BTreeSet::new();
        for i in 0..self.parts.len() {
            for j in i + 1..self.parts.len() {
                let (a, b) = (&self.parts[i], &self.parts[j]);
                if !seen_pairs.insert((a.clone(), b.clone())) {
                    continue;
                }
                let rest: Vec<Partition> = self
                    .parts
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| *t != i && *t != j)
                    .map(|(_, p)| p.clone())
                    .collect();
                for xi in tensor_product_gl(a, b).into_keys() {
                    let mut parts = rest.clone();
                    parts.push(xi);
                    let label = StratumLabelA::new(self.n, self.d, parts).expect("merged parts are valid");
                    if keep_empty || label.is_d_nontrivial() {
                        out.insert(label);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Simple degenerations: merges that stay d-nontrivial.
    pub fn simple_degenerations(&self) -> Vec<StratumLabelA> {
        self.merges(false)
    }
}

impl Ord for StratumLabelA {
    /// More points first, then entrywise in canonical element order.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .parts
            .len()
            .cmp(&self.parts.len())
            .then_with(|| {
                self.parts
                    .iter()
                    .zip(&other.parts)
                    .map(|(a, b)| element_cmp(a, b))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
            .then_with(|| (self.n, self.d).cmp(&(other.n, other.d)))
    }
}

impl PartialOrd for StratumLabelA {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StratumLabelA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for StratumLabelA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Nonzero partitions in the `N × (d−N)` box, in canonical element order.
fn box_partitions(n: usize, width: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if cur.len() == n {
            out.push(Partition::new(cur, n).unwrap());
            return;
        }
        for p in 0..=max {
            cur.push(p);
            rec(n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, width, &mut Vec::new(), &mut out);
    out.retain(|p| !p.is_zero());
    out.sort_by(element_cmp);
    out
}

/// All d-nontrivial labels of Gr(N,d), sorted, under the default budget.
#[allow(non_snake_case)]
pub fn enumerate_strata_A(n: usize, d: usize) -> Result<Vec<StratumLabelA>> {
    enumerate_strata_A_with_budget(n, d, budget())
}

#[allow(non_snake_case)]
pub fn enumerate_strata_A_with_budget(n: usize, d: usize, budget: usize) -> Result<Vec<StratumLabelA>> {
    let total = check_size(n, d, budget)?;
    if total == 0 {
        return Ok(Vec::new());
    }
    let items = box_partitions(n, d - n);
    let sizes: Vec<usize> = items.iter().map(Partition::size).collect();
    let candidates = multisets(&sizes, total, None);
    let mut out: Vec<StratumLabelA> = candidates
        .into_par_iter()
        .filter_map(|idx| {
            let parts: Vec<Partition> = idx.iter().map(|&i| items[i].clone()).collect();
            let label = StratumLabelA { n, d, parts };
            (label.invariant_dim() > 0).then_some(label)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Strata grouped by the multiset of sizes `|λ^{(s)}|` (sorted decreasing):
/// the strata lying over one stratum of Gr(1, N(d−N)+1).
#[allow(non_snake_case)]
pub fn preimage_groups_A(strata: &[StratumLabelA]) -> BTreeMap<Vec<usize>, Vec<StratumLabelA>> {
    let mut out: BTreeMap<Vec<usize>, Vec<StratumLabelA>> = BTreeMap::new();
    for s in strata {
        let mut m = s.sizes();
        m.sort_unstable_by(|a, b| b.cmp(a));
        out.entry(m).or_default().push(s.clone());
    }
    out
}
