use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use super::multiset::multisets;
use super::{budget, check_size, split_groups};
use crate::error::{Error, Result};
use crate::rep::{invariant_dim, tensor_decompose};
use crate::weights::{assoc_partition, bc_rank, DominantWeight, Partition, RootSystem, Weight};

/// A pair `(λ, k)`: a dominant weight of `g_N` and a nonnegative integer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BcPart {
    pub weight: DominantWeight,
    pub k: usize,
}

impl BcPart {
    pub fn new(weight: DominantWeight, k: usize) -> Self {
        BcPart { weight, k }
    }

    /// `λ_{A,k}` for ambient `N`.
    pub fn lift(&self, n: usize) -> Partition {
        assoc_partition(&self.weight, self.k, n).expect("weight matches N")
    }
}

impl fmt::Display for BcPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weight)?;
        if self.k != 0 {
            write!(f, "_{}", self.k)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BcPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `|λ_{A,k}|`, computed from the coordinates without building the partition.
pub fn bc_element_size(part: &BcPart, n: usize) -> usize {
    coord_weights(n).iter().zip(part.weight.coords()).map(|(c, x)| c * x).sum::<usize>() + n * part.k
}

/// Contribution of each coordinate to `|λ_{A,0}|`.
fn coord_weights(n: usize) -> Vec<usize> {
    let r = n / 2;
    if n.is_multiple_of(2) {
        (1..=r).map(|i| if i < r { 2 * r } else { r }).collect()
    } else {
        vec![n; r]
    }
}

/// A multiset of pairs labelling a stratum of sGr(N,d).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SStratumLabel {
    n: usize,
    d: usize,
    parts: Vec<BcPart>,
}

fn element_cmp(n: usize) -> impl Fn(&BcPart, &BcPart) -> Ordering {
    move |a, b| {
        bc_element_size(b, n)
            .cmp(&bc_element_size(a, n))
            .then_with(|| a.weight.coords().cmp(b.weight.coords()))
            .then_with(|| a.k.cmp(&b.k))
    }
}

impl SStratumLabel {
    /// Sorts into canonical order; checks types and ranks against `N`.
    pub fn new(n: usize, d: usize, mut parts: Vec<BcPart>) -> Result<Self> {
        let (t, r) = bc_rank(n)?;
        if let Some(bad) = parts.iter().find(|p| p.weight.lie_type() != t || p.weight.rank() != r) {
            return Err(Error::RankMismatch(format!("N = {n} needs weights of {t}_{r}, got {bad:?}")));
        }
        if parts.iter().any(|p| bc_element_size(p, n) == 0) {
            return Err(Error::InvalidArgument("every pair needs |λ_{A,k}| > 0".into()));
        }
        parts.sort_by(element_cmp(n));
        Ok(SStratumLabel { n, d, parts })
    }

    /// Parses `((0,1)_1,(0,1))`.
    pub fn parse(s: &str, n: usize, d: usize) -> Result<Self> {
        let (t, _) = bc_rank(n)?;
        let parts = split_groups(s)?
            .into_iter()
            .map(|(g, k)| Ok(BcPart::new(DominantWeight::parse(t, &g)?, k.unwrap_or(0))))
            .collect::<Result<Vec<_>>>()?;
        SStratumLabel::new(n, d, parts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn parts(&self) -> &[BcPart] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn root_system(&self) -> RootSystem {
        let (t, r) = bc_rank(self.n).expect("checked on construction");
        RootSystem::new(t, r).unwrap()
    }

    /// `Λ_{A,k}` in canonical order of the pairs.
    pub fn lift(&self) -> Vec<Partition> {
        self.parts.iter().map(|p| p.lift(self.n)).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| bc_element_size(p, self.n)).collect()
    }

    pub fn invariant_dim(&self) -> u64 {
        let weights: Vec<Weight> = self.parts.iter().map(|p| p.weight.to_weight()).collect();
        invariant_dim(&self.root_system(), &weights)
    }

    pub fn is_d_nontrivial(&self) -> bool {
        self.d >= self.n
            && self.sizes().iter().sum::<usize>() == self.n * (self.d - self.n)
            && self.invariant_dim() > 0
    }

    /// Merges of one pair `(λ,k_1), (μ,k_2)` into `(ξ, l)` with `V_ξ` in
    /// `V_λ ⊗ V_μ` and `|ξ_{A,l}| = |λ_{A,k_1}| + |μ_{A,k_2}|`.
    pub fn merges(&self, keep_empty: bool) -> Vec<SStratumLabel> {
        let rs = self.root_system();
        let n = self.n;
        let mut out = BTreeSet::new();
        let mut seen = BTreeSet::new();
        for i in 0..self.parts.len() {
            for j in i + 1..self.parts.len() {
                let (a, b) = (&self.parts[i], &self.parts[j]);
                if !seen.insert((a.clone(), b.clone())) {
                    continue;
                }
                let target = bc_element_size(a, n) + bc_element_size(b, n);
                let rest: Vec<BcPart> = self
                    .parts
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| *t != i && *t != j)
                    .map(|(_, p)| p.clone())
                    .collect();
                for xi in tensor_decompose(&rs, &a.weight.to_weight(), &b.weight.to_weight()).keys() {
                    let weight = DominantWeight::from_weight(a.weight.lie_type(), xi).unwrap();
                    let base = bc_element_size(&BcPart::new(weight.clone(), 0), n);
                    if base > target || !(target - base).is_multiple_of(n) {
                        continue;
                    }
                    let mut parts = rest.clone();
                    parts.push(BcPart::new(weight, (target - base) / n));
                    let label = SStratumLabel::new(n, self.d, parts).expect("merged parts are valid");
                    if keep_empty || label.is_d_nontrivial() {
                        out.insert(label);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn simple_degenerations(&self) -> Vec<SStratumLabel> {
        self.merges(false)
    }

    /// All d-nontrivial `(Ξ, l) ≤ (Λ, k)` straight from the definition of the
    /// order: a set partition of the pairs, one `ξ` per block.
    pub fn order_descendants(&self) -> BTreeSet<SStratumLabel> {
        let rs = self.root_system();
        let n = self.n;
        let t = rs.lie_type();
        let mut out = BTreeSet::new();
        for blocks in set_partitions(self.parts.len()) {
            // For each block, the admissible (ξ, l).
            let mut options: Vec<Vec<BcPart>> = Vec::new();
            for block in &blocks {
                let target: usize = block.iter().map(|&i| bc_element_size(&self.parts[i], n)).sum();
                let mut prod: BTreeMap<Weight, u64> = BTreeMap::from([(vec![0; rs.rank()], 1)]);
                for &i in block {
                    let w = self.parts[i].weight.to_weight();
                    let mut next = BTreeMap::new();
                    for (xi, m) in &prod {
                        for (eta, c) in tensor_decompose(&rs, xi, &w).iter() {
                            *next.entry(eta.clone()).or_insert(0) += m * c;
                        }
                    }
                    prod = next;
                }
                let opts: Vec<BcPart> = prod
                    .keys()
                    .filter_map(|xi| {
                        let weight = DominantWeight::from_weight(t, xi).unwrap();
                        let base = bc_element_size(&BcPart::new(weight.clone(), 0), n);
                        (base <= target && (target - base).is_multiple_of(n))
                            .then(|| BcPart::new(weight, (target - base) / n))
                    })
                    .collect();
                options.push(opts);
            }
            for choice in cartesian(&options) {
                if let Ok(label) = SStratumLabel::new(n, self.d, choice) {
                    if label.is_d_nontrivial() {
                        out.insert(label);
                    }
                }
            }
        }
        out
    }
}

/// Set partitions of `0..n` as lists of blocks.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

fn cartesian<T: Clone>(options: &[Vec<T>]) -> Vec<Vec<T>> {
    options.iter().fold(vec![Vec::new()], |acc, opts| {
        acc.iter()
            .flat_map(|prefix| {
                opts.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect()
    })
}

impl Ord for SStratumLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        let elem = element_cmp(self.n);
        other
            .parts
            .len()
            .cmp(&self.parts.len())
            .then_with(|| {
                self.parts
                    .iter()
                    .zip(&other.parts)
                    .map(|(a, b)| elem(a, b))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
            .then_with(|| (self.n, self.d).cmp(&(other.n, other.d)))
    }
}

impl PartialOrd for SStratumLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SStratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for SStratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All pairs `(μ, k)` with `0 < |μ_{A,k}| ≤ total`, in canonical order.
fn candidate_parts(n: usize, total: usize) -> Result<Vec<BcPart>> {
    let (t, r) = bc_rank(n)?;
    let cw = coord_weights(n);
    let mut weights = Vec::new();
    fn rec(i: usize, left: usize, cw: &[usize], cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, usize)>) {
        if i == cw.len() {
            out.push((cur.clone(), left));
            return;
        }
        for c in 0..=left / cw[i] {
            cur.push(c);
            rec(i + 1, left - c * cw[i], cw, cur, out);
            cur.pop();
        }
    }
    rec(0, total, &cw, &mut Vec::with_capacity(r), &mut weights);
    let mut out = Vec::new();
    for (coords, left) in weights {
        let w = DominantWeight::new(t, coords)?;
        for k in 0..=left / n {
            let p = BcPart::new(w.clone(), k);
            if bc_element_size(&p, n) > 0 {
                out.push(p);
            }
        }
    }
    out.sort_by(element_cmp(n));
    Ok(out)
}

fn labels_from(n: usize, d: usize, items: &[BcPart], idx: Vec<Vec<usize>>) -> Vec<SStratumLabel> {
    let mut out: Vec<SStratumLabel> = idx
        .into_par_iter()
        .filter_map(|ix| {
            let parts: Vec<BcPart> = ix.iter().map(|&i| items[i].clone()).collect();
            let label = SStratumLabel { n, d, parts };
            (label.invariant_dim() > 0).then_some(label)
        })
        .collect();
    out.sort();
    out
}

/// All d-nontrivial labels of sGr(N,d), sorted, under the default budget.
#[allow(non_snake_case)]
pub fn enumerate_strata_BC(n: usize, d: usize) -> Result<Vec<SStratumLabel>> {
    enumerate_strata_BC_with_budget(n, d, budget())
}

#[allow(non_snake_case)]
pub fn enumerate_strata_BC_with_budget(n: usize, d: usize, budget: usize) -> Result<Vec<SStratumLabel>> {
    bc_rank(n)?;
    let total = check_size(n, d, budget)?;
    if total == 0 {
        return Ok(Vec::new());
    }
    let items = candidate_parts(n, total)?;
    let sizes: Vec<usize> = items.iter().map(|p| bc_element_size(p, n)).collect();
    Ok(labels_from(n, d, &items, multisets(&sizes, total, None)))
}

/// The d-nontrivial labels with the largest number of points.
///
/// Only labels of one length are generated at a time, starting from the
/// longest possible, so this is cheap well past the enumeration budget.
#[allow(non_snake_case)]
pub fn top_strata_BC(n: usize, d: usize) -> Result<Vec<SStratumLabel>> {
    bc_rank(n)?;
    let total = check_size(n, d, usize::MAX)?;
    if total == 0 {
        return Ok(Vec::new());
    }
    let items = candidate_parts(n, total)?;
    let sizes: Vec<usize> = items.iter().map(|p| bc_element_size(p, n)).collect();
    let min = sizes.iter().copied().min().unwrap_or(1);
    for len in (1..=total / min).rev() {
        let found = labels_from(n, d, &items, multisets(&sizes, total, Some(len)));
        if !found.is_empty() {
            return Ok(found);
        }
    }
    Ok(Vec::new())
}

/// Strata grouped by the multiset `m` with `|λ_{A,k}| = N m_s` (N odd) or
/// `r m_s` (N = 2r): the strata over one stratum of the reduced Wronski
/// target.
#[allow(non_snake_case)]
pub fn preimage_groups_BC(strata: &[SStratumLabel]) -> BTreeMap<Vec<usize>, Vec<SStratumLabel>> {
    let mut out: BTreeMap<Vec<usize>, Vec<SStratumLabel>> = BTreeMap::new();
    for s in strata {
        let unit = if s.n % 2 == 0 { s.n / 2 } else { s.n };
        let mut m: Vec<usize> = s.sizes().iter().map(|x| x / unit).collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        out.entry(m).or_default().push(s.clone());
    }
    out
}

/// d-nontrivial labels below `label` in the order that are not reached by
/// chains of simple degenerations. Expected to be empty.
#[allow(non_snake_case)]
pub fn closure_gaps_BC(label: &SStratumLabel) -> Vec<SStratumLabel> {
    let reached: BTreeSet<SStratumLabel> = super::poset::closure(label).into_iter().collect();
    label.order_descendants().into_iter().filter(|l| !reached.contains(l)).collect()
}
