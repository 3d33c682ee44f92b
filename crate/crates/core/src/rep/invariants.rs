use std::collections::BTreeMap;

use super::tensor::tensor_decompose;
use crate::weights::{DominantWeight, LieType, Partition, RootSystem, Weight};

/// `dim (V_{λ^{(1)}} ⊗ … ⊗ V_{λ^{(n)}})^g`, folding left to right.
///
/// The last factor is not multiplied in: the invariant count is the
/// multiplicity of its dual in the product of the others.
pub fn invariant_dim(rs: &RootSystem, weights: &[Weight]) -> u64 {
    let Some((last, rest)) = weights.split_last() else {
        return 1;
    };
    let target = rs.dual(last);
    let mut current: BTreeMap<Weight, u64> = BTreeMap::from([(vec![0; rs.rank()], 1)]);
    for w in rest {
        let mut next = BTreeMap::new();
        for (xi, m) in &current {
            for (eta, c) in tensor_decompose(rs, xi, w).iter() {
                *next.entry(eta.clone()).or_insert(0) += m * c;
            }
        }
        current = next;
    }
    current.get(&target).copied().unwrap_or(0)
}

/// `dim (⊗ V_{λ^{(s)}})^{sl_N}` for partitions with at most `N` parts.
#[allow(non_snake_case)]
pub fn invariant_dim_A(labels: &[Partition], n: usize) -> u64 {
    let size: usize = labels.iter().map(Partition::size).sum();
    if n == 0 || !size.is_multiple_of(n) {
        return 0;
    }
    if n == 1 {
        return 1;
    }
    let rs = RootSystem::new(LieType::A, n - 1).unwrap();
    let weights: Vec<Weight> =
        labels.iter().map(|p| p.differences().into_iter().map(|c| c as i64).collect()).collect();
    invariant_dim(&rs, &weights)
}

/// `dim (⊗ V_{λ^{(s)}})^g` for dominant weights of one root system.
#[allow(non_snake_case)]
pub fn invariant_dim_BC(rs: &RootSystem, labels: &[DominantWeight]) -> u64 {
    let weights: Vec<Weight> = labels.iter().map(DominantWeight::to_weight).collect();
    invariant_dim(rs, &weights)
}

/// 1 if `λ_i + μ_{N+1−i}` is independent of `i`, else 0.
#[allow(non_snake_case)]
pub fn pair_invariant_A(lambda: &Partition, mu: &Partition, n: usize) -> u64 {
    let l = |i: usize| lambda.parts().get(i).copied().unwrap_or(0);
    let m = |i: usize| mu.parts().get(i).copied().unwrap_or(0);
    let k = l(0) + m(n - 1);
    u64::from((0..n).all(|i| l(i) + m(n - 1 - i) == k))
}

/// `V_λ ⊗ V_μ` for `gl_N` through the Racah–Speiser engine on `sl_N`,
/// with components written as partitions.
pub fn tensor_product_gl(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let n = lambda.n();
    let total = lambda.size() + mu.size();
    if n == 1 {
        return BTreeMap::from([(Partition::new(&[total], 1).unwrap(), 1)]);
    }
    let rs = RootSystem::new(LieType::A, n - 1).unwrap();
    let w = |p: &Partition| -> Weight { p.differences().into_iter().map(|c| c as i64).collect() };
    tensor_decompose(&rs, &w(lambda), &w(mu))
        .iter()
        .map(|(xi, &c)| {
            let diffs: Vec<usize> = xi.iter().map(|&d| d as usize).collect();
            // |ν| = N ν_N + Σ i (ν_i − ν_{i+1})
            let weighted: usize = diffs.iter().enumerate().map(|(i, d)| (i + 1) * d).sum();
            let last = (total - weighted) / n;
            debug_assert_eq!((total - weighted) % n, 0);
            (Partition::from_differences(&diffs, last), c)
        })
        .collect()
}
