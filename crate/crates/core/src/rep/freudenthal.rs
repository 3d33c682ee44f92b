use std::collections::{BTreeMap, HashMap};

use crate::weights::{RootSystem, Weight};

/// Weights (Dynkin coordinates) with their multiplicities.
pub type WeightMultiset = BTreeMap<Weight, u64>;

/// Dominant weights `μ ≤ λ` (so `λ − μ` is a sum of positive roots) paired
/// with the height of `λ − μ`, sorted by height.
///
/// Every such `μ` is reached from `λ` by subtracting one positive root at a
/// time without leaving the dominant chamber, so a search over dominant
/// weights suffices.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &[i64]) -> Vec<(Weight, i64)> {
    let mut depth: HashMap<Weight, i64> = HashMap::new();
    depth.insert(lambda.to_vec(), 0);
    let mut frontier = vec![lambda.to_vec()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for mu in &frontier {
            let h = depth[mu];
            for beta in rs.positive_roots() {
                let nu: Weight = mu.iter().zip(&beta.dynkin).map(|(a, b)| a - b).collect();
                if rs.is_dominant(&nu) && !depth.contains_key(&nu) {
                    depth.insert(nu.clone(), h + beta.height());
                    next.push(nu);
                }
            }
        }
        frontier = next;
    }
    // BFS over single roots does not visit in height order, so recompute
    // heights from root coordinates.
    let mut out: Vec<(Weight, i64)> = depth
        .into_keys()
        .map(|mu| {
            let diff: Weight = lambda.iter().zip(&mu).map(|(a, b)| a - b).collect();
            let h = rs.root_coordinates(&diff).expect("λ − μ lies in the root lattice").iter().sum();
            (mu, h)
        })
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
    out
}

/// Dominant-weight multiplicities of `V_λ` by Freudenthal's recursion.
fn dominant_multiplicities(rs: &RootSystem, lambda: &[i64]) -> BTreeMap<Weight, u64> {
    let rho = rs.rho();
    let shift = |w: &[i64]| -> Weight { w.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let lr = shift(lambda);
    let norm_lr = rs.inner(&lr, &lr);
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for (mu, h) in dominant_weights_below(rs, lambda) {
        if h == 0 {
            mult.insert(mu, 1);
            continue;
        }
        let mr = shift(&mu);
        let denom = norm_lr - rs.inner(&mr, &mr);
        let mut num: i64 = 0;
        for beta in rs.positive_roots() {
            let mut k = 1;
            loop {
                let nu: Weight = mu.iter().zip(&beta.dynkin).map(|(a, b)| a + k * b).collect();
                let (dom, _) = rs.to_dominant(&nu);
                match mult.get(&dom) {
                    Some(&m) => num += m as i64 * rs.inner(&nu, &beta.dynkin),
                    None => break,
                }
                k += 1;
            }
        }
        let m = 2 * num / denom;
        debug_assert_eq!(2 * num % denom, 0);
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    mult
}

/// The full weight system of `V_λ` with multiplicities.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &[i64]) -> WeightMultiset {
    let mut out = BTreeMap::new();
    for (mu, m) in dominant_multiplicities(rs, lambda) {
        for w in rs.orbit(&mu) {
            out.insert(w, m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::LieType;

    fn total(m: &WeightMultiset) -> u64 {
        m.values().sum()
    }

    #[test]
    fn vector_rep_of_b2() {
        let rs = RootSystem::new(LieType::B, 2).unwrap();
        let m = weight_multiplicities(&rs, &[1, 0]);
        assert_eq!(m.len(), 5);
        assert!(m.values().all(|&c| c == 1));
        let mut eps: Vec<Vec<i64>> = m.keys().map(|w| rs.to_eps(w)).collect();
        eps.sort();
        // ±ε_1, ±ε_2, 0, scaled by 2
        assert_eq!(eps, vec![vec![-2, 0], vec![0, -2], vec![0, 0], vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn sl2_adjoint() {
        let rs = RootSystem::new(LieType::A, 1).unwrap();
        let m = weight_multiplicities(&rs, &[2]);
        assert_eq!(m, BTreeMap::from([(vec![-2], 1), (vec![0], 1), (vec![2], 1)]));
    }

    #[test]
    fn trivial_rep() {
        let rs = RootSystem::new(LieType::C, 3).unwrap();
        assert_eq!(weight_multiplicities(&rs, &[0, 0, 0]), BTreeMap::from([(vec![0, 0, 0], 1)]));
    }

    #[test]
    fn adjoint_zero_weight_is_rank() {
        let a3 = RootSystem::new(LieType::A, 3).unwrap();
        let m = weight_multiplicities(&a3, &[1, 0, 1]);
        assert_eq!(m[&vec![0, 0, 0]], 3);
        assert_eq!(total(&m), 15);
        let b3 = RootSystem::new(LieType::B, 3).unwrap();
        let m = weight_multiplicities(&b3, &[0, 1, 0]);
        assert_eq!(m[&vec![0, 0, 0]], 3);
        assert_eq!(total(&m), 21);
    }

    #[test]
    fn totals_match_weyl_dimension() {
        for (t, r) in [(LieType::A, 2), (LieType::B, 2), (LieType::C, 2), (LieType::B, 3), (LieType::C, 3)] {
            let rs = RootSystem::new(t, r).unwrap();
            for a in 0..3i64 {
                for b in 0..3i64 {
                    let mut w = vec![0; r];
                    w[0] = a;
                    w[r - 1] += b;
                    assert_eq!(total(&weight_multiplicities(&rs, &w)), rs.weyl_dim(&w), "{t}{r} {w:?}");
                }
            }
        }
    }
}
