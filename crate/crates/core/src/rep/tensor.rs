use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use super::freudenthal::weight_multiplicities;
use crate::weights::{LieType, RootSystem, Weight};

/// Highest weights of the irreducible components, with multiplicities.
pub type DecompositionMultiset = BTreeMap<Weight, u64>;

type Key = (LieType, usize, Weight, Weight);

static MEMO: LazyLock<Mutex<HashMap<Key, Arc<DecompositionMultiset>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Drops all memoized decompositions.
pub fn clear_memo() {
    MEMO.lock().unwrap().clear();
}

/// `V_λ ⊗ V_μ` by the Racah–Speiser algorithm.
///
/// Results are memoized per unordered pair.
pub fn tensor_decompose(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> Arc<DecompositionMultiset> {
    let (a, b) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
    let key = (rs.lie_type(), rs.rank(), a.to_vec(), b.to_vec());
    if let Some(hit) = MEMO.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let result = Arc::new(racah_speiser(rs, a, b));
    MEMO.lock().unwrap().insert(key, result.clone());
    result
}

fn racah_speiser(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> DecompositionMultiset {
    // Run over the weights of the smaller factor.
    let (big, small) = if rs.weyl_dim(lambda) >= rs.weyl_dim(mu) { (lambda, mu) } else { (mu, lambda) };
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in weight_multiplicities(rs, small) {
        let shifted: Weight = big.iter().zip(&nu).map(|(a, b)| a + b + 1).collect();
        let (dom, len) = rs.to_dominant(&shifted);
        if dom.contains(&0) {
            continue;
        }
        let sign = if len % 2 == 0 { 1 } else { -1 };
        let xi: Weight = dom.iter().map(|c| c - 1).collect();
        *acc.entry(xi).or_insert(0) += sign * m as i64;
    }
    acc.into_iter()
        .filter(|(_, m)| *m != 0)
        .map(|(xi, m)| {
            assert!(m > 0, "negative multiplicity {m} at {xi:?}");
            (xi, m as u64)
        })
        .collect()
}
