use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::label_a::StratumLabelA;
use super::label_bc::SStratumLabel;
use crate::error::{Error, Result};
use crate::weights::Partition;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `b(Λ)`: for each size, the multinomial coefficient of the multiplicities
/// of the distinct partitions of that size.
pub fn symmetry_coefficient(parts: &[Partition]) -> BigUint {
    let mut counts: BTreeMap<usize, BTreeMap<&Partition, usize>> = BTreeMap::new();
    for p in parts {
        *counts.entry(p.size()).or_default().entry(p).or_insert(0) += 1;
    }
    counts
        .values()
        .map(|group| {
            let total: usize = group.values().sum();
            group.values().fold(factorial(total), |acc, &m| acc / factorial(m))
        })
        .product()
}

/// Degree of the Wronski map on Gr(N,d):
/// `(N(d−N))! · 0! 1! ⋯ (d−N−1)! / (N! (N+1)! ⋯ (d−1)!)`.
#[allow(non_snake_case)]
pub fn wronski_degree_A(n: usize, d: usize) -> Result<BigUint> {
    if n == 0 || n > d {
        return Err(Error::InvalidArgument(format!("need 1 <= N <= d, got N = {n}, d = {d}")));
    }
    let num = (0..d - n).fold(factorial(n * (d - n)), |acc, i| acc * factorial(i));
    let den = (n..d).fold(BigUint::one(), |acc, j| acc * factorial(j));
    Ok(num / den)
}

/// Degree of the reduced Wronski map on sGr(2r, d).
#[allow(non_snake_case)]
pub fn wronski_degree_BC(n: usize, d: usize) -> Result<BigUint> {
    if n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    if n == 0 || n > d {
        return Err(Error::InvalidArgument(format!("need 1 <= N <= d, got N = {n}, d = {d}")));
    }
    let r = n / 2;
    let big = |x: BigUint| BigRational::from_integer(x.into());
    let mut acc = big((1..n).step_by(2).map(BigUint::from).product());
    for i in 1..=r {
        for j in i + 1..=r {
            acc *= big(BigUint::from((j - i) * (n + 1 - i - j)));
        }
    }
    for k in 0..r {
        acc *= big(factorial(2 * (d - n + k)));
        acc /= big(factorial(d - k - 1) * factorial(d - n + k));
    }
    assert!(acc.is_integer(), "degree formula gave a fraction");
    Ok(acc.to_integer().to_biguint().expect("positive"))
}

/// `b(Λ) · dim (V_Λ)^{sl_N}`.
#[allow(non_snake_case)]
pub fn covering_degree_A(label: &StratumLabelA) -> BigUint {
    symmetry_coefficient(label.parts()) * BigUint::from(label.invariant_dim())
}

/// `b(Λ_{A,k}) · dim (V_Λ)^{g_N}`.
#[allow(non_snake_case)]
pub fn covering_degree_BC(label: &SStratumLabel) -> BigUint {
    symmetry_coefficient(&label.lift()) * BigUint::from(label.invariant_dim())
}

/// Convenience for small values in tests and output.
#[allow(dead_code)]
pub(crate) fn to_u64(x: &BigUint) -> u64 {
    x.to_u64().expect("fits in u64")
}
