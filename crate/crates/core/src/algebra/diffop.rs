//! Monic linear differential operators with rational-function coefficients.
//!
//! An operator of order `N` is kept in normal form
//! `∂^N + h_1 ∂^{N-1} + … + h_N`. Every constructor and operation returns
//! normal form, so `==` is operator equality.

use std::fmt;

use num_traits::One;

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::rat::int;
use super::wronskian::{determinant, wronski_matrix, wronskian};
use crate::error::{Error, Result};

/// General (not necessarily monic) operator `Σ c[k] ∂^k`.
#[derive(Clone, Debug, PartialEq)]
struct Operator {
    c: Vec<RatFunc>,
}

impl Operator {
    fn trimmed(mut c: Vec<RatFunc>) -> Self {
        while c.last().is_some_and(RatFunc::is_zero) {
            c.pop();
        }
        Operator { c }
    }

    fn multiplication(f: RatFunc) -> Self {
        Operator::trimmed(vec![f])
    }

    fn compose(&self, rhs: &Operator) -> Operator {
        if self.c.is_empty() || rhs.c.is_empty() {
            return Operator { c: Vec::new() };
        }
        let max_i = self.c.len() - 1;
        // derivs[j][t] = t-th derivative of rhs.c[j]
        let derivs: Vec<Vec<RatFunc>> = rhs
            .c
            .iter()
            .map(|b| {
                let mut v = Vec::with_capacity(max_i + 1);
                let mut cur = b.clone();
                for _ in 0..=max_i {
                    let next = cur.derivative();
                    v.push(std::mem::replace(&mut cur, next));
                }
                v
            })
            .collect();
        let mut out = vec![RatFunc::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, bd) in derivs.iter().enumerate() {
                for t in 0..=i {
                    let b = &bd[t];
                    if b.is_zero() {
                        continue;
                    }
                    let term = (a * b).scale(&int(binomial(i, t)));
                    out[i - t + j] = &out[i - t + j] + &term;
                }
            }
        }
        Operator::trimmed(out)
    }

    fn add(&self, rhs: &Operator) -> Operator {
        let n = self.c.len().max(rhs.c.len());
        let get = |v: &Vec<RatFunc>, k: usize| v.get(k).cloned().unwrap_or_else(RatFunc::zero);
        Operator::trimmed((0..n).map(|k| &get(&self.c, k) + &get(&rhs.c, k)).collect())
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// `∂^N + Σ h_i ∂^{N-i}`; `coeffs[i-1] = h_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiffOp {
    coeffs: Vec<RatFunc>,
}

impl DiffOp {
    /// Builds the operator from `h_1, …, h_N`.
    pub fn new(coeffs: Vec<RatFunc>) -> Self {
        DiffOp { coeffs }
    }

    pub fn identity() -> Self {
        DiffOp { coeffs: Vec::new() }
    }

    /// `∂^n`.
    pub fn d_power(n: usize) -> Self {
        DiffOp { coeffs: vec![RatFunc::zero(); n] }
    }

    /// `∂ + a`.
    pub fn first_order(a: RatFunc) -> Self {
        DiffOp { coeffs: vec![a] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `h_1, …, h_N`.
    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    /// Coefficient of `∂^k` (1 for `k = N`, 0 above).
    pub fn coefficient_of_d(&self, k: usize) -> RatFunc {
        let n = self.order();
        match k.cmp(&n) {
            std::cmp::Ordering::Equal => RatFunc::one(),
            std::cmp::Ordering::Greater => RatFunc::zero(),
            std::cmp::Ordering::Less => self.coeffs[n - k - 1].clone(),
        }
    }

    fn to_operator(&self) -> Operator {
        Operator { c: (0..=self.order()).map(|k| self.coefficient_of_d(k)).collect() }
    }

    fn from_operator(op: Operator) -> Self {
        let n = op.c.len() - 1;
        debug_assert!(op.c[n].is_one(), "operator is not monic");
        DiffOp { coeffs: (1..=n).map(|i| op.c[n - i].clone()).collect() }
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &DiffOp) -> DiffOp {
        DiffOp::from_operator(self.to_operator().compose(&rhs.to_operator()))
    }

    /// Left-to-right product of the factors; the empty product is the identity.
    pub fn compose_all(factors: &[DiffOp]) -> DiffOp {
        factors.iter().fold(DiffOp::identity(), |acc, f| acc.compose(f))
    }

    /// `D^* = ∂^N + Σ (-1)^i ∂^{N-i} ∘ h_i`, re-expanded to normal form.
    pub fn formal_conjugate(&self) -> DiffOp {
        let n = self.order();
        let mut acc = DiffOp::d_power(n).to_operator();
        for (idx, h) in self.coeffs.iter().enumerate() {
            let i = idx + 1;
            let h = if i % 2 == 1 { -h } else { h.clone() };
            let term = DiffOp::d_power(n - i).to_operator().compose(&Operator::multiplication(h));
            acc = acc.add(&term);
        }
        DiffOp::from_operator(acc)
    }

    /// `g ∘ D ∘ g^{-1}` where `ψ = g'/g`, i.e. `∂` replaced by `∂ - ψ`.
    /// `g` itself is never needed, so fractional powers are fine.
    pub fn conjugate_by_logderiv(&self, psi: &RatFunc) -> DiffOp {
        let shifted = Operator::trimmed(vec![-psi, RatFunc::one()]);
        let mut power = Operator { c: vec![RatFunc::one()] };
        let mut acc = Operator { c: Vec::new() };
        for k in 0..=self.order() {
            let coeff = self.coefficient_of_d(k);
            acc = acc.add(&Operator::multiplication(coeff).compose(&power));
            power = power.compose(&shifted);
        }
        DiffOp::from_operator(acc)
    }

    /// `D f`.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        let mut deriv = f.clone();
        for k in 0..=self.order() {
            let c = self.coefficient_of_d(k);
            if !c.is_zero() && !deriv.is_zero() {
                acc = &acc + &(&c * &deriv);
            }
            deriv = deriv.derivative();
        }
        acc
    }

    /// The monic operator of order `N` whose kernel is spanned by `basis`.
    ///
    /// Expanding `Wr(u_1, …, u_N, f) / Wr(u_1, …, u_N)` along the last column
    /// gives `h_{N-k} = (-1)^{N+k} M_k / Wr` where `M_k` is the Wronskian minor
    /// with the `k`-th derivative row removed.
    pub fn from_kernel(basis: &[Poly]) -> Result<DiffOp> {
        let n = basis.len();
        let wr = wronskian(basis);
        if wr.is_zero() {
            return Err(Error::DependentBasis);
        }
        let rows = wronski_matrix(basis, n + 1);
        let mut coeffs = vec![RatFunc::zero(); n];
        for k in 0..n {
            let minor: Vec<Vec<Poly>> =
                rows.iter().enumerate().filter(|(r, _)| *r != k).map(|(_, row)| row.clone()).collect();
            let m = determinant(minor);
            let m = if (n + k) % 2 == 1 { -m } else { m };
            coeffs[n - k - 1] = RatFunc::new(m, wr.clone());
        }
        Ok(DiffOp { coeffs })
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp({self})")
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        let dpow = |k: usize| match k {
            0 => String::new(),
            1 => "d".to_string(),
            _ => format!("d^{k}"),
        };
        if n == 0 {
            return write!(f, "1");
        }
        write!(f, "{}", dpow(n))?;
        for (idx, h) in self.coeffs.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            let k = n - idx - 1;
            if k == 0 {
                write!(f, " + ({h})")?;
            } else {
                write!(f, " + ({h})*{}", dpow(k))?;
            }
        }
        Ok(())
    }
}
