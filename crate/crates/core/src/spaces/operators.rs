use super::data::EvaluatedStratumData;
use super::dual::{associated_t, divided_wronskian, dual_space};
use super::space::PolySpace;
use crate::algebra::{DiffOp, Poly, Rat, RatFunc};
use crate::error::{Error, Result};
use crate::weights::LieType;

/// `y_{N−i} = Wr†(u_1, …, u_i)` for `i = 1, …, N−1`; returns `y_1, …, y_{N−1}`.
pub fn y_from_basis(basis: &[Poly], t: &[Poly]) -> Result<Vec<Poly>> {
    let n = basis.len();
    let mut y = vec![Poly::zero(); n.saturating_sub(1)];
    for i in 1..n {
        y[n - i - 1] = divided_wronskian(&basis[..i], t)?;
    }
    Ok(y)
}

/// `(∂ − ln′(T_1⋯T_N / y_1)) (∂ − ln′(y_1 T_2⋯T_N / y_2)) ⋯ (∂ − ln′(y_{N−1} T_N))`.
pub fn build_dx_factorized(y: &[Poly], t: &[Poly]) -> Result<DiffOp> {
    let n = t.len();
    if y.len() + 1 != n {
        return Err(Error::InvalidArgument(format!("need {} y polynomials, got {}", n - 1, y.len())));
    }
    if y.iter().any(Poly::is_zero) {
        return Err(Error::InvalidArgument("y polynomials must be nonzero".into()));
    }
    let y_at = |i: usize| if i == 0 || i == n { Poly::one() } else { y[i - 1].clone() };
    let factors: Vec<DiffOp> = (1..=n)
        .map(|i| {
            let tail = t[i - 1..].iter().fold(Poly::one(), |acc, ti| &acc * ti);
            let num = &y_at(i - 1) * &tail;
            let psi = &RatFunc::log_derivative(&num) - &RatFunc::log_derivative(&y_at(i));
            DiffOp::first_order(-psi)
        })
        .collect();
    Ok(DiffOp::compose_all(&factors))
}

/// Checks `D_{X†} = (T_1⋯T_N) · D_X^* · (T_1⋯T_N)^{−1}` exactly.
pub fn dual_operator_identity_check(x: &PolySpace, data: &EvaluatedStratumData) -> Result<bool> {
    let dual = dual_space(x, data)?;
    let t = associated_t(data);
    let prod = t.iter().fold(Poly::one(), |acc, ti| &acc * ti);
    let lhs = DiffOp::from_kernel(dual.basis())?;
    let rhs = DiffOp::from_kernel(x.basis())?.formal_conjugate().conjugate_by_logderiv(&RatFunc::log_derivative(&prod));
    Ok(lhs == rhs)
}

/// `(T_1⋯T_N)^{−1/2} · D_X · (T_1⋯T_N)^{1/2}`, computed through the
/// logarithmic derivative. For pure self-dual `X` it equals its own formal
/// conjugate.
pub fn half_conjugated_operator(x: &PolySpace, data: &EvaluatedStratumData) -> Result<DiffOp> {
    let t = associated_t(data);
    let prod = t.iter().fold(Poly::one(), |acc, ti| &acc * ti);
    let half = RatFunc::log_derivative(&prod).scale(&-Rat::new(1.into(), 2.into()));
    Ok(DiffOp::from_kernel(x.basis())?.conjugate_by_logderiv(&half))
}

/// Scalar form of the Miura transformation:
/// type C `(∂+v_1)⋯(∂+v_r)(∂−v_r)⋯(∂−v_1)`, type B with an extra `∂` in the
/// middle.
pub fn miura_scalar_operator(lie_type: LieType, v: &[RatFunc]) -> Result<DiffOp> {
    let mut factors: Vec<DiffOp> = v.iter().map(|vi| DiffOp::first_order(vi.clone())).collect();
    match lie_type {
        LieType::B => factors.push(DiffOp::d_power(1)),
        LieType::C => {}
        LieType::A => return Err(Error::InvalidArgument("Miura operators are defined here for types B and C".into())),
    }
    factors.extend(v.iter().rev().map(|vi| DiffOp::first_order(-vi)));
    Ok(DiffOp::compose_all(&factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::data::derive_stratum_data;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn check_factorization(x: &PolySpace) {
        let data = derive_stratum_data(x).unwrap();
        let t = associated_t(&data);
        let y = y_from_basis(x.basis(), &t).unwrap();
        assert_eq!(build_dx_factorized(&y, &t).unwrap(), DiffOp::from_kernel(x.basis()).unwrap(), "{x}");
    }

    #[test]
    fn factorization_examples() {
        let line = PolySpace::full(2, 2).unwrap();
        assert_eq!(build_dx_factorized(&[Poly::one()], &[Poly::one(), Poly::one()]).unwrap(), DiffOp::d_power(2));
        check_factorization(&line);
        check_factorization(&PolySpace::new(vec![Poly::one(), p(&[0, 0, 1])], 3).unwrap());
        let u = p(&[1, 0, 1]);
        check_factorization(&PolySpace::new(vec![Poly::one(), u.clone(), &u * &u], 5).unwrap());
        check_factorization(&PolySpace::new(vec![Poly::one(), p(&[0, 0, 0, 1]), p(&[1, 0, 0, 0, 1])], 5).unwrap());
        check_factorization(&PolySpace::new(vec![p(&[0, 1]), p(&[0, 0, 0, 1])], 4).unwrap());
    }

    #[test]
    fn dual_operator_examples() {
        let full = PolySpace::full(3, 3).unwrap();
        let data = derive_stratum_data(&full).unwrap();
        assert!(dual_operator_identity_check(&full, &data).unwrap());
        let u = p(&[1, 0, 1]);
        let x = PolySpace::new(vec![Poly::one(), u.clone(), &u * &u], 5).unwrap();
        let data = derive_stratum_data(&x).unwrap();
        assert!(dual_operator_identity_check(&x, &data).unwrap());
        let half = half_conjugated_operator(&x, &data).unwrap();
        assert_eq!(half.formal_conjugate(), half);
    }

    #[test]
    fn miura_examples() {
        let z = RatFunc::zero();
        assert_eq!(miura_scalar_operator(LieType::C, &[z.clone(), z.clone()]).unwrap(), DiffOp::d_power(4));
        assert_eq!(miura_scalar_operator(LieType::B, &[z.clone(), z]).unwrap(), DiffOp::d_power(5));
        let a = RatFunc::new(Poly::one(), Poly::x());
        assert_eq!(miura_scalar_operator(LieType::C, &[a]).unwrap(), DiffOp::d_power(2));
    }
}
