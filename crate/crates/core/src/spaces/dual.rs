use super::data::{stratum_membership, EvaluatedStratumData};
use super::space::PolySpace;
use crate::algebra::{wronskian, Poly, Rat};
use crate::error::{Error, Result};
use crate::weights::dual_tilde;

/// `T_i = ∏_s (x − z_s)^{λ_i^{(s)} − λ_{i+1}^{(s)}}` over the finite points.
pub fn associated_t(data: &EvaluatedStratumData) -> Vec<Poly> {
    let n = data.n();
    (1..=n)
        .map(|i| {
            data.finite().fold(Poly::one(), |acc, (z, lambda)| {
                &acc * &Poly::linear(z).pow(lambda.part(i) - if i < n { lambda.part(i + 1) } else { 0 })
            })
        })
        .collect()
}

/// `Wr†(g_1, …, g_i) = Wr(g_1, …, g_i) · ∏_{j=1}^{i} T_{N+1−j}^{j−i−1}`.
pub fn divided_wronskian(gs: &[Poly], t: &[Poly]) -> Result<Poly> {
    let n = t.len();
    let i = gs.len();
    if i > n {
        return Err(Error::InvalidArgument(format!("{i} functions but only {n} T polynomials")));
    }
    let divisor = (1..=i).fold(Poly::one(), |acc, j| &acc * &t[n - j].pow(i + 1 - j));
    wronskian(gs)
        .exact_div(&divisor)
        .ok_or_else(|| Error::NotDivisible(format!("Wr of {i} functions is not divisible by {divisor}")))
}

fn require_membership(x: &PolySpace, data: &EvaluatedStratumData) -> Result<()> {
    let n = x.n();
    if data.total_size() != n * (x.d() - n) {
        return Err(Error::MembershipFailed(format!(
            "stratum data has size {} but N(d-N) = {}",
            data.total_size(),
            n * (x.d() - n)
        )));
    }
    if !stratum_membership(x, data) {
        return Err(Error::MembershipFailed(format!("{x} is not in the stratum given by the data")));
    }
    Ok(())
}

/// `X†`, the span of the divided Wronskians of all `(N−1)`-element subsets
/// of a basis, inside `C_{d̃}[x]`.
pub fn dual_space(x: &PolySpace, data: &EvaluatedStratumData) -> Result<PolySpace> {
    require_membership(x, data)?;
    let n = x.n();
    let t = associated_t(data);
    let (_, d_tilde) = dual_tilde(&data.partitions(), n, x.d())?;
    let basis = x.basis();
    let gens = (0..n)
        .map(|skip| {
            let gs: Vec<Poly> = basis.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, p)| p.clone()).collect();
            divided_wronskian(&gs, &t)
        })
        .collect::<Result<Vec<_>>>()?;
    let d_tilde = usize::try_from(d_tilde).map_err(|_| Error::MembershipFailed("negative dual degree".into()))?;
    PolySpace::new(gens, d_tilde)
}

/// Outcome of [`selfdual_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelfDuality {
    NotSelfDual,
    /// `X = g · X†` with `g` monic and nonconstant.
    SelfDual(Poly),
    /// `X = X†`.
    PureSelfDual,
}

/// Decides whether `X = g · X†`. The candidate `g` is the `N`-th root of
/// `Wr(X) / Wr(X†)`; the answer is then confirmed by comparing spans.
pub fn selfdual_check(x: &PolySpace, data: &EvaluatedStratumData) -> Result<SelfDuality> {
    let dual = dual_space(x, data)?;
    let Some(ratio) = x.wronskian().exact_div(&dual.wronskian()) else {
        return Ok(SelfDuality::NotSelfDual);
    };
    let Ok(g) = ratio.nth_root(x.n()) else {
        return Ok(SelfDuality::NotSelfDual);
    };
    if !dual.multiply(&g)?.same_span(x) {
        return Ok(SelfDuality::NotSelfDual);
    }
    Ok(if g.is_one() { SelfDuality::PureSelfDual } else { SelfDuality::SelfDual(g) })
}

/// `span{p², pq, q²}` for `X = span{p, q}`, inside `C_{2d−1}[x]`.
pub fn squaring_map(x: &PolySpace) -> Result<PolySpace> {
    if x.n() != 2 {
        return Err(Error::InvalidArgument(format!("the squaring map needs N = 2, got {}", x.n())));
    }
    let (p, q) = (&x.basis()[0], &x.basis()[1]);
    PolySpace::new(vec![p * p, p * q, q * q], 2 * x.d() - 1)
}

/// `∏ (x − z_s)^{k_s} · X`.
pub fn shift_by_roots(x: &PolySpace, shifts: &[(Rat, usize)]) -> Result<PolySpace> {
    let g = shifts.iter().fold(Poly::one(), |acc, (z, k)| &acc * &Poly::linear(z).pow(*k));
    x.multiply(&g)
}

/// The monic `N`-th root (`N` odd) or `r`-th root (`N = 2r`) of `Wr(X)`.
pub fn reduced_wronskian(x: &PolySpace) -> Result<Poly> {
    let n = x.n();
    let root = if n % 2 == 1 { n } else { n / 2 };
    x.wronskian().nth_root(root)
}
