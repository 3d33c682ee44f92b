use std::fmt;

use num_traits::Zero;

use crate::algebra::{rational_roots, wronskian, Poly, Rat};
use crate::error::{Error, Result};

/// An `N`-dimensional subspace of `C_d[x]` (polynomials of degree `< d`).
///
/// The basis is kept in reduced echelon form by degree: degrees strictly
/// increase, each element is monic, and no element has a nonzero
/// coefficient at another element's degree. Two spaces are equal iff their
/// bases are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolySpace {
    d: usize,
    basis: Vec<Poly>,
}

/// Reduced row echelon form of coefficient vectors, pivoting on columns in
/// the order given by `columns`. Returns `(pivot column, row)` pairs.
pub(crate) fn echelon(mut rows: Vec<Vec<Rat>>, columns: &[usize]) -> Vec<(usize, Vec<Rat>)> {
    let mut done: Vec<(usize, Vec<Rat>)> = Vec::new();
    for &col in columns {
        let Some(pos) = rows.iter().position(|r| !r[col].is_zero()) else {
            continue;
        };
        let mut pivot = rows.swap_remove(pos);
        let inv = pivot[col].recip();
        for x in pivot.iter_mut() {
            *x = &*x * &inv;
        }
        for r in rows.iter_mut().chain(done.iter_mut().map(|(_, r)| r)) {
            if r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (x, p) in r.iter_mut().zip(&pivot) {
                *x -= &f * p;
            }
        }
        done.push((col, pivot));
    }
    done
}

fn coeff_rows(polys: &[Poly], width: usize) -> Vec<Vec<Rat>> {
    polys.iter().map(|p| (0..width).map(|i| p.coeff(i)).collect()).collect()
}

impl PolySpace {
    /// The span of `basis` inside `C_d[x]`.
    pub fn new(basis: Vec<Poly>, d: usize) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::InvalidArgument("a space needs at least one basis polynomial".into()));
        }
        if let Some(p) = basis.iter().find(|p| p.degree().is_some_and(|k| k >= d)) {
            return Err(Error::OutOfRange(format!("{p} has degree >= d = {d}")));
        }
        let n = basis.len();
        let columns: Vec<usize> = (0..d).rev().collect();
        let rows = echelon(coeff_rows(&basis, d), &columns);
        if rows.len() < n {
            return Err(Error::DependentBasis);
        }
        let mut basis: Vec<Poly> = rows.into_iter().map(|(_, r)| Poly::new(r)).collect();
        basis.sort_by_key(|p| p.degree());
        Ok(PolySpace { d, basis })
    }

    /// `span{1, x, …, x^{N-1}} ⊂ C_d[x]`.
    pub fn full(n: usize, d: usize) -> Result<Self> {
        PolySpace::new((0..n).map(|i| Poly::monomial(crate::algebra::rat::one(), i)).collect(), d)
    }

    /// Dimension `N`.
    pub fn n(&self) -> usize {
        self.basis.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The canonical basis, by increasing degree.
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    /// Same space viewed inside `C_d[x]` for another `d`.
    pub fn with_d(&self, d: usize) -> Result<Self> {
        PolySpace::new(self.basis.clone(), d)
    }

    /// Degrees of the canonical basis, increasing.
    pub fn degrees(&self) -> Vec<usize> {
        self.basis.iter().map(|p| p.degree().unwrap()).collect()
    }

    /// The monic Wronskian.
    pub fn wronskian(&self) -> Poly {
        wronskian(&self.basis).monic()
    }

    /// Vanishing orders at `z`, increasing.
    pub fn exponents_at_finite(&self, z: &Rat) -> Vec<usize> {
        let shifted: Vec<Poly> = self.basis.iter().map(|p| p.shift(z)).collect();
        let columns: Vec<usize> = (0..self.d).collect();
        let mut orders: Vec<usize> = echelon(coeff_rows(&shifted, self.d), &columns).into_iter().map(|(c, _)| c).collect();
        orders.sort_unstable();
        orders
    }

    /// Whether `f` lies in the space.
    pub fn contains(&self, f: &Poly) -> bool {
        if f.degree().is_some_and(|k| k >= self.d) {
            return false;
        }
        let mut polys = self.basis.clone();
        polys.push(f.clone());
        let columns: Vec<usize> = (0..self.d).rev().collect();
        echelon(coeff_rows(&polys, self.d), &columns).len() == self.n()
    }

    /// `g · X`, inside `C_{d + deg g}[x]`.
    pub fn multiply(&self, g: &Poly) -> Result<Self> {
        let k = g.degree().ok_or_else(|| Error::InvalidArgument("cannot multiply a space by 0".into()))?;
        PolySpace::new(self.basis.iter().map(|p| p * g).collect(), self.d + k)
    }

    /// Equality of spans, ignoring the ambient `d`.
    pub fn same_span(&self, other: &PolySpace) -> bool {
        self.basis == other.basis
    }
}

impl fmt::Display for PolySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|p| p.to_string()).collect();
        write!(f, "span{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for PolySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in C_{}[x]", self.d)
    }
}

/// Common zeros of a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePoints {
    /// Monic gcd of all elements.
    pub gcd: Poly,
    /// Rational roots of the gcd with multiplicities.
    pub rational: Vec<(Rat, usize)>,
    /// True when the gcd has roots that are not rational.
    pub has_irrational: bool,
}

pub fn base_points(x: &PolySpace) -> BasePoints {
    let gcd = x.basis().iter().fold(Poly::zero(), |acc, p| acc.gcd(p));
    let rational = rational_roots(&gcd);
    let rational_degree: usize = rational.iter().map(|(_, m)| m).sum();
    let has_irrational = gcd.degree().unwrap_or(0) > rational_degree;
    BasePoints { gcd, rational, has_irrational }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn canonical_basis() {
        let x = PolySpace::new(vec![p(&[1, 1, 1]), p(&[2, 0, 1]), p(&[0, 3])], 4).unwrap();
        assert_eq!(x, PolySpace::full(3, 4).unwrap());
        assert_eq!(PolySpace::new(vec![p(&[0, 1]), p(&[0, 2])], 3), Err(Error::DependentBasis));
        assert!(matches!(PolySpace::new(vec![p(&[0, 0, 1])], 2), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn wronskian_examples() {
        assert_eq!(PolySpace::full(2, 3).unwrap().wronskian(), Poly::one());
        let u = p(&[3, 0, 1]);
        let x = PolySpace::new(vec![Poly::one(), u.clone(), &u * &u], 5).unwrap();
        assert_eq!(x.wronskian(), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn exponent_examples() {
        let x = PolySpace::new(vec![Poly::one(), p(&[0, 0, 1])], 3).unwrap();
        assert_eq!(x.exponents_at_finite(&int(0)), vec![0, 2]);
        let u = p(&[3, 0, 1]);
        let x = PolySpace::new(vec![Poly::one(), u.clone(), &u * &u], 5).unwrap();
        assert_eq!(x.exponents_at_finite(&int(0)), vec![0, 2, 4]);
        assert_eq!(x.degrees(), vec![0, 2, 4]);
        let line = PolySpace::full(2, 3).unwrap();
        assert_eq!(line.exponents_at_finite(&int(7)), vec![0, 1]);
    }

    #[test]
    fn base_point_examples() {
        let x = PolySpace::new(vec![p(&[0, 1]), p(&[0, 0, 1])], 3).unwrap();
        let b = base_points(&x);
        assert_eq!(b.gcd, Poly::x());
        assert_eq!(b.rational, vec![(int(0), 1)]);
        assert!(base_points(&PolySpace::full(2, 2).unwrap()).gcd.is_one());
        let q = p(&[-2, 0, 1]);
        let x = PolySpace::new(vec![q.clone(), &q * &Poly::x()], 4).unwrap();
        let b = base_points(&x);
        assert_eq!(b.gcd, q);
        assert!(b.rational.is_empty() && b.has_irrational);
    }

    #[test]
    fn membership_of_elements() {
        let x = PolySpace::new(vec![Poly::one(), p(&[0, 0, 1])], 4).unwrap();
        assert!(x.contains(&p(&[5, 0, -1])));
        assert!(!x.contains(&Poly::x()));
    }
}
