use std::fmt;

use super::space::PolySpace;
use crate::algebra::roots::split_rational_part;
use crate::algebra::{format_rat, parse_rat, Poly, Rat};
use crate::error::{Error, Result};
use crate::weights::Partition;

/// A point of the projective line with rational coordinate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Finite(Rat),
    Infinity,
}

impl Point {
    /// `"inf"`, `"∞"`, or an exact rational.
    pub fn parse(s: &str) -> Result<Point> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Point::Infinity),
            t => Ok(Point::Finite(parse_rat(t)?)),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(z) => write!(f, "{}", format_rat(z)),
            Point::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Distinct points with a partition attached to each: the data `(Λ, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluatedStratumData {
    n: usize,
    entries: Vec<(Point, Partition)>,
}

impl EvaluatedStratumData {
    /// Entries are sorted (finite points first, increasing, then ∞).
    pub fn new(n: usize, mut entries: Vec<(Point, Partition)>) -> Result<Self> {
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidArgument("stratum data points must be distinct".into()));
        }
        if let Some((_, p)) = entries.iter().find(|(_, p)| p.n() != n) {
            return Err(Error::InvalidArgument(format!("{p} does not have {n} parts")));
        }
        Ok(EvaluatedStratumData { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(Point, Partition)] {
        &self.entries
    }

    pub fn partitions(&self) -> Vec<Partition> {
        self.entries.iter().map(|(_, p)| p.clone()).collect()
    }

    /// Finite points with their partitions.
    pub fn finite(&self) -> impl Iterator<Item = (&Rat, &Partition)> {
        self.entries.iter().filter_map(|(z, p)| match z {
            Point::Finite(z) => Some((z, p)),
            Point::Infinity => None,
        })
    }

    pub fn at_infinity(&self) -> Option<&Partition> {
        self.entries.iter().find(|(z, _)| *z == Point::Infinity).map(|(_, p)| p)
    }

    pub fn total_size(&self) -> usize {
        self.entries.iter().map(|(_, p)| p.size()).sum()
    }

    /// `∏ (x − z_s)^{|λ^{(s)}|}` over the finite points.
    pub fn finite_product(&self) -> Poly {
        self.finite().fold(Poly::one(), |acc, (z, p)| &acc * &Poly::linear(z).pow(p.size()))
    }
}

/// Vanishing orders prescribed by `λ` at a finite point:
/// `λ_N, λ_{N−1} + 1, …, λ_1 + N − 1`.
pub fn expected_exponents(lambda: &Partition) -> Vec<usize> {
    let n = lambda.n();
    (1..=n).map(|i| lambda.part(n + 1 - i) + i - 1).collect()
}

/// Reads `λ` back from increasing vanishing orders.
fn partition_from_exponents(e: &[usize]) -> Partition {
    let n = e.len();
    let parts: Vec<usize> = (1..=n).map(|j| e[n - j] - (n - j)).collect();
    Partition::new(&parts, n).expect("exponents are strictly increasing")
}

/// Whether `X ∈ Ω_{Λ,z}`: exponents match at every listed point, and when
/// the data has full size `N(d−N)` the Wronskian has no other roots.
pub fn stratum_membership(x: &PolySpace, data: &EvaluatedStratumData) -> bool {
    let n = x.n();
    if data.n() != n || x.d() < n {
        return false;
    }
    for (z, lambda) in data.entries() {
        let ok = match z {
            Point::Finite(z) => x.exponents_at_finite(z) == expected_exponents(lambda),
            Point::Infinity => match lambda.complement_bar(x.d()) {
                Ok(bar) => x.degrees() == expected_exponents(&bar),
                Err(_) => false,
            },
        };
        if !ok {
            return false;
        }
    }
    if data.total_size() == n * (x.d() - n) {
        return x.wronskian().exact_div(&data.finite_product()).is_some_and(|q| q.is_constant());
    }
    true
}

/// The stratum data of `X` read off its Wronskian: every rational root and
/// `∞` (when the partition there is nonzero).
pub fn derive_stratum_data(x: &PolySpace) -> Result<EvaluatedStratumData> {
    let n = x.n();
    let (roots, rest) = split_rational_part(&x.wronskian());
    if !rest.is_constant() {
        return Err(Error::UnresolvedSingularity(format!(
            "the Wronskian has the factor {rest} without rational roots; supply the stratum data explicitly"
        )));
    }
    let mut entries: Vec<(Point, Partition)> = roots
        .into_iter()
        .map(|(z, _)| {
            let lambda = partition_from_exponents(&x.exponents_at_finite(&z));
            (Point::Finite(z), lambda)
        })
        .collect();
    let bar = partition_from_exponents(&x.degrees());
    let lambda = bar.complement_bar(x.d())?;
    if !lambda.is_zero() {
        entries.push((Point::Infinity, lambda));
    }
    EvaluatedStratumData::new(n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p, p.len()).unwrap()
    }

    fn sq_example() -> PolySpace {
        let u = Poly::from_ints(&[1, 0, 1]);
        PolySpace::new(vec![Poly::one(), u.clone(), &u * &u], 5).unwrap()
    }

    #[test]
    fn membership_examples() {
        let data = EvaluatedStratumData::new(
            3,
            vec![(Point::Finite(int(0)), part(&[2, 1, 0])), (Point::Infinity, part(&[2, 1, 0]))],
        )
        .unwrap();
        assert!(stratum_membership(&sq_example(), &data));

        let line = PolySpace::full(2, 3).unwrap();
        let at0 = EvaluatedStratumData::new(2, vec![(Point::Finite(int(0)), part(&[1, 0]))]).unwrap();
        assert!(!stratum_membership(&line, &at0));
        // At ∞ the Wronskian has degree 0 = N(d−N) − |λ|, so λ = (1,1).
        let inf = EvaluatedStratumData::new(2, vec![(Point::Infinity, part(&[1, 0]))]).unwrap();
        assert!(!stratum_membership(&line, &inf));
        let inf = EvaluatedStratumData::new(2, vec![(Point::Infinity, part(&[1, 1]))]).unwrap();
        assert!(stratum_membership(&line, &inf));
    }

    #[test]
    fn derived_data() {
        let data = derive_stratum_data(&sq_example()).unwrap();
        assert_eq!(
            data.entries(),
            &[(Point::Finite(int(0)), part(&[2, 1, 0])), (Point::Infinity, part(&[2, 1, 0]))]
        );
        let irr = PolySpace::new(vec![Poly::one(), Poly::from_ints(&[0, -2, 0, 1])], 4).unwrap();
        assert!(matches!(derive_stratum_data(&irr), Err(Error::UnresolvedSingularity(_))));
    }

    #[test]
    fn exponents_roundtrip() {
        let l = part(&[3, 1, 1, 0]);
        assert_eq!(expected_exponents(&l), vec![0, 2, 3, 6]);
        assert_eq!(partition_from_exponents(&expected_exponents(&l)), l);
    }

    #[test]
    fn duplicate_points_rejected() {
        let e = vec![(Point::Finite(int(1)), part(&[1, 0])), (Point::Finite(int(1)), part(&[1, 1]))];
        assert!(EvaluatedStratumData::new(2, e).is_err());
    }
}
