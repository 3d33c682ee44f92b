use std::fmt;

use crate::error::{Error, Result};

/// A partition with at most `N` parts, stored padded to exactly `N` entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Pads `parts` with zeros to length `n`. Fails if the parts are not
    /// weakly decreasing or there are more than `n` nonzero parts.
    pub fn new(parts: &[usize], n: usize) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not weakly decreasing")));
        }
        let nonzero = parts.iter().take_while(|&&p| p > 0).count();
        if nonzero > n {
            return Err(Error::InvalidArgument(format!("{parts:?} has more than {n} parts")));
        }
        let mut v: Vec<usize> = parts.iter().copied().take(n).collect();
        v.resize(n, 0);
        Ok(Partition { parts: v })
    }

    pub fn zero(n: usize) -> Self {
        Partition { parts: vec![0; n] }
    }

    /// `(k, k, …, k)` with `n` entries.
    pub fn rectangle(k: usize, n: usize) -> Self {
        Partition { parts: vec![k; n] }
    }

    /// `(1, 0, …, 0)`.
    pub fn box_(n: usize) -> Self {
        let mut parts = vec![0; n];
        if n > 0 {
            parts[0] = 1;
        }
        Partition { parts }
    }

    /// Ambient number of parts `N`.
    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past `N`.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            panic!("parts are 1-indexed");
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// `λ ⊆ μ` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.parts.iter().zip(other.parts.iter()).all(|(a, b)| a <= b)
    }

    /// `λ + (k, …, k)`.
    pub fn add_constant(&self, k: usize) -> Partition {
        Partition { parts: self.parts.iter().map(|p| p + k).collect() }
    }

    /// Consecutive differences `λ_i − λ_{i+1}` for `i = 1..N−1`: the
    /// Dynkin labels of the corresponding `sl_N` weight.
    pub fn differences(&self) -> Vec<usize> {
        self.parts.windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// Rebuilds a partition from its differences and last part.
    pub fn from_differences(diffs: &[usize], last: usize) -> Partition {
        let n = diffs.len() + 1;
        let mut parts = vec![last; n];
        for i in (0..n - 1).rev() {
            parts[i] = parts[i + 1] + diffs[i];
        }
        Partition { parts }
    }

    /// `λ̄ = (d−N−λ_N, …, d−N−λ_1)`, the complementary partition in the
    /// `N × (d−N)` box.
    pub fn complement_bar(&self, d: usize) -> Result<Partition> {
        let n = self.n();
        if d < n || self.first() > d - n {
            return Err(Error::OutOfRange(format!(
                "{self} does not fit in the {n} x {} box",
                d as i64 - n as i64
            )));
        }
        let w = d - n;
        Ok(Partition { parts: self.parts.iter().rev().map(|p| w - p).collect() })
    }

    /// Whether the difference sequence is a palindrome:
    /// `λ_i − λ_{i+1} = λ_{N−i} − λ_{N−i+1}`.
    pub fn is_n_symmetric(&self) -> bool {
        let d = self.differences();
        d.iter().eq(d.iter().rev())
    }

    /// `(λ_1 − λ_N, λ_1 − λ_{N−1}, …, 0)`.
    pub fn tilde(&self) -> Partition {
        let top = self.first();
        Partition { parts: self.parts.iter().rev().map(|p| top - p).collect() }
    }

    /// Parses `"4,2,2,0"` (surrounding parentheses allowed) and pads to `n`.
    pub fn parse(s: &str, n: usize) -> Result<Partition> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<usize> = if t.trim().is_empty() {
            Vec::new()
        } else {
            t.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}"))))
                .collect::<Result<_>>()?
        };
        Partition::new(&parts, n)
    }

    /// `"4,2,2,0"`.
    pub fn to_csv(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(2,1,0)`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

/// Sum of sizes over a sequence.
pub fn total_size(parts: &[Partition]) -> usize {
    parts.iter().map(Partition::size).sum()
}

/// The dual data `(Λ̃, d̃)` of a sequence with `|Λ| = N(d−N)`:
/// `λ̃_i = λ_1 − λ_{N+1−i}` and `d̃ = Σ λ_1 − d + 2N`.
pub fn dual_tilde(labels: &[Partition], n: usize, d: usize) -> Result<(Vec<Partition>, i64)> {
    if d < n || total_size(labels) != n * (d - n) {
        return Err(Error::InvalidArgument(format!(
            "|Λ| = {} differs from N(d-N) = {}",
            total_size(labels),
            n as i64 * (d as i64 - n as i64)
        )));
    }
    if let Some(bad) = labels.iter().find(|p| p.n() != n) {
        return Err(Error::InvalidArgument(format!("{bad} does not have {n} parts")));
    }
    let tilde = labels.iter().map(Partition::tilde).collect();
    let top: usize = labels.iter().map(Partition::first).sum();
    Ok((tilde, top as i64 - d as i64 + 2 * n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts, parts.len()).unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(Partition::zero(4).size(), 0);
        assert_eq!(p(&[2, 1, 1, 0]).size(), 4);
        assert_eq!(p(&[4, 2, 2, 0]).size(), 8);
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(&[1, 2], 2).is_err());
        assert!(Partition::new(&[1, 1, 1], 2).is_err());
        assert_eq!(Partition::new(&[3, 1, 0, 0], 2).unwrap(), p(&[3, 1]));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(p(&[1, 0]).complement_bar(4).unwrap(), p(&[2, 1]));
        assert_eq!(p(&[2, 2, 2]).complement_bar(5).unwrap(), p(&[0, 0, 0]));
        assert_eq!(p(&[2, 1, 0]).complement_bar(5).unwrap(), p(&[2, 1, 0]));
        assert!(matches!(p(&[3, 0]).complement_bar(4), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn symmetry_examples() {
        assert!(p(&[1, 1, 0, 0]).is_n_symmetric());
        assert!(!p(&[2, 0, 0, 0]).is_n_symmetric());
        assert!(p(&[3, 3, 3]).is_n_symmetric());
    }

    #[test]
    fn dual_tilde_examples() {
        let l = vec![p(&[2, 1, 0]), p(&[2, 1, 0])];
        let (t, dt) = dual_tilde(&l, 3, 5).unwrap();
        assert_eq!(t, l);
        assert_eq!(dt, 5);

        let l = vec![p(&[1, 0]), p(&[1, 0])];
        let (t, dt) = dual_tilde(&l, 2, 3).unwrap();
        assert_eq!(t, l);
        assert_eq!(dt, 3);

        let l = vec![p(&[2, 2]), p(&[1, 1])];
        let (t, _) = dual_tilde(&l, 2, 5).unwrap();
        assert!(t.iter().all(Partition::is_zero));
    }

    #[test]
    fn parse_roundtrip() {
        let q = Partition::parse("4,2,2,0", 4).unwrap();
        assert_eq!(q.to_csv(), "4,2,2,0");
        assert_eq!(Partition::parse("(2,1)", 3).unwrap().to_string(), "(2,1,0)");
        assert!(Partition::parse("2,x", 2).is_err());
    }
}
