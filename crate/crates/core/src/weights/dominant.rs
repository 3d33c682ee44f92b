use std::fmt;

use super::partition::Partition;
use super::root_system::{LieType, RootSystem};
use crate::error::{Error, Result};

/// A dominant integral weight given by its Dynkin labels `⟨λ, α̌_i⟩`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    lie_type: LieType,
    coords: Vec<usize>,
}

impl DominantWeight {
    pub fn new(lie_type: LieType, coords: Vec<usize>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidArgument("a weight needs at least one coordinate".into()));
        }
        Ok(DominantWeight { lie_type, coords })
    }

    pub fn zero(lie_type: LieType, rank: usize) -> Self {
        DominantWeight { lie_type, coords: vec![0; rank] }
    }

    /// `ω_i`, 1-based.
    pub fn fundamental(lie_type: LieType, rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        DominantWeight { lie_type, coords }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinates as a signed weight vector for the root system routines.
    pub fn to_weight(&self) -> Vec<i64> {
        self.coords.iter().map(|&c| c as i64).collect()
    }

    /// Inverse of [`Self::to_weight`]; fails on a non-dominant input.
    pub fn from_weight(lie_type: LieType, w: &[i64]) -> Result<Self> {
        if w.iter().any(|&c| c < 0) {
            return Err(Error::InvalidArgument(format!("{w:?} is not dominant")));
        }
        DominantWeight::new(lie_type, w.iter().map(|&c| c as usize).collect())
    }

    pub fn root_system(&self) -> RootSystem {
        RootSystem::new(self.lie_type, self.rank()).expect("rank is positive")
    }

    /// Parses `"0,1"` (parentheses allowed).
    pub fn parse(lie_type: LieType, s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad coordinate {x:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        DominantWeight::new(lie_type, coords)
    }

    pub fn to_csv(&self) -> String {
        self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lie_type, self)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

/// Type and rank of `g_N`: `B_r` for `N = 2r`, `C_r` for `N = 2r + 1`.
pub fn bc_rank(n: usize) -> Result<(LieType, usize)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("N = {n} has no associated B/C algebra")));
    }
    Ok(if n.is_multiple_of(2) { (LieType::B, n / 2) } else { (LieType::C, n / 2) })
}

/// `μ_{A,k}`: last part `k`, consecutive differences `⟨μ, α̌_i⟩` for
/// `i ≤ ⌊N/2⌋` and `⟨μ, α̌_{N−i}⟩` above.
pub fn assoc_partition(mu: &DominantWeight, k: usize, n: usize) -> Result<Partition> {
    let (t, r) = bc_rank(n)?;
    if mu.lie_type() != t || mu.rank() != r {
        return Err(Error::RankMismatch(format!(
            "N = {n} needs a weight of {t}_{r}, got {}_{}",
            mu.lie_type(),
            mu.rank()
        )));
    }
    let c = mu.coords();
    let diffs: Vec<usize> = (1..n).map(|i| if i <= n / 2 { c[i - 1] } else { c[n - i - 1] }).collect();
    Ok(Partition::from_differences(&diffs, k))
}

/// The `gl_N` weight with symmetric Dynkin labels lifting `λ`, normalized
/// to have last coordinate zero.
pub fn lift_symmetric(lambda: &DominantWeight, n: usize) -> Result<Partition> {
    assoc_partition(lambda, 0, n)
}
