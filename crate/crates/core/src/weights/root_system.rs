//! Root systems of types A, B and C.
//!
//! Weights are handled in Dynkin coordinates `⟨λ, α̌_i⟩`. Inner products go
//! through an orthogonal (ε-basis) model, scaled so every weight has integer
//! coordinates: type A uses the traceless projection of `gl_{n+1}` scaled by
//! `n+1`, type B doubles coordinates (for the spin weight), type C needs no
//! scaling.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A weight in Dynkin coordinates (possibly non-dominant).
pub type Weight = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A,
    B,
    C,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            other => Err(Error::Parse(format!("unknown Lie type {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    /// Dynkin coordinates `⟨β, α̌_i⟩`.
    pub dynkin: Weight,
    /// Coordinates in the basis of simple roots.
    pub simple: Vec<i64>,
    /// Scaled ε-coordinates.
    pub eps: Vec<i64>,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Scaled ε-vectors of the fundamental weights.
    fundamental_eps: Vec<Vec<i64>>,
    positive: Vec<PositiveRoot>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.lie_type == other.lie_type && self.rank == other.rank
    }
}
impl Eq for RootSystem {}

impl RootSystem {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidArgument("rank must be positive".into()));
        }
        let r = rank;
        let dim = match lie_type {
            LieType::A => r + 1,
            _ => r,
        };
        let unit = |i: usize, c: i64| {
            let mut v = vec![0i64; dim];
            v[i] = c;
            v
        };
        let diff = |i: usize, j: usize| {
            let mut v = vec![0i64; dim];
            v[i] = 1;
            v[j] = -1;
            v
        };
        let sum = |i: usize, j: usize| {
            let mut v = vec![0i64; dim];
            v[i] = 1;
            v[j] = 1;
            v
        };
        // Unscaled ε-vectors of simple and positive roots.
        let simple: Vec<Vec<i64>> = (0..r)
            .map(|i| match lie_type {
                LieType::A => diff(i, i + 1),
                LieType::B if i == r - 1 => unit(i, 1),
                LieType::C if i == r - 1 => unit(i, 2),
                _ => diff(i, i + 1),
            })
            .collect();
        let mut positive_eps = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                positive_eps.push(diff(i, j));
                if lie_type != LieType::A {
                    positive_eps.push(sum(i, j));
                }
            }
            match lie_type {
                LieType::B => positive_eps.push(unit(i, 1)),
                LieType::C => positive_eps.push(unit(i, 2)),
                LieType::A => {}
            }
        }
        let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| 2 * dot(&simple[i], &simple[j]) / dot(&simple[i], &simple[i]))
                    .collect()
            })
            .collect();

        let scale = match lie_type {
            LieType::A => (r + 1) as i64,
            LieType::B => 2,
            LieType::C => 1,
        };
        let fundamental_eps: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                let k = (i + 1) as i64;
                (0..dim)
                    .map(|idx| {
                        let inside = idx <= i;
                        match lie_type {
                            // (n+1)(e_1+…+e_k) − k(1,…,1)
                            LieType::A => if inside { scale - k } else { -k },
                            LieType::B if i == r - 1 => 1,
                            _ => if inside { scale } else { 0 },
                        }
                    })
                    .collect()
            })
            .collect();

        let mut rs = RootSystem { lie_type, rank, cartan, fundamental_eps, positive: Vec::new() };
        let mut positive: Vec<PositiveRoot> = positive_eps
            .iter()
            .map(|b| {
                let dynkin: Weight = simple
                    .iter()
                    .map(|a| 2 * dot(b, a) / dot(a, a))
                    .collect();
                let simple_coords = rs.root_coordinates(&dynkin).expect("roots lie in the root lattice");
                PositiveRoot { dynkin, simple: simple_coords, eps: b.iter().map(|x| x * scale).collect() }
            })
            .collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then(a.simple.cmp(&b.simple)));
        rs.positive = positive;
        Ok(rs)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `a_{ij} = ⟨α̌_i, α_j⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive
    }

    /// Dynkin coordinates of `α_j` (column `j` of the Cartan matrix).
    pub fn simple_root(&self, j: usize) -> Weight {
        (0..self.rank).map(|i| self.cartan[i][j]).collect()
    }

    /// The Weyl vector `ρ = (1, …, 1)`.
    pub fn rho(&self) -> Weight {
        vec![1; self.rank]
    }

    /// `ω_i` as a unit coordinate vector (1-based `i`).
    pub fn fundamental(&self, i: usize) -> Weight {
        let mut w = vec![0; self.rank];
        w[i - 1] = 1;
        w
    }

    /// Scaled ε-coordinates of a weight.
    pub fn to_eps(&self, w: &[i64]) -> Vec<i64> {
        let dim = self.fundamental_eps[0].len();
        let mut v = vec![0i64; dim];
        for (c, f) in w.iter().zip(&self.fundamental_eps) {
            for (x, y) in v.iter_mut().zip(f) {
                *x += c * y;
            }
        }
        v
    }

    /// The common scale of [`Self::to_eps`]: unscaled coordinates are
    /// `to_eps(w) / eps_scale()`.
    pub fn eps_scale(&self) -> i64 {
        match self.lie_type {
            LieType::A => self.rank as i64 + 1,
            LieType::B => 2,
            LieType::C => 1,
        }
    }

    /// Scaled inner product of two weights. Only ratios are meaningful.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let x = self.to_eps(a);
        let y = self.to_eps(b);
        x.iter().zip(&y).map(|(p, q)| p * q).sum()
    }

    /// Coordinates of `w` in the basis of simple roots, if `w` lies in the
    /// root lattice.
    pub fn root_coordinates(&self, w: &[i64]) -> Option<Vec<i64>> {
        let r = self.rank;
        // Gaussian elimination over Q on the system cartan · c = w.
        let mut m: Vec<Vec<BigRational>> = (0..r)
            .map(|i| {
                let mut row: Vec<BigRational> =
                    (0..r).map(|j| BigRational::from_integer(BigInt::from(self.cartan[i][j]))).collect();
                row.push(BigRational::from_integer(BigInt::from(w[i])));
                row
            })
            .collect();
        for col in 0..r {
            let piv = (col..r).find(|&i| !m[i][col].is_zero()).expect("Cartan matrix is invertible");
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..r {
                if i != col && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for j in 0..=r {
                        let t = &f * &m[col][j];
                        m[i][j] -= t;
                    }
                }
            }
        }
        m.iter()
            .map(|row| row[r].is_integer().then(|| row[r].to_integer().to_i64().unwrap()))
            .collect()
    }

    /// Simple reflection `s_i(w) = w − ⟨w, α̌_i⟩ α_i` (0-based `i`).
    pub fn reflect(&self, w: &mut [i64], i: usize) {
        let c = w[i];
        if c == 0 {
            return;
        }
        for (k, x) in w.iter_mut().enumerate() {
            *x -= c * self.cartan[k][i];
        }
    }

    /// Moves `w` into the dominant chamber by simple reflections. Returns the
    /// dominant representative and the length of the Weyl element used.
    pub fn to_dominant(&self, w: &[i64]) -> (Weight, usize) {
        let mut v = w.to_vec();
        let mut len = 0;
        while let Some(i) = v.iter().position(|&c| c < 0) {
            self.reflect(&mut v, i);
            len += 1;
        }
        (v, len)
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        w.iter().all(|&c| c >= 0)
    }

    /// The Weyl orbit of `w`.
    pub fn orbit(&self, w: &[i64]) -> Vec<Weight> {
        let (start, _) = self.to_dominant(w);
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(start.clone());
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for i in 0..self.rank {
                if v[i] > 0 {
                    let mut u = v.clone();
                    self.reflect(&mut u, i);
                    if seen.insert(u.clone()) {
                        stack.push(u);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Weyl dimension formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
    pub fn weyl_dim(&self, w: &[i64]) -> u64 {
        let lr: Weight = w.iter().map(|c| c + 1).collect();
        let rho = self.rho();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for beta in &self.positive {
            // (μ, β) ∝ Σ μ_i c_i (α_i, α_i) with c the simple coordinates.
            let pair = |mu: &[i64]| -> i64 {
                mu.iter()
                    .zip(&beta.simple)
                    .enumerate()
                    .map(|(i, (m, c))| m * c * self.root_length_sq(i))
                    .sum()
            };
            num *= BigInt::from(pair(&lr));
            den *= BigInt::from(pair(&rho));
        }
        (num / den).to_u64().expect("dimension fits in u64")
    }

    /// Unscaled relative squared length of `α_i`, short roots having length 1
    /// (type A roots count as length 1 too).
    fn root_length_sq(&self, i: usize) -> i64 {
        match (self.lie_type, i + 1 == self.rank) {
            (LieType::B, true) => 1,
            (LieType::B, false) => 2,
            (LieType::C, true) => 2,
            _ => 1,
        }
    }

    /// Dynkin labels of the dual representation `−w_0 λ`.
    pub fn dual(&self, w: &[i64]) -> Weight {
        match self.lie_type {
            LieType::A => w.iter().rev().copied().collect(),
            _ => w.to_vec(),
        }
    }

    /// The Weyl group as signed permutations of the unscaled ε-coordinates
    /// (plain permutations in type A). Intended for small ranks.
    pub fn weyl_group_eps(&self) -> Vec<SignedPermutation> {
        let dim = self.fundamental_eps[0].len();
        let perms = permutations(dim);
        match self.lie_type {
            LieType::A => perms
                .into_iter()
                .map(|p| SignedPermutation { perm: p, signs: vec![1; dim] })
                .collect(),
            _ => {
                let mut out = Vec::new();
                for p in perms {
                    for mask in 0..(1u32 << dim) {
                        let signs = (0..dim).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect();
                        out.push(SignedPermutation { perm: p.clone(), signs });
                    }
                }
                out
            }
        }
    }

    /// Inverse of [`Self::to_eps`] for vectors in the image.
    pub fn from_eps(&self, v: &[i64]) -> Weight {
        // ⟨λ, α̌_i⟩ = 2(λ, α_i)/(α_i, α_i); the scale cancels against the root's.
        let dim = v.len();
        (0..self.rank)
            .map(|i| {
                let mut a = vec![0i64; dim];
                match (self.lie_type, i + 1 == self.rank) {
                    (LieType::B, true) => a[i] = 1,
                    (LieType::C, true) => a[i] = 2,
                    _ => {
                        a[i] = 1;
                        a[i + 1] = -1;
                    }
                }
                let num: i64 = v.iter().zip(&a).map(|(x, y)| x * y).sum::<i64>() * 2;
                let den: i64 = a.iter().map(|x| x * x).sum::<i64>() * self.eps_scale();
                num / den
            })
            .collect()
    }
}

/// `v ↦ (signs[k] · v[perm[k]])_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
}

impl SignedPermutation {
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.perm.iter().zip(&self.signs).map(|(&p, s)| s * v[p]).collect()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
