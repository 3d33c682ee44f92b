//! Random instances and the property checks shared by the property suite
//! and the acceptance target.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grstrata::algebra::rat::{int, rat};
use grstrata::algebra::{wronskian, DiffOp, Poly, Rat, RatFunc};
use grstrata::rep::{invariant_dim_A, invariant_dim_BC, lr_product, tensor_decompose, tensor_product_gl};
use grstrata::spaces::{
    build_dx_factorized, derive_stratum_data, dual_operator_identity_check, dual_space, squaring_map,
    stratum_membership, associated_t, base_points, half_conjugated_operator, selfdual_check, y_from_basis, EvaluatedStratumData, PolySpace, SelfDuality,
};
use grstrata::weights::{assoc_partition, bc_rank, dual_tilde, DominantWeight, LieType, Partition, RootSystem};

pub type Check = std::result::Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rat(rng: &mut impl Rng, bound: i64) -> Rat {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn random_poly(rng: &mut impl Rng, max_deg: usize) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::new((0..=deg).map(|_| small_rat(rng, 3)).collect())
}

/// `(cx + e)^{d−1} p((ax + b)/(cx + e))`: a Möbius change of variable on
/// `C_d[x]`. Rational singular points stay rational.
pub fn mobius(p: &Poly, d: usize, m: &[Rat; 4]) -> Poly {
    let [a, b, c, e] = m;
    let num = Poly::new(vec![b.clone(), a.clone()]);
    let den = Poly::new(vec![e.clone(), c.clone()]);
    (0..d).fold(Poly::zero(), |acc, k| {
        let c_k = p.coeff(k);
        if c_k == int(0) {
            return acc;
        }
        &acc + &(&num.pow(k) * &den.pow(d - 1 - k)).scale(&c_k)
    })
}

fn random_mobius(rng: &mut impl Rng) -> [Rat; 4] {
    loop {
        let m = [int(rng.gen_range(-2..=2)), int(rng.gen_range(-2..=2)), int(rng.gen_range(-2..=2)), int(rng.gen_range(-2..=2))];
        if &m[0] * &m[3] != &m[1] * &m[2] {
            return m;
        }
    }
}

fn linear_product(rng: &mut impl Rng, count: usize) -> Poly {
    (0..count).fold(Poly::one(), |acc, _| &acc * &Poly::linear(&int(rng.gen_range(-2..=2))))
}

fn monomial_space(rng: &mut impl Rng, n: usize, top: usize) -> Vec<Poly> {
    let mut exps: Vec<usize> = (0..=top).collect();
    exps.shuffle(rng);
    exps.truncate(n);
    exps.into_iter().map(|e| Poly::monomial(int(1), e)).collect()
}

/// `span{(x−a)^m u, (x−b)^k u}`: its Wronskian is `u²` times a product of
/// linear factors.
fn two_power_plane(rng: &mut impl Rng, d: usize) -> Vec<Poly> {
    let base = rng.gen_range(0..=(d - 2).min(2));
    let u = linear_product(rng, base);
    let room = d - 1 - base;
    let a = int(rng.gen_range(-2..=2));
    let mut b = int(rng.gen_range(-2..=2));
    if b == a {
        b = &a + int(1);
    }
    let m = rng.gen_range(0..=room);
    let mut k = rng.gen_range(0..=room);
    if k == m {
        k = if m == 0 { 1.min(room) } else { m - 1 };
    }
    vec![&Poly::linear(&a).pow(m) * &u, &Poly::linear(&b).pow(k) * &u]
}

/// A random point of `Gr(n, d)` whose Wronskian splits over `Q`, so its
/// stratum data can be read off exactly.
pub fn random_space(rng: &mut impl Rng, n: usize, d: usize) -> PolySpace {
    assert!(1 <= n && n <= d);
    loop {
        let basis = match rng.gen_range(0..4) {
            0 => monomial_space(rng, n, d - 1),
            1 if n == 2 && d >= 3 => two_power_plane(rng, d),
            2 if n == 3 && d >= 5 => {
                let plane = PolySpace::new(two_power_plane(rng, d.div_ceil(2)), d.div_ceil(2)).unwrap();
                squaring_map(&plane).unwrap().basis().to_vec()
            }
            _ => (0..n).map(|_| random_poly(rng, d - 1)).collect(),
        };
        let m = random_mobius(rng);
        let moved: Vec<Poly> = basis.iter().map(|p| mobius(p, d, &m)).collect();
        let Ok(x) = PolySpace::new(moved, d) else {
            continue;
        };
        if derive_stratum_data(&x).is_ok() {
            return x;
        }
    }
}

pub fn random_plane(rng: &mut impl Rng, d: usize) -> PolySpace {
    random_space(rng, 2, d)
}

pub fn random_partition(rng: &mut impl Rng, n: usize, max_part: usize) -> Partition {
    let mut parts: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=max_part)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(&parts, n).unwrap()
}

pub fn random_weight(rng: &mut impl Rng, t: LieType, rank: usize, max_coord: usize) -> DominantWeight {
    DominantWeight::new(t, (0..rank).map(|_| rng.gen_range(0..=max_coord)).collect()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>, what: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

// ---- brute force ----------------------------------------------------------

/// Partitions of `size` with at most `n` parts, all parts at most `max`.
fn partitions(size: usize, n: usize, max: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if n == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(size)).rev() {
        for rest in partitions(size - first, n - 1, first) {
            let mut p = vec![first];
            p.extend(rest);
            out.push(p);
        }
    }
    out
}

/// Multiplicity of `(c, …, c)` in the iterated LR product.
pub fn lr_invariants(labels: &[Partition], n: usize) -> u64 {
    let total: usize = labels.iter().map(Partition::size).sum();
    if !total.is_multiple_of(n) {
        return 0;
    }
    let mut current = BTreeMap::from([(Partition::zero(n), 1u64)]);
    for l in labels {
        let mut next = BTreeMap::new();
        for (p, m) in &current {
            for (q, c) in lr_product(p, l) {
                *next.entry(q).or_insert(0) += m * c;
            }
        }
        current = next;
    }
    current.get(&Partition::rectangle(total / n, n)).copied().unwrap_or(0)
}

/// Every multiset of nonzero partitions of total size `N(d−N)` (no bound on
/// `λ_1`) with nonzero `sl_N` invariants.
pub fn naive_strata_a(n: usize, d: usize) -> BTreeSet<Vec<Partition>> {
    let total = n * (d - n);
    let all: Vec<Partition> = (1..=total)
        .flat_map(|s| partitions(s, n, s))
        .map(|p| Partition::new(&p, n).unwrap())
        .collect();
    let mut out = BTreeSet::new();
    // Multisets as index sequences into `all`, non-decreasing.
    fn rec(
        all: &[Partition],
        start: usize,
        left: usize,
        cur: &mut Vec<Partition>,
        n: usize,
        out: &mut BTreeSet<Vec<Partition>>,
    ) {
        if left == 0 {
            if lr_invariants(cur, n) > 0 {
                let mut key = cur.clone();
                key.sort();
                out.insert(key);
            }
            return;
        }
        for i in start..all.len() {
            if all[i].size() <= left {
                cur.push(all[i].clone());
                rec(all, i, left - all[i].size(), cur, n, out);
                cur.pop();
            }
        }
    }
    rec(&all, 0, total, &mut Vec::new(), n, &mut out);
    out
}

// ---- properties -----------------------------------------------------------

/// Swapping two functions negates the Wronskian, adding a multiple of one to
/// another leaves it alone, and scaling one scales it.
pub fn wronskian_alternation(seed: u64) -> Check {
    let mut r = rng(seed);
    let n = r.gen_range(2..=4);
    let fs: Vec<Poly> = (0..n).map(|_| random_poly(&mut r, 5)).collect();
    let w = wronskian(&fs);
    let (i, j) = (r.gen_range(0..n), r.gen_range(0..n));
    let mut swapped = fs.clone();
    swapped.swap(i, j);
    let expect = if i == j { w.clone() } else { -w.clone() };
    ensure(wronskian(&swapped) == expect, || format!("swap {i},{j} of {fs:?}"))?;
    if i != j {
        let c = small_rat(&mut r, 3);
        let mut sheared = fs.clone();
        sheared[i] = &sheared[i] + &fs[j].scale(&c);
        ensure(wronskian(&sheared) == w, || format!("shear of {fs:?}"))?;
    }
    let c = small_rat(&mut r, 3);
    let mut scaled = fs.clone();
    scaled[i] = scaled[i].scale(&c);
    ensure(wronskian(&scaled) == w.scale(&c), || format!("scaling of {fs:?}"))
}

fn random_ratfunc(rng: &mut impl Rng) -> RatFunc {
    let count = rng.gen_range(0..=2);
    let den = linear_product(rng, count);
    RatFunc::new(random_poly(rng, 2), den)
}

fn random_operator(rng: &mut impl Rng) -> DiffOp {
    if rng.gen_bool(0.5) {
        let order = rng.gen_range(1..=2);
        DiffOp::new((0..order).map(|_| random_ratfunc(rng)).collect())
    } else {
        loop {
            let n = rng.gen_range(1..=2);
            let fs: Vec<Poly> = (0..n).map(|_| random_poly(rng, 3)).collect();
            if let Ok(op) = DiffOp::from_kernel(&fs) {
                return op;
            }
        }
    }
}

/// `D** = D` and `(A B)* = B* A*`.
pub fn conjugate_involution(seed: u64) -> Check {
    let mut r = rng(seed);
    let a = random_operator(&mut r);
    let b = random_operator(&mut r);
    ensure(a.formal_conjugate().formal_conjugate() == a, || format!("D** != D for {a}"))?;
    let lhs = a.compose(&b).formal_conjugate();
    let rhs = b.formal_conjugate().compose(&a.formal_conjugate());
    ensure(lhs == rhs, || format!("(AB)* != B*A* for A = {a}, B = {b}"))
}

fn random_grassmannian_point(seed: u64) -> PolySpace {
    let mut r = rng(seed);
    let n = r.gen_range(1..=3);
    let d = r.gen_range(n..=n + 3).max(2);
    random_space(&mut r, n.min(d), d)
}

/// `X†` lies in the stratum with the dual data `(Λ̃, d̃)` at the same points.
pub fn dual_exponent_law(seed: u64) -> Check {
    let x = random_grassmannian_point(seed);
    let data = ok(derive_stratum_data(&x), "derive")?;
    let dual = ok(dual_space(&x, &data), "dual")?;
    let (_, d_tilde) = ok(dual_tilde(&data.partitions(), x.n(), x.d()), "dual_tilde")?;
    ensure(dual.d() as i64 == d_tilde, || format!("{x}: dual degree {} vs {d_tilde}", dual.d()))?;
    let tilde = ok(
        EvaluatedStratumData::new(x.n(), data.entries().iter().map(|(z, l)| (z.clone(), l.tilde())).collect()),
        "tilde data",
    )?;
    ensure(stratum_membership(&dual, &tilde), || format!("{x}: X† = {dual} not in the dual stratum"))
}

/// `D_{X†} = T · D_X^* · T^{−1}`.
pub fn dual_operator_identity(seed: u64) -> Check {
    let x = random_grassmannian_point(seed);
    let data = ok(derive_stratum_data(&x), "derive")?;
    ensure(ok(dual_operator_identity_check(&x, &data), "identity")?, || format!("fails for {x}"))
}

/// The factored form of `D_X` equals the operator built from the kernel.
pub fn factorization_matches_kernel(seed: u64) -> Check {
    let x = random_grassmannian_point(seed);
    let data = ok(derive_stratum_data(&x), "derive")?;
    let t = associated_t(&data);
    let y = ok(y_from_basis(x.basis(), &t), "y")?;
    let factored = ok(build_dx_factorized(&y, &t), "factorized")?;
    ensure(factored == ok(DiffOp::from_kernel(x.basis()), "kernel")?, || format!("fails for {x}"))
}

/// Every plane is self-dual.
pub fn planes_self_dual(seed: u64) -> Check {
    let mut r = rng(seed);
    let d = r.gen_range(2..=6);
    let x = random_plane(&mut r, d);
    let data = ok(derive_stratum_data(&x), "derive")?;
    let status = ok(selfdual_check(&x, &data), "selfdual")?;
    ensure(status != SelfDuality::NotSelfDual, || format!("{x} is not self-dual"))
}

/// `X ↦ X²` lands in the pure self-dual spaces when `X` has no base
/// points. A base-point factor `g` of `X` makes `X²` self-dual with factor `g²`.
pub fn squares_pure_self_dual(seed: u64) -> Check {
    let mut r = rng(seed);
    let d = r.gen_range(2..=5);
    let x = random_plane(&mut r, d);
    let sq = ok(squaring_map(&x), "square")?;
    let data = ok(derive_stratum_data(&sq), "derive")?;
    let status = ok(selfdual_check(&sq, &data), "selfdual")?;
    let g = base_points(&x).gcd;
    let expect = if g.is_one() { SelfDuality::PureSelfDual } else { SelfDuality::SelfDual(g.pow(2)) };
    ensure(status == expect, || format!("{sq} (square of {x}) gives {status:?}, expected {expect:?}"))
}

/// `μ_{A,k}` is N-symmetric, is `μ_{A,0} + (k, …, k)`, and has the size
/// given by the root-length weighted sum of the labels.
pub fn assoc_laws(seed: u64) -> Check {
    let mut r = rng(seed);
    let n = r.gen_range(2..=9);
    let (t, rank) = bc_rank(n).unwrap();
    let mu = random_weight(&mut r, t, rank, 3);
    let k = r.gen_range(0..=3);
    let p = ok(assoc_partition(&mu, k, n), "assoc")?;
    ensure(p.is_n_symmetric(), || format!("{p} is not {n}-symmetric"))?;
    ensure(p.part(n) == k, || format!("{p} should end in {k}"))?;
    ensure(p == assoc_partition(&mu, 0, n).unwrap().add_constant(k), || format!("shift law fails for {mu}"))?;
    let c = mu.coords();
    let expect: usize = (1..=rank)
        .map(|i| {
            let coef = if n % 2 == 1 { n } else if i < rank { 2 * rank } else { rank };
            coef * c[i - 1]
        })
        .sum::<usize>()
        + n * k;
    ensure(p.size() == expect, || format!("|{p}| = {} but expected {expect}", p.size()))
}

/// Racah–Speiser on `sl_N` agrees with Littlewood–Richardson tableaux.
pub fn racah_speiser_matches_lr(seed: u64) -> Check {
    let mut r = rng(seed);
    let n = r.gen_range(1..=4);
    let lambda = random_partition(&mut r, n, 3);
    let mu = random_partition(&mut r, n, 3);
    let rs: BTreeMap<Partition, u64> = tensor_product_gl(&lambda, &mu);
    let lr = lr_product(&lambda, &mu);
    ensure(rs == lr, || format!("{lambda} ⊗ {mu}: RS {rs:?} vs LR {lr:?}"))
}

/// `Σ m_ν dim V_ν = dim V_λ · dim V_μ`.
pub fn dimension_conservation(seed: u64) -> Check {
    let mut r = rng(seed);
    let t = [LieType::A, LieType::B, LieType::C][r.gen_range(0..3)];
    let rank = r.gen_range(1..=3);
    let rs = RootSystem::new(t, rank).unwrap();
    let bound = if rank == 3 { 1 } else { 2 };
    let lambda = random_weight(&mut r, t, rank, bound).to_weight();
    let mu = random_weight(&mut r, t, rank, bound).to_weight();
    let dec = tensor_decompose(&rs, &lambda, &mu);
    let total: u64 = dec.iter().map(|(nu, m)| m * rs.weyl_dim(nu)).sum();
    let expect = rs.weyl_dim(&lambda) * rs.weyl_dim(&mu);
    ensure(total == expect, || format!("{t}{rank} {lambda:?} ⊗ {mu:?}: {total} != {expect}"))
}

fn random_bc_sequence(r: &mut impl Rng) -> (usize, LieType, usize, Vec<DominantWeight>) {
    let n = r.gen_range(3..=6);
    let (t, rank) = bc_rank(n).unwrap();
    let len = r.gen_range(2..=4);
    let ws = (0..len).map(|_| random_weight(r, t, rank, if len > 3 { 1 } else { 2 })).collect();
    (n, t, rank, ws)
}

/// `dim (V_Λ)^{g_N} > 0` implies `dim (V_{Λ_{A,k}})^{sl_N} > 0`.
pub fn bc_positivity_implies_a(seed: u64) -> Check {
    let mut r = rng(seed);
    let (n, t, rank, ws) = random_bc_sequence(&mut r);
    let rs = RootSystem::new(t, rank).unwrap();
    if invariant_dim_BC(&rs, &ws) == 0 {
        return Ok(());
    }
    let lifts: Vec<Partition> = ws.iter().map(|w| assoc_partition(w, r.gen_range(0..=2), n).unwrap()).collect();
    ensure(invariant_dim_A(&lifts, n) > 0, || format!("{ws:?} has invariants but the lifts {lifts:?} do not"))
}

/// For `N = 2r`, invariants force `Σ ⟨λ^{(s)}, α̌_r⟩` to be even.
pub fn parity_law(seed: u64) -> Check {
    let mut r = rng(seed);
    let rank = r.gen_range(1..=3);
    let rs = RootSystem::new(LieType::B, rank).unwrap();
    let len = r.gen_range(2..=4);
    let ws: Vec<DominantWeight> =
        (0..len).map(|_| random_weight(&mut r, LieType::B, rank, if len > 3 || rank == 3 { 1 } else { 2 })).collect();
    if invariant_dim_BC(&rs, &ws) == 0 {
        return Ok(());
    }
    let spin: usize = ws.iter().map(|w| w.coords()[rank - 1]).sum();
    ensure(spin.is_multiple_of(2), || format!("{ws:?} has invariants with odd spin count {spin}"))
}

pub const PROPERTIES: &[(&str, fn(u64) -> Check)] = &[
    ("Wronskian alternation", wronskian_alternation),
    ("formal conjugate involution and reversal", conjugate_involution),
    ("dual-space exponent law", dual_exponent_law),
    ("dual operator identity", dual_operator_identity),
    ("factorized D_X equals kernel operator", factorization_matches_kernel),
    ("planes are self-dual", planes_self_dual),
    ("squares are pure self-dual", squares_pure_self_dual),
    ("assoc_partition symmetry and size", assoc_laws),
    ("Racah-Speiser agrees with LR", racah_speiser_matches_lr),
    ("dimension conservation", dimension_conservation),
    ("BC positivity implies A positivity", bc_positivity_implies_a),
    ("parity law for even N", parity_law),
];

/// For pure self-dual `X`, conjugating `D_X` by `(T_1⋯T_N)^{1/2}` gives a
/// formally self-adjoint operator.
pub fn half_conjugate_self_adjoint(seed: u64) -> Check {
    let mut r = rng(seed);
    let d = r.gen_range(2..=4);
    let x = random_plane(&mut r, d);
    if !base_points(&x).gcd.is_one() {
        return Ok(());
    }
    let sq = ok(squaring_map(&x), "square")?;
    let data = ok(derive_stratum_data(&sq), "derive")?;
    let l = ok(half_conjugated_operator(&sq, &data), "half conjugation")?;
    ensure(l.formal_conjugate() == l, || format!("L* != L for {sq}"))
}
