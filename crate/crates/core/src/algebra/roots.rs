//! Rational roots of rational polynomials.
//!
//! The square-free part is rescaled to a monic integer polynomial `g`, whose
//! rational roots are integers bounded by the Cauchy bound. Simple roots of
//! `g` modulo a small prime not dividing the discriminant are lifted with
//! Newton–Hensel iteration past twice that bound and then checked exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;
use super::rat::Rat;

/// Distinct rational roots of `p` with their multiplicities, ascending.
/// The zero polynomial is reported as having no roots.
pub fn rational_roots(p: &Poly) -> Vec<(Rat, usize)> {
    if p.is_constant() {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut sf = p.square_free_part();
    let zero = Rat::zero();
    if sf.coeff(0).is_zero() {
        roots.push(zero.clone());
        sf = sf.exact_div(&Poly::x()).expect("x divides");
    }
    roots.extend(nonzero_roots_of_square_free(&sf));
    let mut out: Vec<(Rat, usize)> = roots
        .into_iter()
        .map(|r| {
            let m = p.order_at(&r).unwrap_or(0);
            (r, m)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Product of `(x - r)^m` over the rational roots, and the monic cofactor.
pub fn split_rational_part(p: &Poly) -> (Vec<(Rat, usize)>, Poly) {
    let roots = rational_roots(p);
    let mut rest = p.monic();
    for (r, m) in &roots {
        let f = Poly::linear(r).pow(*m);
        rest = rest.exact_div(&f).expect("root factor divides");
    }
    (roots, rest)
}

fn nonzero_roots_of_square_free(f: &Poly) -> Vec<Rat> {
    let n = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(n) => n,
    };
    let a = f.primitive_integer_coeffs();
    if n == 1 {
        return vec![Rat::new(-a[0].clone(), a[1].clone())];
    }
    let lead = a[n].clone();
    // g(y) = lead^{n-1} f(y / lead), monic with integer coefficients.
    let mut g = vec![BigInt::zero(); n + 1];
    let mut scale = BigInt::one();
    for i in (0..n).rev() {
        g[i] = &a[i] * &scale;
        scale *= &lead;
    }
    g[n] = BigInt::one();
    let bound = g[..n].iter().map(|c| c.abs()).max().unwrap() + BigInt::one();
    let limit = &bound * 2;

    let p = good_prime(&g);
    let pb = BigInt::from(p);
    let mut found = Vec::new();
    for r0 in 0..p {
        if eval_mod(&g, &BigInt::from(r0), &pb).is_zero() {
            let mut r = BigInt::from(r0);
            let mut m = pb.clone();
            while m <= limit {
                m = &m * &m;
                let num = eval_mod(&g, &r, &m);
                let den = eval_mod(&derivative(&g), &r, &m);
                let inv = mod_inverse(&den, &m).expect("simple root mod p");
                r = (&r - num * inv).mod_floor(&m);
            }
            let half = &m / 2;
            let y = if r > half { r - &m } else { r };
            if eval(&g, &y).is_zero() {
                found.push(Rat::new(y, lead.clone()));
            }
        }
    }
    found
}

fn derivative(g: &[BigInt]) -> Vec<BigInt> {
    g.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

fn eval(g: &[BigInt], y: &BigInt) -> BigInt {
    g.iter().rev().fold(BigInt::zero(), |acc, c| acc * y + c)
}

fn eval_mod(g: &[BigInt], y: &BigInt, m: &BigInt) -> BigInt {
    g.iter().rev().fold(BigInt::zero(), |acc, c| (acc * y + c).mod_floor(m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Smallest prime `p > deg g` for which `g mod p` stays square-free.
fn good_prime(g: &[BigInt]) -> u64 {
    let n = g.len() - 1;
    let mut p = (n as u64 + 1).max(3);
    loop {
        if is_prime(p) && square_free_mod(g, p) {
            return p;
        }
        p += 1;
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn square_free_mod(g: &[BigInt], p: u64) -> bool {
    let pb = BigInt::from(p);
    let red = |c: &BigInt| c.mod_floor(&pb).to_u64().unwrap();
    let gp: Vec<u64> = g.iter().map(red).collect();
    let dp: Vec<u64> = derivative(g).iter().map(red).collect();
    let gcd = gcd_mod(trim(gp), trim(dp), p);
    gcd.len() == 1
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let c = a.last().unwrap() * inv % p;
            let shift = a.len() - b.len();
            for (j, bc) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - c * bc % p) % p;
            }
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}
