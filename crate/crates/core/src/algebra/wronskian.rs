//! Wronskians and polynomial determinants.

use super::poly::Poly;

/// Determinant of a square matrix of polynomials by fraction-free
/// (Bareiss) elimination. Every division performed is exact in `Q[x]`.
pub fn determinant(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign_flip = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// `det(d^{i} f_j / dx^{i})` for `i, j = 0..n`, not normalized.
pub fn wronskian(fs: &[Poly]) -> Poly {
    determinant(wronski_matrix(fs, fs.len()))
}

/// Rows are derivative orders `0..rows`, columns are the functions.
pub(crate) fn wronski_matrix(fs: &[Poly], rows: usize) -> Vec<Vec<Poly>> {
    let mut derivs: Vec<Vec<Poly>> = Vec::with_capacity(rows);
    let mut current: Vec<Poly> = fs.to_vec();
    for _ in 0..rows {
        let next = current.iter().map(Poly::derivative).collect();
        derivs.push(std::mem::replace(&mut current, next));
    }
    derivs
}
