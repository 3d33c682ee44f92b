use std::collections::BTreeMap;

use crate::weights::Partition;

/// `c^ν_{λμ}`, counted as Littlewood–Richardson tableaux of shape `ν/λ` and
/// content `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() {
        return 0;
    }
    let rows = lambda.n().max(mu.n()).max(nu.n());
    let pad = |p: &Partition| {
        let mut v = p.parts().to_vec();
        v.resize(rows, 0);
        v
    };
    let (inner, outer, content) = (pad(lambda), pad(nu), pad(mu));
    if inner.iter().zip(&outer).any(|(a, b)| a > b) {
        return 0;
    }
    // Cells in reading order: top row first, right to left in each row.
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (inner[r]..outer[r]).rev().map(move |c| (r, c)))
        .collect();
    let mut filling = vec![vec![0usize; outer.first().copied().unwrap_or(0)]; rows];
    let mut counts = vec![0usize; rows + 1];
    let mut search = Search { inner: &inner, cells: &cells, content: &content, filling: &mut filling, counts: &mut counts };
    search.count(0)
}

struct Search<'a> {
    inner: &'a [usize],
    cells: &'a [(usize, usize)],
    content: &'a [usize],
    filling: &'a mut Vec<Vec<usize>>,
    counts: &'a mut Vec<usize>,
}

impl Search<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        let mut total = 0;
        // Entries are 1-based letters.
        let right = self.filling[r].get(c + 1).copied().filter(|&v| v > 0);
        let above = if r > 0 && c >= self.inner[r - 1] { Some(self.filling[r - 1][c]) } else { None };
        for v in 1..=self.content.len() {
            if right.is_some_and(|x| v > x) {
                break;
            }
            if above.is_some_and(|x| v <= x) {
                continue;
            }
            if self.counts[v] >= self.content[v - 1] {
                continue;
            }
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.filling[r][c] = v;
            self.counts[v] += 1;
            total += self.count(idx + 1);
            self.counts[v] -= 1;
            self.filling[r][c] = 0;
        }
        total
    }
}

/// `V_λ ⊗ V_μ` for `gl_N` via Littlewood–Richardson coefficients, keeping
/// only partitions with at most `N` parts.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let n = lambda.n();
    let total = lambda.size() + mu.size();
    let mut out = BTreeMap::new();
    for nu in partitions_of(total, n, lambda.first() + mu.first()) {
        if !lambda.is_contained_in(&nu) || !mu.is_contained_in(&nu) {
            continue;
        }
        let c = lr_coefficient(lambda, mu, &nu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// Partitions of `total` with at most `n` parts, each part at most `max`.
fn partitions_of(total: usize, n: usize, max: usize) -> Vec<Partition> {
    fn rec(left: usize, slots: usize, max: usize, cur: &mut Vec<usize>, n: usize, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(cur, n).unwrap());
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, slots - 1, p, cur, n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, n, max, &mut Vec::new(), n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize], n: usize) -> Partition {
        Partition::new(parts, n).unwrap()
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(lr_coefficient(&p(&[1], 2), &p(&[1, 1], 2), &p(&[2, 1], 2)), 1);
        assert_eq!(lr_coefficient(&p(&[1], 2), &p(&[1], 2), &p(&[1, 1], 2)), 1);
        assert_eq!(lr_coefficient(&p(&[1], 2), &p(&[1], 2), &p(&[2], 2)), 1);
    }

    #[test]
    fn zero_factor() {
        let lam = p(&[2, 1, 0], 3);
        assert_eq!(lr_coefficient(&lam, &Partition::zero(3), &lam), 1);
        assert_eq!(lr_coefficient(&lam, &Partition::zero(3), &p(&[3], 3)), 0);
    }

    #[test]
    fn classic_coefficient_two() {
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        assert_eq!(lr_coefficient(&p(&[2, 1], 3), &p(&[2, 1], 3), &p(&[3, 2, 1], 3)), 2);
    }

    #[test]
    fn product_truncates_to_n_rows() {
        let got = lr_product(&p(&[1, 1], 2), &p(&[1], 2));
        assert_eq!(got, BTreeMap::from([(p(&[2, 1], 2), 1)]));
    }
}
