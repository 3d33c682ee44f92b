//! Multisets of weighted items with a prescribed total weight.

/// All non-increasing index sequences `i_1 ≤ i_2 ≤ …` into `sizes` whose
/// sizes add up to `total`, optionally of a fixed length. Items are used in
/// the given order, so canonically ordered input gives canonically ordered
/// output.
pub(crate) fn multisets(sizes: &[usize], total: usize, length: Option<usize>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let min = sizes.iter().copied().filter(|&s| s > 0).min().unwrap_or(1);
    let mut cur = Vec::new();
    rec(sizes, 0, total, length, min, &mut cur, &mut out);
    out
}

fn rec(
    sizes: &[usize],
    start: usize,
    left: usize,
    length: Option<usize>,
    min: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if left == 0 {
        if length.is_none_or(|l| l == cur.len()) {
            out.push(cur.clone());
        }
        return;
    }
    if let Some(l) = length {
        let slots = l.saturating_sub(cur.len());
        if slots == 0 || left < slots * min {
            return;
        }
    }
    for i in start..sizes.len() {
        let s = sizes[i];
        if s == 0 || s > left {
            continue;
        }
        cur.push(i);
        rec(sizes, i, left - s, length, min, cur, out);
        cur.pop();
    }
}
