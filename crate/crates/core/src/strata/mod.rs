//! Stratum labels, the degeneration order and Wronski-map degrees.

mod degree;
mod label_a;
mod label_bc;
mod multiset;
mod poset;

use std::fmt;

pub use degree::{covering_degree_A, covering_degree_BC, symmetry_coefficient, wronski_degree_A, wronski_degree_BC};
pub use label_a::{enumerate_strata_A, enumerate_strata_A_with_budget, preimage_groups_A, StratumLabelA};
pub use label_bc::{
    bc_element_size, closure_gaps_BC, enumerate_strata_BC, enumerate_strata_BC_with_budget, preimage_groups_BC,
    top_strata_BC, BcPart, SStratumLabel,
};
pub use poset::{build_poset, build_poset_with_budget, closure, PosetDag, PosetNode, StratumLabel};

use crate::error::{Error, Result};

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_VAR: &str = "GRSTRATA_BUDGET";

/// Largest `N(d−N)` enumerated by default.
pub const DEFAULT_BUDGET: usize = 12;

/// The budget in effect: [`BUDGET_VAR`] if set and numeric, else the default.
pub fn budget() -> usize {
    std::env::var(BUDGET_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

/// Gr(N,d) or sGr(N,d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Family {
    A,
    BC,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::BC => "BC",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "BC" | "bc" => Ok(Family::BC),
            other => Err(Error::Parse(format!("unknown family {other:?}, expected A or BC"))),
        }
    }
}

/// Checks `1 ≤ N ≤ d` and `N(d−N) ≤ budget`; returns `N(d−N)`.
fn check_size(n: usize, d: usize, budget: usize) -> Result<usize> {
    if n == 0 || n > d {
        return Err(Error::InvalidArgument(format!("need 1 <= N <= d, got N = {n}, d = {d}")));
    }
    let size = n * (d - n);
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    Ok(size)
}

/// Splits the inside of `((…),(…)_k,…)` into its `(…)` groups, each with
/// an optional `_k` suffix.
fn split_groups(s: &str) -> Result<Vec<(String, Option<usize>)>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("label {s:?} must be wrapped in parentheses")))?;
    let mut out = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
        let close = body.find(')').ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s:?}")))?;
        let group = body[..close].to_string();
        rest = body[close + 1..].trim_start();
        let mut k = None;
        if let Some(after) = rest.strip_prefix('_') {
            let end = after.find(|c: char| !c.is_ascii_digit()).unwrap_or(after.len());
            k = Some(after[..end].parse().map_err(|_| Error::Parse(format!("bad label suffix in {s:?}")))?);
            rest = after[end..].trim_start();
        }
        out.push((group, k));
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    Ok(out)
}
