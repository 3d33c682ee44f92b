//! Enumeration and closure checked against naive searches that share as
//! little code with the library as possible. Invariant dimensions here come
//! from Littlewood–Richardson tableaux, not the Racah–Speiser engine.

mod common;


use std::collections::{BTreeMap, BTreeSet};

use grstrata::rep::lr_product;
use grstrata::strata::{closure, closure_gaps_BC, enumerate_strata_A, enumerate_strata_BC_with_budget, StratumLabelA};
use grstrata::weights::Partition;

use common::{lr_invariants, naive_strata_a};

fn as_sets(labels: &[StratumLabelA]) -> BTreeSet<Vec<Partition>> {
    labels
        .iter()
        .map(|l| {
            let mut v = l.parts().to_vec();
            v.sort();
            v
        })
        .collect()
}

fn small_cases() -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for n in 1..=6 {
        for d in n + 1..=n + 6 {
            if n * (d - n) <= 6 {
                v.push((n, d));
            }
        }
    }
    v
}

#[test]
fn enumeration_matches_brute_force() {
    for (n, d) in small_cases() {
        let got = as_sets(&enumerate_strata_A(n, d).unwrap());
        let expect = naive_strata_a(n, d);
        assert_eq!(got, expect, "Gr({n},{d})");
    }
}

/// `Ξ ≤ Λ` straight from the definition: group the members of `Λ` and pick
/// one LR constituent per group.
fn naive_descendants(label: &StratumLabelA) -> BTreeSet<Vec<Partition>> {
    let n = label.n();
    let parts = label.parts();
    let mut out = BTreeSet::new();
    for blocks in set_partitions(parts.len()) {
        let options: Vec<Vec<Partition>> = blocks
            .iter()
            .map(|b| {
                let mut prod = BTreeMap::from([(Partition::zero(n), 1u64)]);
                for &i in b {
                    let mut next = BTreeMap::new();
                    for p in prod.keys() {
                        for (q, _) in lr_product(p, &parts[i]) {
                            next.insert(q, 1u64);
                        }
                    }
                    prod = next;
                }
                prod.into_keys().collect()
            })
            .collect();
        let mut choice = Vec::new();
        pick(&options, &mut choice, &mut |xs: &[Partition]| {
            if xs.iter().all(|x| !x.is_zero()) && lr_invariants(xs, n) > 0 {
                let mut key = xs.to_vec();
                key.sort();
                out.insert(key);
            }
        });
    }
    out
}

fn pick(options: &[Vec<Partition>], cur: &mut Vec<Partition>, f: &mut impl FnMut(&[Partition])) {
    if cur.len() == options.len() {
        f(cur);
        return;
    }
    for o in &options[cur.len()] {
        cur.push(o.clone());
        pick(options, cur, f);
        cur.pop();
    }
}

fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for mut p in set_partitions(n - 1) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].push(n - 1);
            out.push(q);
        }
        p.push(vec![n - 1]);
        out.push(p);
    }
    out
}

#[test]
fn a_closure_matches_definition() {
    for (n, d) in [(2, 4), (2, 5), (3, 5), (2, 6)] {
        for label in enumerate_strata_A(n, d).unwrap() {
            let reached = as_sets(&closure(&label));
            assert_eq!(reached, naive_descendants(&label), "Gr({n},{d}) below {label}");
        }
    }
}

#[test]
fn bc_closure_has_no_gaps() {
    for (n, d) in [(3, 5), (3, 7), (4, 6), (4, 7), (5, 7), (5, 8)] {
        for label in enumerate_strata_BC_with_budget(n, d, 15).unwrap() {
            assert!(closure_gaps_BC(&label).is_empty(), "sGr({n},{d}) below {label}");
        }
    }
}
