//! Exact JSON and DOT serialization for the command-line tool.
//!
//! Rationals are always strings (`"3"`, `"-1/2"`), polynomials are
//! coefficient lists from low to high degree.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::rat::{format_rat, parse_rat};
use crate::algebra::{DiffOp, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::spaces::{EvaluatedStratumData, Point, PolySpace};
use crate::strata::PosetDag;
use crate::weights::{LieType, Partition};

/// The zero polynomial is written `["0"]`.
pub fn poly_to_strings(p: &Poly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(format_rat).collect()
}

pub fn poly_from_strings(coeffs: &[String]) -> Result<Poly> {
    Ok(Poly::new(coeffs.iter().map(|c| parse_rat(c)).collect::<Result<_>>()?))
}

/// A space of polynomials on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFile {
    #[serde(rename = "N")]
    pub n: usize,
    pub d: usize,
    pub basis: Vec<Vec<String>>,
}

impl SpaceFile {
    /// Writes the canonical basis.
    pub fn from_space(x: &PolySpace) -> Self {
        SpaceFile { n: x.n(), d: x.d(), basis: x.basis().iter().map(poly_to_strings).collect() }
    }

    pub fn to_space(&self) -> Result<PolySpace> {
        if self.basis.len() != self.n {
            return Err(Error::InvalidArgument(format!("N = {} but the basis has {} entries", self.n, self.basis.len())));
        }
        let basis = self.basis.iter().map(|c| poly_from_strings(c)).collect::<Result<_>>()?;
        PolySpace::new(basis, self.d)
    }

    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("bad space file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("space files always serialize")
    }
}

/// A rational function as `{num, den}` coefficient lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl RatFuncJson {
    pub fn from_ratfunc(f: &RatFunc) -> Self {
        RatFuncJson { num: poly_to_strings(f.num()), den: poly_to_strings(f.den()) }
    }

    pub fn to_ratfunc(&self) -> Result<RatFunc> {
        let den = poly_from_strings(&self.den)?;
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(RatFunc::new(poly_from_strings(&self.num)?, den))
    }
}

/// `∂^N + Σ h_i ∂^{N−i}` as its order and `h_1, …, h_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub order: usize,
    pub coeffs: Vec<RatFuncJson>,
}

impl OperatorJson {
    pub fn from_op(op: &DiffOp) -> Self {
        OperatorJson { order: op.order(), coeffs: op.coeffs().iter().map(RatFuncJson::from_ratfunc).collect() }
    }
}

/// Input of `space miura`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiuraFile {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub v: Vec<RatFuncJson>,
}

impl MiuraFile {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("bad Miura file: {e}")))
    }

    pub fn lie_type(&self) -> Result<LieType> {
        self.lie_type.parse()
    }

    pub fn v(&self) -> Result<Vec<RatFunc>> {
        self.v.iter().map(RatFuncJson::to_ratfunc).collect()
    }
}

/// Parses `"0=2,1,0;inf=1,0,0"` into stratum data for `N` parts.
pub fn parse_stratum_data(s: &str, n: usize) -> Result<EvaluatedStratumData> {
    let mut entries = Vec::new();
    for item in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let (z, lambda) =
            item.split_once('=').ok_or_else(|| Error::Parse(format!("expected point=partition, got {item:?}")))?;
        entries.push((Point::parse(z)?, Partition::parse(lambda, n)?));
    }
    EvaluatedStratumData::new(n, entries)
}

/// Inverse of [`parse_stratum_data`].
pub fn format_stratum_data(data: &EvaluatedStratumData) -> String {
    data.entries().iter().map(|(z, l)| format!("{z}={}", l.to_csv())).collect::<Vec<_>>().join(";")
}

/// Exponents at every point of the data, keyed by the point's text.
pub fn exponent_report(x: &PolySpace, data: &EvaluatedStratumData) -> BTreeMap<String, Vec<usize>> {
    data.entries()
        .iter()
        .map(|(z, _)| {
            let e = match z {
                Point::Finite(a) => x.exponents_at_finite(a),
                Point::Infinity => x.degrees(),
            };
            (z.to_string(), e)
        })
        .collect()
}

pub fn poset_to_json(dag: &PosetDag) -> String {
    serde_json::to_string_pretty(dag).expect("posets always serialize")
}

pub fn poset_from_json(json: &str) -> Result<PosetDag> {
    serde_json::from_str(json).map_err(|e| Error::Parse(format!("bad poset file: {e}")))
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz source with one rank per dimension, largest strata on top.
/// Labels with empty strata are drawn dashed, and so are edges touching them.
pub fn poset_to_dot(dag: &PosetDag) -> String {
    let name = match dag.family {
        crate::strata::Family::A => "Gr",
        crate::strata::Family::BC => "sGr",
    };
    let mut out = String::new();
    writeln!(out, "digraph \"{name}({},{})\" {{", dag.big_n, dag.d).unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for (i, node) in dag.nodes.iter().enumerate() {
        let style = if node.dimension.is_some() { "" } else { ", style=dashed, shape=box" };
        writeln!(out, "  n{i} [label=\"{}\"{style}];", dot_escape(&node.label)).unwrap();
    }
    let mut ranks: BTreeMap<std::cmp::Reverse<usize>, Vec<usize>> = BTreeMap::new();
    for (i, node) in dag.nodes.iter().enumerate() {
        ranks.entry(std::cmp::Reverse(node.n)).or_default().push(i);
    }
    for members in ranks.values() {
        let ids: Vec<String> = members.iter().map(|i| format!("n{i};")).collect();
        writeln!(out, "  {{ rank=same; {} }}", ids.join(" ")).unwrap();
    }
    for &(a, b) in &dag.edges {
        let style = if dag.is_solid((a, b)) { "" } else { " [style=dashed]" };
        writeln!(out, "  n{a} -> n{b}{style};").unwrap();
    }
    out.push_str("}\n");
    out
}
