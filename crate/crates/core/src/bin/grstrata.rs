use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use grstrata::algebra::{parse_rat, DiffOp, Rat};
use grstrata::io::{
    exponent_report, poly_to_strings, MiuraFile, OperatorJson, SpaceFile, parse_stratum_data, poset_to_dot,
    poset_to_json,
};
use grstrata::rep::{invariant_dim_A, invariant_dim_BC, tensor_decompose};
use grstrata::spaces::{
    derive_stratum_data, dual_space, miura_scalar_operator, reduced_wronskian, selfdual_check, shift_by_roots,
    squaring_map, EvaluatedStratumData, PolySpace, SelfDuality,
};
use grstrata::strata::{build_poset_with_budget, wronski_degree_A, wronski_degree_BC, Family, BUDGET_VAR, DEFAULT_BUDGET};
use grstrata::weights::{assoc_partition, DominantWeight, LieType, Partition, RootSystem};
use grstrata::{Error, Result};

#[derive(Parser)]
#[command(
    name = "grstrata",
    version,
    about = "Stratifications of Grassmannians of polynomial spaces, computed exactly",
    after_help = "Exit codes: 0 success, 2 usage or parse error, 3 mathematical failure.\n\
                  Enumeration is limited to N(d-N) <= budget; set GRSTRATA_BUDGET to override the default of 12."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degeneration poset of Gr(N,d) (family A) or sGr(N,d) (family BC).
    Strata(StrataArgs),
    /// Dimension of the invariants in a tensor product.
    Invdim(InvdimArgs),
    /// Decomposition of a tensor product of two irreducibles.
    Tensor(TensorArgs),
    /// Degree of the (reduced) Wronski map.
    Degree(DegreeArgs),
    /// The N-symmetric partition attached to a B/C weight and a floor k.
    Assoc(AssocArgs),
    /// Operations on a space of polynomials read from a JSON file.
    Space(SpaceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
struct StrataArgs {
    #[arg(long)]
    family: Family,
    #[arg(long = "N")]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Also list labels whose strata are empty, with dashed edges.
    #[arg(long)]
    include_empty: bool,
    /// Largest N(d-N) to enumerate.
    #[arg(long, env = BUDGET_VAR, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Args)]
struct InvdimArgs {
    #[arg(long)]
    family: Family,
    /// Number of parts, for family A.
    #[arg(long = "N")]
    n: Option<usize>,
    /// B or C, for family BC.
    #[arg(long = "type")]
    lie_type: Option<LieType>,
    #[arg(long)]
    rank: Option<usize>,
    /// Partitions or weights separated by ';', e.g. "2,0;1,0;2,0".
    #[arg(long)]
    weights: String,
}

#[derive(Args)]
struct TensorArgs {
    #[arg(long = "type")]
    lie_type: LieType,
    #[arg(long)]
    rank: usize,
    /// Dynkin labels, e.g. "0,1".
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

#[derive(Args)]
struct DegreeArgs {
    #[arg(long)]
    family: Family,
    #[arg(long = "N")]
    n: usize,
    #[arg(long)]
    d: usize,
}

#[derive(Args)]
struct AssocArgs {
    #[arg(long = "type")]
    lie_type: LieType,
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    weight: String,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long = "N")]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceOp {
    Wronskian,
    Exponents,
    Dual,
    Selfdual,
    Square,
    Reduce,
    Dx,
    Miura,
}

#[derive(Args)]
struct SpaceArgs {
    #[arg(value_enum)]
    op: SpaceOp,
    /// A space file, or for `miura` a file {"type": "B"|"C", "v": [{num, den}, ...]}.
    #[arg(long = "in")]
    input: PathBuf,
    /// Expected N; must agree with the file.
    #[arg(long = "N")]
    n: Option<usize>,
    /// Stratum data such as "0=2,1,0;inf=1,0,0". Derived from the Wronskian when omitted.
    #[arg(long)]
    data: Option<String>,
    /// Point for `exponents`; every singular point when omitted.
    #[arg(long)]
    at: Option<String>,
    /// For `reduce`, first multiply by prod (x - z)^k, given as "z:k;z:k".
    #[arg(long)]
    shift: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_mathematical() { 3 } else { 2 })
        }
    }
}

fn run(command: Command) -> Result<String> {
    match command {
        Command::Strata(a) => {
            let dag = build_poset_with_budget(a.n, a.d, a.family, a.include_empty, a.budget)?;
            Ok(match a.format {
                Format::Json => poset_to_json(&dag),
                Format::Dot => poset_to_dot(&dag).trim_end().to_string(),
            })
        }
        Command::Invdim(a) => invdim(a),
        Command::Tensor(a) => {
            let rs = RootSystem::new(a.lie_type, a.rank)?;
            let left = weight(a.lie_type, a.rank, &a.left)?;
            let right = weight(a.lie_type, a.rank, &a.right)?;
            let dec = tensor_decompose(&rs, &left.to_weight(), &right.to_weight());
            let lines: Vec<String> = dec
                .iter()
                .map(|(w, m)| {
                    let csv: Vec<String> = w.iter().map(i64::to_string).collect();
                    format!("{} {m}", csv.join(","))
                })
                .collect();
            Ok(lines.join("\n"))
        }
        Command::Degree(a) => Ok(match a.family {
            Family::A => wronski_degree_A(a.n, a.d)?,
            Family::BC => wronski_degree_BC(a.n, a.d)?,
        }
        .to_string()),
        Command::Assoc(a) => {
            let mu = weight(a.lie_type, a.rank, &a.weight)?;
            Ok(assoc_partition(&mu, a.k, a.n)?.to_csv())
        }
        Command::Space(a) => space(a),
    }
}

fn invdim(a: InvdimArgs) -> Result<String> {
    let items: Vec<&str> = a.weights.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    let dim = match a.family {
        Family::A => {
            let n = a.n.ok_or_else(|| Error::InvalidArgument("family A needs --N".into()))?;
            let labels = items.iter().map(|s| Partition::parse(s, n)).collect::<Result<Vec<_>>>()?;
            invariant_dim_A(&labels, n)
        }
        Family::BC => {
            let (t, r) = match (a.lie_type, a.rank) {
                (Some(t @ (LieType::B | LieType::C)), Some(r)) => (t, r),
                _ => return Err(Error::InvalidArgument("family BC needs --type B|C and --rank".into())),
            };
            let rs = RootSystem::new(t, r)?;
            let labels = items.iter().map(|s| weight(t, r, s)).collect::<Result<Vec<_>>>()?;
            invariant_dim_BC(&rs, &labels)
        }
    };
    Ok(dim.to_string())
}

fn weight(t: LieType, rank: usize, s: &str) -> Result<DominantWeight> {
    let w = DominantWeight::parse(t, s)?;
    if w.rank() != rank {
        return Err(Error::RankMismatch(format!("{w} has {} coordinates, expected {rank}", w.rank())));
    }
    Ok(w)
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn stratum_data(a: &SpaceArgs, x: &PolySpace) -> Result<EvaluatedStratumData> {
    match &a.data {
        Some(s) => parse_stratum_data(s, x.n()),
        None => derive_stratum_data(x),
    }
}

fn operator_json(op: &DiffOp) -> String {
    serde_json::to_string_pretty(&OperatorJson::from_op(op)).expect("operators always serialize")
}

fn space(a: SpaceArgs) -> Result<String> {
    let text = read(&a.input)?;
    if let SpaceOp::Miura = a.op {
        let file = MiuraFile::parse(&text)?;
        return Ok(operator_json(&miura_scalar_operator(file.lie_type()?, &file.v()?)?));
    }
    let x = SpaceFile::parse(&text)?.to_space()?;
    if let Some(n) = a.n {
        if n != x.n() {
            return Err(Error::InvalidArgument(format!("--N {n} but the file has N = {}", x.n())));
        }
    }
    let pretty = |v: serde_json::Value| serde_json::to_string_pretty(&v).expect("json values serialize");
    match a.op {
        SpaceOp::Wronskian => Ok(x.wronskian().to_string()),
        SpaceOp::Exponents => match &a.at {
            Some(z) if z.trim() == "inf" || z.trim() == "∞" => Ok(pretty(json!(x.degrees()))),
            Some(z) => Ok(pretty(json!(x.exponents_at_finite(&parse_rat(z)?)))),
            None => Ok(pretty(json!(exponent_report(&x, &stratum_data(&a, &x)?)))),
        },
        SpaceOp::Dual => Ok(SpaceFile::from_space(&dual_space(&x, &stratum_data(&a, &x)?)?).to_json()),
        SpaceOp::Selfdual => Ok(pretty(match selfdual_check(&x, &stratum_data(&a, &x)?)? {
            SelfDuality::PureSelfDual => json!({"status": "pure"}),
            SelfDuality::SelfDual(g) => json!({"status": "selfdual", "g": poly_to_strings(&g)}),
            SelfDuality::NotSelfDual => json!({"status": "not_selfdual"}),
        })),
        SpaceOp::Square => Ok(SpaceFile::from_space(&squaring_map(&x)?).to_json()),
        SpaceOp::Reduce => {
            let shifts = match &a.shift {
                Some(s) => parse_shifts(s)?,
                None => Vec::new(),
            };
            Ok(reduced_wronskian(&shift_by_roots(&x, &shifts)?)?.to_string())
        }
        SpaceOp::Dx => Ok(operator_json(&DiffOp::from_kernel(x.basis())?)),
        SpaceOp::Miura => unreachable!("handled above"),
    }
}

fn parse_shifts(s: &str) -> Result<Vec<(Rat, usize)>> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|item| {
            let (z, k) = item.split_once(':').ok_or_else(|| Error::Parse(format!("expected z:k, got {item:?}")))?;
            let k = k.trim().parse().map_err(|_| Error::Parse(format!("bad multiplicity in {item:?}")))?;
            Ok((parse_rat(z)?, k))
        })
        .collect()
}
