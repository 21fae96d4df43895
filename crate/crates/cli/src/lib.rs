//! Command dispatch for the `slie` binary.
//!
//! [`run`] returns the exit status and the report text instead of printing,
//! so tests can call it directly. Exit status 0 means success, 1 a failed
//! check or invalid input, 2 a usage error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use slie_core::capability::{capability_verdict, DEFAULT_GRID_BOUND};
use slie_core::catalog::{find, load_catalog, verify_catalog};
use slie_core::exactlin::Scalar;
use slie_core::format::{parse, parse_combination, parse_lenient, print, ParseError};
use slie_core::multiplier::{multiplier_formula, multiplier_homology, multiplier_tags, MultiplierResult};
use slie_core::recognize::recognize;
use slie_core::superalg::{format_vector, GradedIdeal, SuperAlgebra};

pub const GRID_ENV: &str = "SLIE_GRID_BOUND";

#[derive(Parser, Debug)]
#[command(name = "slie", version, about = "Exact computations for nilpotent Lie superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check grading, skew-symmetry and the Jacobi identity
    Validate { file: String },
    /// Dimensions, center, lower central series and family
    Invariants { file: String },
    /// Schur multiplier dimension
    Multiplier {
        file: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Tags)]
        method: MethodArg,
    },
    /// Capability verdict with the deciding rule
    Capability {
        file: String,
        /// Coefficient bound for the witness search
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Quotient by the graded ideal spanned by the given vectors
    Quotient {
        file: String,
        /// Vectors separated by `;`, as coefficient lists or basis-name sums
        #[arg(long)]
        ideal: String,
    },
    /// Direct sum of two algebras
    Dsum { first: String, second: String },
    /// Built-in catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show {
        id: String,
    },
    Verify {
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        grid: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Tags,
    Homology,
    Formula,
    All,
}

/// Outcome of a command: exit status and report text.
pub type Outcome = (i32, String);

fn fail(msg: impl std::fmt::Display) -> Outcome {
    (1, format!("error: {msg}\n"))
}

fn usage(msg: impl std::fmt::Display) -> Outcome {
    (2, format!("error: {msg}\n"))
}

/// Reads a document from a path or a `catalog:<id>` pseudo-path.
fn read_source(src: &str) -> Result<String, Outcome> {
    if let Some(id) = src.strip_prefix("catalog:") {
        return find(id).map(|e| print(&e.algebra)).ok_or_else(|| usage(format!("no catalog entry `{id}`")));
    }
    std::fs::read_to_string(PathBuf::from(src)).map_err(|e| usage(format!("cannot read {src}: {e}")))
}

fn load(src: &str) -> Result<SuperAlgebra, Outcome> {
    let doc = read_source(src)?;
    parse(&doc).map_err(|e: ParseError| fail(format!("{src}: {e}")))
}

fn grid_bound(flag: Option<usize>) -> Result<usize, Outcome> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(GRID_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("{GRID_ENV} must be a non-negative integer"))),
        Err(_) => Ok(DEFAULT_GRID_BOUND),
    }
}

fn dims_line(terms: impl IntoIterator<Item = slie_core::superalg::GradedDim>) -> String {
    terms.into_iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
}

fn vectors_line(a: &SuperAlgebra, vs: &[Vec<Scalar>]) -> String {
    if vs.is_empty() {
        return "0".into();
    }
    vs.iter().map(|v| format_vector(a.basis_names(), v)).collect::<Vec<_>>().join("; ")
}

fn validate(src: &str) -> Result<Outcome, Outcome> {
    let doc = read_source(src)?;
    let a = parse_lenient(&doc).map_err(|e| fail(format!("{src}: {e}")))?;
    let v = a.validate();
    let mut out = String::new();
    writeln!(out, "algebra: {}", a.name()).unwrap();
    writeln!(out, "dim: {}", a.dim()).unwrap();
    writeln!(out, "violations: {}", v.len()).unwrap();
    for x in &v {
        writeln!(out, "violation: {x}").unwrap();
    }
    writeln!(out, "status: {}", if v.is_empty() { "PASS" } else { "FAIL" }).unwrap();
    Ok((if v.is_empty() { 0 } else { 1 }, out))
}

fn invariants(src: &str) -> Result<Outcome, Outcome> {
    let a = load(src)?;
    let series = a.lower_central_series();
    let center = a.center();
    let mut out = String::new();
    writeln!(out, "algebra: {}", a.name()).unwrap();
    writeln!(out, "dim: {}", a.dim()).unwrap();
    writeln!(out, "derived: {}", a.derived().dim()).unwrap();
    writeln!(out, "center: {}", center.dim()).unwrap();
    writeln!(out, "center_basis: {}", vectors_line(&a, &center.basis_vecs())).unwrap();
    writeln!(out, "lower_central_series: {}", dims_line(series.dims())).unwrap();
    match series.class {
        Some(c) => writeln!(out, "class: {c}").unwrap(),
        None => writeln!(out, "class: not nilpotent").unwrap(),
    }
    if series.class.is_some() {
        if let Ok(d) = recognize(&a) {
            writeln!(out, "family: {d}").unwrap();
        }
    }
    Ok((0, out))
}

fn write_result(out: &mut String, r: &MultiplierResult) {
    writeln!(out, "method: {}", r.method).unwrap();
    writeln!(out, "dim: {}", r.dim).unwrap();
    writeln!(out, "dim_total: {}", r.dim.total()).unwrap();
    if r.method == slie_core::multiplier::Method::Tags {
        writeln!(out, "tag_count: {}", r.tag_count).unwrap();
        writeln!(out, "absorbed: {}", r.absorbed).unwrap();
        writeln!(out, "relation_rank: {}", r.relation_rank).unwrap();
        writeln!(out, "free_generators: {}", r.free_generators.join(" ")).unwrap();
    }
}

fn multiplier(src: &str, method: MethodArg) -> Result<Outcome, Outcome> {
    let a = load(src)?;
    let formula = || -> Result<MultiplierResult, String> {
        let d = recognize(&a).map_err(|e| e.to_string())?;
        multiplier_formula(&d).map_err(|e| e.to_string())
    };
    let mut out = String::new();
    writeln!(out, "algebra: {}", a.name()).unwrap();
    match method {
        MethodArg::Tags => write_result(&mut out, &multiplier_tags(&a).map_err(fail)?),
        MethodArg::Homology => write_result(&mut out, &multiplier_homology(&a).map_err(fail)?),
        MethodArg::Formula => write_result(&mut out, &formula().map_err(fail)?),
        MethodArg::All => {
            let tags = multiplier_tags(&a).map_err(fail)?;
            let hom = multiplier_homology(&a).map_err(fail)?;
            let mut dims = vec![tags.dim, hom.dim];
            write_result(&mut out, &tags);
            write_result(&mut out, &hom);
            match formula() {
                Ok(f) => {
                    dims.push(f.dim);
                    write_result(&mut out, &f);
                }
                Err(e) => writeln!(out, "formula: not applicable ({e})").unwrap(),
            }
            let agree = dims.iter().all(|d| *d == tags.dim);
            writeln!(out, "agree: {}", if agree { "yes" } else { "no" }).unwrap();
            writeln!(out, "status: {}", if agree { "PASS" } else { "FAIL" }).unwrap();
            return Ok((if agree { 0 } else { 1 }, out));
        }
    }
    Ok((0, out))
}

fn capability(src: &str, grid: Option<usize>) -> Result<Outcome, Outcome> {
    let a = load(src)?;
    let bound = grid_bound(grid)?;
    let v = capability_verdict(&a, bound).map_err(fail)?;
    let mut out = String::new();
    writeln!(out, "algebra: {}", a.name()).unwrap();
    writeln!(out, "grid: {bound}").unwrap();
    writeln!(out, "status: {}", v.status).unwrap();
    writeln!(out, "rule: {}", v.rule).unwrap();
    match &v.witness {
        Some(t) => {
            writeln!(out, "witness: {}", vectors_line(&a, &t.ideal.basis_vecs())).unwrap();
            writeln!(out, "witness_dim: {}", t.ideal.dim()).unwrap();
            writeln!(out, "dim_m_l: {}", t.dim_m_l.total()).unwrap();
            writeln!(out, "dim_m_quotient: {}", t.dim_m_quotient.total()).unwrap();
            writeln!(out, "dim_n_cap_l2: {}", t.dim_n_cap_l2).unwrap();
        }
        None => writeln!(out, "witness: none").unwrap(),
    }
    writeln!(out, "notes: {}", v.notes).unwrap();
    Ok((0, out))
}

/// Parses `1,0,-1/2` or `[1,0,-1/2]` as coordinates, anything else as a
/// combination of basis names.
fn parse_vector(a: &SuperAlgebra, text: &str) -> Result<Vec<Scalar>, String> {
    let t = text.trim();
    let inner = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(t);
    let looks_list = inner.contains(',') || (a.n() == 1 && inner.parse::<i64>().is_ok());
    if looks_list {
        let entries: Vec<&str> = inner.split(',').map(str::trim).collect();
        if entries.len() != a.n() {
            return Err(format!("vector `{t}` has {} entries, expected {}", entries.len(), a.n()));
        }
        let index = std::collections::HashMap::from([("e", 0usize)]);
        return entries
            .iter()
            .map(|c| {
                parse_combination(&format!("{c} e"), &index, 1, 0)
                    .map(|v| v[0].clone())
                    .map_err(|_| format!("malformed rational `{c}`"))
            })
            .collect();
    }
    let index = a.basis_names().iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    parse_combination(inner, &index, a.n(), 0).map_err(|e| e.kind.to_string())
}

fn quotient(src: &str, ideal: &str) -> Result<Outcome, Outcome> {
    let a = load(src)?;
    let vectors = ideal
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_vector(&a, s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(fail)?;
    let n = GradedIdeal::new(&a, vectors).map_err(fail)?;
    let q = a.quotient(&n).map_err(fail)?;
    Ok((0, print(&q)))
}

fn dsum(first: &str, second: &str) -> Result<Outcome, Outcome> {
    let h = load(first)?;
    let k = load(second)?;
    Ok((0, print(&h.direct_sum(&k))))
}

fn catalog(action: CatalogAction) -> Result<Outcome, Outcome> {
    match action {
        CatalogAction::List => {
            let mut out = String::new();
            for e in load_catalog() {
                write!(
                    out,
                    "{}: dim={} group={} expected_verdict={}",
                    e.id,
                    e.algebra.dim(),
                    e.group,
                    e.expected_verdict
                )
                .unwrap();
                if let Some(t) = e.expected_total() {
                    write!(out, " expected_multiplier={t}").unwrap();
                }
                for f in e.flags {
                    write!(out, " flag={}", f.id()).unwrap();
                }
                if !e.aliases.is_empty() {
                    write!(out, " aliases={}", e.aliases.join(",")).unwrap();
                }
                out.push('\n');
            }
            Ok((0, out))
        }
        CatalogAction::Show { id } => {
            let e = find(&id).ok_or_else(|| usage(format!("no catalog entry `{id}`")))?;
            let mut out = String::new();
            writeln!(out, "# id: {}", e.id).unwrap();
            writeln!(out, "# group: {}", e.group).unwrap();
            writeln!(out, "# expected_verdict: {}", e.expected_verdict).unwrap();
            if let Some(t) = e.expected_total() {
                writeln!(out, "# expected_multiplier: {t}").unwrap();
            }
            writeln!(out, "# provenance: {}", e.provenance).unwrap();
            for f in e.flags {
                writeln!(out, "# flag: {}", f.id()).unwrap();
            }
            out.push_str(&print(&e.algebra));
            Ok((0, out))
        }
        CatalogAction::Verify { id, grid } => {
            let bound = grid_bound(grid)?;
            let mut entries = load_catalog();
            if let Some(id) = id {
                entries.retain(|e| e.matches(&id));
                if entries.is_empty() {
                    return Err(usage(format!("no catalog entry `{id}`")));
                }
            }
            let report = verify_catalog(&entries, bound);
            Ok((if report.passed() { 0 } else { 1 }, report.to_string()))
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let result = match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Invariants { file } => invariants(&file),
        Command::Multiplier { file, method } => multiplier(&file, method),
        Command::Capability { file, grid } => capability(&file, grid),
        Command::Quotient { file, ideal } => quotient(&file, &ideal),
        Command::Dsum { first, second } => dsum(&first, &second),
        Command::Catalog { action } => catalog(action),
    };
    result.unwrap_or_else(|e| e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("slie").chain(args.iter().copied()))
    }

    #[test]
    fn vectors_in_both_notations() {
        let a = find("L24_3_2").unwrap().algebra;
        let v = parse_vector(&a, "0,0,1,0,0").unwrap();
        assert_eq!(v, parse_vector(&a, "x3").unwrap());
        assert_eq!(parse_vector(&a, "[0,0,1/2,0,0]").unwrap(), parse_vector(&a, "1/2 x3").unwrap());
        assert!(parse_vector(&a, "0,1").is_err());
        assert!(parse_vector(&a, "y7").is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["invariants", "/nonexistent/file"]).0, 2);
        assert_eq!(run_args(&["invariants", "catalog:L5_0_0"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(run_args(&["--help"]).0, 0);
    }
}
