//! The `eccx` command line.

mod operand;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{
    equienergetic_pair_12t, equienergetic_pair_6t1, integral_family_scan, subdivision_join_family,
    ConstructionReport, IntegralFamily, JoinFamily, ScanRow,
};
use crate::error::Error;
use crate::graph::Graph;
use crate::linalg::{
    self, group, is_integral, max_deviation, Spectrum, DEFAULT_COMPARE_TOL, DEFAULT_GROUP_TOL,
    DEFAULT_INTEGRAL_TOL,
};
use crate::metrics;
use crate::theorems::{self, Theorem};

pub use operand::{parse_operand, read_graphs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_FAIL: i32 = 4;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "ECCX_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "eccx",
    version,
    about = "Eccentricity matrices and their spectra"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format; CSV covers spectra and scan tables.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Comparison tolerance for predicted against computed spectra.
    #[arg(long, default_value_t = DEFAULT_COMPARE_TOL, value_parser = positive, global = true)]
    pub tol: f64,

    /// Grouping tolerance for eigenvalue multiplicities.
    #[arg(long, default_value_t = DEFAULT_GROUP_TOL, value_parser = positive, global = true)]
    pub group_tol: f64,

    /// Distance to the nearest integer accepted as integral.
    #[arg(long, default_value_t = DEFAULT_INTEGRAL_TOL, value_parser = positive, global = true)]
    pub int_tol: f64,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Eccentricities, ε-matrix, ε-spectrum and derived invariants.
    Analyze {
        /// Operand spec such as `C5`, `K3,3`, `L2(prism)`, `g6:D?{` or `@file`.
        spec: Option<String>,
        /// File of graph6 lines or JSON edge lists (`-` for stdin).
        #[arg(long)]
        input: Option<String>,
    },
    /// Compare a closed-form ε-spectrum with the computed one.
    Verify {
        /// One of sv-join, se-join, join-k1, self-join, join-union,
        /// sv-join-union, se-join-union.
        theorem: String,
        operands: Vec<String>,
        /// File with one whitespace-separated operand tuple per line.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Build an equienergetic family.
    Construct {
        /// pair12t, pair6t1, pair-sv, pair-se, triplet-sv or triplet-se.
        family: String,
        t: usize,
        /// Base graph for the subdivision-join families.
        #[arg(long, default_value = "K3")]
        base: String,
    },
    /// Scan an ε-integral family.
    Scan {
        /// k3-svjoin-kn, k11-sejoin-kn or join-union-complete.
        family: String,
        nmax: usize,
        #[arg(long, default_value_t = 2)]
        nmin: usize,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

/// Failure carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Hypothesis(_) => EXIT_HYPOTHESIS,
            Error::Contract(_) | Error::Numeric(_) | Error::Partition { .. } => EXIT_INTERNAL,
            Error::Parameter(_)
            | Error::Parse { .. }
            | Error::Input(_)
            | Error::Structure(_)
            | Error::Disconnected => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Rendered output plus the exit code it implies.
struct Outcome {
    text: String,
    code: i32,
}

fn json<T: Serialize>(value: &T) -> CliResult<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError {
            code: EXIT_INTERNAL,
            message: e.to_string(),
        })
}

fn spectrum_csv(rows: &mut String, key: &str, s: &Spectrum) {
    for &(value, multiplicity) in s.pairs() {
        rows.push_str(&format!(
            "{key},{},{multiplicity}\n",
            linalg::round12(value)
        ));
    }
}

fn regroup(s: &Spectrum, tol: f64) -> Spectrum {
    group(&s.values(), tol)
}

fn name_of(g: &Graph) -> String {
    g.label().map_or_else(|| g.to_graph6(), str::to_string)
}

#[derive(Serialize)]
struct Analysis {
    graph: String,
    graph6: String,
    order: usize,
    size: usize,
    eccentricities: Vec<usize>,
    radius: usize,
    diameter: usize,
    self_centered: bool,
    eps_matrix: Vec<Vec<i64>>,
    spectrum: Spectrum,
    #[serde(serialize_with = "crate::linalg::rounded::scalar")]
    energy: f64,
    wiener: i64,
    irreducible: bool,
    epsilon_regular: bool,
    integral: bool,
    radius_bound: metrics::RadiusBound,
}

fn analyze_one(g: &Graph, opts: &GlobalOpts) -> CliResult<Analysis> {
    let p = metrics::profile(g)?;
    let values = linalg::sym_eigenvalues(&p.eps_real())?;
    let spectrum = group(&values, opts.group_tol);
    let bound = metrics::radius_bound_from(&p)?;
    let first = p.eps_matrix.row_sum(0);
    Ok(Analysis {
        graph: name_of(g),
        graph6: g.to_graph6(),
        order: g.order(),
        size: g.size(),
        self_centered: p.radius == p.diameter,
        radius: p.radius,
        diameter: p.diameter,
        eps_matrix: p.eps_matrix.rows().map(<[i64]>::to_vec).collect(),
        energy: linalg::energy(&spectrum),
        integral: is_integral(&spectrum, opts.int_tol),
        spectrum,
        wiener: p.eps_matrix.total() / 2,
        irreducible: p.eccentric_graph.is_connected(),
        epsilon_regular: (0..g.order()).all(|i| p.eps_matrix.row_sum(i) == first),
        radius_bound: bound,
        eccentricities: p.ecc,
    })
}

fn read_input(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::input(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {path}: {e}")))
    }
}

fn cmd_analyze(spec: Option<&str>, input: Option<&str>, opts: &GlobalOpts) -> CliResult<Outcome> {
    let (graphs, many) = match (spec, input) {
        (Some(spec), None) => (vec![parse_operand(spec)?], false),
        (None, Some(path)) => {
            let graphs = read_graphs(&read_input(path)?)?;
            let many = graphs.len() != 1;
            (graphs, many)
        }
        _ => return Err(CliError::input("analyze takes either a spec or --input")),
    };
    let reports = graphs
        .par_iter()
        .map(|g| analyze_one(g, opts))
        .collect::<CliResult<Vec<_>>>()?;
    let text = match opts.format {
        Format::Json if many => json(&reports)?,
        Format::Json => json(&reports[0])?,
        Format::Csv => {
            let mut rows = String::from("graph,value,multiplicity\n");
            for r in &reports {
                spectrum_csv(&mut rows, &r.graph6, &r.spectrum);
            }
            rows
        }
    };
    Ok(Outcome {
        text,
        code: EXIT_OK,
    })
}

#[derive(Serialize)]
struct VerifyJson {
    theorem: Theorem,
    operands: Vec<String>,
    order: usize,
    status: &'static str,
    predicted: Spectrum,
    computed: Spectrum,
    #[serde(serialize_with = "crate::linalg::rounded::option")]
    max_deviation: Option<f64>,
    tol: f64,
    integral: bool,
    #[serde(serialize_with = "crate::linalg::rounded::scalar")]
    energy: f64,
}

#[derive(Serialize)]
struct CorpusEntry {
    operands: Vec<String>,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<VerifyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn verify_one(theorem: Theorem, specs: &[String], opts: &GlobalOpts) -> CliResult<VerifyJson> {
    let graphs = specs
        .iter()
        .map(|s| parse_operand(s))
        .collect::<Result<Vec<_>, _>>()?;
    let report = theorems::verify(theorem, &graphs, opts.tol)?;
    let predicted = regroup(&report.predicted, opts.group_tol);
    let computed = regroup(&report.computed, opts.group_tol);
    let deviation = max_deviation(&predicted, &computed);
    let pass = deviation.is_some_and(|d| d <= opts.tol);
    Ok(VerifyJson {
        theorem,
        operands: report.operands,
        order: report.order,
        status: if pass { "PASS" } else { "FAIL" },
        integral: is_integral(&computed, opts.int_tol),
        energy: report.energy,
        predicted,
        computed,
        max_deviation: deviation,
        tol: opts.tol,
    })
}

fn verify_csv(r: &VerifyJson) -> String {
    let mut rows = String::new();
    spectrum_csv(&mut rows, "predicted", &r.predicted);
    spectrum_csv(&mut rows, "computed", &r.computed);
    rows
}

fn cmd_verify(
    theorem: &str,
    operands: &[String],
    corpus: Option<&PathBuf>,
    opts: &GlobalOpts,
) -> CliResult<Outcome> {
    let theorem: Theorem = theorem.parse()?;
    let Some(path) = corpus else {
        let report = verify_one(theorem, operands, opts)?;
        let code = if report.status == "PASS" {
            EXIT_OK
        } else {
            EXIT_FAIL
        };
        let text = match opts.format {
            Format::Json => json(&report)?,
            Format::Csv => format!("source,value,multiplicity\n{}", verify_csv(&report)),
        };
        return Ok(Outcome { text, code });
    };
    if !operands.is_empty() {
        return Err(CliError::input("give operands or --corpus, not both"));
    }
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let tuples: Vec<Vec<String>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect();
    let entries: Vec<CorpusEntry> = tuples
        .into_par_iter()
        .map(|specs| match verify_one(theorem, &specs, opts) {
            Ok(r) => CorpusEntry {
                operands: specs,
                status: r.status,
                report: Some(r),
                error: None,
            },
            Err(e) => CorpusEntry {
                operands: specs,
                status: if e.code == EXIT_HYPOTHESIS {
                    "HYPOTHESIS"
                } else {
                    "ERROR"
                },
                report: None,
                error: Some(e.message),
            },
        })
        .collect();
    let code = if entries.iter().any(|e| e.status == "FAIL") {
        EXIT_FAIL
    } else if entries.iter().any(|e| e.status == "ERROR") {
        EXIT_INPUT
    } else if entries.iter().any(|e| e.status == "HYPOTHESIS") {
        EXIT_HYPOTHESIS
    } else {
        EXIT_OK
    };
    let text = match opts.format {
        Format::Json => json(&entries)?,
        Format::Csv => {
            let mut rows = String::from("operands,source,value,multiplicity\n");
            for e in &entries {
                if let Some(r) = &e.report {
                    let key = e.operands.join(" ");
                    for line in verify_csv(r).lines() {
                        rows.push_str(&format!("{key},{line}\n"));
                    }
                }
            }
            rows
        }
    };
    Ok(Outcome { text, code })
}

fn construct_report(family: &str, t: usize, base: &str) -> CliResult<ConstructionReport> {
    Ok(match family {
        "pair12t" => equienergetic_pair_12t(t)?,
        "pair6t1" => equienergetic_pair_6t1(t)?,
        other => {
            let variant = match other {
                "pair-sv" => JoinFamily::SvPair,
                "pair-se" => JoinFamily::SePair,
                "triplet-sv" => JoinFamily::SvTriplet,
                "triplet-se" => JoinFamily::SeTriplet,
                _ => other.parse()?,
            };
            subdivision_join_family(&parse_operand(base)?, t, variant)?
        }
    })
}

fn cmd_construct(family: &str, t: usize, base: &str, opts: &GlobalOpts) -> CliResult<Outcome> {
    let report = construct_report(family, t, base)?;
    let energy_ok = report
        .energy_error()
        .is_none_or(|e| e < crate::constructions::EQUIENERGY_TOL);
    let ok = report.equienergetic && report.pairwise_noncospectral() && energy_ok;
    let text = match opts.format {
        Format::Json => json(&report)?,
        Format::Csv => {
            let mut rows = String::from("graph,value,multiplicity\n");
            for (label, s) in report.labels.iter().zip(&report.spectra) {
                spectrum_csv(&mut rows, label, s);
            }
            rows
        }
    };
    Ok(Outcome {
        text,
        code: if ok { EXIT_OK } else { EXIT_FAIL },
    })
}

fn cmd_scan(family: &str, nmin: usize, nmax: usize, opts: &GlobalOpts) -> CliResult<Outcome> {
    let family: IntegralFamily = family.parse()?;
    if nmin > nmax {
        return Err(CliError::input(format!("empty range {nmin}..={nmax}")));
    }
    let rows: Vec<ScanRow> = integral_family_scan(family, nmin..=nmax)?;
    let code = if rows.iter().all(|r| r.agrees) {
        EXIT_OK
    } else {
        EXIT_FAIL
    };
    let text = match opts.format {
        Format::Json => json(&rows)?,
        Format::Csv => {
            let mut out =
                String::from("params,order,numeric_integral,predicate,certificate,agrees\n");
            for r in &rows {
                let join = |v: &[String]| v.join(" ");
                let params: Vec<String> = r.params.iter().map(usize::to_string).collect();
                let cert: Vec<String> =
                    r.certificate.iter().flatten().map(i64::to_string).collect();
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    join(&params),
                    r.order,
                    r.numeric_integral,
                    r.predicate,
                    join(&cert),
                    r.agrees
                ));
            }
            out
        }
    };
    Ok(Outcome { text, code })
}

fn dispatch(cli: &Cli) -> CliResult<Outcome> {
    let opts = &cli.global;
    match &cli.command {
        Command::Analyze { spec, input } => cmd_analyze(spec.as_deref(), input.as_deref(), opts),
        Command::Verify {
            theorem,
            operands,
            corpus,
        } => cmd_verify(theorem, operands, corpus.as_ref(), opts),
        Command::Construct { family, t, base } => cmd_construct(family, *t, base, opts),
        Command::Scan { family, nmax, nmin } => cmd_scan(family, *nmin, *nmax, opts),
    }
}

fn thread_pool() -> CliResult<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(value) = std::env::var(THREADS_ENV) {
        let n: usize =
            value.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
                CliError::input(format!("{THREADS_ENV} must be a positive integer"))
            })?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError {
        code: EXIT_INTERNAL,
        message: e.to_string(),
    })
}

fn emit(text: &str, out: Option<&PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError {
                code: EXIT_INTERNAL,
                message: e.to_string(),
            }),
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = thread_pool()
        .and_then(|pool| pool.install(|| dispatch(&cli)))
        .and_then(|o| {
            emit(&o.text, cli.global.out.as_ref())?;
            Ok(o.code)
        });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("eccx: {}", e.message);
            e.code
        }
    }
}
