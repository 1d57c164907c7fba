//! Command-line front end: homology tables, verification suites, basis
//! exports, path queries and boundary-matrix dumps.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on
//! invalid arguments or window violations.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Result;
use crate::linalg::check_modulus;
use crate::pcomplex::PComplex;
use crate::specht::h0_basis;
use crate::subsets::boundary_matrix;
use crate::tableaux::{count_paths_formula, enumerate_paths, PathBound};
use crate::verify::{run_suite, SuiteParams, DEFAULT_SEED, SUITE_NAMES};

#[derive(Parser, Debug)]
#[command(name = "pomega", version, about = "Exact slash homology of the k-subset p-complex over GF(p)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the homology dimension table of the subset complex
    Table(TableArgs),
    /// Run named verification suites
    Verify(VerifyArgs),
    /// Export the p-standard quotient basis at one window position
    Basis(BasisArgs),
    /// Enumerate or count bounded lattice paths
    Paths(PathsArgs),
    /// Dump boundary matrices in the exchange format
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Ascii,
    Json,
    Csv,
}

/// Resolved run options shared by the subcommands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub p: u64,
    pub k: Option<usize>,
    pub format: OutputFormat,
    pub seed: u64,
    pub threads: Option<usize>,
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Ground set size
    #[arg(long)]
    pub n: usize,
    /// Field characteristic (prime)
    #[arg(long)]
    pub p: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
    pub format: OutputFormat,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub threads: Option<usize>,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suites to run (comma separated or repeated); default: all
    #[arg(long, value_delimiter = ',')]
    pub suite: Vec<String>,
    /// Largest ground set exercised by size-driven suites
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    /// Primes for the field (repeatable)
    #[arg(long = "p")]
    pub primes: Vec<u64>,
    /// Seed for the randomized suites
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Random instances per randomized suite
    #[arg(long, default_value_t = 200)]
    pub samples: u64,
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BasisArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub p: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PathsArgs {
    /// Number of steps
    #[arg(long)]
    pub n: usize,
    /// Number of up-steps
    #[arg(long)]
    pub k: usize,
    /// Upper bound (y - x < s)
    #[arg(long)]
    pub s: String,
    /// Lower bound (x - y < t); "inf" for unbounded
    #[arg(long)]
    pub t: String,
    /// Print only the count
    #[arg(long)]
    pub count: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
    pub format: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    #[arg(long)]
    pub n: usize,
    /// Degree whose boundary matrix is exported; all degrees if omitted
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Run the parsed command; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Table(args) => cmd_table(&RunConfig {
            n: args.n,
            p: args.p,
            k: None,
            format: args.format,
            seed: DEFAULT_SEED,
            threads: args.threads,
            out: args.out,
        }),
        Command::Verify(args) => return cmd_verify(&args),
        Command::Basis(args) => cmd_basis(&RunConfig {
            n: args.n,
            p: args.p,
            k: Some(args.k),
            format: args.format,
            seed: DEFAULT_SEED,
            threads: None,
            out: args.out,
        }),
        Command::Paths(args) => cmd_paths(&args),
        Command::Export(args) => cmd_export(&RunConfig {
            n: args.n,
            p: args.p,
            k: args.k,
            format: OutputFormat::Json,
            seed: DEFAULT_SEED,
            threads: None,
            out: args.out,
        }),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| crate::error::Error::BadMatrixPayload(format!("cannot write {path:?}: {e}"))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn with_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) if t > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(job),
        _ => job(),
    }
}

/// Render the slash table like the dimension figure: degrees along the
/// horizontal axis, slash index along the vertical, zeros printed.
fn render_ascii_table(report: &crate::pcomplex::HomologyReport) -> String {
    let n = report.n;
    let p = report.p as usize;
    let width = report
        .slash
        .iter()
        .map(|&(_, _, d)| d.to_string().len())
        .max()
        .unwrap_or(1)
        .max(n.to_string().len());
    let mut out = format!("slash homology dimensions, n = {n}, p = {}\n", report.p);
    out.push_str(&format!("{:>3} |", "a\\k"));
    for k in 0..=n {
        out.push_str(&format!(" {k:>width$}"));
    }
    out.push('\n');
    out.push_str(&format!("----+{}\n", "-".repeat((width + 1) * (n + 1))));
    for a in (0..=p - 2).rev() {
        out.push_str(&format!("{a:>3} |"));
        for k in 0..=n {
            out.push_str(&format!(" {:>width$}", report.slash_dim(k, a)));
        }
        out.push('\n');
    }
    out
}

fn render_csv(report: &crate::pcomplex::HomologyReport) -> String {
    let mut out = String::from("kind,k,index,dim\n");
    for &(k, a, d) in &report.slash {
        out.push_str(&format!("slash,{k},{a},{d}\n"));
    }
    for &(k, a, d) in &report.backslash {
        out.push_str(&format!("backslash,{k},{a},{d}\n"));
    }
    for &(k, r, d) in &report.p_homology {
        out.push_str(&format!("p_homology,{k},{r},{d}\n"));
    }
    out
}

pub fn cmd_table(config: &RunConfig) -> Result<()> {
    check_modulus(config.p)?;
    let report = with_pool(config.threads, || {
        PComplex::omega(config.n, config.p).map(|c| c.full_report())
    })?;
    let text = match config.format {
        OutputFormat::Ascii => render_ascii_table(&report),
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => render_csv(&report),
    };
    emit(&config.out, text.trim_end())
}

pub fn cmd_verify(args: &VerifyArgs) -> i32 {
    let params = SuiteParams {
        n_max: args.n_max,
        primes: if args.primes.is_empty() {
            vec![3, 5, 7]
        } else {
            args.primes.clone()
        },
        seed: args.seed,
        samples: args.samples,
    };
    let selected: Vec<String> = if args.suite.is_empty() {
        SUITE_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        args.suite.clone()
    };
    let mut failed = false;
    for name in &selected {
        let outcome = match with_pool(args.threads, || run_suite(name, &params)) {
            Ok(o) => o,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        };
        if outcome.pass {
            println!("PASS {} ({} cases)", outcome.name, outcome.cases);
        } else {
            failed = true;
            println!(
                "FAIL {} ({} cases): {}",
                outcome.name,
                outcome.cases,
                outcome.witness.unwrap_or_default()
            );
        }
    }
    if failed {
        1
    } else {
        0
    }
}

pub fn cmd_basis(config: &RunConfig) -> Result<()> {
    let k = config.k.expect("basis requires k");
    let basis = h0_basis(config.n, k, config.p)?;
    let text = match config.format {
        OutputFormat::Json => basis.to_json(),
        _ => {
            let mut out = format!(
                "p-standard basis of the slash-0 homology, n = {}, k = {k}, p = {} ({} classes)\n",
                config.n,
                config.p,
                basis.tableaux.len()
            );
            for rows in &basis.tableaux {
                let fmt = |row: &[usize]| {
                    row.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                };
                out.push_str(&format!("({}) / ({})\n", fmt(&rows[0]), fmt(&rows[1])));
            }
            out
        }
    };
    emit(&config.out, text.trim_end())
}

pub fn cmd_paths(args: &PathsArgs) -> Result<()> {
    let parse_bound = |text: &str| -> Result<PathBound> {
        if text.eq_ignore_ascii_case("inf") {
            Ok(PathBound::Unbounded)
        } else {
            text.parse::<usize>()
                .map(PathBound::Finite)
                .map_err(|_| crate::error::Error::BadMatrixPayload(format!("bad bound '{text}'")))
        }
    };
    let s = parse_bound(&args.s)?;
    let t = parse_bound(&args.t)?;
    if args.k > args.n {
        return Err(crate::error::Error::DegreeOutOfRange(args.k as isize, args.n));
    }
    let text = if args.count {
        let count = match (s, t) {
            (PathBound::Finite(sf), PathBound::Finite(tf)) => {
                let formula = count_paths_formula(args.n, args.k, sf, tf);
                debug_assert_eq!(
                    formula,
                    enumerate_paths(args.n, args.k, s, t).len() as u64
                );
                formula
            }
            _ => enumerate_paths(args.n, args.k, s, t).len() as u64,
        };
        count.to_string()
    } else {
        let paths = enumerate_paths(args.n, args.k, s, t);
        match args.format {
            OutputFormat::Json => serde_json::to_string(
                &paths.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            )
            .expect("strings serialise"),
            _ => paths
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("\n"),
        }
    };
    emit(&args.out, &text)
}

pub fn cmd_export(config: &RunConfig) -> Result<()> {
    check_modulus(config.p)?;
    let text = match config.k {
        Some(k) => {
            let m = boundary_matrix(config.n, k, config.p)?;
            serde_json::to_string(&m).expect("matrix serialises")
        }
        None => {
            let all: Vec<_> = (0..=config.n)
                .map(|k| boundary_matrix(config.n, k, config.p))
                .collect::<Result<_>>()?;
            serde_json::to_string(&all).expect("matrices serialise")
        }
    };
    emit(&config.out, &text)
}
