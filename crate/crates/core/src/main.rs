//! Command-line front end: exact expectations, Monte Carlo runs, matrix
//! construction with verification, asymptotic bounds, optimizers, and the
//! reference-curve sweeps, all emitting CSV.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ra_coverage::codes::GeneratorMatrix;
use ra_coverage::construct::{bk_set_search, build_gk, verify_recovery_complete, ConstructionParams, RecoveryVerdict};
use ra_coverage::gf::FieldSpec;
use ra_coverage::sim::{mc_tau_graph, mc_tau_matrix, GraphModelParams};
use ra_coverage::{asym, exact, figures, fmt_sig, Error};

#[derive(Parser)]
#[command(name = "racov", version, about = "Random-access expectation toolkit for linear storage codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact per-strand expectations by subset enumeration (n <= 24).
    Exact(ExactArgs),
    /// Monte Carlo stopping-time estimation.
    Simulate(SimulateArgs),
    /// Build G_k(x, y), verify it, and write the matrix plus a JSON sidecar.
    Construct(ConstructArgs),
    /// Evaluate the asymptotic upper bound at given parameters.
    Asymptotic(AsymptoticArgs),
    /// Minimize a bound objective numerically.
    Optimize(OptimizeArgs),
    /// Regenerate a reference curve as CSV.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct MatrixSource {
    /// Matrix file (line 1: `q k n`, then k rows of n integers).
    #[arg(long, conflicts_with = "construction")]
    matrix: Option<PathBuf>,
    /// Build G_k(x,y) in place: k,x,y,q.
    #[arg(long, value_name = "k,x,y,q")]
    construction: Option<String>,
}

impl MatrixSource {
    fn load(&self) -> Result<GeneratorMatrix, Error> {
        match (&self.matrix, &self.construction) {
            (Some(path), None) => GeneratorMatrix::read_file(path),
            (None, Some(spec)) => {
                let v = parse_u64_list(spec, 4)?;
                let (k, x, y, q) = (v[0] as usize, v[1] as usize, v[2] as usize, v[3]);
                build_construction(k, x, y, q).map(|(g, _)| g)
            }
            _ => Err(Error::MatrixFormat(
                "exactly one of --matrix and --construction is required".into(),
            )),
        }
    }
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    source: MatrixSource,
    /// Emit the subset-count profile of this strand instead of expectations.
    #[arg(long)]
    profile: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    source: MatrixSource,
    /// Collection-model parameters k,p,P (alternative to a matrix).
    #[arg(long, value_name = "k,p,P", conflicts_with_all = ["matrix", "construction"])]
    graph: Option<String>,
    /// 1-based strand index (matrix sampling only).
    #[arg(long, default_value_t = 1)]
    strand: usize,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 0x5EED)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    x: usize,
    #[arg(long)]
    y: usize,
    #[arg(long)]
    q: u64,
    /// Matrix output path; the exponent sidecar goes to <out>.json.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct AsymptoticArgs {
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, requires = "big_p", conflicts_with_all = ["alpha", "ubfin"])]
    p: Option<f64>,
    #[arg(long = "P", requires = "p")]
    big_p: Option<f64>,
    /// Ratio y/x fixing (p, P) on the constraint line.
    #[arg(long, conflicts_with = "ubfin")]
    alpha: Option<f64>,
    /// Evaluate the p = P closed form over --k-range.
    #[arg(long)]
    ubfin: bool,
    #[arg(long, value_name = "a:b", requires = "ubfin")]
    k_range: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Objective {
    /// Exact k = 3 limit formula over alpha.
    Exact3,
    /// k = 3 upper bound over alpha.
    Appendix3,
    /// Two-case bound over the (p, P) constraint line.
    Graph,
}

#[derive(Args)]
struct OptimizeArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum)]
    objective: Objective,
}

#[derive(Clone, Copy, ValueEnum)]
enum Figure {
    #[value(name = "fig_tq2")]
    FigTq2,
    #[value(name = "fig_k4")]
    FigK4,
    #[value(name = "fig_ubfin")]
    FigUbfin,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    figure: Figure,
    #[arg(long)]
    out: PathBuf,
}

fn parse_u64_list(s: &str, want: usize) -> Result<Vec<u64>, Error> {
    let parts: Result<Vec<u64>, _> = s.split(',').map(|t| t.trim().parse()).collect();
    match parts {
        Ok(v) if v.len() == want => Ok(v),
        _ => Err(Error::MatrixFormat(format!(
            "expected {want} comma-separated integers, got `{s}`"
        ))),
    }
}

fn parse_f64_list(s: &str, want: usize) -> Result<Vec<f64>, Error> {
    let parts: Result<Vec<f64>, _> = s.split(',').map(|t| t.trim().parse()).collect();
    match parts {
        Ok(v) if v.len() == want => Ok(v),
        _ => Err(Error::MatrixFormat(format!(
            "expected {want} comma-separated numbers, got `{s}`"
        ))),
    }
}

fn build_construction(
    k: usize,
    x: usize,
    y: usize,
    q: u64,
) -> Result<(GeneratorMatrix, ConstructionParams), Error> {
    let field = Arc::new(FieldSpec::build_from_order(q)?);
    let exponents = bk_set_search(k, q, x * k * (k - 1) / 2)?;
    let params = ConstructionParams {
        k,
        x,
        y,
        field,
        exponents,
    };
    let g = build_gk(&params)?;
    Ok((g, params))
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => std::io::stdout().write_all(content.as_bytes())?,
    }
    Ok(())
}

fn run_exact(args: &ExactArgs) -> Result<(), Error> {
    let g = args.source.load()?;
    let mut buf = Vec::new();
    if let Some(i) = args.profile {
        exact::alpha_bruteforce(&g, i)?.write_csv(&mut buf)?;
    } else {
        exact::exact_report(&g)?.write_csv(&mut buf)?;
    }
    write_output(&args.out, std::str::from_utf8(&buf).expect("utf-8 csv"))
}

fn run_simulate(args: &SimulateArgs) -> Result<(), Error> {
    let report = if let Some(spec) = &args.graph {
        let v = parse_f64_list(spec, 3)?;
        let params = GraphModelParams::new(v[0] as usize, v[1], v[2])?;
        mc_tau_graph(&params, args.trials, args.seed)?
    } else {
        let g = args.source.load()?;
        mc_tau_matrix(&g, args.strand, args.trials, args.seed)?
    };
    let mut csv = String::from("strand,mean,stderr,trials,seed\n");
    for e in &report.per_strand {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            e.strand,
            fmt_sig(e.expectation),
            fmt_sig(e.stderr),
            args.trials,
            args.seed
        ));
    }
    write_output(&args.out, &csv)
}

fn run_construct(args: &ConstructArgs) -> Result<(), Error> {
    let (g, params) = build_construction(args.k, args.x, args.y, args.q)?;
    match verify_recovery_complete(&g)? {
        RecoveryVerdict::Complete => {}
        RecoveryVerdict::Violation { columns } => {
            // the builder should never produce one; fail loudly if it does
            return Err(Error::SearchExhausted {
                size: columns.len(),
                found: 0,
                limit: args.q,
            });
        }
    }
    g.write_file(&args.out)?;
    let sidecar = serde_json::json!({
        "k": args.k,
        "x": args.x,
        "y": args.y,
        "q": args.q,
        "exponents": params.exponents.elements,
    });
    let mut json_path = args.out.clone().into_os_string();
    json_path.push(".json");
    std::fs::write(json_path, format!("{}\n", serde_json::to_string_pretty(&sidecar).expect("json")))?;
    Ok(())
}

fn asym_csv_row(b: &asym::AsymptoticBound) -> String {
    format!(
        "{},{},{},{},{},{},{}\n",
        b.k,
        fmt_sig(b.p),
        fmt_sig(b.big_p),
        fmt_sig(b.case_i),
        fmt_sig(b.case_ii),
        fmt_sig(b.total),
        fmt_sig(b.total / b.k as f64)
    )
}

fn run_asymptotic(args: &AsymptoticArgs) -> Result<(), Error> {
    let mut csv = String::from("k,p,P,case_i,case_ii,total,normalized\n");
    if args.ubfin {
        let range = args.k_range.as_deref().unwrap_or("3:200");
        let (a, b) = range
            .split_once(':')
            .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
            .ok_or_else(|| Error::MatrixFormat(format!("bad --k-range `{range}`")))?;
        for k in a..=b {
            let p = 2.0 / ((k * k + k) as f64);
            csv.push_str(&asym_csv_row(&asym::tk_bound(k, p, p)?));
        }
    } else {
        let k = args
            .k
            .ok_or_else(|| Error::MatrixFormat("--k is required".into()))?;
        let (p, big_p) = if let Some(a) = args.alpha {
            let denom = k as f64 * a + (k * (k - 1) / 2) as f64;
            (1.0 / denom, a / denom)
        } else if let (Some(p), Some(bp)) = (args.p, args.big_p) {
            (p, bp)
        } else {
            return Err(Error::MatrixFormat(
                "provide --p/--P, --alpha, or --ubfin".into(),
            ));
        };
        csv.push_str(&asym_csv_row(&asym::tk_bound(k, p, big_p)?));
    }
    write_output(&args.out, &csv)
}

fn run_optimize(args: &OptimizeArgs) -> Result<(), Error> {
    match args.objective {
        Objective::Exact3 => {
            let (a, v) = asym::optimize_alpha(asym::k3_exact)?;
            println!("alpha* = {} value = {}", fmt_sig(a), fmt_sig(v));
        }
        Objective::Appendix3 => {
            let (a, v) = asym::optimize_alpha(asym::k3_upper_appendix)?;
            println!("alpha* = {} value = {}", fmt_sig(a), fmt_sig(v));
        }
        Objective::Graph => {
            let (p, big_p, v) = asym::optimize_pp(args.k)?;
            println!(
                "p* = {} P* = {} value = {} normalized = {}",
                fmt_sig(p),
                fmt_sig(big_p),
                fmt_sig(v),
                fmt_sig(v / args.k as f64)
            );
        }
    }
    Ok(())
}

fn run_sweep(args: &SweepArgs) -> Result<(), Error> {
    let mut csv = String::new();
    match args.figure {
        Figure::FigTq2 => {
            csv.push_str("q,normalized\n");
            for &q in figures::TQ2_Q {
                csv.push_str(&format!("{q},{}\n", fmt_sig(exact::tq2_value(q) / 2.0)));
            }
        }
        Figure::FigK4 => {
            csv.push_str("x,alpha,normalized\n");
            for (x, alphas) in figures::k4_series() {
                for &a in alphas {
                    let y = (a * x as f64).round() as u64;
                    let v = exact::t4_expectation(x, y) / 4.0;
                    csv.push_str(&format!("{x},{},{}\n", fmt_sig(a), fmt_sig(v)));
                }
            }
        }
        Figure::FigUbfin => {
            csv.push_str("k,normalized\n");
            for k in figures::UBFIN_K {
                csv.push_str(&format!(
                    "{k},{}\n",
                    fmt_sig(asym::ubfin_bound(k) / k as f64)
                ));
            }
        }
    }
    write_output(&Some(args.out.clone()), &csv)
}

/// 2: bad input/usage; 3: a numeric or enumeration guard refused the job;
/// 4: an exponent/construction search failed.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::EnumerationGuard { .. }
        | Error::FieldTooLarge(_)
        | Error::VerifierGuard(_)
        | Error::StoppingCap(_)
        | Error::DivergentSeries(_)
        | Error::NonFiniteObjective(_) => 3,
        Error::SearchExhausted { .. }
        | Error::SumFreeUnattainable { .. }
        | Error::InsufficientExponents { .. } => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("RA_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Exact(a) => run_exact(a),
        Command::Simulate(a) => run_simulate(a),
        Command::Construct(a) => run_construct(a),
        Command::Asymptotic(a) => run_asymptotic(a),
        Command::Optimize(a) => run_optimize(a),
        Command::Sweep(a) => run_sweep(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
