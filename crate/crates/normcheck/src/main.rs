//! Command-line front end: randomized verification campaigns, numerical
//! radius bounds for a matrix file, polynomial zero-sum bounds, graph-energy
//! bounds, the anchored self-check suite, and the check-id table.
//!
//! Exit codes: 0 every evaluated bound holds, 1 a violation/counterexample
//! was found, 2 usage or I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use normcheck::apps;
use normcheck::harness::{self, CampaignConfig, CheckRegistry};
use normcheck::ineq::{self, registry_table, TolerancePolicy};
use normcheck::linalg::read_matrix;
use normcheck::norms::numerical_radius;

#[derive(Parser)]
#[command(
    name = "normcheck",
    version,
    about = "Numerical verification of operator-norm, Schatten-norm and numerical-radius inequalities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the randomized verification campaign and write JSON + CSV reports.
    Verify(VerifyArgs),
    /// Numerical radius of a matrix file with its upper bounds and slack.
    Wbound(WboundArgs),
    /// Zero-sum bound for a monic complex polynomial.
    Polyzeros(PolyzerosArgs),
    /// Energy of a simple graph against the rank-refined bound.
    GraphEnergy(GraphEnergyArgs),
    /// Run the anchored example suite.
    Selfcheck,
    /// Print the registered strategies and the check-id table.
    Checks,
}

#[derive(Args)]
struct VerifyArgs {
    /// Campaign config JSON; defaults are used when absent.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory for results.json and summary.csv (overrides the
    /// config's output_path; default "campaign-out").
    #[arg(long)]
    output: Option<PathBuf>,
    /// Restrict to the named checks (repeatable); overrides the config list.
    #[arg(long = "check")]
    checks: Vec<String>,
}

#[derive(Args)]
struct WboundArgs {
    /// Matrix in the text format: `rows cols` header, then `re im` lines.
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    #[arg(long, default_value_t = 0.5)]
    t: f64,
}

#[derive(Args)]
struct PolyzerosArgs {
    /// Coefficients a₁..aₙ as JSON: `[[re, im], …]` or
    /// `{"degree": n, "coefficients": [...]}`.
    #[arg(long)]
    coeffs: String,
    /// Divide through a non-unit "leading" entry instead of rejecting it.
    #[arg(long, default_value_t = false)]
    normalize: bool,
}

#[derive(Args)]
struct GraphEnergyArgs {
    /// Edge list: vertex-count header, then `u v` lines; `#` comments.
    #[arg(long)]
    edges: PathBuf,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(args) => run_verify(args),
        Command::Wbound(args) => run_wbound(args),
        Command::Polyzeros(args) => run_polyzeros(args),
        Command::GraphEnergy(args) => run_graph_energy(args),
        Command::Selfcheck => run_selfcheck(),
        Command::Checks => run_checks(),
    }
    .unwrap_or_else(|message| {
        eprintln!("error: {message}");
        ExitCode::from(2)
    })
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let mut config = match &args.config {
        Some(path) => CampaignConfig::from_json_file(path).map_err(|e| e.to_string())?,
        None => CampaignConfig::default(),
    };
    if !args.checks.is_empty() {
        config.checks = Some(args.checks.clone());
    }
    let out_dir = args
        .output
        .or_else(|| config.output_path.clone())
        .unwrap_or_else(|| PathBuf::from("campaign-out"));

    let result = harness::run_campaign(&config).map_err(|e| e.to_string())?;
    result.write_to(&out_dir).map_err(|e| e.to_string())?;

    print!("{}", result.summary_csv());
    println!(
        "campaign: {} check ids, {} reports, {} violations, {} counterexample dumps, {} ms",
        result.checks.len(),
        result.checks.values().map(|a| a.reports).sum::<u64>(),
        result.checks.values().map(|a| a.fail).sum::<u64>(),
        result.counterexamples.len(),
        result.wall_time_ms
    );
    println!("reports written to {}", out_dir.display());
    Ok(if result.all_hold() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_wbound(args: WboundArgs) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(&args.matrix)
        .map_err(|e| format!("{}: {e}", args.matrix.display()))?;
    let a = read_matrix(&text).map_err(|e| e.to_string())?;
    if !(0.0..=1.0).contains(&args.alpha) || !(0.0..=1.0).contains(&args.t) {
        return Err("alpha and t must lie in [0, 1]".to_string());
    }
    let policy = TolerancePolicy::default();
    let scale = normcheck::norms::operator_norm(&a).map_err(|e| e.to_string())?;
    let w = numerical_radius(&a, policy.radius_tol(scale)).map_err(|e| e.to_string())?;
    println!(
        "w(A) = {:.12}  (±{:.3e}, {} eigensolves)",
        w.value, w.certified_error, w.evaluations
    );

    let reports = ineq::check_numrad_bounds(&a, &[(args.alpha, args.t)], &policy)
        .map_err(|e| e.to_string())?;
    let mut all_hold = true;
    for r in &reports {
        all_hold &= r.holds;
        println!(
            "{:<22} lhs = {:.12}  rhs = {:.12}  slack = {:+.3e}  {}",
            r.check_id,
            r.lhs,
            r.rhs,
            r.slack,
            if r.holds { "holds" } else { "VIOLATED" }
        );
    }
    Ok(if all_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_polyzeros(args: PolyzerosArgs) -> Result<ExitCode, String> {
    let poly = if args.normalize {
        parse_with_normalization(&args.coeffs)?
    } else {
        apps::Polynomial::from_json(&args.coeffs).map_err(|e| e.to_string())?
    };
    let report = apps::zero_sum_bound(&poly).map_err(|e| e.to_string())?;
    println!("degree        = {}", poly.degree());
    println!("zero_sum      = {:.12}", report.zero_sum);
    println!("bound         = {:.12}", report.bound);
    println!("smallest_zero ≤ {:.12}", apps::smallest_zero_bound(&poly));
    for (i, (re, im)) in report.zeros.iter().enumerate() {
        println!("zero[{i}]       = {re:+.12} {im:+.12}i  (|z| = {:.12})", (re * re + im * im).sqrt());
    }
    let tau = 1e-8 * report.bound.max(1.0);
    Ok(if report.zero_sum <= report.bound + tau {
        ExitCode::SUCCESS
    } else {
        println!("VIOLATED: zero_sum exceeds the bound");
        ExitCode::from(1)
    })
}

fn parse_with_normalization(text: &str) -> Result<apps::Polynomial, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("not valid JSON: {e}"))?;
    let Some(map) = value.as_object() else {
        return apps::Polynomial::from_json(text).map_err(|e| e.to_string());
    };
    let Some(leading) = map.get("leading") else {
        return apps::Polynomial::from_json(text).map_err(|e| e.to_string());
    };
    let pair = leading
        .as_array()
        .filter(|a| a.len() == 2)
        .and_then(|a| Some(Complex64::new(a[0].as_f64()?, a[1].as_f64()?)))
        .ok_or("leading must be a [re, im] pair")?;
    let coeffs = map
        .get("coefficients")
        .and_then(|c| c.as_array())
        .ok_or("missing coefficients")?
        .iter()
        .map(|v| {
            v.as_array()
                .filter(|a| a.len() == 2)
                .and_then(|a| Some(Complex64::new(a[0].as_f64()?, a[1].as_f64()?)))
                .ok_or("coefficients must be [re, im] pairs")
        })
        .collect::<Result<Vec<_>, _>>()?;
    apps::Polynomial::normalized(pair, coeffs).map_err(|e| e.to_string())
}

fn run_graph_energy(args: GraphEnergyArgs) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(&args.edges)
        .map_err(|e| format!("{}: {e}", args.edges.display()))?;
    let graph = apps::load_graph(&text).map_err(|e| e.to_string())?;
    let report = apps::energy_report(&graph).map_err(|e| e.to_string())?;
    println!("vertices        = {}", graph.vertex_count());
    println!("edges           = {}", graph.edge_count());
    println!("energy          = {:.12}", report.energy);
    println!("rank            = {}", report.rank);
    println!("bound_rank      = {:.12}", report.bound_rank);
    println!("bound_mcclelland = {:.12}", report.bound_mcclelland);
    println!(
        "eigenvalues     = [{}]",
        report
            .eigenvalues
            .iter()
            .map(|v| format!("{v:.6}"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    let tau = 1e-8 * report.bound_mcclelland.max(1.0);
    let ok = report.energy <= report.bound_rank + tau
        && report.bound_rank <= report.bound_mcclelland + tau;
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        println!("VIOLATED: energy bound chain failed");
        ExitCode::from(1)
    })
}

fn run_selfcheck() -> Result<ExitCode, String> {
    let items = harness::selfcheck();
    let mut failures = 0;
    for item in &items {
        println!(
            "{} {:<28} {}",
            if item.pass { "PASS" } else { "FAIL" },
            item.name,
            item.detail
        );
        if !item.pass {
            failures += 1;
        }
    }
    println!("selfcheck: {}/{} anchors hold", items.len() - failures, items.len());
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_checks() -> Result<ExitCode, String> {
    let registry = CheckRegistry::builtin();
    println!("registered strategies ({}):", registry.len());
    for strategy in registry.iter() {
        println!("  {:<20} {}", strategy.name(), strategy.describe());
    }
    println!();
    println!("check ids ({}):", registry_table().len());
    for (id, statement) in registry_table() {
        println!("  {id:<26} {statement}");
    }
    Ok(ExitCode::SUCCESS)
}
