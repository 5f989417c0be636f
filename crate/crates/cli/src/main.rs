//! Command-line surface for the quadric Hopf-hypersurface toolkit.
//!
//! Exit codes: 0 success, 1 mathematical failure/contradiction where success
//! was expected, 2 usage error.

use clap::{Args, Parser, Subcommand};
use hopfq_core::cartan::{self, Scenario};
use hopfq_core::catalog::VerifyStatus;
use hopfq_core::classify::{classify, summary_text, trace_forest_json, Finding, RuleApp};
use hopfq_core::config::PrincipalMultiset;
use hopfq_core::flow::{self, Side};
use hopfq_core::render::render_expr;
use hopfq_core::report;
use hopfq_core::{MDim, Mult};
use hopfq_exact::{parse_scalar, rat, AlgebraicReal, Rational};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hopfq",
    about = "Exact curvature calculus for Hopf hypersurfaces of the complex hyperbolic quadric",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the ten catalog examples at a radius parameter t and dimension m.
    VerifyExamples(VerifyArgs),
    /// Reproduce the classification for g distinct principal curvatures.
    Classify(ClassifyArgs),
    /// Curvature configuration of the parallel hypersurface at parameter t.
    Parallel(ParallelArgs),
    /// Focal submanifold data (both sides) of a configuration.
    Focal(FocalArgs),
    /// Evaluate a Cartan identity instance.
    CartanEval(CartanArgs),
    /// Dump the examples catalog as JSON.
    Catalog,
}

#[derive(Args)]
struct VerifyArgs {
    /// Dimension parameter m >= 3.
    #[arg(long)]
    m: u32,
    /// Radius parameter t = tanh(r), a rational in (0, 1), e.g. 1/2.
    #[arg(long, default_value = "1/2")]
    t: String,
    /// Write the full report as JSON to this path.
    #[arg(long)]
    json: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Number of distinct constant principal curvatures (1..=4).
    #[arg(long)]
    g: u8,
    /// Optional concrete dimension for displaying multiplicities.
    #[arg(long)]
    m: Option<u32>,
    /// Write the replayable trace forest as JSON to this path.
    #[arg(long)]
    trace: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct ParallelArgs {
    /// Path to a configuration JSON file.
    #[arg(long)]
    config: std::path::PathBuf,
    /// Flow parameter t, a scalar expression with |t| < 1.
    #[arg(long, allow_hyphen_values = true)]
    t: String,
    /// Decimal digits in the report.
    #[arg(long, default_value_t = 12)]
    digits: u32,
}

#[derive(Args)]
struct FocalArgs {
    /// Path to a configuration JSON file.
    #[arg(long)]
    config: std::path::PathBuf,
    /// Decimal digits in the report.
    #[arg(long, default_value_t = 12)]
    digits: u32,
}

#[derive(Args)]
struct CartanArgs {
    /// Principal curvature lambda (scalar expression).
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Principal curvature mu (scalar expression).
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// Frame scenario: y-eq-jx-orthA, ax-eq-x, y-eq-ax-orthA, orth-pair,
    /// or y-eq-jx:<a_xx>,<a_xjx> with scalar expressions.
    #[arg(long, default_value = "y-eq-jx-orthA")]
    scenario: String,
    /// Comma-separated sigma(Q) values; defaults to "lambda,mu".
    #[arg(long, allow_hyphen_values = true)]
    spectrum: Option<String>,
    /// Decimal digits in the report.
    #[arg(long, default_value_t = 12)]
    digits: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::VerifyExamples(args) => cmd_verify(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Parallel(args) => cmd_parallel(args),
        Command::Focal(args) => cmd_focal(args),
        Command::CartanEval(args) => cmd_cartan(args),
        Command::Catalog => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report::catalog_json()).unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    let v = parse_scalar(s).map_err(|e| format!("bad rational '{}': {}", s, e))?;
    v.as_rational()
        .ok_or_else(|| format!("'{}' is not rational", s))
}

fn scalar_arg(s: &str) -> Result<AlgebraicReal, String> {
    parse_scalar(s).map_err(|e| format!("bad scalar '{}': {}", s, e))
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    if args.m < 3 {
        return Err(format!("m must be at least 3, got {}", args.m));
    }
    let t = parse_rational_arg(&args.t)?;
    if !(t > rat(0, 1) && t < rat(1, 1)) {
        return Err(format!("t must lie in (0, 1), got {}", t));
    }
    let reports = report::verify_all(&t, args.m);
    println!("example  status                   checks  result");
    for r in &reports {
        let status = match r.status {
            VerifyStatus::Verified => "verified",
            VerifyStatus::CatalogOnly => "catalog-only",
            VerifyStatus::SkippedMConstraint => "skipped (m constraint)",
        };
        println!(
            "{:<8} {:<24} {:<7} {}",
            r.id.to_string(),
            status,
            r.checks.len(),
            if r.pass() { "pass" } else { "FAIL" }
        );
        for c in r.checks.iter().filter(|c| !c.pass) {
            println!("         failed check {}: {}", c.name, c.detail);
        }
    }
    if let Some(path) = args.json {
        let doc = report::verify_report_json(&reports, args.m, &args.t);
        std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap())
            .map_err(|e| format!("writing {}: {}", path.display(), e))?;
        println!("report written to {}", path.display());
    }
    if reports.iter().all(|r| r.pass()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn expected_outcome_ids(g: u8) -> Vec<&'static str> {
    match g {
        2 => vec!["thm-1.1a"],
        3 => vec![
            "thm-1.1b-1-principal",
            "thm-1.1b-1-reeb",
            "thm-1.1b-2",
            "thm-1.1b-3",
        ],
        4 => vec!["thm-1.1c-1", "thm-1.1c-2", "thm-1.1c-3", "thm-1.1c-4"],
        _ => vec![],
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode, String> {
    if !(1..=4).contains(&args.g) {
        return Err(format!("g must lie in 1..=4, got {}", args.g));
    }
    let result = classify(args.g);
    print!("{}", summary_text(&result));
    if let Some(m) = args.m {
        if m < 3 {
            return Err(format!("m must be at least 3, got {}", m));
        }
        for o in &result.outcomes {
            let mults: Vec<String> = o
                .mult_pattern()
                .iter()
                .map(|k| k.eval(m).to_string())
                .collect();
            println!(
                "  [{} {}] multiplicities at m = {}: {}",
                o.theorem,
                o.case,
                m,
                mults.join(", ")
            );
        }
    }
    if let Some(path) = args.trace {
        let doc = trace_forest_json(&result);
        std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap())
            .map_err(|e| format!("writing {}: {}", path.display(), e))?;
        println!("trace forest written to {}", path.display());
    }
    // Self-audit: outcomes must match the embedded expected tables.
    let got: Vec<&str> = result.outcomes.iter().map(|o| o.id.as_str()).collect();
    if got == expected_outcome_ids(args.g) && result.replay().is_ok() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("self-audit failed: outcomes {:?}", got);
        Ok(ExitCode::from(1))
    }
}

fn scalar_cell(v: &AlgebraicReal, digits: u32) -> String {
    match render_expr(v) {
        Some(e) => format!("{} (~{})", e, v.to_decimal(digits)),
        None => format!("root of {} (~{})", v.minpoly(), v.to_decimal(digits)),
    }
}

fn cmd_parallel(args: ParallelArgs) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| format!("reading {}: {}", args.config.display(), e))?;
    let config = report::config_from_json(&text).map_err(|e| e.to_string())?;
    let t = scalar_arg(&args.t)?;
    match flow::parallel_config(&config, &t) {
        Ok(flowed) => {
            println!("alpha' = {}", scalar_cell(flowed.alpha(), args.digits));
            for (v, k) in flowed.spectrum() {
                println!("sigma(Q): {}  x  {}", scalar_cell(v, args.digits), k);
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&report::config_report(&flowed, args.digits))
                    .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ flow::FlowError::FocalCollapse { .. }) => {
            eprintln!("focal collapse: {}", e);
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_focal(args: FocalArgs) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| format!("reading {}: {}", args.config.display(), e))?;
    let config = report::config_from_json(&text).map_err(|e| e.to_string())?;
    for side in [Side::Plus, Side::Minus] {
        match flow::focal_parameters(&config, side) {
            flow::FocalReport::Absent { .. } => {
                println!("focal side {}: none", side);
            }
            flow::FocalReport::Present {
                lambda_star,
                t_star,
                branch,
                focal_dim,
                ..
            } => {
                let (ms, _) = flow::focal_multiset(&config, side).map_err(|e| e.to_string())?;
                let m_note = match config.m() {
                    MDim::Concrete(m) => format!(" (= {} at m = {})", focal_dim.eval(m), m),
                    MDim::Symbolic => String::new(),
                };
                println!(
                    "focal side {}: lambda_* = {}, t_* = {}, branch {:?}, dim {}{}",
                    side,
                    scalar_cell(&lambda_star, args.digits),
                    scalar_cell(&t_star, args.digits),
                    branch,
                    focal_dim,
                    m_note
                );
                println!("  curvatures: {}", ms);
                println!("  austere: {}", if ms.is_austere() { "yes" } else { "no" });
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_scenario(s: &str) -> Result<Scenario, String> {
    match s {
        "y-eq-jx-orthA" => Ok(Scenario::YEqJxOrthA),
        "ax-eq-x" => Ok(Scenario::AxEqX),
        "y-eq-ax-orthA" => Ok(Scenario::YEqAxOrthA),
        "orth-pair" => Ok(Scenario::OrthPair),
        other => {
            if let Some(rest) = other.strip_prefix("y-eq-jx:") {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() != 2 {
                    return Err("y-eq-jx scenario needs a_xx,a_xjx".to_string());
                }
                Ok(Scenario::YEqJx {
                    a_xx: scalar_arg(parts[0])?,
                    a_xjx: scalar_arg(parts[1])?,
                })
            } else {
                Err(format!("unknown scenario '{}'", other))
            }
        }
    }
}

fn cmd_cartan(args: CartanArgs) -> Result<ExitCode, String> {
    let lambda = scalar_arg(&args.lambda)?;
    let mu = scalar_arg(&args.mu)?;
    let scenario = parse_scenario(&args.scenario)?;
    let spectrum: Vec<AlgebraicReal> = match &args.spectrum {
        Some(s) => s
            .split(',')
            .map(|p| scalar_arg(p.trim()))
            .collect::<Result<_, _>>()?,
        None => vec![lambda.clone(), mu.clone()],
    };
    let geom = scenario.geometry().map_err(|e| e.to_string())?;
    let rhs = cartan::cartan_rhs(&lambda, &mu, &geom).map_err(|e| e.to_string())?;
    let ms = PrincipalMultiset::from_entries(
        spectrum.iter().map(|v| (v.clone(), Mult::ONE)).collect(),
    );
    let cert = cartan::lhs_sign(&lambda, &mu, &ms).map_err(|e| e.to_string())?;
    println!("bracket = {}", scalar_cell(&geom.bracket(), args.digits));
    println!("rhs = {}", scalar_cell(&rhs, args.digits));
    println!("lhs certificate: {:?}", cert.verdict);
    for (mu_i, s) in &cert.witnesses {
        let word = match s.cmp(&0) {
            std::cmp::Ordering::Greater => "positive",
            std::cmp::Ordering::Less => "negative",
            std::cmp::Ordering::Equal => "zero",
        };
        println!(
            "  (lambda - {v})(mu - {v}): {}",
            word,
            v = scalar_cell(mu_i, args.digits)
        );
    }
    // Mirror the trace-rule record for the same inputs.
    let out = hopfq_core::classify::apply_rule(&RuleApp::CartanConcrete {
        lambda,
        mu,
        spectrum,
        scenario,
    });
    match out.finding {
        Finding::Contradiction { reason } => {
            println!("verdict: contradiction ({})", reason);
            Ok(ExitCode::from(1))
        }
        _ => {
            println!("verdict: consistent");
            Ok(ExitCode::SUCCESS)
        }
    }
}
