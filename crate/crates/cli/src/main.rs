use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use simsek_kit::algebra::Rational;
use simsek_kit::exec::{with_workers, Exec};
use simsek_kit::harness::compute::{compute_value, generating_series, phi_text, route_for, SeriesFamily};
use simsek_kit::harness::registry::listing;
use simsek_kit::harness::{
    emit_table, render_reports, run_suite, suite_passed, Family, Format, GridSpec, SuiteConfig, TableSpec,
};
use simsek_kit::{Error, Result};

#[derive(Parser)]
#[command(name = "simsek", version, about = "Exact degenerate Simsek numbers and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one value of a number family.
    Compute(ComputeArgs),
    /// Print a generating series truncated at t^order.
    Series(SeriesArgs),
    /// Export an (n, k) table.
    Table(TableArgs),
    /// Print φ*_n(x) at a rational point.
    Phi(PhiArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Params {
    /// λ as p/q
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<Rational>,
    /// α as p/q
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Rational>,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    family: String,
    /// A..F, y1star only
    #[arg(long)]
    route: Option<String>,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    params: Params,
    /// text or json
    #[arg(long, default_value = "text")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesArgs {
    /// y1star, y1, s2star or apostol-euler
    #[arg(long)]
    family: String,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 8)]
    order: usize,
    #[command(flatten)]
    params: Params,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    route: Option<String>,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 8)]
    k_max: usize,
    #[command(flatten)]
    params: Params,
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PhiArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    params: Params,
    /// Highest power of x kept.
    #[arg(long, visible_alias = "order", default_value_t = 8)]
    degree: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Print the registry and exit.
    #[arg(long)]
    list: bool,
    /// Comma-separated ids; all entries when omitted.
    #[arg(long, value_delimiter = ',')]
    identity: Option<Vec<String>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Seeded points added to the fixed grid.
    #[arg(long, default_value_t = 3)]
    random_points: usize,
    /// Series order and symbolic index bound.
    #[arg(long, default_value_t = 8)]
    order: usize,
    /// text, csv or json
    #[arg(long, default_value = "text")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; the global pool when omitted.
    #[arg(long)]
    jobs: Option<usize>,
    /// Run without the worker pool.
    #[arg(long)]
    sequential: bool,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn line(mut s: String) -> String {
    s.push('\n');
    s
}

fn compute(args: ComputeArgs) -> Result<ExitCode> {
    let family: Family = args.family.parse()?;
    let spec = TableSpec {
        route: route_for(family, args.route.as_deref())?,
        lambda: args.params.lambda.clone(),
        alpha: args.params.alpha.clone(),
        ..TableSpec::new(family, args.n, args.k)
    };
    let value = compute_value(&spec, args.n, args.k)?;
    let text = match args.format.parse()? {
        Format::Text | Format::Csv => line(value),
        Format::Json => {
            let doc = serde_json::json!({
                "family": family.name(),
                "route": spec.route.map(|r| r.to_string()),
                "n": args.n,
                "k": args.k,
                "lambda": spec.lambda.map(|v| v.to_string()),
                "alpha": spec.alpha.map(|v| v.to_string()),
                "value": value,
            });
            line(serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))?)
        }
    };
    emit(&text, args.out.as_ref())?;
    Ok(ExitCode::SUCCESS)
}

fn series(args: SeriesArgs) -> Result<ExitCode> {
    let family: SeriesFamily = args.family.parse()?;
    let text = generating_series(family, args.k, args.order, args.params.lambda.as_ref(), args.params.alpha.as_ref())?;
    emit(&line(text), args.out.as_ref())?;
    Ok(ExitCode::SUCCESS)
}

fn table(args: TableArgs) -> Result<ExitCode> {
    let family: Family = args.family.parse()?;
    let spec = TableSpec {
        route: route_for(family, args.route.as_deref())?,
        lambda: args.params.lambda,
        alpha: args.params.alpha,
        ..TableSpec::new(family, args.n_max, args.k_max)
    };
    let format = match args.format.parse()? {
        Format::Text => return Err(Error::Usage("table format is csv or json".into())),
        f => f,
    };
    emit(&emit_table(&spec, format)?, args.out.as_ref())?;
    Ok(ExitCode::SUCCESS)
}

fn phi(args: PhiArgs) -> Result<ExitCode> {
    let lambda = args.params.lambda.ok_or_else(|| Error::Usage("phi needs --lambda".into()))?;
    let alpha = args.params.alpha.unwrap_or_else(Rational::zero);
    emit(&line(phi_text(args.n, &lambda, &alpha, args.degree)), args.out.as_ref())?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    if args.list {
        emit(&listing(), args.out.as_ref())?;
        return Ok(ExitCode::SUCCESS);
    }
    let format: Format = args.format.parse()?;
    let grid = GridSpec {
        seed: args.seed,
        random: args.random_points,
    };
    let config = SuiteConfig {
        order: args.order,
        ..SuiteConfig::default()
    };
    let exec = if args.sequential { Exec::Sequential } else { Exec::default() };
    let filter = args.identity.as_deref();
    let reports = with_workers(args.jobs, || run_suite(filter, &grid, &config, exec))?;
    emit(&render_reports(&reports, format)?, args.out.as_ref())?;
    Ok(if suite_passed(&reports) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Series(a) => series(a),
        Command::Table(a) => table(a),
        Command::Phi(a) => phi(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
