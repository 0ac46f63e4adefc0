use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lattice_bounce::catalog::{self, SeriesName, SeriesParams};
use lattice_bounce::identities::{self, Suite, VerifyConfig};
use lattice_bounce::{bounce_gf, oracle, Restriction, Series, Slope, StepWord};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "latbounce", version, about = "Count rational lattice paths by bounces")]
struct Cli {
    /// Worker threads for brute-force enumeration (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of one generating function
    Coeffs(CoeffsArgs),
    /// Print the table of series counting paths by (left, right) bounces
    Table(TableArgs),
    /// Run identity suites and report pass/fail
    Verify(VerifyArgs),
    /// Classify a single path given as a word in E and N
    Classify(ClassifyArgs),
    /// List series names and verify suites
    List,
}

#[derive(Args)]
struct SlopeArgs {
    #[arg(long, default_value_t = 1)]
    alpha: u32,
    #[arg(long, default_value_t = 1)]
    beta: u32,
}

impl SlopeArgs {
    fn slope(&self) -> Result<Slope> {
        Ok(Slope::new(self.alpha, self.beta)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
    OeisBfile,
}

#[derive(Args)]
struct CoeffsArgs {
    /// Series name; see `latbounce list`
    #[arg(long)]
    series: SeriesName,
    #[command(flatten)]
    slope: SlopeArgs,
    #[arg(long, default_value_t = 10)]
    order: usize,
    /// Restriction on first and last step for g, f, nrb, nhc, B
    #[arg(long)]
    restriction: Option<Restriction>,
    /// Left bounces for B and B_cf
    #[arg(long, default_value_t = 0)]
    left: u32,
    /// Right bounces for B and B_cf
    #[arg(long, default_value_t = 0)]
    right: u32,
    /// Bounce count for G_b, left and right
    #[arg(long, default_value_t = 0)]
    bounces: u32,
    /// Also print the x^0 coefficient
    #[arg(long)]
    with_constant: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    slope: SlopeArgs,
    #[arg(long, default_value_t = 6)]
    order: usize,
    #[arg(long, default_value_t = 3)]
    max_left: u32,
    #[arg(long, default_value_t = 3)]
    max_right: u32,
    #[arg(long, default_value = "all")]
    restriction: Restriction,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (repeatable, comma separated, or `all`)
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suite: Vec<String>,
    /// Restrict slope-indexed suites to this alpha (needs --beta too, or beta = 1)
    #[arg(long)]
    alpha: Option<u32>,
    #[arg(long)]
    beta: Option<u32>,
    #[arg(long)]
    order: Option<usize>,
    /// Largest alpha + beta for slope sweeps
    #[arg(long)]
    max_slope_sum: Option<u32>,
    /// Largest path length for brute-force comparisons
    #[arg(long)]
    max_steps: Option<u32>,
    #[arg(long)]
    alpha_max: Option<u32>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    b_max: Option<u32>,
    /// Print every check, not only failures
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Path as a word in E and N, e.g. ENEN
    path: StepWord,
    #[command(flatten)]
    slope: SlopeArgs,
}

/// Coefficients from `start` through the series order, as decimal strings.
fn coefficient_strings(series: &Series, start: usize) -> Vec<String> {
    (start..=series.order()).map(|k| series.coeff(k).to_string()).collect()
}

fn coeffs(args: &CoeffsArgs) -> Result<String> {
    let slope = args.slope.slope()?;
    let params = SeriesParams {
        restriction: args.restriction,
        left: args.left,
        right: args.right,
        bounces: args.bounces,
    };
    let series = args.series.compute(slope, args.order, params)?;
    let start = usize::from(!args.with_constant);
    let values = coefficient_strings(&series, start);
    let mut out = String::new();
    match args.format {
        Format::Table => writeln!(out, "{}", values.join(" "))?,
        Format::Csv => {
            writeln!(out, "k,value")?;
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{},{v}", start + i)?;
            }
        }
        Format::OeisBfile => {
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{} {v}", start + i)?;
            }
        }
        Format::Json => {
            let doc = json!({
                "slope": [slope.alpha(), slope.beta()],
                "order": args.order,
                "series": { "name": args.series.to_string(), "first_index": start, "coefficients": values },
                "table": Value::Array(Vec::new()),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(out)
}

fn table(args: &TableArgs) -> Result<String> {
    let slope = args.slope.slope()?;
    let table = bounce_gf::bounce_table(slope, args.restriction, args.max_left, args.max_right, args.order);
    let mut out = String::new();
    match args.format {
        Format::Table => {
            writeln!(out, "# slope {slope}, restriction {}, k = 1..{}", args.restriction, args.order)?;
            for (l, r, series) in table.entries() {
                let values = coefficient_strings(series, 1);
                writeln!(out, "{l} {r}: {}", values.join(" "))?;
            }
        }
        Format::Csv | Format::OeisBfile => {
            writeln!(out, "l,r,k,count")?;
            for (l, r, series) in table.entries() {
                for k in 1..=args.order {
                    writeln!(out, "{l},{r},{k},{}", series.coeff(k))?;
                }
            }
        }
        Format::Json => {
            let grid: Vec<Vec<Vec<String>>> = (0..=args.max_left)
                .map(|l| {
                    (0..=args.max_right)
                        .map(|r| coefficient_strings(table.entry(l, r), 1))
                        .collect()
                })
                .collect();
            let doc = json!({
                "slope": [slope.alpha(), slope.beta()],
                "order": args.order,
                "series": {
                    "restriction": args.restriction.name(),
                    "max_left": args.max_left,
                    "max_right": args.max_right,
                    "first_index": 1,
                },
                "table": grid,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(out)
}

fn verify_config(args: &VerifyArgs) -> Result<VerifyConfig> {
    let mut config = VerifyConfig::default();
    if args.alpha.is_some() || args.beta.is_some() {
        config.slope = Some(Slope::new(args.alpha.unwrap_or(1), args.beta.unwrap_or(1))?);
    }
    if let Some(order) = args.order {
        config.order = order;
    }
    if let Some(v) = args.max_slope_sum {
        config.max_slope_sum = v;
    }
    if let Some(v) = args.max_steps {
        config.max_steps = v;
    }
    if let Some(v) = args.alpha_max {
        config.alpha_max = v;
    }
    if let Some(v) = args.n_max {
        config.n_max = v;
    }
    if let Some(v) = args.b_max {
        config.b_max = v;
    }
    Ok(config)
}

fn selected_suites(names: &[String]) -> Result<Vec<Suite>> {
    if names.iter().any(|n| n.eq_ignore_ascii_case("all")) {
        return Ok(Suite::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| n.parse::<Suite>().map_err(anyhow::Error::msg))
        .collect()
}

fn verify(args: &VerifyArgs, out: &mut String) -> Result<bool> {
    let config = verify_config(args)?;
    let mut all_passed = true;
    for suite in selected_suites(&args.suite)? {
        let report = identities::run_suite(suite, &config)
            .with_context(|| format!("running suite {suite}"))?;
        if args.verbose {
            for check in &report.checks {
                let status = if check.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "  {status} {}", check.label)?;
            }
        }
        let n = report.checks.len();
        match report.first_failure() {
            None => writeln!(out, "PASS {suite} ({n} checks)")?,
            Some(check) => {
                all_passed = false;
                let failed = report.checks.iter().filter(|c| !c.passed()).count();
                writeln!(out, "FAIL {suite} ({failed} of {n} checks failed)")?;
                write!(out, "  first failure: {}", check.label)?;
                if let Some(m) = &check.mismatch {
                    write!(out, ": {m}")?;
                }
                if let Some(e) = &check.error {
                    write!(out, ": {e}")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(all_passed)
}

fn classify(args: &ClassifyArgs) -> Result<String> {
    let slope = args.slope.slope()?;
    let p = oracle::classify(&args.path, slope)?;
    let mut out = String::new();
    writeln!(out, "left bounces: {}", p.left)?;
    writeln!(out, "right bounces: {}", p.right)?;
    if let Some(c) = p.horizontal_crosses {
        writeln!(out, "horizontal crosses: {c}")?;
    }
    writeln!(out, "restriction: {}", Restriction::from_steps(p.first, p.last))?;
    writeln!(out, "bounce-free: {}", p.bounce_free)?;
    Ok(out)
}

fn list() -> String {
    let mut out = String::from("series:\n");
    for (names, what) in catalog::CATALOGUE {
        let _ = writeln!(out, "  {names:<36} {what}");
    }
    out.push_str("suites:\n");
    for suite in Suite::ALL {
        let _ = writeln!(out, "  {:<36} {}", suite.name(), suite.description());
    }
    out
}

fn run(cli: &Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring thread pool")?;
    }
    let mut out = String::new();
    let ok = match &cli.command {
        Command::Coeffs(args) => {
            out = coeffs(args)?;
            true
        }
        Command::Table(args) => {
            out = table(args)?;
            true
        }
        Command::Verify(args) => verify(args, &mut out)?,
        Command::Classify(args) => {
            out = classify(args)?;
            true
        }
        Command::List => {
            out = list();
            true
        }
    };
    std::io::stdout().lock().write_all(out.as_bytes())?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
