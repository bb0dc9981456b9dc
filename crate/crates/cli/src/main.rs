#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use zerocensus::{error_report, fmt_sig, reports_json, run_suites, select_suites, write_census_csv};
use zerocensus_core::census::{census, density_detail, locate_critical_zeros, rvm_main_term, CensusOptions};
use zerocensus_core::checks::CheckReport;
use zerocensus_core::specfun::{
    gamma, log_gamma, nabla, ratio_b, xi, zeta, zeta_alternating, zeta_euler_maclaurin, EvalOptions,
    PseudoGammaParams,
};
use zerocensus_core::{c, Complex64, Error};

const SAFE_HEIGHT_CAP: f64 = 1000.0;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;
const EXIT_OFF_LINE: u8 = 4;

#[derive(Parser)]
#[command(name = "zerocensus", version, about = "Zeta zeros, counts and numerical checks")]
struct Cli {
    /// Worker threads for `verify`.
    #[arg(long, global = true, env = "ZETA_CENSUS_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Absolute error goal per evaluation.
    #[arg(long, global = true, default_value_t = 1e-11)]
    precision: f64,
    /// Largest height accepted by the census commands.
    #[arg(long, global = true, default_value_t = SAFE_HEIGHT_CAP)]
    height_cap: f64,
    /// Allow a height cap above 1000.
    #[arg(long, global = true)]
    unsafe_heights: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    Zeta,
    Xi,
    Gamma,
    Loggamma,
    Nabla,
    #[value(name = "B")]
    B,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at re + i·im.
    Eval {
        #[arg(long, value_enum)]
        function: Function,
        #[arg(long, allow_negative_numbers = true)]
        re: f64,
        #[arg(long, allow_negative_numbers = true)]
        im: f64,
        /// Height parameter of ∇ and B.
        #[arg(long = "Y")]
        y: Option<f64>,
    },
    /// Write the critical-line zero census up to a height as CSV.
    Zeros {
        #[arg(long)]
        height: f64,
    },
    /// N(T) from the census, confirmed by a contour count.
    Count {
        #[arg(long)]
        height: f64,
    },
    /// Zeros in the rectangle 1−X < β < X, 0 < γ < Y against the census.
    Density {
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long)]
        height: f64,
    },
    /// Run verification suites.
    Verify {
        /// Suite name or `all`.
        #[arg(long)]
        suite: String,
        /// Report file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// Reason to stop, mapped to an exit code.
enum Failure {
    Usage(String),
    Numerical(String),
    OffLine(i64),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::NonFinite => Failure::Usage(e.to_string()),
            _ => Failure::Numerical(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// A flat record printed as `key value` lines, one JSON object or a CSV row.
struct Record(Vec<(&'static str, String)>);

impl Record {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.0.iter().map(|(k, v)| format!("{k} {}\n", v.trim_matches('"'))).collect(),
            Format::Json => {
                let fields: Vec<String> = self.0.iter().map(|(k, v)| format!("\"{k}\": {v}")).collect();
                format!("{{{}}}\n", fields.join(", "))
            }
            Format::Csv => {
                let keys: Vec<&str> = self.0.iter().map(|(k, _)| *k).collect();
                let vals: Vec<&str> = self.0.iter().map(|(_, v)| v.trim_matches('"')).collect();
                format!("{}\n{}\n", keys.join(","), vals.join(","))
            }
        }
    }
}

fn num(x: f64) -> String {
    fmt_sig(x, 17)
}

fn text(s: &str) -> String {
    format!("\"{s}\"")
}

struct Ctx {
    format: Format,
    out: Option<PathBuf>,
    seed: u64,
    eval: EvalOptions,
    census: CensusOptions,
}

impl Ctx {
    fn sink(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(io::stdout().lock()),
        })
    }

    fn emit(&self, record: &Record) -> Result<(), Failure> {
        let mut w = self.sink()?;
        w.write_all(record.render(self.format).as_bytes())?;
        w.flush()?;
        Ok(())
    }
}

fn cmd_eval(ctx: &Ctx, function: Function, s: Complex64, y: Option<f64>) -> Result<(), Failure> {
    let opts = &ctx.eval;
    let params = |name: &str| -> Result<PseudoGammaParams, Failure> {
        let y = y.ok_or_else(|| Failure::Usage(format!("--Y is required for {name}")))?;
        Ok(PseudoGammaParams::new(y)?)
    };
    let (name, value) = match function {
        Function::Zeta => ("zeta", zeta(s, opts)?),
        Function::Xi => ("xi", xi(s, opts)?),
        Function::Gamma => ("gamma", gamma(s, opts)?),
        Function::Loggamma => ("loggamma", log_gamma(s, opts)?),
        Function::Nabla => ("nabla", nabla(s, &params("nabla")?)?),
        Function::B => ("B", ratio_b(s, &params("B")?, opts)?),
    };
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Failure::Numerical("value overflowed".into()));
    }
    let target = opts.target_abs_err * value.norm().max(1.0);
    // ζ has two evaluators; their disagreement is a direct error estimate
    let error = match function {
        Function::Zeta => match (zeta_alternating(s, opts), zeta_euler_maclaurin(s, opts)) {
            (Ok(a), Ok(b)) => (a - b).norm().max(target),
            _ => target,
        },
        _ => target,
    };
    ctx.emit(&Record(vec![
        ("function", text(name)),
        ("re", num(value.re)),
        ("im", num(value.im)),
        ("error_estimate", num(error)),
    ]))
}

fn cmd_zeros(ctx: &Ctx, height: f64) -> Result<(), Failure> {
    let zeros = locate_critical_zeros(height, &ctx.census)?;
    write_census_csv(ctx.sink()?, &zeros)?;
    let main = rvm_main_term(height);
    eprintln!(
        "{} zeros up to T = {}; main term {} (difference {})",
        zeros.len(),
        height,
        fmt_sig(main, 6),
        fmt_sig(zeros.len() as f64 - main, 3)
    );
    Ok(())
}

fn cmd_count(ctx: &Ctx, height: f64) -> Result<(), Failure> {
    let r = census(height, &ctx.census)?;
    ctx.emit(&Record(vec![
        ("height", num(height)),
        ("count", r.zeros.len().to_string()),
        ("count_by_winding", r.count_by_winding.to_string()),
        ("rvm_main", num(r.rvm_main)),
    ]))
}

fn cmd_density(ctx: &Ctx, lambda: f64, height: f64) -> Result<(), Failure> {
    let mut d = density_detail(lambda, height, &ctx.census)?;
    if d.off_line_count != 0 {
        // repeat with finer argument tracking before reporting a finding
        let mut fine = ctx.census;
        fine.track.max_spacing /= 4.0;
        fine.track.max_arg_step /= 2.0;
        let again = density_detail(lambda, height, &fine)?;
        if again.off_line_count != d.off_line_count {
            return Err(Failure::Numerical(format!(
                "off-line count {} not reproduced with finer tracking ({})",
                d.off_line_count, again.off_line_count
            )));
        }
        d = again;
    }
    ctx.emit(&Record(vec![
        ("lambda", num(d.lambda)),
        ("height", num(d.height)),
        ("epsilon", num(d.epsilon)),
        ("rectangle_count", d.rectangle_count.to_string()),
        ("critical_count", d.critical_count.to_string()),
        ("off_line_count", d.off_line_count.to_string()),
        ("strip_count", d.strip_count.to_string()),
    ]))?;
    for cand in &d.candidates {
        eprintln!(
            "candidate: sigma in [{}, {}], t in [{}, {}], count {}",
            cand.sigma_lo, cand.sigma_hi, cand.t_lo, cand.t_hi, cand.count
        );
    }
    if d.off_line_count != 0 {
        return Err(Failure::OffLine(d.off_line_count));
    }
    Ok(())
}

fn cmd_verify(ctx: &Ctx, suite: &str, json: Option<&PathBuf>) -> Result<bool, Failure> {
    let suites = select_suites(suite).ok_or_else(|| Failure::Usage(format!("unknown suite `{suite}`")))?;
    let mut errored = None;
    let reports: Vec<CheckReport> = run_suites(&suites, ctx.seed)
        .into_iter()
        .map(|(name, outcome)| match outcome {
            Ok(r) => r,
            Err(e) => {
                errored.get_or_insert_with(|| format!("{name}: {e}"));
                error_report(name, &e)
            }
        })
        .collect();
    if let Some(path) = json {
        std::fs::write(path, reports_json(&reports))?;
    }
    let mut w = ctx.sink()?;
    match ctx.format {
        Format::Json => w.write_all(reports_json(&reports).as_bytes())?,
        Format::Csv => {
            writeln!(w, "check_id,pass,max_residual,bound_value,n_samples")?;
            for r in &reports {
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    r.check_id,
                    r.pass,
                    num(r.max_residual),
                    r.bound_value.map(num).unwrap_or_default(),
                    r.n_samples
                )?;
            }
        }
        Format::Plain => {
            for r in &reports {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                let bound = r.bound_value.map_or_else(|| "-".to_string(), |b| fmt_sig(b, 3));
                writeln!(w, "{verdict} {} residual {} bound {}", r.check_id, fmt_sig(r.max_residual, 3), bound)?;
            }
        }
    }
    w.flush()?;
    if let Some(msg) = errored {
        return Err(Failure::Numerical(msg));
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    if !(cli.height_cap > 2.0) {
        return Err(Failure::Usage("--height-cap must exceed 2".into()));
    }
    if cli.height_cap > SAFE_HEIGHT_CAP && !cli.unsafe_heights {
        return Err(Failure::Usage(format!(
            "--height-cap above {SAFE_HEIGHT_CAP} needs --unsafe-heights"
        )));
    }
    let eval = EvalOptions {
        target_abs_err: cli.precision,
        ..EvalOptions::default()
    };
    eval.validate()?;
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let ctx = Ctx {
        format: cli.format,
        out: cli.out,
        seed: cli.seed,
        eval,
        census: CensusOptions {
            height_cap: cli.height_cap,
            eval,
            ..CensusOptions::default()
        },
    };
    match cli.command {
        Command::Eval { function, re, im, y } => cmd_eval(&ctx, function, c(re, im), y)?,
        Command::Zeros { height } => cmd_zeros(&ctx, height)?,
        Command::Count { height } => cmd_count(&ctx, height)?,
        Command::Density { lambda, height } => cmd_density(&ctx, lambda, height)?,
        Command::Verify { suite, json } => {
            if !cmd_verify(&ctx, &suite, json.as_ref())? {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(EXIT_NUMERICAL)
        }
        Err(Failure::OffLine(n)) => {
            eprintln!("{n} zero(s) off the critical line, confirmed with finer tracking");
            ExitCode::from(EXIT_OFF_LINE)
        }
        Err(Failure::Io(e)) => {
            eprintln!("io error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
