//! mubkit: generate and verify unbiased basis sets, phase operators,
//! entangled families, and character sums over finite fields and Galois
//! rings.
//!
//! Exit codes: 0 when the command succeeds and every verification check
//! passes, 1 when a verification ran but some check failed, 2 for usage or
//! data errors.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use mubkit_core::characters::{ring_exponential_sum, FieldCharacters};
use mubkit_core::entanglement::{
    bell_fourier_family, bell_galois_family, bell_ring_family, verify_entangled_family, ShiftMode,
};
use mubkit_core::finite_field::FieldContext;
use mubkit_core::format::{BellFile, MubSetFile};
use mubkit_core::galois_ring::RingContext;
use mubkit_core::mub::{field_phase_basis, mub_field, mub_ring, verify_mub};
use mubkit_core::phase_operator::{beta_sweep, phase_operator_field, phase_operator_ring};
use mubkit_core::report::{fmt_float, VerificationReport};
use mubkit_core::suite::verification_suite;
use mubkit_core::{Error, C64};

const DEFAULT_VERIFY_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "mubkit",
    version,
    about = "Unbiased bases, phase operators, and character sums from finite fields and Galois rings"
)]
struct Cli {
    /// Replace the default tolerance of every verification check
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the complete field basis set for q = p^m (odd p)
    Gen(GenArgs),
    /// Generate the complete Galois-ring basis set for q = 2^m
    GenRing(GenRingArgs),
    /// Re-verify a stored basis set file
    Verify(VerifyArgs),
    /// Emit the matrix of a phase operator as CSV
    PhaseOp(PhaseOpArgs),
    /// Tabulate phase statistics over a probe parameter grid as CSV
    PhaseSweep(PhaseSweepArgs),
    /// Generate an entangled two-dit family
    Bell(BellArgs),
    /// Re-verify a stored entangled family file
    VerifyBell(VerifyArgs),
    /// Tabulate character sums against their laws as CSV
    Sums(SumsArgs),
    /// Run the complete built-in verification battery
    PaperSuite(ReportArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Field characteristic (an odd prime; use gen-ring for q = 2^m)
    #[arg(long)]
    p: u64,
    /// Extension degree
    #[arg(long)]
    m: usize,
    /// Label character index attached to every vector
    #[arg(long, default_value_t = 0)]
    k: u64,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenRingArgs {
    /// Ring degree: the set lives in dimension 2^m
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    k: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// File produced by gen, gen-ring, or bell
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PhaseOpArgs {
    /// Field characteristic; omit together with --ring for the ring operator
    #[arg(long, required_unless_present = "ring", conflicts_with = "ring")]
    p: Option<u64>,
    /// Extension or ring degree
    #[arg(long)]
    m: usize,
    /// Quadratic basis label (field) or Teichmuller position (ring)
    #[arg(long, default_value_t = 0)]
    a: u64,
    #[arg(long, default_value_t = 0)]
    k: u64,
    /// Build the Galois-ring operator in dimension 2^m
    #[arg(long)]
    ring: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PhaseSweepArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    a: u64,
    #[arg(long, default_value_t = 0)]
    k: u64,
    /// First grid point
    #[arg(long, default_value_t = 0.0)]
    start: f64,
    /// End of the half-open grid [start, stop); never evaluated itself
    #[arg(long, default_value_t = std::f64::consts::TAU)]
    stop: f64,
    /// Number of grid points
    #[arg(long)]
    steps: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BellArgs {
    #[arg(long, value_enum)]
    kind: BellKindArg,
    /// Dimension of each subsystem
    #[arg(long)]
    q: u64,
    /// How the second slot is shifted (galois kind only)
    #[arg(long, value_enum, default_value_t = ShiftArg::Integer)]
    shift: ShiftArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SumsArgs {
    #[arg(long, value_enum)]
    kind: SumKind,
    /// Ring degree (gamma sums)
    #[arg(long)]
    m: Option<usize>,
    /// Field cardinality (gauss and weil sums)
    #[arg(long)]
    q: Option<u64>,
    /// Polynomial degree (weil sums)
    #[arg(long, default_value_t = 2)]
    d: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BellKindArg {
    Fourier,
    Galois,
    Ring,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShiftArg {
    /// Add h to the position index modulo q
    Integer,
    /// Add the field element with label h
    Field,
}

enum Sink {
    Stdout,
    File(BufWriter<File>),
}

/// Open the output before any computation so an unwritable path fails fast.
fn open_sink(path: &Option<PathBuf>) -> anyhow::Result<Sink> {
    match path {
        None => Ok(Sink::Stdout),
        Some(p) => {
            let f = File::create(p)
                .with_context(|| format!("cannot write output file {}", p.display()))?;
            Ok(Sink::File(BufWriter::new(f)))
        }
    }
}

impl Sink {
    fn finish(self, content: &str) -> anyhow::Result<()> {
        match self {
            Sink::Stdout => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                lock.write_all(content.as_bytes())?;
                lock.flush()?;
            }
            Sink::File(mut f) => {
                f.write_all(content.as_bytes())?;
                f.flush()?;
            }
        }
        Ok(())
    }
}

fn render_report(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        ReportFormat::Csv => report.to_csv(),
    }
}

fn exit_from(code: i32) -> ExitCode {
    ExitCode::from(code as u8)
}

fn configure_threads() -> anyhow::Result<()> {
    match std::env::var("MUBKIT_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) => {
            let n: usize = raw
                .trim()
                .parse()
                .ok()
                .filter(|&n| n >= 1)
                .with_context(|| {
                    format!("MUBKIT_THREADS must be a positive integer, got {raw:?}")
                })?;
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .context("failed to size the worker pool")
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let tolerance = cli.tolerance;
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::GenRing(args) => cmd_gen_ring(args),
        Command::Verify(args) => cmd_verify(tolerance, args),
        Command::PhaseOp(args) => cmd_phase_op(args),
        Command::PhaseSweep(args) => cmd_phase_sweep(args),
        Command::Bell(args) => cmd_bell(args),
        Command::VerifyBell(args) => cmd_verify_bell(tolerance, args),
        Command::Sums(args) => cmd_sums(tolerance, args),
        Command::PaperSuite(args) => cmd_paper_suite(tolerance, args),
    }
}

fn cmd_gen(args: GenArgs) -> anyhow::Result<ExitCode> {
    let sink = open_sink(&args.out)?;
    let ctx = FieldContext::new(args.p, args.m)?;
    let set = mub_field::<f64>(&ctx, args.k)?;
    sink.finish(&MubSetFile::from_set(&set)?.to_json())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen_ring(args: GenRingArgs) -> anyhow::Result<ExitCode> {
    let sink = open_sink(&args.out)?;
    let ctx = RingContext::new(args.m)?;
    let set = mub_ring::<f64>(&ctx, args.k)?;
    sink.finish(&MubSetFile::from_set(&set)?.to_json())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(tolerance: Option<f64>, args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let sink = open_sink(&args.out)?;
    let text = std::fs::read_to_string(&args.input)
        .with_context(|| format!("cannot read {}", args.input.display()))?;
    let set = MubSetFile::from_json(&text)?.into_set()?;
    let report = verify_mub(&set, tolerance.unwrap_or(DEFAULT_VERIFY_TOL))?;
    sink.finish(&render_report(&report, args.format))?;
    Ok(exit_from(report.exit_code()))
}

fn cmd_verify_bell(tolerance: Option<f64>, args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let sink = open_sink(&args.out)?;
    let text = std::fs::read_to_string(&args.input)
        .with_context(|| format!("cannot read {}", args.input.display()))?;
    let family = BellFile::from_json(&text)?.into_family()?;
    let report = verify_entangled_family(&family, tolerance.unwrap_or(DEFAULT_VERIFY_TOL))?;
    sink.finish(&render_report(&report, args.format))?;
    Ok(exit_from(report.exit_code()))
}

fn cmd_phase_op(args: PhaseOpArgs) -> anyhow::Result<ExitCode> {
    let sink = open_sink(&args.out)?;
    let theta = if args.ring {
        phase_operator_ring::<f64>(&RingContext::new(args.m)?, args.a, args.k)?
    } else {
        let p = args.p.expect("clap requires --p without --ring");
        phase_operator_field::<f64>(&FieldContext::new(p, args.m)?, args.a, args.k)?
    };
    let mut out = String::from("n,m,re,im\n");
    for n in 0..theta.dim() {
        for m in 0..theta.dim() {
            let e = theta.entry(n, m);
            out.push_str(&format!(
                "{n},{m},{},{}\n",
                fmt_float(e.re),
                fmt_float(e.im)
            ));
        }
    }
    sink.finish(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_phase_sweep(args: PhaseSweepArgs) -> anyhow::Result<ExitCode> {
    let sink = open_sink(&args.out)?;
    if args.steps == 0 {
        bail!("--steps must be at least 1");
    }
    if !args.start.is_finite() || !args.stop.is_finite() {
        bail!("--start and --stop must be finite");
    }
    let ctx = FieldContext::new(args.p, args.m)?;
    let chars = FieldCharacters::new(&ctx)?;
    let basis = field_phase_basis::<f64>(&chars, args.a, args.k)?;
    let width = (args.stop - args.start) / args.steps as f64;
    let betas: Vec<f64> = (0..args.steps)
        .map(|i| args.start + width * i as f64)
        .collect();
    let sweep = beta_sweep(&basis, &betas)?;
    let mut out = String::from("beta,b,probability,expectation,variance\n");
    for row in &sweep.rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt_float(row.beta),
            row.b,
            fmt_float(row.probability),
            fmt_float(row.expectation),
            fmt_float(row.variance),
        ));
    }
    sink.finish(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_bell(args: BellArgs) -> anyhow::Result<ExitCode> {
    let sink = open_sink(&args.out)?;
    if args.shift == ShiftArg::Field && args.kind != BellKindArg::Galois {
        bail!("--shift field applies only to --kind galois");
    }
    let family = match args.kind {
        BellKindArg::Fourier => bell_fourier_family::<f64>(args.q)?,
        BellKindArg::Galois => {
            let ctx = FieldContext::from_cardinality(args.q)?;
            let mode = match args.shift {
                ShiftArg::Integer => ShiftMode::IntegerModQ,
                ShiftArg::Field => ShiftMode::FieldAddition,
            };
            bell_galois_family::<f64>(&ctx, mode)?
        }
        BellKindArg::Ring => {
            if !args.q.is_power_of_two() || args.q < 2 {
                return Err(Error::NotPowerOfTwo(args.q).into());
            }
            let m = args.q.trailing_zeros() as usize;
            bell_ring_family::<f64>(&RingContext::new(m)?)?
        }
    };
    sink.finish(&BellFile::from_family(&family).to_json())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_sums(tolerance: Option<f64>, args: SumsArgs) -> anyhow::Result<ExitCode> {
    let sink = open_sink(&args.out)?;
    let tol = tolerance.unwrap_or(DEFAULT_VERIFY_TOL);
    let out = match args.kind {
        SumKind::Gamma => {
            let m = args.m.context("gamma sums need --m")?;
            if args.q.is_some() {
                bail!("gamma sums take --m, not --q");
            }
            let ctx = RingContext::new(m)?;
            let dim = ctx.dim() as f64;
            let mut out = String::from("m,y,re,im,magnitude,expected,pass\n");
            for y in ctx.elements() {
                let g: C64 = ring_exponential_sum(&y);
                let expected = if y.is_zero() {
                    dim
                } else if y.is_unit() {
                    dim.sqrt()
                } else {
                    0.0
                };
                let pass = (g.norm() - expected).abs() <= tol;
                out.push_str(&format!(
                    "{m},{},{},{},{},{},{pass}\n",
                    y.label(),
                    fmt_float(g.re),
                    fmt_float(g.im),
                    fmt_float(g.norm()),
                    fmt_float(expected),
                ));
            }
            out
        }
        SumKind::Gauss => {
            let q = args.q.context("gauss sums need --q")?;
            if args.m.is_some() {
                bail!("gauss sums take --q, not --m");
            }
            let ctx = FieldContext::from_cardinality(q)?;
            let chars = FieldCharacters::new(&ctx)?;
            let mut out = String::from("q,k,c,re,im,magnitude,expected,pass\n");
            for k in 0..q - 1 {
                for c in ctx.elements() {
                    let g: C64 = chars.gauss_sum(k, &c)?;
                    let expected = match (k == 0, c.is_zero()) {
                        (true, true) => q as f64 - 1.0,
                        (true, false) => 1.0,
                        (false, true) => 0.0,
                        (false, false) => (q as f64).sqrt(),
                    };
                    let pass = (g.norm() - expected).abs() <= tol;
                    out.push_str(&format!(
                        "{q},{k},{},{},{},{},{},{pass}\n",
                        c.label(),
                        fmt_float(g.re),
                        fmt_float(g.im),
                        fmt_float(g.norm()),
                        fmt_float(expected),
                    ));
                }
            }
            out
        }
        SumKind::Weil => {
            let q = args.q.context("weil sums need --q")?;
            if args.m.is_some() {
                bail!("weil sums take --q, not --m");
            }
            let d = args.d;
            if d < 1 {
                bail!("--d must be at least 1");
            }
            let ctx = FieldContext::from_cardinality(q)?;
            let chars = FieldCharacters::new(&ctx)?;
            if d.is_multiple_of(ctx.p()) {
                bail!(
                    "the bound needs gcd(d, q) = 1, but d = {d} is divisible by the characteristic {}",
                    ctx.p()
                );
            }
            let combos = (q as u128).pow(d as u32);
            if combos > (1 << 20) {
                bail!("{combos} polynomials of degree {d} over F_{q} is more than this command tabulates");
            }
            let bound = (d as f64 - 1.0) * (q as f64).sqrt();
            let mut out = String::from("q,d,f,re,im,magnitude,bound,pass\n");
            let mut coeffs = vec![ctx.zero(); d as usize + 1];
            coeffs[d as usize] = ctx.one();
            for combo in 0..combos as u64 {
                let mut rest = combo;
                for c in coeffs.iter_mut().take(d as usize) {
                    *c = ctx.unlabel(rest % q)?;
                    rest /= q;
                }
                let w: C64 = chars.weil_sum(&coeffs);
                let pass = w.norm() <= bound + tol;
                let poly = coeffs
                    .iter()
                    .map(|c| c.label().to_string())
                    .collect::<Vec<_>>()
                    .join(":");
                out.push_str(&format!(
                    "{q},{d},{poly},{},{},{},{},{pass}\n",
                    fmt_float(w.re),
                    fmt_float(w.im),
                    fmt_float(w.norm()),
                    fmt_float(bound),
                ));
            }
            out
        }
    };
    sink.finish(&out)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SumKind {
    /// Teichmuller exponential sums over a Galois ring
    Gamma,
    /// Multiplicative-additive Gauss sums over a field
    Gauss,
    /// Character sums of low-degree polynomials against the square-root bound
    Weil,
}

fn cmd_paper_suite(tolerance: Option<f64>, args: ReportArgs) -> anyhow::Result<ExitCode> {
    let sink = open_sink(&args.out)?;
    let report = verification_suite(tolerance)?;
    sink.finish(&render_report(&report, args.format))?;
    Ok(exit_from(report.exit_code()))
}
