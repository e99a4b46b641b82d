//! The `hurwitz` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a check fails (a FAIL or NO_CONVERGENCE
//! record, or an ambiguous resolution), 2 for usage and input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::closed_forms::{closed_form, Selection};
use crate::hypothesis::Canon;
use crate::quadrature::{family_quadrature, Family, FamilySpec};
use crate::transforms::{kernel_sine_transform, kernel_transform_quadrature, TransformQuery};
use crate::verification::{
    resolve_all, resolve_hypotheses, resolution_grid, sweep, verify_point, CandidateChoice, ErrataReport,
    GridPoint, RecordRow, Status, VerificationRecord, DEFAULT_TOL, QUAD_TOL,
};
use crate::zeta::{hurwitz_zeta, hurwitz_zeta_ds, KernelKind, ZetaParams};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hurwitz", version, about = "Hurwitz zeta integrals: closed forms against quadrature")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Quad,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one integral by its closed form, by quadrature, or both.
    Eval(EvalArgs),
    /// Evaluate ζ(s,a) or ∂ζ/∂s.
    Zeta(ZetaArgs),
    /// Compare a kernel's closed-form sine (cosine for cosh) transform with quadrature.
    Transform(TransformArgs),
    /// Verify every point of a JSON grid file.
    Sweep(SweepArgs),
    /// Resolve every family's closed form and the Mellin constants.
    Errata(ErrataArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub a: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub s: Complex64,
    /// Parameter q of the open families.
    #[arg(long)]
    pub q: Option<f64>,
    /// Defaults to `both` for closed families and `quad` for open ones.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// Kernel scale override for the quadrature.
    #[arg(long)]
    pub scale: Option<f64>,
    /// Candidate id, or `canonical` to resolve the family first.
    #[arg(long, default_value = CandidateChoice::CANONICAL)]
    pub candidate: String,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub s: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub a: Complex64,
    /// Evaluate ∂ζ/∂s instead.
    #[arg(long)]
    pub deriv: bool,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long)]
    pub kernel: KernelKind,
    #[arg(long)]
    pub w: f64,
    /// Kernel scale β (ignored for bose).
    #[arg(long, default_value_t = std::f64::consts::PI)]
    pub beta: f64,
    /// Absolute tolerance for the comparison.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub grid: PathBuf,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Run the points one after another.
    #[arg(long)]
    pub serial: bool,
}

#[derive(Debug, Args)]
pub struct ErrataArgs {
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

/// `RE` or `RE,IM`.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let num = |p: &str| -> Result<f64, String> {
        let v: f64 = p.parse().map_err(|_| format!("{p:?} is not a number"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("{p:?} is not finite"))
        }
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected RE or RE,IM, got {text:?}")),
    }
}

/// What a subcommand produced: text for stdout (or `--out`) and an exit code.
struct Output {
    body: String,
    code: i32,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Check(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::AmbiguousResolution { .. } => CliError::Check(e.to_string()),
            e if e.is_quadrature_failure() => CliError::Check(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let format = cli.format;
    let (result, target) = match cli.command {
        Command::Eval(a) => (eval(a, format), None),
        Command::Zeta(a) => (zeta(a, format), None),
        Command::Transform(a) => (transform(a, format), None),
        Command::Sweep(a) => {
            let target = a.out.clone();
            (sweep_cmd(a, format), target)
        }
        Command::Errata(a) => {
            let target = a.out.clone();
            (errata(a, format), target)
        }
    };
    match result {
        Ok(output) => {
            let written = match target {
                Some(path) => fs::write(&path, output.body.as_bytes())
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(output.body.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => output.code,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    EXIT_USAGE
                }
            }
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            EXIT_FAIL
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Usage(e.to_string()))
}

fn render<T: Serialize, C: Serialize>(format: Format, value: &T, rows: &[C], text: impl FnOnce() -> String) -> Result<String, CliError> {
    match format {
        Format::Json => to_json(value),
        Format::Csv => to_csv(rows),
        Format::Text => Ok(text()),
    }
}

fn status_code<'a>(records: impl IntoIterator<Item = &'a VerificationRecord>) -> i32 {
    let failed = records
        .into_iter()
        .any(|r| matches!(r.status, Status::Fail | Status::NoConvergence));
    if failed {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

/// Canon covering every family that `points` select canonically.
fn canon_for(points: &[GridPoint], tol: f64) -> Result<Canon, CliError> {
    let mut families: Vec<Family> = points
        .iter()
        .filter(|p| p.candidate == CandidateChoice::Canonical && !p.spec.family.is_open())
        .map(|p| p.spec.family)
        .collect();
    families.sort();
    families.dedup();
    let mut canon = Canon::default();
    for family in families {
        let res = resolve_hypotheses(family, &resolution_grid(family), tol, true)?;
        canon.certify_family(family, res.canonical);
    }
    Ok(canon)
}

/// Flat CSV form of a [`RecordRow`].
#[derive(Serialize)]
struct CsvRecord {
    family: String,
    n: usize,
    a_re: f64,
    a_im: f64,
    s_re: f64,
    s_im: f64,
    candidate: String,
    closed_re: Option<f64>,
    closed_im: Option<f64>,
    quad_re: Option<f64>,
    quad_im: Option<f64>,
    abs_err: Option<f64>,
    rel_err: Option<f64>,
    tol: f64,
    status: Status,
    n_evals: usize,
    runtime_ms: f64,
}

impl From<RecordRow> for CsvRecord {
    fn from(r: RecordRow) -> Self {
        CsvRecord {
            family: r.family,
            n: r.n,
            a_re: r.a[0],
            a_im: r.a[1],
            s_re: r.s[0],
            s_im: r.s[1],
            candidate: r.candidate,
            closed_re: r.closed.map(|z| z[0]),
            closed_im: r.closed.map(|z| z[1]),
            quad_re: r.quad.map(|z| z[0]),
            quad_im: r.quad.map(|z| z[1]),
            abs_err: r.abs_err,
            rel_err: r.rel_err,
            tol: r.tol,
            status: r.status,
            n_evals: r.n_evals,
            runtime_ms: r.runtime_ms,
        }
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

fn fmt_opt<T>(v: Option<T>, f: impl Fn(T) -> String) -> String {
    v.map(f).unwrap_or_else(|| "-".to_string())
}

fn record_line(r: &VerificationRecord) -> String {
    format!(
        "{} n={} a={} s={} candidate={} closed={} quad={} rel_err={} {}\n",
        r.spec.family,
        r.spec.n,
        fmt_complex(r.spec.a),
        fmt_complex(r.spec.s),
        r.candidate,
        fmt_opt(r.closed, fmt_complex),
        fmt_opt(r.quad, fmt_complex),
        fmt_opt(r.rel_err, |e| format!("{e:.3e}")),
        r.status.name()
    )
}

fn records_output(records: &[VerificationRecord], format: Format) -> Result<String, CliError> {
    let rows: Vec<CsvRecord> = records.iter().map(|r| r.row().into()).collect();
    render(format, &records, &rows, || records.iter().map(record_line).collect())
}

#[derive(Serialize)]
struct ClosedOnly {
    family: String,
    n: usize,
    a: [f64; 2],
    s: [f64; 2],
    candidate: String,
    closed: [f64; 2],
}

#[derive(Serialize)]
struct QuadOnly {
    family: String,
    n: usize,
    a: [f64; 2],
    s: [f64; 2],
    q: Option<f64>,
    quad: [f64; 2],
    err_estimate: f64,
    n_evals: usize,
}

fn eval(args: EvalArgs, format: Format) -> Result<Output, CliError> {
    let family = args.family;
    let mut spec = FamilySpec::new(family, args.n, args.a, args.s);
    spec.q = args.q;
    spec.kernel_scale = args.scale;
    spec.validate()?;
    let method = args.method.unwrap_or(if family.is_open() { Method::Quad } else { Method::Both });
    if family.is_open() && method != Method::Quad {
        return Err(CliError::Usage(format!("{family} has no closed form; use --method quad")));
    }

    let choice = CandidateChoice::from(Some(args.candidate.clone()));
    let point = GridPoint {
        spec,
        candidate: choice.clone(),
    };
    let canon = canon_for(std::slice::from_ref(&point), args.tol)?;
    let selection = choice.selection(&canon);

    let pair = |z: Complex64| [z.re, z.im];
    match method {
        Method::Both => {
            let record = verify_point(&spec, selection, args.tol)?;
            let code = status_code([&record]);
            let body = records_output(std::slice::from_ref(&record), format)?;
            // a single record prints as an object, not a one-element array
            let body = if format == Format::Json { to_json(&record)? } else { body };
            Ok(Output { body, code })
        }
        Method::Closed => {
            let cand = selection.resolve(family)?;
            let value = closed_form(&spec, Selection::Candidate(cand.id))?;
            let out = ClosedOnly {
                family: family.to_string(),
                n: spec.n,
                a: pair(spec.a),
                s: pair(spec.s),
                candidate: cand.id.to_string(),
                closed: pair(value),
            };
            let body = render(format, &out, std::slice::from_ref(&out), || {
                format!("{} n={} closed={} ({})\n", family, spec.n, fmt_complex(value), cand.id)
            });
            Ok(Output { body: body?, code: EXIT_OK })
        }
        Method::Quad => {
            let mut quad_spec = spec;
            if !family.is_open() {
                let cand = selection.resolve(family)?;
                quad_spec.kernel_scale = Some(spec.kernel_scale.unwrap_or(cand.scale));
                quad_spec.reading = Some(cand.reading);
            }
            let outcome = family_quadrature(&quad_spec, QUAD_TOL)?;
            let out = QuadOnly {
                family: family.to_string(),
                n: spec.n,
                a: pair(spec.a),
                s: pair(spec.s),
                q: spec.q,
                quad: pair(outcome.value),
                err_estimate: outcome.err_estimate,
                n_evals: outcome.n_evals,
            };
            let body = render(format, &out, std::slice::from_ref(&out), || {
                format!(
                    "{} n={} quad={} err_estimate={:.3e}\n",
                    family,
                    spec.n,
                    fmt_complex(outcome.value),
                    outcome.err_estimate
                )
            });
            Ok(Output { body: body?, code: EXIT_OK })
        }
    }
}

#[derive(Serialize)]
struct ZetaOut {
    s: [f64; 2],
    a: [f64; 2],
    derivative: bool,
    value: [f64; 2],
}

#[derive(Serialize)]
struct ZetaCsv {
    s_re: f64,
    s_im: f64,
    a_re: f64,
    a_im: f64,
    derivative: bool,
    value_re: f64,
    value_im: f64,
}

fn zeta(args: ZetaArgs, format: Format) -> Result<Output, CliError> {
    let p = ZetaParams::new(args.s, args.a);
    let value = if args.deriv { hurwitz_zeta_ds(p)? } else { hurwitz_zeta(p)? };
    let out = ZetaOut {
        s: [args.s.re, args.s.im],
        a: [args.a.re, args.a.im],
        derivative: args.deriv,
        value: [value.re, value.im],
    };
    let row = ZetaCsv {
        s_re: args.s.re,
        s_im: args.s.im,
        a_re: args.a.re,
        a_im: args.a.im,
        derivative: args.deriv,
        value_re: value.re,
        value_im: value.im,
    };
    let body = render(format, &out, &[row], || format!("{}\n", fmt_complex(value)))?;
    Ok(Output { body, code: EXIT_OK })
}

#[derive(Serialize)]
struct TransformOut {
    kernel: KernelKind,
    w: f64,
    beta: f64,
    sense: crate::transforms::Sense,
    closed: f64,
    quad: f64,
    abs_err: f64,
    tol: f64,
    status: Status,
}

fn transform(args: TransformArgs, format: Format) -> Result<Output, CliError> {
    let q = TransformQuery::new(args.kernel, args.w, args.beta);
    let closed = kernel_sine_transform(q)?;
    let quad = kernel_transform_quadrature(q, 1e-13)?;
    let abs_err = (quad.value.re - closed.value).abs();
    let status = if abs_err <= args.tol { Status::Pass } else { Status::Fail };
    let out = TransformOut {
        kernel: args.kernel,
        w: args.w,
        beta: args.beta,
        sense: closed.sense,
        closed: closed.value,
        quad: quad.value.re,
        abs_err,
        tol: args.tol,
        status,
    };
    let body = render(format, &out, std::slice::from_ref(&out), || {
        format!(
            "{} w={} closed={} quad={} abs_err={:.3e} {}\n",
            args.kernel,
            args.w,
            closed.value,
            quad.value.re,
            abs_err,
            status.name()
        )
    })?;
    let code = if status == Status::Pass { EXIT_OK } else { EXIT_FAIL };
    Ok(Output { body, code })
}

fn sweep_cmd(args: SweepArgs, format: Format) -> Result<Output, CliError> {
    let text = fs::read_to_string(&args.grid)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", args.grid.display())))?;
    let grid: Vec<GridPoint> = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("bad grid file {}: {e}", args.grid.display())))?;
    let canon = canon_for(&grid, args.tol)?;
    let records = sweep(&grid, &canon, args.tol, !args.serial)?;
    let code = status_code(&records);
    Ok(Output {
        body: records_output(&records, format)?,
        code,
    })
}

#[derive(Serialize)]
struct ErrataCsv {
    subject: String,
    choice: String,
    description: String,
}

fn errata_text(report: &ErrataReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "closed forms (tolerance {:e}):", report.tol);
    for f in &report.families {
        let pass = f.evidence.iter().find(|e| e.candidate == f.canonical).map_or(0, |e| e.pass);
        let _ = writeln!(s, "  {:<11} {:<20} {} [{} points]", f.family.name(), f.canonical, f.description, pass);
    }
    let _ = writeln!(s, "mellin constants:");
    for m in &report.mellin {
        let _ = writeln!(s, "  {:<6} c = {}", m.kernel.name(), m.constant_value);
    }
    let _ = writeln!(s, "discrepancies with the tabulated forms:");
    for d in &report.discrepancies {
        let _ = writeln!(
            s,
            "  {}: {} -> {} ({}); tabulated form failed {}/{} points",
            d.subject, d.printed, d.canonical, d.canonical_description, d.printed_failures, d.grid_points
        );
    }
    s
}

fn errata(args: ErrataArgs, format: Format) -> Result<Output, CliError> {
    let report = resolve_all(args.tol, true)?;
    let mut rows: Vec<ErrataCsv> = report
        .families
        .iter()
        .map(|f| ErrataCsv {
            subject: f.family.to_string(),
            choice: f.canonical.to_string(),
            description: f.description.to_string(),
        })
        .collect();
    rows.extend(report.mellin.iter().map(|m| ErrataCsv {
        subject: format!("mellin-{}", m.kernel),
        choice: m.constant.id().to_string(),
        description: format!("tabulated Mellin closed form times {}", m.constant_value),
    }));
    let body = render(format, &report, &rows, || errata_text(&report))?;
    Ok(Output { body, code: EXIT_OK })
}
