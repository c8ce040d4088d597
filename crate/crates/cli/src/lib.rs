//! Command-line frontend for `revolute`.
//!
//! Every subcommand prints a single `key=value` summary line on stdout and
//! sends human diagnostics to stderr. Exit codes: 0 success, 1 usage or I/O
//! error, 2 domain or singularity error, 3 verification failure.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use revolute::algebraic::{line_root_points, LineCoeffs, Substitution};
use revolute::closed_form::{curvature_radii_closed, evolute_point};
use revolute::export::{fmt_f64, write_profile_csv};
use revolute::numerics::linspace;
use revolute::verify::{fd_curvature_radii, interior_range};
use revolute::{
    asymptotic_net, classify_family, constant_angle_curve, evolute_implicit_residual,
    evolute_tangent_axis_length, implicit_residual, line_intersection_poly, normal_curvature,
    offset_params, parameter_window, parse_rational, profile_implicit_full, revolve,
    sample_evolute, sample_profile, tau_from_m, weingarten_residual, Error, ExactFamily,
    FamilyParams, PartialConfig, PlaneCurveSamples, Rational, RunConfig,
};

pub const CONFIG_ENV: &str = "REVOLUTE_CONFIG";

/// Half-width of the default `verify` window, clamped to the family's
/// parameter window.
pub const VERIFY_HALF_WIDTH: f64 = 1.2;
pub const VERIFY_SAMPLES: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus {
    pub code: i32,
}

impl ExitStatus {
    pub const SUCCESS: ExitStatus = ExitStatus { code: 0 };
    pub const USAGE: ExitStatus = ExitStatus { code: 1 };
    pub const DOMAIN: ExitStatus = ExitStatus { code: 2 };
    pub const VERIFY_FAILED: ExitStatus = ExitStatus { code: 3 };

    pub fn is_success(self) -> bool {
        self.code == 0
    }
}

impl From<&Error> for ExitStatus {
    fn from(e: &Error) -> Self {
        if e.is_domain() {
            ExitStatus::DOMAIN
        } else {
            ExitStatus::USAGE
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "revolute",
    version,
    about = "Surfaces of revolution with rho1 + m rho2 = c"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample the profile curve and write it as CSV.
    #[command(allow_negative_numbers = true)]
    Profile(CurveArgs),
    /// Sample the evolute of the profile and write it as CSV.
    #[command(allow_negative_numbers = true)]
    Evolute(CurveArgs),
    /// Write parallel (offset) profiles, one CSV per distance.
    #[command(allow_negative_numbers = true)]
    Offsets(OffsetArgs),
    /// Revolve the profile into an OBJ mesh.
    #[command(allow_negative_numbers = true)]
    Surface(CurveArgs),
    /// Asymptotic net (m > 0) or a constant-angle curve.
    #[command(allow_negative_numbers = true)]
    Asymptotic(AsymptoticArgs),
    /// Run the numerical invariant suite on a family member.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
    /// Algebraic or transcendental verdict for the profile.
    #[command(allow_negative_numbers = true)]
    Classify(FamilyArgs),
    /// Exact line-intersection polynomial and degree certificate.
    #[command(allow_negative_numbers = true)]
    Algebraic(AlgebraicArgs),
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long)]
    m: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long = "J")]
    j: Option<f64>,
    #[arg(long = "K")]
    k: Option<f64>,
}

#[derive(Debug, Args)]
struct WindowArgs {
    #[arg(long)]
    theta_min: Option<f64>,
    #[arg(long)]
    theta_max: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    segments: Option<usize>,
    /// Margin kept from the ends of the parameter window.
    #[arg(long)]
    delta: Option<f64>,
    /// Angles are given in degrees.
    #[arg(long)]
    deg: bool,
}

#[derive(Debug, Args)]
struct CurveArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    window: WindowArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OffsetArgs {
    #[command(flatten)]
    curve: CurveArgs,
    /// Comma-separated offset distances.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    d_list: Vec<f64>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Debug, Args)]
struct AsymptoticArgs {
    #[command(flatten)]
    curve: CurveArgs,
    #[arg(long, default_value_t = -1.0)]
    t_min: f64,
    #[arg(long, default_value_t = 1.0)]
    t_max: f64,
    #[arg(long, default_value_t = -1.0)]
    s_min: f64,
    #[arg(long, default_value_t = 1.0)]
    s_max: f64,
    #[arg(long, default_value_t = 41)]
    nt: usize,
    #[arg(long, default_value_t = 41)]
    ns: usize,
    /// Integrate the curve meeting the parallels at this angle instead.
    #[arg(long)]
    angle: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    theta0: f64,
    #[arg(long, default_value_t = 0.0)]
    phi0: f64,
    #[arg(long, default_value_t = 5.0)]
    arc: f64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    curve: CurveArgs,
    /// Weingarten residual tolerance, relative to the report normalization.
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
    #[arg(long, default_value_t = 1e-6)]
    tractrix_tol: f64,
    #[arg(long, default_value_t = 1e-10)]
    offset_tol: f64,
    #[arg(long, default_value_t = 1e-10)]
    euler_tol: f64,
}

#[derive(Debug, Args)]
struct AlgebraicArgs {
    #[arg(long)]
    m: i64,
    /// Exact decimal or fraction, e.g. `3`, `-0.25`, `7/3`.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    c: String,
    #[arg(long = "J", allow_hyphen_values = true, default_value = "1")]
    j: String,
    #[arg(long = "K", allow_hyphen_values = true, default_value = "0")]
    k: String,
    /// Line `A r + B h = C` as `A,B,C`.
    #[arg(long, allow_hyphen_values = true, default_value = "1,1,1")]
    line: String,
    /// Also print the polynomial coefficients on a second line.
    #[arg(long)]
    show_poly: bool,
}

/// A failed subcommand. `summary`, when present, still goes to stdout.
#[derive(Debug)]
struct Failure {
    status: ExitStatus,
    message: String,
    summary: Option<String>,
}

type Fallible<T> = std::result::Result<T, Failure>;

/// Summary line on success.
type Outcome = Fallible<String>;

fn failure(status: ExitStatus, message: impl Into<String>) -> Failure {
    Failure {
        status,
        message: message.into(),
        summary: None,
    }
}

fn fail(e: Error) -> Failure {
    failure(ExitStatus::from(&e), e.to_string())
}

fn usage(msg: impl Into<String>) -> Failure {
    failure(ExitStatus::USAGE, msg)
}

/// Runs the CLI with process stdio and the `REVOLUTE_CONFIG` environment
/// variable. `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> ExitStatus
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let config = std::env::var_os(CONFIG_ENV).map(PathBuf::from);
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        argv,
        config.as_deref(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// [`run`] with explicit config path and output streams.
pub fn run_with<I, S>(
    argv: I,
    config: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> ExitStatus
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                ExitStatus::USAGE
            } else {
                ExitStatus::SUCCESS
            };
            let text = e.render().to_string();
            if status.is_success() {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return status;
        }
    };
    let result = load_base(config).and_then(|base| dispatch(cli.command, base));
    match result {
        Ok(summary) => {
            let _ = writeln!(out, "{summary}");
            ExitStatus::SUCCESS
        }
        Err(f) => {
            if let Some(summary) = f.summary {
                let _ = writeln!(out, "{summary}");
            }
            let _ = writeln!(err, "revolute: {}", f.message);
            f.status
        }
    }
}

fn load_base(config: Option<&Path>) -> Fallible<PartialConfig> {
    let Some(path) = config else {
        return Ok(PartialConfig::default());
    };
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    PartialConfig::from_json_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn dispatch(cmd: Command, base: PartialConfig) -> Outcome {
    match cmd {
        Command::Profile(a) => cmd_profile(&a, base),
        Command::Evolute(a) => cmd_evolute(&a, base),
        Command::Offsets(a) => cmd_offsets(&a, base),
        Command::Surface(a) => cmd_surface(&a, base),
        Command::Asymptotic(a) => cmd_asymptotic(&a, base),
        Command::Verify(a) => cmd_verify(&a, base),
        Command::Classify(a) => cmd_classify(&a, base),
        Command::Algebraic(a) => cmd_algebraic(&a),
    }
}

impl WindowArgs {
    fn angle(&self, x: f64) -> f64 {
        if self.deg {
            x.to_radians()
        } else {
            x
        }
    }
}

impl CurveArgs {
    fn partial(&self) -> PartialConfig {
        let w = &self.window;
        PartialConfig {
            m: self.family.m,
            c: self.family.c,
            j: self.family.j,
            k: self.family.k,
            theta_min: w.theta_min.map(|x| w.angle(x)),
            theta_max: w.theta_max.map(|x| w.angle(x)),
            samples: w.samples,
            segments: w.segments,
            delta: w.delta.map(|x| w.angle(x)),
            out: self.out.clone(),
        }
    }

    fn resolve(&self, base: PartialConfig) -> Fallible<RunConfig> {
        base.merged_with(self.partial()).resolve().map_err(fail)
    }
}

fn family_summary(p: &FamilyParams<f64>) -> String {
    format!("m={} c={} J={} K={}", p.m, p.c, p.j, p.k)
}

fn window_summary(cfg: &RunConfig) -> String {
    format!(
        "theta_min={} theta_max={} samples={}",
        cfg.theta_min, cfg.theta_max, cfg.samples
    )
}

fn out_summary(path: Option<&Path>) -> String {
    path.map(|p| format!(" out={}", p.display()))
        .unwrap_or_default()
}

fn write_csv(curve: &PlaneCurveSamples<f64>, path: Option<&Path>) -> Fallible<()> {
    match path {
        Some(p) => write_profile_csv(curve, p).map_err(fail),
        None => Ok(()),
    }
}

fn cmd_profile(a: &CurveArgs, base: PartialConfig) -> Outcome {
    let cfg = a.resolve(base)?;
    let curve =
        sample_profile(&cfg.family, cfg.theta_min, cfg.theta_max, cfg.samples).map_err(fail)?;
    write_csv(&curve, cfg.out.as_deref())?;
    Ok(format!(
        "command=profile {} {}{}",
        family_summary(&cfg.family),
        window_summary(&cfg),
        out_summary(cfg.out.as_deref())
    ))
}

fn cmd_evolute(a: &CurveArgs, base: PartialConfig) -> Outcome {
    let cfg = a.resolve(base)?;
    let curve =
        sample_evolute(&cfg.family, cfg.theta_min, cfg.theta_max, cfg.samples).map_err(fail)?;
    write_csv(&curve, cfg.out.as_deref())?;
    Ok(format!(
        "command=evolute {} {}{}",
        family_summary(&cfg.family),
        window_summary(&cfg),
        out_summary(cfg.out.as_deref())
    ))
}

/// `dir/stem.ext` becomes `dir/stem_<i>.ext`.
fn indexed_path(path: &Path, i: usize) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_{i}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{i}"),
    };
    path.with_file_name(name)
}

/// Largest `| |P_d(theta) - P(theta)| - |d| |` over the grid of `base`.
fn offset_distance_error(
    base: &PlaneCurveSamples<f64>,
    off: &PlaneCurveSamples<f64>,
    d: f64,
) -> f64 {
    base.points()
        .iter()
        .zip(off.points())
        .map(|(&p, &q)| ((q - p).norm() - d.abs()).abs())
        .fold(0.0, f64::max)
}

fn point_scale(curve: &PlaneCurveSamples<f64>) -> f64 {
    curve.points().iter().map(|q| q.norm()).fold(0.0, f64::max)
}

fn cmd_offsets(a: &OffsetArgs, base: PartialConfig) -> Outcome {
    let cfg = a.curve.resolve(base)?;
    let p = cfg.family;
    let base_curve = sample_profile(&p, cfg.theta_min, cfg.theta_max, cfg.samples).map_err(fail)?;
    let mut worst = 0.0f64;
    let mut curves = Vec::with_capacity(a.d_list.len());
    for &d in &a.d_list {
        let q = offset_params(&p, d).map_err(fail)?;
        let curve = sample_profile(&q, cfg.theta_min, cfg.theta_max, cfg.samples).map_err(fail)?;
        let err = offset_distance_error(&base_curve, &curve, d);
        let allowed = a.tol * (1.0 + point_scale(&base_curve).max(point_scale(&curve)));
        if !(err <= allowed) {
            return Err(failure(
                ExitStatus::VERIFY_FAILED,
                format!("offset d={d}: distance error {err:e} exceeds {allowed:e}"),
            ));
        }
        worst = worst.max(err);
        curves.push(curve);
    }
    let mut files = Vec::new();
    if let Some(out) = cfg.out.as_deref() {
        for (i, curve) in curves.iter().enumerate() {
            let path = indexed_path(out, i);
            write_profile_csv(curve, &path).map_err(fail)?;
            files.push(path.display().to_string());
        }
    }
    let d_list: Vec<String> = a.d_list.iter().map(|d| d.to_string()).collect();
    let mut s = format!(
        "command=offsets {} {} offsets={} d_list={} max_distance_error={:e}",
        family_summary(&p),
        window_summary(&cfg),
        curves.len(),
        d_list.join(","),
        worst
    );
    if !files.is_empty() {
        let _ = write!(s, " files={}", files.join(","));
    }
    Ok(s)
}

fn cmd_surface(a: &CurveArgs, base: PartialConfig) -> Outcome {
    let cfg = a.resolve(base)?;
    let curve =
        sample_profile(&cfg.family, cfg.theta_min, cfg.theta_max, cfg.samples).map_err(fail)?;
    let mesh = revolve(&curve, cfg.segments).map_err(fail)?;
    if let Some(out) = cfg.out.as_deref() {
        mesh.write_obj(out).map_err(fail)?;
    }
    Ok(format!(
        "command=surface {} {} segments={} vertices={} faces={}{}",
        family_summary(&cfg.family),
        window_summary(&cfg),
        cfg.segments,
        mesh.vertices.len(),
        mesh.faces.len(),
        out_summary(cfg.out.as_deref())
    ))
}

fn cmd_asymptotic(a: &AsymptoticArgs, base: PartialConfig) -> Outcome {
    let partial = base.merged_with(a.curve.partial());
    let w = &a.curve.window;
    let m = partial.m.ok_or_else(|| usage("missing --m"))?;
    let j = partial.j.ok_or_else(|| usage("missing --J"))?;
    if let Some(angle) = a.angle {
        let p = FamilyParams::new(
            m,
            partial.c.ok_or_else(|| usage("missing --c"))?,
            j,
            partial.k.unwrap_or(0.0),
        )
        .map_err(fail)?;
        let n = partial.samples.unwrap_or(revolute::export::DEFAULT_SAMPLES);
        let curve = constant_angle_curve(
            &p,
            w.angle(angle),
            w.angle(a.theta0),
            w.angle(a.phi0),
            a.arc,
            n,
        )
        .map_err(fail)?;
        if let Some(out) = partial.out.as_deref() {
            let mut text = String::from("s,theta,phi,x,y,z\n");
            for i in 0..curve.points.len() {
                let q = curve.points[i];
                let row = [curve.arc[i], curve.theta[i], curve.phi[i], q.x, q.y, q.z].map(fmt_f64);
                let _ = writeln!(text, "{}", row.join(","));
            }
            fs::write(out, text).map_err(|e| usage(format!("{}: {e}", out.display())))?;
        }
        return Ok(format!(
            "command=asymptotic mode=constant_angle {} angle={} samples={} truncated={}{}",
            family_summary(&p),
            w.angle(angle),
            curve.points.len(),
            curve.truncated,
            out_summary(partial.out.as_deref())
        ));
    }
    if let Some(c) = partial.c {
        if c != 0.0 {
            return Err(usage("the asymptotic net is available for c = 0 only"));
        }
    }
    let tau = tau_from_m(m).map_err(fail)?;
    let mesh =
        asymptotic_net(j, tau, (a.t_min, a.t_max), (a.s_min, a.s_max), a.nt, a.ns).map_err(fail)?;
    if let Some(out) = partial.out.as_deref() {
        mesh.write_obj(out).map_err(fail)?;
    }
    Ok(format!(
        "command=asymptotic mode=net m={m} J={j} tau={} vertices={} faces={}{}",
        tau.tau(),
        mesh.vertices.len(),
        mesh.faces.len(),
        out_summary(partial.out.as_deref())
    ))
}

/// One entry of the verification suite.
struct Check {
    name: &'static str,
    value: f64,
    limit: f64,
}

impl Check {
    fn passes(&self) -> bool {
        self.value <= self.limit
    }
}

fn cmd_verify(a: &VerifyArgs, base: PartialConfig) -> Outcome {
    let mut partial = base.merged_with(a.curve.partial());
    if let Some(m) = partial.m.filter(|&m| m != 0.0) {
        let delta = partial.delta.unwrap_or(revolute::export::DEFAULT_DELTA);
        let (lo, hi) = parameter_window(m);
        partial
            .theta_min
            .get_or_insert((lo + delta).max(-VERIFY_HALF_WIDTH));
        partial
            .theta_max
            .get_or_insert((hi - delta).min(VERIFY_HALF_WIDTH));
    }
    partial.samples.get_or_insert(VERIFY_SAMPLES);
    let cfg = partial.resolve().map_err(fail)?;
    let p = cfg.family;
    let curve = sample_profile(&p, cfg.theta_min, cfg.theta_max, cfg.samples).map_err(fail)?;
    let rep = weingarten_residual(p.m, p.c, &curve).map_err(fail)?;
    let mut checks = vec![Check {
        name: "weingarten",
        value: rep.max_abs,
        limit: a.tol * rep.normalization,
    }];

    // finite-difference rho2 must carry the sign of the closed form
    let mut sign_flips = 0usize;
    for i in interior_range(&curve) {
        let t = curve.params()[i];
        let (Ok(fd), Ok(exact)) = (fd_curvature_radii(&curve, i), curvature_radii_closed(&p, t))
        else {
            continue;
        };
        if exact.rho2.abs() > 1e-6 * rep.normalization && fd.rho2.signum() != exact.rho2.signum() {
            sign_flips += 1;
        }
    }
    checks.push(Check {
        name: "orientation",
        value: sign_flips as f64,
        limit: 0.0,
    });

    let scale = 1.0 + point_scale(&curve);
    let mut offset_err = 0.0f64;
    for d in [-1.0, 0.5, 2.0] {
        let q = offset_params(&p, d).map_err(fail)?;
        let off = sample_profile(&q, cfg.theta_min, cfg.theta_max, cfg.samples).map_err(fail)?;
        offset_err = offset_err.max(offset_distance_error(&curve, &off, d) / (scale + d.abs()));
    }
    checks.push(Check {
        name: "offset",
        value: offset_err,
        limit: a.offset_tol,
    });

    let mut euler = 0.0f64;
    for &t in curve.params() {
        let Ok(rad) = curvature_radii_closed(&p, t) else {
            continue;
        };
        if rad.rho1.abs() < 1e-12 || rad.rho2.abs() < 1e-12 {
            continue;
        }
        let total = 1.0 / rad.rho1 + 1.0 / rad.rho2;
        for beta in [0.3, 0.7, 1.1] {
            let (Ok(k1), Ok(k2)) = (
                normal_curvature(&p, t, beta),
                normal_curvature(&p, t, beta + std::f64::consts::FRAC_PI_2),
            ) else {
                continue;
            };
            let mag = 1.0 / rad.rho1.abs() + 1.0 / rad.rho2.abs();
            euler = euler.max((k1 + k2 - total).abs() / mag);
        }
    }
    checks.push(Check {
        name: "euler",
        value: euler,
        limit: a.euler_tol,
    });

    if p.m > 0.0 && p.c == 0.0 {
        let tau = tau_from_m(p.m).map_err(fail)?;
        let mut kn = 0.0f64;
        for &t in curve.params() {
            let (Ok(k), Ok(rad)) = (
                normal_curvature(&p, t, tau.tau()),
                curvature_radii_closed(&p, t),
            ) else {
                continue;
            };
            kn = kn.max((k * rad.rho2).abs());
        }
        checks.push(Check {
            name: "asymptotic_direction",
            value: kn,
            limit: a.euler_tol,
        });
    }

    if p.is_log_branch() && p.c != 0.0 {
        let lo = cfg.theta_min.max(0.1);
        if lo < cfg.theta_max {
            let n = cfg.samples;
            let grid = linspace(lo, cfg.theta_max, n);
            // the evolutes here are regular away from theta = 0
            let ok = grid.iter().all(|&t| evolute_point(&p, t).is_ok());
            if ok {
                let ev = sample_evolute(&p, lo, cfg.theta_max, n).map_err(fail)?;
                let worst = evolute_tangent_axis_length(&ev)
                    .map_err(fail)?
                    .iter()
                    .map(|l| (l.abs() - p.c.abs()).abs())
                    .fold(0.0, f64::max);
                checks.push(Check {
                    name: "tractrix",
                    value: worst,
                    limit: a.tractrix_tol * (1.0 + p.c.abs()),
                });
            }
        }
    }

    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passes()).collect();
    let summary = format!(
        "command=verify {} {} max_residual={:e} normalization={:e} relative={:e} skipped={} checks={} failed={}",
        family_summary(&p),
        window_summary(&cfg),
        rep.max_abs,
        rep.normalization,
        rep.relative(),
        rep.skipped,
        checks.len(),
        failed.len()
    );
    if failed.is_empty() {
        return Ok(summary);
    }
    let mut msg = String::new();
    for c in &failed {
        let _ = write!(
            msg,
            "\n  check {} failed: {:e} > {:e}",
            c.name, c.value, c.limit
        );
    }
    // scripts still get the residual on a failed run
    Err(Failure {
        summary: Some(summary),
        ..failure(
            ExitStatus::VERIFY_FAILED,
            format!("verification failed:{msg}"),
        )
    })
}

fn cmd_classify(a: &FamilyArgs, base: PartialConfig) -> Outcome {
    let m = a.m.or(base.m).ok_or_else(|| usage("missing --m"))?;
    let c = a.c.or(base.c).ok_or_else(|| usage("missing --c"))?;
    let j = a.j.or(base.j).ok_or_else(|| usage("missing --J"))?;
    let class = classify_family(m, c, j).map_err(fail)?;
    let degree = class
        .algebraicity
        .degree()
        .map(|d| format!("degree={d} "))
        .unwrap_or_default();
    Ok(format!(
        "kind={} {}algebraicity={} ref={}",
        class.kind.label(),
        degree,
        class.algebraicity.label(),
        class.basis.tag()
    ))
}

fn parse_line(s: &str) -> Fallible<LineCoeffs> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(usage(format!("--line expects A,B,C, got `{s}`")));
    };
    let q = |x: &str| parse_rational(x).map_err(fail);
    LineCoeffs::new(q(a)?, q(b)?, q(c)?).map_err(fail)
}

fn cmd_algebraic(a: &AlgebraicArgs) -> Outcome {
    let fam = ExactFamily::parse(a.m, &a.c, &a.j, &a.k).map_err(fail)?;
    let line = parse_line(&a.line)?;
    let poly = line_intersection_poly(&fam, &line).map_err(fail)?;
    let roots = line_root_points(&fam, &line).map_err(fail)?;
    let worst = roots.iter().map(|r| r.distance).fold(0.0, f64::max);
    let subst = match fam.substitution().map_err(fail)? {
        Substitution::TanTheta => "tan",
        Substitution::SinTheta => "sin",
    };
    let degree = poly
        .degree()
        .map_or_else(|| "zero".to_string(), |d| d.to_string());
    let mut s = format!(
        "command=algebraic m={} c={} J={} K={} line={} substitution={subst} degree={degree} real_roots={} max_root_distance={:e}",
        fam.m,
        fam.c,
        fam.j,
        fam.k,
        a.line,
        roots.len(),
        worst
    );
    if let Ok(implicit) = profile_implicit_full(&fam) {
        let p = fam.to_params().map_err(fail)?;
        let (lo, hi) = parameter_window(p.m);
        let (lo, hi) = ((lo + 0.05).max(-3.0), (hi - 0.05).min(3.0));
        let curve = sample_profile(&p, lo, hi, 200).map_err(fail)?;
        let _ = write!(
            s,
            " implicit_degree={} implicit_residual={:e}",
            implicit.total_degree().unwrap_or(0),
            implicit_residual(&implicit, &curve)
        );
        if fam.c == Rational::from_integer(0.into()) && fam.k == Rational::from_integer(0.into()) {
            let ev = sample_evolute(&p, lo, hi, 200).map_err(fail)?;
            if let Ok(res) = evolute_implicit_residual(fam.m, &fam.j, &ev) {
                let _ = write!(s, " evolute_residual={res:e}");
            }
        }
    }
    if a.show_poly {
        let _ = write!(s, "\npoly={poly}");
    }
    Ok(s)
}
