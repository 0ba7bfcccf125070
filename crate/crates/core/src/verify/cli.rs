//! `wickstar star eval | verify | rigidity`.
//!
//! Exit codes: 0 success, 1 a check failed, 2 input or domain error,
//! 3 non-convergence, 4 internal error. Errors are printed as a JSON body
//! `{"error": {"kind": ..., "message": ...}}` on stdout.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::Error;
use crate::function::{BiPoly, EntireFn};
use crate::peschl_minda::DiskFunction;
use crate::rigidity::{bundled_names, bundled_spec, RigiditySpec};
use crate::scalar::{c64, pair, C64};
use crate::sphere::AutDisk;
use crate::star::{star_annulus, star_disk, star_punctured, Hbar, StarConfig, StarMode, StarResult};
use crate::surface::{chart_f_0, chart_f_r, AnnulusElement};

use super::report::Mode;
use super::suites::{run_suites, suite_names, Injection, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_NON_CONVERGENCE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "wickstar", version, about = "Convergent Wick-type star products: evaluation, verification and rigidity experiments")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Star-product evaluation.
    Star {
        #[command(subcommand)]
        command: StarCommand,
    },
    /// Run the verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Run an invariant-subspace, obstruction or fixed-point experiment.
    Rigidity(RigidityArgs),
}

#[derive(Subcommand, Debug)]
enum StarCommand {
    /// Evaluate f ⋆ g at points of the disk, an annulus or the punctured disk.
    Eval(EvalArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Surface {
    Disk,
    Annulus,
    Punctured,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long, value_enum)]
    surface: Surface,
    /// First factor: JSON, or @FILE.
    #[arg(long)]
    f: String,
    /// Second factor: JSON, or @FILE.
    #[arg(long)]
    g: String,
    /// ħ as RE[,IM].
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    hbar: C64,
    /// Evaluation point RE[,IM] on the surface; repeatable.
    #[arg(long = "at", value_parser = parse_complex, allow_hyphen_values = true, required = true)]
    at: Vec<C64>,
    /// Treat the points as chart values w instead of surface points (annulus, punctured).
    #[arg(long)]
    chart: bool,
    /// Annulus modulus.
    #[arg(long = "R", value_name = "R")]
    r: Option<f64>,
    #[arg(long, default_value_t = StarConfig::default().max_terms)]
    max_terms: usize,
    #[arg(long, default_value_t = StarConfig::default().tol)]
    tol: f64,
    /// Refuse non-terminating series instead of truncating them.
    #[arg(long)]
    exact_finite: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// A single check, or "all".
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Override every check's tolerance.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    /// Deliberately break one ingredient.
    #[arg(long, value_enum)]
    inject: Option<Injection>,
    /// Include per-check runtimes (the report is then no longer reproducible).
    #[arg(long)]
    timings: bool,
    /// List the check names and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Args, Debug)]
struct RigidityArgs {
    #[arg(long, conflicts_with = "bundled", required_unless_present_any = ["bundled", "list"])]
    spec: Option<PathBuf>,
    #[arg(long)]
    bundled: Option<String>,
    /// Write the singular-value spectrum as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// List the bundled specs and exit.
    #[arg(long)]
    list: bool,
}

fn parse_complex(s: &str) -> Result<C64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    match parts.as_slice() {
        [re] => Ok(c64(num(re)?, 0.0)),
        [re, im] => Ok(c64(num(re)?, num(im)?)),
        _ => Err(format!("expected RE or RE,IM, got {s:?}")),
    }
}

/// Disk functions on the command line.
///
/// `{"type":"bipoly","terms":[[i,j,[re,im]],...]}` is `Σ a_ij zⁱ z̄ʲ`;
/// `composed-p` and `composed-q` take an entire function `g`; `pullback`
/// composes with `e^{iθ}(z − α)/(1 − ᾱz)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum DiskWire {
    Bipoly {
        terms: Vec<(u32, u32, [f64; 2])>,
    },
    Z,
    Zbar,
    Constant {
        #[serde(with = "pair")]
        value: C64,
    },
    ComposedP {
        g: EntireFn,
    },
    ComposedQ {
        g: EntireFn,
    },
    Pullback {
        inner: Box<DiskWire>,
        theta: f64,
        #[serde(with = "pair")]
        alpha: C64,
    },
}

impl DiskWire {
    pub fn build(&self) -> crate::Result<DiskFunction> {
        Ok(match self {
            DiskWire::Bipoly { terms } => {
                let mut f = BiPoly::zero();
                for &(i, j, [re, im]) in terms {
                    f.add_term(i, j, c64(re, im));
                }
                DiskFunction::poly(f)
            }
            DiskWire::Z => DiskFunction::z(),
            DiskWire::Zbar => DiskFunction::zbar(),
            DiskWire::Constant { value } => DiskFunction::constant(*value),
            DiskWire::ComposedP { g } => DiskFunction::ComposedP(g.clone()),
            DiskWire::ComposedQ { g } => DiskFunction::ComposedQ(g.clone()),
            DiskWire::Pullback { inner, theta, alpha } => {
                DiskFunction::pullback(inner.build()?, AutDisk::from_angle(*theta, *alpha)?)
            }
        })
    }
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        CliOutput {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn error(kind: &str, message: impl std::fmt::Display, code: i32) -> Self {
        let body = json!({"error": {"kind": kind, "message": message.to_string()}});
        CliOutput {
            stdout: pretty(&body),
            stderr: String::new(),
            code,
        }
    }

    fn from_error(e: &Error) -> Self {
        let kind = if e.is_domain() { "domain" } else { "input" };
        Self::error(kind, e, EXIT_DOMAIN)
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn read_arg(s: &str) -> Result<String, Error> {
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}"))),
        None => Ok(s.to_string()),
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(what: &str, s: &str) -> Result<T, Error> {
    serde_json::from_str(&read_arg(s)?).map_err(|e| Error::Invalid(format!("{what}: {e}")))
}

#[derive(Serialize)]
struct EvalPoint {
    #[serde(with = "pair")]
    at: C64,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_pair")]
    w: Option<C64>,
    #[serde(flatten)]
    result: StarResult,
}

fn opt_pair<S: serde::Serializer>(w: &Option<C64>, s: S) -> Result<S::Ok, S::Error> {
    match w {
        Some(z) => pair::serialize(z, s),
        None => s.serialize_none(),
    }
}

fn star_eval(args: &EvalArgs) -> CliOutput {
    let run = || -> Result<Vec<EvalPoint>, Error> {
        let h = Hbar::new(args.hbar)?;
        let mut cfg = StarConfig::default().with_max_terms(args.max_terms).with_tol(args.tol);
        if args.exact_finite {
            cfg.mode = StarMode::ExactFinite;
        }
        let mut out = Vec::with_capacity(args.at.len());
        match args.surface {
            Surface::Disk => {
                if args.chart {
                    return Err(Error::Invalid("--chart applies to the annulus and the punctured disk".into()));
                }
                let f = parse_json::<DiskWire>("--f", &args.f)?.build()?;
                let g = parse_json::<DiskWire>("--g", &args.g)?.build()?;
                for &z in &args.at {
                    out.push(EvalPoint {
                        at: z,
                        w: None,
                        result: star_disk(&f, &g, &h, z, &cfg)?,
                    });
                }
            }
            Surface::Annulus | Surface::Punctured => {
                let f: EntireFn = parse_json("--f", &args.f)?;
                let g: EntireFn = parse_json("--g", &args.g)?;
                let r = match (args.surface, args.r) {
                    (Surface::Annulus, None) => return Err(Error::Invalid("--R is required for the annulus".into())),
                    (Surface::Annulus, Some(r)) => Some(AnnulusElement::new(r, f.clone())?.modulus()),
                    (_, Some(_)) => return Err(Error::Invalid("--R applies to the annulus only".into())),
                    _ => None,
                };
                for &z in &args.at {
                    let w = match (args.chart, r) {
                        (true, _) => z,
                        (false, Some(r)) => chart_f_r(r, z)?,
                        (false, None) => chart_f_0(z)?,
                    };
                    let result = match r {
                        Some(_) => star_annulus(&f, &g, &h, w, &cfg)?,
                        None => star_punctured(&f, &g, &h, w, &cfg)?,
                    };
                    out.push(EvalPoint { at: z, w: Some(w), result });
                }
            }
        }
        Ok(out)
    };
    let points = match run() {
        Ok(p) => p,
        Err(e) => return CliOutput::from_error(&e),
    };
    let surface = format!("{:?}", args.surface).to_lowercase();
    let body = json!({
        "surface": surface,
        "hbar": [args.hbar.re, args.hbar.im],
        "results": points,
    });
    if points.iter().all(|p| p.result.converged) {
        CliOutput::ok(pretty(&body))
    } else {
        let body = json!({
            "error": {"kind": "non-convergence", "message": "a star series did not meet the truncation rule within --max-terms"},
            "surface": body["surface"],
            "hbar": body["hbar"],
            "results": body["results"],
        });
        CliOutput {
            stdout: pretty(&body),
            stderr: String::new(),
            code: EXIT_NON_CONVERGENCE,
        }
    }
}

fn verify(args: &VerifyArgs) -> CliOutput {
    if args.list {
        return CliOutput::ok(suite_names().join("\n") + "\n");
    }
    let opts = SuiteOptions {
        seed: args.seed,
        mode: args.mode,
        tol: args.tol,
        inject: args.inject,
        timings: args.timings,
        suite: args.suite.clone(),
    };
    match run_suites(&opts) {
        Ok(report) => CliOutput {
            stdout: report.to_json() + "\n",
            stderr: report
                .failures()
                .map(|c| format!("FAIL {}: max residual {:e}\n", c.name, c.max_residual))
                .collect(),
            code: if report.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED },
        },
        Err(e @ Error::Invalid(_)) => CliOutput::error("input", e, EXIT_DOMAIN),
        Err(e) => CliOutput::error("internal", e, EXIT_INTERNAL),
    }
}

fn rigidity(args: &RigidityArgs) -> CliOutput {
    if args.list {
        return CliOutput::ok(bundled_names().join("\n") + "\n");
    }
    let spec = match (&args.spec, &args.bundled) {
        (Some(path), _) => std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
            .and_then(|t| RigiditySpec::from_json(&t)),
        (None, Some(name)) => bundled_spec(name),
        (None, None) => Err(Error::Invalid("one of --spec or --bundled is required".into())),
    };
    let report = match spec.and_then(|s| s.run()) {
        Ok(r) => r,
        Err(e) => return CliOutput::from_error(&e),
    };
    if let Some(path) = &args.csv {
        let Some(csv) = report.spectrum_csv() else {
            return CliOutput::error("input", "this experiment has no spectrum to write", EXIT_DOMAIN);
        };
        if let Err(e) = std::fs::write(path, csv) {
            return CliOutput::error("internal", format!("{}: {e}", path.display()), EXIT_INTERNAL);
        }
    }
    CliOutput::ok(pretty(&report))
}

fn configure_threads() {
    if let Some(n) = std::env::var("WICKSTAR_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_DOMAIN } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                CliOutput::ok(text)
            };
        }
    };
    configure_threads();
    let result = std::panic::catch_unwind(|| match &cli.command {
        Command::Star {
            command: StarCommand::Eval(a),
        } => star_eval(a),
        Command::Verify(a) => verify(a),
        Command::Rigidity(a) => rigidity(a),
    });
    result.unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<String>()
            .map(String::as_str)
            .or_else(|| panic.downcast_ref::<&str>().copied())
            .unwrap_or("unknown panic");
        CliOutput::error("internal", msg, EXIT_INTERNAL)
    })
}
