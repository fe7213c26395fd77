//! Command-line front end for `hyperreal-core`.
//!
//! [`run`] parses arguments, executes one subcommand and writes its result
//! as text or JSON. Exit codes: 0 on success, 2 when `transfer-check`
//! falsifies a formula, 1 on any error.

pub mod config;
pub mod error;
pub mod json;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use hyperreal_core::calculus::{
    derivative, evt_max, mvt_theta_infinitesimal, mvt_theta_real, riemann_integral, taylor_remainder_check,
    taylor_remainder_check_infinitesimal,
};
use hyperreal_core::formula_dsl::{check, parse_formula_lines, SamplerConfig, Verdict};
use hyperreal_core::transfer_ext::eval_hyper;
use hyperreal_core::{Binding, Expr, LcNumber};

pub use config::{CliConfig, Format, CONFIG_ENV};
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "hyperreal", version, about = "Infinitesimal calculus over a truncated Levi-Civita field")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Config file of `key = value` lines; defaults to $HYPERREAL_CONFIG.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Orders carried past the leading term.
    #[arg(long, global = true)]
    pub depth: Option<u32>,
    /// Cap on stored terms per value.
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    /// Coefficients below this are dropped.
    #[arg(long, global = true)]
    pub zero_tol: Option<f64>,
    /// Tolerance of equality tests.
    #[arg(long, global = true)]
    pub eq_tol: Option<f64>,
    /// Seed of the formula sampler.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Comma-separated Riemann partition counts.
    #[arg(long, global = true)]
    pub schedule: Option<String>,
    /// Grid points per refinement round of evt-max.
    #[arg(long, global = true)]
    pub points_per_round: Option<u64>,
    /// Refinement rounds of evt-max.
    #[arg(long, global = true)]
    pub max_rounds: Option<u32>,
    /// Stop refining once the argmax moves less than this.
    #[arg(long, global = true)]
    pub tol_x: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression over the field.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Binding `name=<field literal>`; repeatable. `eps` is bound by default.
        #[arg(long = "at", allow_hyphen_values = true)]
        at: Vec<String>,
    },
    /// Standard part of a finite field literal.
    St {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// k-th derivative at a real point.
    Derive {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        at: f64,
        #[arg(long, default_value_t = 1)]
        order: u32,
    },
    /// Mean value parameter θ for a real or infinitesimal step.
    MvtTheta {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "h_infinitesimal")]
        h: Option<f64>,
        /// Infinitesimal step, `eps` unless a field literal is given.
        #[arg(long, num_args = 0..=1, default_missing_value = "eps")]
        h_infinitesimal: Option<String>,
    },
    /// Maximum on [a, b] by partition refinement.
    EvtMax {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
    },
    /// Definite integral from extrapolated Riemann sums.
    Integrate {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
    },
    /// Residual of the integral form of Taylor's remainder.
    TaylorCheck {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "infinitesimal")]
        b: Option<f64>,
        /// Use b = a + eps and report the residual series.
        #[arg(long)]
        infinitesimal: bool,
    },
    /// Randomized falsification of every formula in a file.
    TransferCheck {
        file: PathBuf,
        /// Samples per universal block.
        #[arg(long)]
        samples: Option<usize>,
        /// Random candidates per existential block.
        #[arg(long)]
        witness_pool: Option<usize>,
    },
}

/// Resolves defaults, the config file and flag overrides, in that order.
pub fn resolve_config(g: &GlobalOpts) -> Result<CliConfig, CliError> {
    let mut cfg = CliConfig::default();
    let path = g.config.clone().or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    if let Some(p) = path {
        let text = std::fs::read_to_string(&p).map_err(|e| CliError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        })?;
        cfg.load(&text)?;
    }
    if let Some(v) = g.format {
        cfg.format = v;
    }
    if let Some(v) = g.depth {
        cfg.field.depth = v;
    }
    if let Some(v) = g.max_terms {
        cfg.field.max_terms = v;
    }
    if let Some(v) = g.zero_tol {
        cfg.field.zero_tol = v;
    }
    if let Some(v) = g.eq_tol {
        cfg.field.eq_tol = v;
    }
    if let Some(v) = g.seed {
        cfg.seed = v;
    }
    if let Some(v) = &g.schedule {
        cfg.schedule = config::parse_schedule(v).map_err(CliError::Usage)?;
    }
    if let Some(v) = g.points_per_round {
        cfg.refinement.points_per_round = v;
    }
    if let Some(v) = g.max_rounds {
        cfg.refinement.max_rounds = v;
    }
    if let Some(v) = g.tol_x {
        cfg.refinement.tol_x = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Result of one command: both renderings plus the exit code.
struct Rendered {
    text: String,
    json: String,
    code: i32,
}

fn rendered<T: Serialize>(text: String, value: &T) -> Rendered {
    Rendered {
        text,
        json: serde_json::to_string_pretty(value).expect("result types serialize"),
        code: 0,
    }
}

/// Human-readable number: exponent form for very small or large magnitudes.
fn num(v: f64) -> String {
    let m = v.abs();
    if m != 0.0 && m.is_finite() && !(1e-5..1e16).contains(&m) {
        format!("{v:e}")
    } else {
        v.to_string()
    }
}

fn parse_expr(src: &str) -> Result<Expr, CliError> {
    Ok(src.parse::<Expr>()?)
}

fn execute(cmd: &Command, cfg: &CliConfig) -> Result<Rendered, CliError> {
    let fc = cfg.field;
    match cmd {
        Command::Eval { expr, at } => {
            let e = parse_expr(expr)?;
            let mut binding = Binding::new().with("eps", LcNumber::eps(fc));
            for spec in at {
                let (name, lit) = spec
                    .split_once('=')
                    .ok_or_else(|| CliError::Usage(format!("--at expects name=value, got '{spec}'")))?;
                binding.insert(name.trim(), LcNumber::parse(lit, fc)?);
            }
            let v = eval_hyper(&e, &binding, fc)?;
            let out = json::Eval {
                value: json::lc(&v),
                classification: v.classify().as_str(),
            };
            Ok(rendered(v.to_string(), &out))
        }
        Command::St { value } => {
            let v = LcNumber::parse(value, fc)?;
            let st = v.standard_part()?;
            let out = json::StandardPart {
                st,
                classification: v.classify().as_str(),
            };
            Ok(rendered(num(st), &out))
        }
        Command::Derive { expr, at, order } => {
            let e = parse_expr(expr)?;
            let v = derivative(&e, *at, *order, fc)?;
            let out = json::Derivative {
                value: v,
                order: *order,
                at: *at,
            };
            Ok(rendered(num(v), &out))
        }
        Command::MvtTheta {
            expr,
            x,
            h,
            h_infinitesimal,
        } => {
            let e = parse_expr(expr)?;
            let (text, out) = match (h, h_infinitesimal) {
                (Some(h), None) => {
                    let r = mvt_theta_real(&e, *x, *h)?;
                    (format!("theta = {}\n", num(r.theta)), json::Theta::real(&r))
                }
                (None, Some(lit)) => {
                    let h = LcNumber::parse(lit, fc)?;
                    let r = mvt_theta_infinitesimal(&e, *x, &h, fc)?;
                    (format!("theta = {}\n", r.theta), json::Theta::series(&r))
                }
                _ => return Err(CliError::Usage("give exactly one of --h or --h-infinitesimal".into())),
            };
            let mut text = text;
            let lead = out.leading_order.map_or("none".to_string(), |k| k.to_string());
            let _ = write!(
                text,
                "residual_norm = {}\nleading_order = {lead}\ndegenerate = {}",
                num(out.residual_norm),
                out.degenerate
            );
            Ok(rendered(text, &out))
        }
        Command::EvtMax { expr, a, b } => {
            let e = parse_expr(expr)?;
            let r = evt_max(&e, *a, *b, &cfg.refinement)?;
            let text = format!("c = {}\nmax = {}\nrounds = {}", num(r.argmax), num(r.max_value), r.trace.len());
            Ok(rendered(text, &json::Partition::from(&r)))
        }
        Command::Integrate { expr, a, b } => {
            let e = parse_expr(expr)?;
            let r = riemann_integral(&e, *a, *b, &cfg.schedule)?;
            let err = r.error.map_or("none".to_string(), num);
            let text = format!("value = {}\nerror = {err}", num(r.value));
            Ok(rendered(text, &json::Integral::from(&r)))
        }
        Command::TaylorCheck {
            expr,
            a,
            b,
            infinitesimal,
        } => {
            let e = parse_expr(expr)?;
            let out = if *infinitesimal {
                let r = taylor_remainder_check_infinitesimal(&e, *a, fc)?;
                json::Taylor {
                    residual_norm: json::max_abs(&r),
                    residual: json::Value::Series(json::lc(&r)),
                }
            } else {
                let b = b.ok_or_else(|| CliError::Usage("--b is required without --infinitesimal".into()))?;
                let r = taylor_remainder_check(&e, *a, b, &cfg.schedule, fc)?;
                json::Taylor {
                    residual_norm: r,
                    residual: json::Value::Real(r),
                }
            };
            Ok(rendered(format!("residual_norm = {}", num(out.residual_norm)), &out))
        }
        Command::TransferCheck {
            file,
            samples,
            witness_pool,
        } => {
            let src = std::fs::read_to_string(file).map_err(|e| CliError::Io {
                path: file.display().to_string(),
                message: e.to_string(),
            })?;
            let formulas = parse_formula_lines(&src)?;
            let sampler = SamplerConfig {
                samples: samples.unwrap_or(cfg.samples),
                witness_pool: witness_pool.unwrap_or(cfg.witness_pool),
                seed: cfg.seed,
                field: fc,
                ..Default::default()
            };
            let mut reports = Vec::new();
            let mut text = String::new();
            let mut code = 0;
            for (line, f) in &formulas {
                let r = check(f, &sampler)?;
                if r.verdict == Verdict::Falsified {
                    code = 2;
                }
                let _ = write!(text, "line {line}: {} ({} samples) {f}", r.verdict.as_str(), r.samples_used);
                if !r.binding.is_empty() {
                    let b: Vec<String> = r.binding.iter().map(|(k, v)| format!("{k} = {v}")).collect();
                    let _ = write!(text, "\n    binding: {}", b.join(", "));
                }
                text.push('\n');
                reports.push(json::FormulaReport::new(*line, f.to_string(), &r));
            }
            let mut out = rendered(text.trim_end().to_string(), &reports);
            out.code = code;
            Ok(out)
        }
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    let result = resolve_config(&cli.global).and_then(|cfg| Ok((execute(&cli.command, &cfg)?, cfg.format)));
    match result {
        Ok((r, format)) => {
            let body = match format {
                Format::Text => r.text,
                Format::Json => r.json,
            };
            let _ = writeln!(out, "{body}");
            r.code
        }
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.module());
            1
        }
    }
}
