//! `fpp-lab`: JSON front end for `fpp-core`.
//!
//! Simple-root indices are 1-based on the command line and in every JSON
//! document printed here. Exit status is 0 on success, 1 when a verification
//! fails and 2 on bad input.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use fpp_core::figure::{load_overlay, write_svg, Frame, Scene, SceneOptions};
use fpp_core::fpp::{dirac_radius_squared, fpp_violations, in_dirac_ball, in_fpp, induction_certificate};
use fpp_core::infchar::DEFAULT_ORBIT_CAP;
use fpp_core::lemma::{boundary_witness, sweep_parallel, verify_lemma, AlphaSelection, LemmaStatus};
use fpp_core::rational::parse_rational_list;
use fpp_core::weights::{weight_system_capped, DEFAULT_WEIGHT_CAP};
use fpp_core::{DiagramInvolution, Error as CoreError, RootDatum, Weight};

pub mod config;
pub mod view;

use config::{GridArg, SweepConfig};

/// Environment variable overriding the orbit and weight enumeration caps.
pub const CAP_ENV: &str = "FPP_LAB_CAP";

#[derive(Debug, Parser)]
#[command(name = "fpp-lab", version, about = "Root data, FPP bounds and lemma checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root data
    #[command(subcommand)]
    Rootdata(RootdataCmd),
    /// Weight systems of irreducible representations
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// Fundamental parallelepiped and induction certificates
    #[command(subcommand)]
    Fpp(FppCmd),
    /// Generation lemma checks
    #[command(subcommand)]
    Lemma(LemmaCmd),
    /// Rank-two pictures
    #[command(subcommand)]
    Figure(FigureCmd),
}

#[derive(Debug, Subcommand)]
pub enum RootdataCmd {
    /// Print Cartan matrix, positive roots, rho and the weight Gram matrix
    Show {
        /// Type label such as `G2` or `A2xB2`, or a path to a datum JSON document
        datum: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum WeightsCmd {
    /// List the weights of L(highest)
    List {
        #[arg(long)]
        datum: String,
        /// Highest weight in fundamental-weight coordinates, e.g. `1,0`
        #[arg(long, allow_hyphen_values = true)]
        highest: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum FppCmd {
    /// Test FPP and Dirac-ball membership; with `--delta`, build a certificate
    Check {
        #[arg(long)]
        datum: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// `id`, `swap`, or a 1-based permutation such as `3,2,1`
        #[arg(long)]
        delta: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum LemmaCmd {
    /// Check one parameter against one simple root
    Verify {
        #[arg(long)]
        datum: String,
        /// 1-based simple root index
        #[arg(long)]
        alpha: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Sweep a grid of parameters
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct SweepArgs {
    /// Comma-separated type labels
    #[arg(long)]
    pub datum: Option<String>,
    /// `default` or a comma-separated value list used in every coordinate
    #[arg(long)]
    pub grid: Option<String>,
    /// Comma-separated 1-based simple roots (default: all)
    #[arg(long)]
    pub alpha: Option<String>,
    /// TOML file with `datum`, `grid`, `values`, `alpha`, `parallel`
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Worker threads
    #[arg(long)]
    pub parallel: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum FigureCmd {
    /// Write the SVG scene and print layer statistics
    Emit {
        #[arg(long)]
        datum: String,
        /// Reducibility lines drawn for |n| <= levels
        #[arg(long, default_value_t = 6)]
        levels: u32,
        #[arg(long)]
        overlay: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Half-width of the square frame (default 1.15 |rho|)
        #[arg(long)]
        frame: Option<f64>,
    },
}

/// Non-error outcome of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success,
    VerificationFailed,
    /// Input was well formed but outside a command's hypotheses.
    Rejected,
}

impl Exit {
    pub fn code(self) -> i32 {
        match self {
            Exit::Success => 0,
            Exit::VerificationFailed => 1,
            Exit::Rejected => 2,
        }
    }
}

/// Runs a parsed command, writing JSON to `out` and timing to standard error.
/// An `Err` means bad input (exit 2).
pub fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<Exit> {
    let (value, exit) = match cli.command {
        Command::Rootdata(RootdataCmd::Show { datum }) => (cmd_rootdata_show(&datum)?, Exit::Success),
        Command::Weights(WeightsCmd::List { datum, highest }) => {
            (cmd_weights_list(&datum, &highest)?, Exit::Success)
        }
        Command::Fpp(FppCmd::Check { datum, lambda, delta }) => {
            (cmd_fpp_check(&datum, &lambda, delta.as_deref())?, Exit::Success)
        }
        Command::Lemma(LemmaCmd::Verify { datum, alpha, lambda }) => {
            cmd_lemma_verify(&datum, alpha, &lambda)?
        }
        Command::Lemma(LemmaCmd::Sweep(args)) => cmd_lemma_sweep(&args)?,
        Command::Figure(FigureCmd::Emit { datum, levels, overlay, out: path, frame }) => {
            (cmd_figure_emit(&datum, levels, overlay.as_deref(), &path, frame)?, Exit::Success)
        }
    };
    serde_json::to_writer_pretty(&mut *out, &value)?;
    writeln!(out)?;
    Ok(exit)
}

/// Parses `args` and runs; returns the process exit status.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return e.exit_code();
        }
    };
    match run(cli, out) {
        Ok(exit) => exit.code(),
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

/// Enumeration cap from [`CAP_ENV`], if set.
pub fn cap_override() -> anyhow::Result<Option<usize>> {
    match std::env::var(CAP_ENV) {
        Ok(s) => {
            let cap: usize = s.trim().parse().with_context(|| format!("{CAP_ENV}=`{s}` is not a count"))?;
            if cap == 0 {
                bail!("{CAP_ENV} must be positive");
            }
            Ok(Some(cap))
        }
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(anyhow!("{CAP_ENV}: {e}")),
    }
}

/// A type label, or a path to a JSON datum document.
pub fn load_datum(source: &str) -> anyhow::Result<RootDatum> {
    let path = Path::new(source);
    if source.ends_with(".json") || path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {source}"))?;
        return RootDatum::from_json(&text).with_context(|| format!("datum document {source}"));
    }
    RootDatum::build(source).with_context(|| format!("datum `{source}`"))
}

fn parse_weight(datum: &RootDatum, s: &str) -> anyhow::Result<Weight> {
    let w = Weight::new(parse_rational_list(s)?);
    datum.check(&w)?;
    Ok(w)
}

/// Resolves `id`, `swap` or a 1-based permutation.
pub fn parse_delta(datum: &RootDatum, s: &str) -> anyhow::Result<DiagramInvolution> {
    match s.trim() {
        "id" | "identity" => Ok(DiagramInvolution::identity(datum.rank())),
        "swap" => {
            let nontrivial: Vec<_> =
                datum.involution_candidates().iter().filter(|d| !d.is_identity()).collect();
            match nontrivial.as_slice() {
                [] => bail!("{} has no nontrivial diagram involution", datum.label()),
                [one] => Ok((*one).clone()),
                _ => bail!(
                    "{} has several diagram involutions; give the permutation explicitly",
                    datum.label()
                ),
            }
        }
        list => {
            let perm = list
                .split(',')
                .map(|t| match t.trim().parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(i - 1),
                    _ => Err(anyhow!("invalid permutation entry `{t}`")),
                })
                .collect::<anyhow::Result<Vec<_>>>()?;
            Ok(DiagramInvolution::new(datum, perm)?)
        }
    }
}

pub fn cmd_rootdata_show(source: &str) -> anyhow::Result<Value> {
    let d = load_datum(source)?;
    let doc = d.to_document();
    let n = d.rank();
    let weights: Vec<Weight> = (0..n).map(|i| d.fundamental_weight(i)).collect::<Result<_, _>>()?;
    let gram: Vec<Vec<String>> = weights
        .iter()
        .map(|a| weights.iter().map(|b| d.invariant_form(a, b).map(|r| r.to_string())).collect())
        .collect::<Result<_, _>>()?;
    Ok(json!({
        "type": doc.type_label,
        "rank": doc.rank,
        "cartan": doc.cartan,
        "symmetrizer": view::rationals(&doc.symmetrizer),
        "positive_roots": d.positive_roots(),
        "rho": d.rho(),
        "fundamental_weight_gram": gram,
    }))
}

pub fn cmd_weights_list(source: &str, highest: &str) -> anyhow::Result<Value> {
    let d = load_datum(source)?;
    let h = parse_weight(&d, highest)?;
    let cap = cap_override()?.unwrap_or(DEFAULT_WEIGHT_CAP);
    let system = weight_system_capped(&d, &h, cap)?;
    Ok(json!({
        "datum": d.label().to_string(),
        "highest": h,
        "count": system.len(),
        "weights": system.members(),
    }))
}

pub fn cmd_fpp_check(source: &str, lambda: &str, delta: Option<&str>) -> anyhow::Result<Value> {
    let d = load_datum(source)?;
    let w = parse_weight(&d, lambda)?;
    let delta = delta.map(|s| parse_delta(&d, s)).transpose()?;
    let dominant = w.is_dominant();
    let violations: Vec<usize> =
        if dominant { fpp_violations(&d, &w)?.into_iter().map(|i| i + 1).collect() } else { Vec::new() };
    let mut value = json!({
        "datum": d.label().to_string(),
        "lambda": w,
        "dominant": dominant,
        "in_fpp": in_fpp(&d, &w)?,
        "violations": violations,
        "in_dirac_ball": in_dirac_ball(&d, &w)?,
        "norm_squared": d.norm_squared(&w).to_string(),
        "dirac_radius_squared": dirac_radius_squared(&d).to_string(),
    });
    if let Some(delta) = delta {
        value["certificate"] = match induction_certificate(&d, &w, &delta) {
            Ok(cert) => view::certificate(&cert),
            Err(e) => view::certificate_error(&e),
        };
    }
    Ok(value)
}

pub fn cmd_lemma_verify(source: &str, alpha: usize, lambda: &str) -> anyhow::Result<(Value, Exit)> {
    let d = load_datum(source)?;
    let w = parse_weight(&d, lambda)?;
    if alpha == 0 || alpha > d.rank() {
        bail!("alpha must be between 1 and {}", d.rank());
    }
    let report = verify_lemma(&d, alpha - 1, &w)?;
    let mut value = view::lemma_report(&report);
    let exit = match report.status {
        LemmaStatus::Pass => Exit::Success,
        LemmaStatus::Fail => Exit::VerificationFailed,
        LemmaStatus::Precondition => Exit::Rejected,
        LemmaStatus::Boundary => match boundary_witness(&d, alpha - 1, &w) {
            Ok(mu) => {
                value["witness"] = json!({ "mu": mu, "shifted": d.reflect(&w, alpha - 1)? });
                Exit::Success
            }
            Err(e) => {
                value["witness_error"] = json!(e.to_string());
                Exit::VerificationFailed
            }
        },
    };
    Ok((value, exit))
}

pub fn cmd_lemma_sweep(args: &SweepArgs) -> anyhow::Result<(Value, Exit)> {
    let mut cfg = match &args.config {
        Some(path) => SweepConfig::load(path)?,
        None => SweepConfig::default(),
    };
    cfg.apply_flags(args)?;
    let labels = cfg.datum.clone().ok_or_else(|| anyhow!("no datum given (--datum or config)"))?;
    if labels.is_empty() {
        bail!("empty datum list");
    }
    let threads = cfg.parallel.unwrap_or(1);
    if threads == 0 {
        bail!("--parallel must be at least 1");
    }
    let mut reports = Vec::new();
    let mut exit = Exit::Success;
    for label in &labels {
        let d = load_datum(label)?;
        let mut grid = cfg.grid.clone().unwrap_or(GridArg::Default).to_spec(d.rank())?;
        if let Some(alphas) = &cfg.alpha {
            if alphas.iter().any(|&a| a == 0 || a > d.rank()) {
                bail!("alpha indices must be between 1 and {} for {label}", d.rank());
            }
            grid = grid.with_alphas(AlphaSelection::Indices(alphas.iter().map(|a| a - 1).collect()));
        }
        let start = Instant::now();
        let report = sweep_parallel(&d, &grid, threads)?;
        eprintln!("{}: {:.3}s", report.datum, start.elapsed().as_secs_f64());
        if report.status == fpp_core::lemma::SweepStatus::Fail {
            exit = Exit::VerificationFailed;
        }
        reports.push(view::sweep_report(&report));
    }
    let status = if exit == Exit::Success { "pass" } else { "fail" };
    Ok((json!({ "status": status, "reports": reports }), exit))
}

pub fn cmd_figure_emit(
    source: &str,
    levels: u32,
    overlay: Option<&Path>,
    out: &Path,
    frame: Option<f64>,
) -> anyhow::Result<Value> {
    let d = load_datum(source)?;
    if d.rank() != 2 {
        return Err(CoreError::NotRankTwo(d.rank()).into());
    }
    let frame = match frame {
        Some(h) if h.is_finite() && h > 0.0 => Some(Frame::square(h)),
        Some(h) => bail!("frame half-width must be positive, got {h}"),
        None => None,
    };
    let overlay = overlay
        .map(|p| load_overlay(p, &d).with_context(|| format!("overlay {}", p.display())))
        .transpose()?;
    let opts = SceneOptions {
        levels,
        frame,
        overlay,
        orbit_cap: cap_override()?.unwrap_or(DEFAULT_ORBIT_CAP),
    };
    let scene = Scene::build(&d, &opts)?;
    write_svg(&scene, out).with_context(|| format!("writing {}", out.display()))?;
    Ok(json!({
        "datum": d.label().to_string(),
        "out": out.display().to_string(),
        "frame": scene.frame,
        "layers": scene.stats(),
    }))
}
