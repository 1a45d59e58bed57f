//! Command-line front end.
//!
//! Exit codes: 0 for a clean run, 1 for input errors, 2 when the result is
//! degenerate or inconclusive.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dynamics::{self, NilpotencyVerdict, ProjPoint};
use crate::error::{Error, Result};
use crate::exact::{self, ExactTensor};
use crate::io::{self, complex_json, round15, TensorInput};
use crate::polysolve::TrackerConfig;
use crate::spectra::{self, CharPolyOutcome, ProbeKind, SpectralReport};
use crate::tensor::C64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "tensor-eigen", version, about = "Eigenpairs of complex tensors by homotopy continuation")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Random seed; 0 draws one from the OS.
    #[arg(long, global = true, default_value_t = crate::polysolve::DEFAULT_SEED)]
    pub seed: u64,
    /// Tolerance for real and sign decisions.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,
    /// Trials of the singular probe.
    #[arg(long, global = true, default_value_t = 5)]
    pub trials: usize,
    /// Largest iterate for the nilpotency check.
    #[arg(long, global = true, default_value_t = 4)]
    pub kmax: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// JSON file with tracker settings.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of eigenclasses of a generic tensor.
    Count { m: usize, n: usize },
    /// All eigenclasses.
    Eig { input: PathBuf },
    /// Characteristic polynomial, numeric and (for 2x2x2 rational input) exact.
    Charpoly { input: PathBuf },
    /// Positive semidefiniteness of an even form.
    Psd { input: PathBuf },
    /// Singular-tensor probe and exact certificate.
    Singular { input: PathBuf },
    /// Hyperdeterminant of a rational 2x2x2 tensor.
    Hyperdet { input: PathBuf },
    /// Base locus, nilpotency and an optional orbit.
    Dynamics {
        input: PathBuf,
        /// Orbit start point, comma separated real coordinates.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        start: Option<Vec<f64>>,
    },
}

/// Text to print and the exit code.
#[derive(Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

fn outcome(format: Format, machine: Value, human: String, code: i32) -> Outcome {
    let text = match format {
        Format::Machine => serde_json::to_string_pretty(&machine).expect("serializable") + "\n",
        Format::Human => human,
    };
    Outcome { text, code }
}

fn tracker(opts: &Options) -> Result<TrackerConfig> {
    let mut cfg = match &opts.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("config: {e}")))?
        }
        None => TrackerConfig::default(),
    };
    if opts.config.is_none() || opts.seed != crate::polysolve::DEFAULT_SEED {
        cfg.seed = opts.seed;
    }
    if cfg.seed == 0 {
        cfg.seed = rand::random::<u64>().max(1);
    }
    cfg.validate()?;
    Ok(cfg)
}

fn load(path: &PathBuf) -> Result<TensorInput> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    io::parse_tensor(&text)
}

fn fmt_c(z: C64) -> String {
    let clean = |v: f64| if v.abs() < 5e-11 { 0.0 } else { round15(v) };
    let (re, im) = (clean(z.re), clean(z.im));
    if im.abs() <= 1e-12 * (1.0 + re.abs()) {
        format!("{re:.10}")
    } else {
        format!("{re:.10}{:+.10}i", im)
    }
}

fn human_report(r: &SpectralReport) -> String {
    let mut s = format!(
        "m = {}, n = {}: {} classes, total multiplicity {} (expected {})\n",
        r.m,
        r.n,
        r.classes.len(),
        r.total_multiplicity,
        r.expected_count
    );
    s += &format!(
        "positive dimensional: {}, failed paths: {}, isotropic classes: {}\n",
        r.positive_dimensional, r.failed_paths, r.isotropic_count
    );
    s += "  mult  iso  lambda                      x\n";
    for c in &r.classes {
        let x: Vec<String> = c.representative.x.iter().map(|&z| fmt_c(z)).collect();
        s += &format!(
            "  {:>4}  {:<3}  {:<26}  ({})\n",
            c.multiplicity,
            if c.isotropic { "yes" } else { "no" },
            fmt_c(c.representative.lambda),
            x.join(", ")
        );
    }
    s += "normalized values (multiplicity):\n";
    for (v, k) in &r.value_multiplicities {
        s += &format!("  {} ({k})\n", fmt_c(*v));
    }
    s
}

fn exact_of(input: &TensorInput) -> Option<&ExactTensor> {
    input.exact.as_ref().filter(|e| e.order() == 3 && e.dim() == 2)
}

fn cmd_count(opts: &Options, m: usize, n: usize) -> Result<Outcome> {
    let d = spectra::expected_count(m, n)?;
    Ok(outcome(opts.format, json!({"m": m, "n": n, "expected_count": d as u64}), format!("{d}\n"), 0))
}

fn cmd_eig(opts: &Options, input: &PathBuf) -> Result<Outcome> {
    let a = load(input)?;
    let r = spectra::eigenclasses(&a.tensor, &tracker(opts)?)?;
    let code = if r.is_complete() { 0 } else { 2 };
    Ok(outcome(opts.format, io::report_json(&r), human_report(&r), code))
}

fn cmd_charpoly(opts: &Options, input: &PathBuf) -> Result<Outcome> {
    let a = load(input)?;
    let cfg = tracker(opts)?;
    let numeric = spectra::characteristic_polynomial_numeric(&a.tensor, &cfg)?;
    let mut machine = json!({});
    let mut human = String::new();
    let mut code = 0;
    match &numeric {
        CharPolyOutcome::Polynomial(p) => {
            let var = if p.in_lambda_squared { "mu = lambda^2" } else { "lambda" };
            machine["numeric"] = json!({
                "variable": var,
                "degree": p.degree,
                "coefficients": p.coefficients.iter().map(|&z| complex_json(z)).collect::<Vec<_>>(),
            });
            human += &format!("numeric (monic in {var}, degree {}), lowest degree first:\n", p.degree);
            for c in &p.coefficients {
                human += &format!("  {}\n", fmt_c(*c));
            }
        }
        CharPolyOutcome::Indeterminate(why) => {
            machine["numeric"] = json!({"indeterminate": why});
            human += &format!("numeric: indeterminate ({why})\n");
            code = 2;
        }
    }
    if let Some(e) = exact_of(&a) {
        let p = exact::charpoly_exact_2_3(e)?;
        let [c2, c4, c6, c8] = p.coefficients().map(|c| c.to_string());
        machine["exact"] = json!({"C2": c2, "C4": c4, "C6": c6, "C8": c8, "method": format!("{:?}", p.method)});
        human += &format!("exact: C2 = {c2}, C4 = {c4}, C6 = {c6}, C8 = {c8} ({:?})\n", p.method);
    }
    Ok(outcome(opts.format, machine, human, code))
}

fn cmd_psd(opts: &Options, input: &PathBuf) -> Result<Outcome> {
    let a = load(input)?;
    let f = a.require_form()?;
    let v = spectra::is_positive_semidefinite(&f, &tracker(opts)?, opts.tol)?;
    Ok(outcome(opts.format, json!({"psd": v}), format!("PSD: {v}\n"), 0))
}

fn cmd_singular(opts: &Options, input: &PathBuf) -> Result<Outcome> {
    let a = load(input)?;
    let r = spectra::singular_probe(&a.tensor, opts.trials, &tracker(opts)?)?;
    let vals = |v: &[C64]| v.iter().map(|&z| complex_json(z)).collect::<Vec<_>>();
    let (kind, values, mut code) = match &r.kind {
        ProbeKind::FiniteValues(v) => ("finite", vals(v), 0),
        ProbeKind::CofiniteComplement(e) => ("cofinite", vals(e), 0),
        ProbeKind::Inconclusive => ("inconclusive", Vec::new(), 2),
    };
    let mut machine = json!({
        "probe": {"kind": kind, "values": values, "trials": r.trials, "hits": r.hits, "failed_trials": r.failed_trials}
    });
    let mut human = format!("probe: {kind} ({} of {} trials hit)\n", r.hits, r.trials);
    match &r.kind {
        ProbeKind::FiniteValues(v) => human += &format!("  values: {}\n", fmt_list(v)),
        ProbeKind::CofiniteComplement(e) => human += &format!("  exceptions: {}\n", fmt_list(e)),
        ProbeKind::Inconclusive => {}
    }
    if let Some(e) = exact_of(&a) {
        let s = exact::is_singular_222(e)?;
        machine["exact"] = json!({"singular": s});
        human += &format!("exact: {}\n", if s { "singular" } else { "not singular" });
        if s != matches!(r.kind, ProbeKind::CofiniteComplement(_)) {
            code = 2;
        }
    }
    Ok(outcome(opts.format, machine, human, code))
}

fn fmt_list(v: &[C64]) -> String {
    let s: Vec<String> = v.iter().map(|&z| fmt_c(z)).collect();
    format!("{{{}}}", s.join(", "))
}

fn cmd_hyperdet(opts: &Options, input: &PathBuf) -> Result<Outcome> {
    let a = load(input)?;
    let d = exact::hyperdeterminant_222(a.require_exact()?)?.to_string();
    Ok(outcome(opts.format, json!({"hyperdeterminant": d}), format!("{d}\n"), 0))
}

fn cmd_dynamics(opts: &Options, input: &PathBuf, start: &Option<Vec<f64>>) -> Result<Outcome> {
    let a = load(input)?;
    let cfg = tracker(opts)?;
    let base = dynamics::base_locus(&a.tensor, &cfg)?;
    let verdict = dynamics::nilpotency(&a.tensor, opts.kmax, &cfg)?;
    let pts = |p: &[Vec<C64>]| {
        p.iter().map(|x| x.iter().map(|&z| complex_json(z)).collect::<Vec<_>>()).collect::<Vec<_>>()
    };
    let (vjson, vtext, code) = match &verdict {
        NilpotencyVerdict::Nilpotent(k) => (json!({"nilpotent": k}), format!("nilpotent at iterate {k}"), 0),
        NilpotencyVerdict::NotNilpotent(w) => (
            json!({"not_nilpotent": complex_json(w.lambda())}),
            format!("not nilpotent (eigenvalue {})", fmt_c(w.lambda())),
            0,
        ),
        NilpotencyVerdict::Undetermined(k) => (json!({"undetermined": k}), format!("undetermined up to iterate {k}"), 2),
    };
    let mut machine = json!({
        "base_locus": pts(&base.points),
        "positive_dimensional": base.positive_dimensional,
        "nilpotency": vjson,
    });
    let mut human = format!("base locus, {} point(s):\n", base.points.len());
    for p in &base.points {
        human += &format!("  ({})\n", p.iter().map(|&z| fmt_c(z)).collect::<Vec<_>>().join(" : "));
    }
    human += &format!("nilpotency: {vtext}\n");
    if let Some(s) = start {
        let o = dynamics::orbit(&a.tensor, &ProjPoint::real(s)?, opts.kmax.max(1) * 4)?;
        let mut trace = Vec::new();
        human += "orbit (step, point, distance to previous):\n";
        for (k, p) in o.points.iter().enumerate() {
            let d = if k == 0 { 0.0 } else { o.distances[k - 1] };
            trace.push(json!({"step": k, "point": pts(&[p.coords().to_vec()])[0], "distance": round15(d)}));
            let coords: Vec<String> = p.coords().iter().map(|&z| fmt_c(z)).collect();
            human += &format!("{k} {} {:.6e}\n", coords.join(" "), d);
        }
        if o.hit_base_locus {
            human += "orbit reached the base locus\n";
        }
        machine["orbit"] = json!({"trace": trace, "hit_base_locus": o.hit_base_locus, "fixed": o.fixed_point.is_some()});
    }
    Ok(outcome(opts.format, machine, human, code))
}

pub fn execute(cli: &CliConfig) -> Result<Outcome> {
    let o = &cli.opts;
    match &cli.command {
        Command::Count { m, n } => cmd_count(o, *m, *n),
        Command::Eig { input } => cmd_eig(o, input),
        Command::Charpoly { input } => cmd_charpoly(o, input),
        Command::Psd { input } => cmd_psd(o, input),
        Command::Singular { input } => cmd_singular(o, input),
        Command::Hyperdet { input } => cmd_hyperdet(o, input),
        Command::Dynamics { input, start } => cmd_dynamics(o, input, start),
    }
}

/// Parses arguments, runs, prints and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.opts.output {
                Some(p) => std::fs::write(p, &out.text).map_err(|e| e.to_string()),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => out.code,
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
        Err(e @ Error::Inconclusive(_)) => {
            eprintln!("{e}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
