use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hydrent::fit::{fit_by_q, Model};
use hydrent::output::{read_rows, write_rows, Format};
use hydrent::saturation::{check_saturation, Engine, SaturationConfig};
use hydrent::state_spec::StateTemplate;
use hydrent::sweep::{parse_dims, parse_qs, run_sweep, MethodSel, PartSel, SpaceSel, SweepConfig};
use hydrent::theorem::{j1_grid, j2_grid};
use hydrent::{config, CliError, Result};
use hydrent_core::asymptotics::{Form, SeriesOptions};
use hydrent_core::quadrature::QuadratureSpec;

#[derive(Parser)]
#[command(name = "hydrent", version, about = "Entropic measures of D-dimensional hydrogenic states")]
struct Cli {
    /// Flat key = value file of default flags (command-line flags win).
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Evaluate one state at one q.
    #[command(args_override_self = true)]
    Entropy(SweepArgs),
    /// Evaluate a grid of dimensions and orders.
    #[command(args_override_self = true)]
    Sweep(SweepArgs),
    /// Fit gap ≈ c·D^(−e) to sweep output.
    #[command(args_override_self = true)]
    Fit(FitArgs),
    /// Position plus momentum entropies at conjugate orders.
    #[command(args_override_self = true)]
    Saturation(SaturationArgs),
    /// Compare the J1/J2 expansions with their oracles.
    #[command(name = "theorem-check", args_override_self = true)]
    TheoremCheck(TheoremArgs),
}

#[derive(Args)]
struct StateArgs {
    /// Whole state as text, e.g. "D=10 Z=1 n=2 l=1 mu=1x3,0x*".
    #[arg(long)]
    state: Option<String>,
    /// Dimension list: "100,200" or geometric "100:1600:2".
    #[arg(long = "D")]
    dims: Option<String>,
    #[arg(long = "Z")]
    charge: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    /// Chain runs, `ns` or `circular`.
    #[arg(long)]
    mu: Option<String>,
}

impl StateArgs {
    fn template(&self) -> Result<(StateTemplate, Vec<u32>)> {
        let mut t = match &self.state {
            Some(s) => s.parse()?,
            None => StateTemplate::default(),
        };
        if let Some(z) = self.charge {
            t.charge = z;
        }
        if let Some(n) = self.n {
            t.n = n;
        }
        if let Some(l) = self.l {
            t.l = l;
        }
        if let Some(mu) = &self.mu {
            t.set("mu", mu)?;
        }
        let dims = match (&self.dims, t.dim) {
            (Some(d), _) => parse_dims(d)?,
            (None, Some(d)) => vec![d],
            (None, None) => return Err(CliError::validation("no dimension given (--D or D= in --state)")),
        };
        Ok((t, dims))
    }
}

#[derive(Args)]
struct OutArgs {
    #[arg(long)]
    out: Option<PathBuf>,
    /// text, csv or json; defaults to the --out extension, else text.
    #[arg(long)]
    format: Option<String>,
}

impl OutArgs {
    fn format(&self) -> Result<Format> {
        match (&self.format, &self.out) {
            (Some(f), _) => f.parse(),
            (None, Some(p)) => Ok(Format::from_path(p)),
            (None, None) => Ok(Format::Text),
        }
    }

    fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    state: StateArgs,
    /// Orders, e.g. "0.5,2,3"; q = 1 selects Shannon.
    #[arg(long, default_value = "2")]
    q: String,
    #[arg(long, default_value = "position")]
    space: String,
    /// exact, asymptotic or both.
    #[arg(long, default_value = "both")]
    method: String,
    /// total, radial or angular.
    #[arg(long, default_value = "total")]
    part: String,
    /// exact (finite-D Gamma ratios) or leading.
    #[arg(long, default_value = "exact")]
    form: String,
    #[arg(long, default_value_t = 0)]
    order: u8,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Gauss nodes per quadrature panel.
    #[arg(long, default_value_t = 64)]
    nodes: usize,
    /// Panel bisection levels before giving up.
    #[arg(long = "max-levels", default_value_t = 10)]
    max_levels: usize,
    /// Worker threads (0: all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Exit with code 3 if any row failed to converge.
    #[arg(long)]
    strict: bool,
    /// Write 0 for wall times, for byte-identical reruns.
    #[arg(long = "no-timing")]
    no_timing: bool,
    #[command(flatten)]
    out: OutArgs,
}

fn form(s: &str) -> Result<Form> {
    match s {
        "exact" => Ok(Form::Exact),
        "leading" => Ok(Form::Leading),
        _ => Err(CliError::validation(format!("unknown form `{s}`; expected exact or leading"))),
    }
}

fn quadrature(tol: f64) -> Result<QuadratureSpec> {
    let spec = QuadratureSpec {
        rel_tol: tol,
        ..Default::default()
    };
    spec.validate()?;
    Ok(spec)
}

fn sweep(a: &SweepArgs, single: bool) -> Result<()> {
    let (template, dims) = a.state.template()?;
    let qs = parse_qs(&a.q)?;
    if single && (dims.len() != 1 || qs.len() != 1) {
        return Err(CliError::validation("entropy takes one D and one q; use sweep for grids"));
    }
    let mut cfg = SweepConfig::new(template, dims, qs);
    cfg.space = a.space.parse::<SpaceSel>()?;
    cfg.method = a.method.parse::<MethodSel>()?;
    cfg.part = a.part.parse::<PartSel>()?;
    cfg.quadrature = QuadratureSpec {
        nodes: a.nodes,
        max_levels: a.max_levels,
        ..quadrature(a.tol)?
    };
    cfg.quadrature.validate()?;
    cfg.series = SeriesOptions {
        form: form(&a.form)?,
        order: a.order,
    };
    cfg.jobs = a.jobs;
    cfg.timing = !a.no_timing;
    let rows = run_sweep(&cfg)?;
    let mut w = a.out.writer()?;
    write_rows(&rows, a.out.format()?, &mut w)?;
    w.flush()?;
    for r in rows.iter().filter(|r| r.failure.is_some()) {
        eprintln!("D={} q={}: {}", r.dim, r.q, r.failure.as_ref().unwrap().message);
    }
    let stalled = rows.iter().filter(|r| r.failure.as_ref().is_some_and(|f| f.convergence)).count();
    if a.strict && stalled > 0 {
        return Err(CliError::Convergence(stalled));
    }
    Ok(())
}

#[derive(Args)]
struct FitArgs {
    /// Sweep output (csv or json).
    #[arg(long)]
    input: PathBuf,
    /// power or inverse-d.
    #[arg(long, default_value = "inverse-d")]
    model: String,
}

fn fit(a: &FitArgs) -> Result<()> {
    let model: Model = a.model.parse()?;
    let rows = read_rows(File::open(&a.input)?, Format::from_path(&a.input))?;
    let mut out = io::stdout().lock();
    writeln!(out, "{:>8} {:>6} {:>10} {:>14} {:>10}  first-order", "q", "points", "exponent", "amplitude", "residual")?;
    let mut failed = None;
    for (q, rep) in fit_by_q(&rows, model) {
        match rep {
            Ok(r) => writeln!(
                out,
                "{:>8} {:>6} {:>10.5} {:>14.6e} {:>10.2e}  {}",
                q,
                r.points,
                r.exponent,
                r.amplitude,
                r.residual,
                match r.first_order {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "-",
                }
            )?,
            Err(e) => {
                writeln!(out, "{q:>8}  {e}")?;
                failed = Some(e);
            }
        }
    }
    failed.map_or(Ok(()), Err)
}

#[derive(Args)]
struct SaturationArgs {
    #[command(flatten)]
    state: StateArgs,
    #[arg(long, default_value = "2")]
    q: f64,
    /// exact, asymptotic or both.
    #[arg(long, default_value = "both")]
    engine: String,
    #[arg(long = "exact-max-dim", default_value_t = 200)]
    exact_max_dim: u32,
    #[arg(long, default_value = "exact")]
    form: String,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

fn saturation(a: &SaturationArgs) -> Result<()> {
    let (template, dims) = a.state.template()?;
    let engines = match a.engine.as_str() {
        "exact" => vec![Engine::Exact],
        "asymptotic" => vec![Engine::Asymptotic],
        "both" => vec![Engine::Exact, Engine::Asymptotic],
        e => return Err(CliError::validation(format!("unknown engine `{e}`"))),
    };
    let cfg = SaturationConfig {
        template,
        dims,
        engines,
        exact_max_dim: a.exact_max_dim,
        quadrature: quadrature(a.tol)?,
        series: SeriesOptions {
            form: form(&a.form)?,
            order: 0,
        },
    };
    let r = check_saturation(a.q, &cfg)?;
    let mut out = io::stdout().lock();
    writeln!(out, "q = {}, p = {:.12}, limit = {:.12}", r.q, r.p, r.limit)?;
    writeln!(out, "{:>7} {:>10} {:>18} {:>12} {:>12}", "D", "engine", "(Rq+Rp)/D", "deviation", "10lnD/D")?;
    for row in &r.rows {
        writeln!(
            out,
            "{:>7} {:>10} {:>18.12} {:>12.4e} {:>12.4e}",
            row.dim,
            format!("{:?}", row.engine).to_lowercase(),
            row.per_dim,
            row.deviation,
            row.bound
        )?;
    }
    for e in &cfg.engines {
        writeln!(out, "{e:?} approach monotone: {}", r.monotone(*e))?;
    }
    Ok(())
}

#[derive(Args)]
struct TheoremArgs {
    /// j1, j2 or both.
    #[arg(long, default_value = "both")]
    theorem: String,
    /// Parameter values α.
    #[arg(long, default_value = "50,100,200,400")]
    alpha: String,
}

fn theorem_check(a: &TheoremArgs) -> Result<()> {
    let alphas = parse_qs(&a.alpha)?;
    let mut out = io::stdout().lock();
    if matches!(a.theorem.as_str(), "j1" | "both") {
        writeln!(out, "J1  {:>5} {:>5} {:>5} {:>2} {:>7} {:>12} {:>12} {:>12}", "σ", "λ", "κ", "m", "α", "err0", "err1", "err0·α")?;
        for r in j1_grid(&alphas)? {
            let p = r.params;
            writeln!(
                out,
                "    {:>5} {:>5} {:>5} {:>2} {:>7} {:>12.4e} {:>12.4e} {:>12.5}",
                p.sigma,
                p.lambda,
                p.kappa,
                p.m,
                p.alpha,
                r.err0,
                r.err1,
                r.err0 * p.alpha
            )?;
        }
    }
    if matches!(a.theorem.as_str(), "j2" | "both") {
        writeln!(out, "J2  {:>5} {:>5} {:>4} {:>4} {:>4} {:>2} {:>7} {:>12} {:>12}", "a", "b", "c", "d", "κ", "m", "α", "err", "err·α")?;
        for r in j2_grid(&alphas)? {
            let p = r.params;
            writeln!(
                out,
                "    {:>5} {:>5} {:>4} {:>4} {:>4} {:>2} {:>7} {:>12.4e} {:>12.5}",
                p.a,
                p.b,
                p.c,
                p.d,
                p.kappa,
                p.m,
                p.alpha,
                r.err,
                r.err * p.alpha
            )?;
        }
    }
    if !matches!(a.theorem.as_str(), "j1" | "j2" | "both") {
        return Err(CliError::validation(format!("unknown theorem `{}`", a.theorem)));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.verb {
        Verb::Entropy(a) => sweep(a, true),
        Verb::Sweep(a) => sweep(a, false),
        Verb::Fit(a) => fit(a),
        Verb::Saturation(a) => saturation(a),
        Verb::TheoremCheck(a) => theorem_check(a),
    }
}

fn main() -> ExitCode {
    // --config is expanded before clap sees the arguments
    let cli = match config::expand_argv(std::env::args().collect()).map(Cli::try_parse_from) {
        Ok(Ok(cli)) => cli,
        Ok(Err(e)) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
