use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dflab::ring::{parse_poly, Field, MonomialOrder, Ring, RingDescriptor};
use dflab::scenarios::{run_all, run_named, run_predictions, Engine, RingEcho, ScenarioConfig, ScenarioResult};
use dflab::Error;
use serde::{Deserialize, Serialize};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "dflab", version, about = "Derived functors of Sym³ and their cross-effects, computed exactly")]
struct Cli {
    #[command(flatten)]
    opts: Opts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct Opts {
    /// Characteristic of the base field.
    #[arg(long, global = true)]
    prime: Option<u32>,
    /// Use the rationals as base field.
    #[arg(long, global = true)]
    rationals: bool,
    /// Comma-separated variable names.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Comma-separated regular sequence generating I.
    #[arg(long, global = true, value_delimiter = ',')]
    seq: Option<Vec<String>>,
    /// Top simplicial level.
    #[arg(long, global = true)]
    nmax: Option<usize>,
    /// Top internal degree for the graded engine.
    #[arg(long, global = true)]
    tmax: Option<i32>,
    #[arg(long, global = true, value_enum)]
    engine: Option<EngineArg>,
    /// Largest module rank a scenario may build.
    #[arg(long, global = true)]
    max_rank: Option<usize>,
    /// Report file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// TOML file with the same keys as the flags; flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Scenarios run in parallel by `all`.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Record wall-clock times in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ranks of H_k N Sym³ Γ P.
    Gk,
    /// Second cross-effect.
    Cross2,
    /// Third cross-effect.
    Cross3,
    /// Predicted tables for a conormal module of rank d.
    Predict {
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
    /// Homology of Tot(P⊗P) and Tot(P⊗P⊗P).
    TorPowers,
    /// Structural checks.
    Check {
        #[arg(value_enum)]
        which: CheckKind,
    },
    /// Every scenario.
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckKind {
    Schur,
    Ez,
    Koszul,
    Cauchy,
    Gamma,
    L31,
    Sym2,
    Engines,
}

impl CheckKind {
    fn scenario(self) -> &'static str {
        match self {
            CheckKind::Schur => "schur",
            CheckKind::Ez => "ez",
            CheckKind::Koszul => "koszul",
            CheckKind::Cauchy => "cauchy",
            CheckKind::Gamma => "gamma",
            CheckKind::L31 => "l31",
            CheckKind::Sym2 => "sym2",
            CheckKind::Engines => "engines",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum EngineArg {
    Graded,
    Groebner,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Markdown,
}

/// Configuration file contents; every key optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    prime: Option<u32>,
    rationals: Option<bool>,
    vars: Option<Vec<String>>,
    seq: Option<Vec<String>>,
    nmax: Option<usize>,
    tmax: Option<i32>,
    engine: Option<EngineArg>,
    max_rank: Option<usize>,
    format: Option<Format>,
    jobs: Option<usize>,
    timing: Option<bool>,
}

#[derive(Serialize)]
struct ReportDocument {
    schema_version: u32,
    ring: RingEcho,
    scenarios: Vec<ScenarioResult>,
    pass: bool,
}

/// Failure carrying its exit code.
struct Exit(u8, anyhow::Error);

fn config_error(e: impl Into<anyhow::Error>) -> Exit {
    Exit(2, e.into())
}

fn core_error(e: Error) -> Exit {
    match e {
        Error::Budget(_) => Exit(3, e.into()),
        Error::Config(_) | Error::Parse(_) | Error::Descriptor(_) | Error::NotAField(_) => Exit(2, e.into()),
        _ => Exit(1, e.into()),
    }
}

struct Settings {
    cfg: ScenarioConfig,
    format: Format,
    jobs: usize,
}

fn settings(opts: &Opts) -> Result<Settings, Exit> {
    let file: FileConfig = match &opts.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(config_error)?;
            toml::from_str(&text).with_context(|| format!("parsing {}", path.display())).map_err(config_error)?
        }
        None => FileConfig::default(),
    };
    let rationals = opts.rationals || (opts.prime.is_none() && file.rationals.unwrap_or(false));
    if opts.rationals && opts.prime.is_some() {
        return Err(config_error(anyhow!("--prime and --rationals are exclusive")));
    }
    let field = if rationals {
        Field::Rationals
    } else {
        Field::prime(opts.prime.or(file.prime).unwrap_or(97)).map_err(core_error)?
    };
    let vars = opts.vars.clone().or(file.vars).unwrap_or_else(|| vec!["x".into(), "y".into()]);
    let ring = Ring::new(field, vars, MonomialOrder::Degrevlex).map_err(core_error)?;
    let seq_text = opts.seq.clone().or(file.seq).unwrap_or_else(|| ring.vars().to_vec());
    let seq = seq_text.iter().map(|s| parse_poly(&ring, s.trim())).collect::<Result<Vec<_>, _>>().map_err(core_error)?;
    if let Some(f) = seq.iter().find(|f| !f.is_homogeneous()) {
        return Err(config_error(anyhow!("sequence element {f} is not homogeneous")));
    }
    let desc = RingDescriptor::new(ring, Some(seq)).map_err(core_error)?;
    let mut cfg = ScenarioConfig::new(desc);
    cfg.n_max = opts.nmax.or(file.nmax).unwrap_or(cfg.n_max);
    cfg.t_max = opts.tmax.or(file.tmax).unwrap_or(cfg.t_max);
    cfg.max_rank = opts.max_rank.or(file.max_rank).unwrap_or(cfg.max_rank);
    cfg.timing = opts.timing || file.timing.unwrap_or(false);
    cfg.engine = match opts.engine.or(file.engine).unwrap_or(EngineArg::Graded) {
        EngineArg::Graded => Engine::Graded,
        EngineArg::Groebner => Engine::Groebner,
        EngineArg::Both => Engine::Both,
    };
    if cfg.n_max == 0 {
        return Err(config_error(anyhow!("--nmax must be positive")));
    }
    Ok(Settings {
        cfg,
        format: opts.format.or(file.format).unwrap_or(Format::Json),
        jobs: opts.jobs.or(file.jobs).unwrap_or(0),
    })
}

fn run_command(command: &Command, s: &Settings) -> Result<Vec<ScenarioResult>, Exit> {
    let one = |name: &str| run_named(name, &s.cfg).map(|r| vec![r]).map_err(core_error);
    match command {
        Command::Gk => one("gk"),
        Command::Cross2 => one("cross2"),
        Command::Cross3 => one("cross3"),
        Command::TorPowers => one("tor-powers"),
        Command::Predict { d } => match run_predictions(&s.cfg, *d, None) {
            Err(Error::Budget(reason)) => Ok(vec![ScenarioResult::budget_failure("predict", &s.cfg, &reason)]),
            other => other.map(|r| vec![r]).map_err(core_error),
        },
        Command::Check { which } => one(which.scenario()),
        Command::All => run_all(&s.cfg, s.jobs).map_err(core_error),
    }
}

fn markdown(doc: &ReportDocument) -> String {
    let mut out = format!(
        "# dflab report\n\nring: {}[{}], I = ({})\n\n| scenario | pass | expected | computed |\n|---|---|---|---|\n",
        doc.ring.field,
        doc.ring.vars.join(","),
        doc.ring.seq.join(", ")
    );
    for r in &doc.scenarios {
        out += &format!("| {} | {} | {:?} | {:?} |\n", r.name, if r.pass { "yes" } else { "no" }, r.expected, r.computed);
    }
    for r in &doc.scenarios {
        let failures = r.failures();
        if failures.is_empty() && r.notes.is_empty() {
            continue;
        }
        out += &format!("\n## {}\n\n", r.name);
        for f in failures {
            out += &format!("- failed: {f}\n");
        }
        for n in &r.notes {
            out += &format!("- note: {n}\n");
        }
    }
    out += &format!("\noverall: {}\n", if doc.pass { "pass" } else { "fail" });
    out
}

fn render(doc: &ReportDocument, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        // going through `Value` sorts every object's keys
        Format::Json => serde_json::to_string_pretty(&serde_json::to_value(doc)?)? + "\n",
        Format::Markdown => markdown(doc),
    })
}

fn run(cli: &Cli) -> Result<u8, Exit> {
    let s = settings(&cli.opts)?;
    let results = run_command(&cli.command, &s)?;
    let doc = ReportDocument {
        schema_version: SCHEMA_VERSION,
        ring: RingEcho::of(&s.cfg.desc),
        pass: results.iter().all(|r| r.pass),
        scenarios: results,
    };
    let text = render(&doc, s.format).map_err(|e| Exit(1, e))?;
    match &cli.opts.out {
        Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display())).map_err(config_error)?,
        None => print!("{text}"),
    }
    for r in &doc.scenarios {
        log::info!("{}: {}", r.name, if r.pass { "pass" } else { "FAIL" });
        for f in r.failures() {
            log::warn!("{}: {f}", r.name);
        }
    }
    Ok(if doc.scenarios.iter().any(|r| r.budget_exceeded) {
        3
    } else if doc.pass {
        0
    } else {
        1
    })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
