//! `hooklab`: enumerate tableau and diagram families, verify hook-length
//! identities, run sweeps and expand Grothendieck polynomials.

mod config;
mod enumerate;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use hooklab::arith::parse_rational;
use hooklab::grothendieck::{drop_y, kmy_double_poly, principal_specialization, var_name, BetaSpec, Permutation};
use hooklab::verify::{self, Mode, Subject, SubjectKind, SweepConfig, VerifyParams};
use hooklab::SkewShape;
use serde::Serialize;

use config::FileConfig;
use enumerate::{Bounds, Family};
use report::Format;

#[derive(Parser, Debug)]
#[command(name = "hooklab", version, about = "Hook-length formulas, excited diagrams and Grothendieck polynomials")]
struct Cli {
    /// `key=value` file supplying defaults for any long flag.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format: json, csv or table.
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Worker threads; defaults to HOOKLAB_THREADS, then the number of CPUs.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every member of a tableau or diagram family.
    Enumerate {
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        shape: Option<SkewShape>,
        /// Largest entry for ssyt and ssvt; defaults to the number of rows.
        #[arg(long)]
        d: Option<usize>,
        /// Largest entry sum for rpp and it.
        #[arg(long)]
        max_weight: Option<u64>,
    },
    /// Check one identity on one shape, permutation or pair.
    Verify {
        identity: String,
        #[arg(long)]
        shape: Option<SkewShape>,
        #[arg(long)]
        perm: Option<Permutation>,
        /// `n,k` for the identities indexed by a pair.
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        mode: Option<Mode>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Series order, or the starting depth of the infinite sums.
        #[arg(long)]
        truncation: Option<usize>,
        /// Numeric β for the infinite sums.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Stopping tolerance for the infinite sums.
        #[arg(long)]
        tolerance: Option<String>,
    },
    /// Check a list of identities on every shape up to a size.
    Sweep {
        #[arg(long)]
        max_size: Option<usize>,
        /// `all`, `stated`, `everything` or a comma-separated list of ids.
        #[arg(long)]
        identities: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        truncation: Option<usize>,
    },
    /// Expand `G_w(x; y)` or its principal specialization `Γ_w(β)`.
    Groth {
        #[arg(long)]
        perm: Option<Permutation>,
        /// `double` or `principal`.
        #[arg(long)]
        mode: Option<String>,
        /// `formal` or a rational value.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Set every `y_j` to zero in the double polynomial.
        #[arg(long)]
        drop_y: bool,
    },
}

/// Rendered output plus whether every check passed.
struct Output {
    text: String,
    ok: bool,
}

fn required<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| anyhow!("missing --{flag}"))
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let (n, k) = s.split_once(',').ok_or_else(|| anyhow!("pair must be n,k"))?;
    Ok((n.trim().parse()?, k.trim().parse()?))
}

fn run_command(cmd: Command, cfg: &FileConfig, format: Format) -> Result<Output> {
    match cmd {
        Command::Enumerate { family, shape, d, max_weight } => {
            let family = required(cfg.pick(family, "family")?, "family")?;
            let shape = required(cfg.pick(shape, "shape")?, "shape")?;
            let bounds = Bounds { d: cfg.pick(d, "d")?, max_weight: cfg.pick(max_weight, "max-weight")? };
            let listing = enumerate::enumerate(family, &shape, bounds)?;
            Ok(Output { text: report::listing(&listing, format)?, ok: true })
        }
        Command::Verify { identity, shape, perm, pair, d, mode, trials, seed, truncation, beta, tolerance } => {
            let spec = verify::lookup(&identity)?;
            let subject = match spec.kind {
                SubjectKind::Permutation => Subject::Permutation(required(cfg.pick(perm, "perm")?, "perm")?),
                SubjectKind::Pair => {
                    let (n, k) = parse_pair(&required(cfg.pick(pair, "pair")?, "pair")?)?;
                    Subject::Pair(n, k)
                }
                _ => Subject::Shape(required(cfg.pick(shape, "shape")?, "shape")?),
            };
            let defaults = VerifyParams::default();
            let rational = |v: Option<String>, key: &str| -> Result<_> {
                cfg.pick(v, key)?.map(|s: String| parse_rational(&s)).transpose().map_err(Into::into)
            };
            let params = VerifyParams {
                d: cfg.pick(d, "d")?,
                mode: cfg.pick(mode, "mode")?,
                trials: cfg.pick(trials, "trials")?.unwrap_or(defaults.trials),
                seed: cfg.pick(seed, "seed")?.unwrap_or(defaults.seed),
                truncation: cfg.pick(truncation, "truncation")?,
                beta: rational(beta, "beta")?,
                tolerance: rational(tolerance, "tolerance")?.unwrap_or(defaults.tolerance),
            };
            let r = verify::run(&identity, &subject, &params)?;
            let ok = r.pass;
            Ok(Output { text: report::reports(&[r], format)?, ok })
        }
        Command::Sweep { max_size, identities, seed, trials, truncation } => {
            let ids = cfg.pick(identities, "identities")?.unwrap_or_else(|| "all".into());
            let sweep = SweepConfig {
                max_size: required(cfg.pick(max_size, "max-size")?, "max-size")?,
                identities: verify::resolve_identities(&ids)?,
                seed: cfg.pick(seed, "seed")?.unwrap_or(0),
                trials: cfg.pick(trials, "trials")?.unwrap_or(VerifyParams::default().trials),
                truncation: cfg.pick(truncation, "truncation")?,
            };
            let reports = verify::sweep(&sweep);
            let ok = reports.iter().all(|r| r.pass);
            Ok(Output { text: report::reports(&reports, format)?, ok })
        }
        Command::Groth { perm, mode, beta, drop_y: zero_y } => {
            let w = required(cfg.pick(perm, "perm")?, "perm")?;
            let mode = cfg.pick(mode, "mode")?.unwrap_or_else(|| "double".into());
            let beta_text = cfg.pick(beta, "beta")?.unwrap_or_else(|| "formal".into());
            let beta = match beta_text.as_str() {
                "formal" => BetaSpec::Formal,
                v => BetaSpec::Value(parse_rational(v)?),
            };
            let value = match mode.as_str() {
                "double" => {
                    let g = kmy_double_poly(&w, &beta)?;
                    let g = if zero_y { drop_y(&g) } else { g };
                    g.display_with(&var_name)
                }
                "principal" => {
                    let gamma = principal_specialization(&w)?;
                    match &beta {
                        BetaSpec::Formal => gamma.display_with("beta"),
                        BetaSpec::Value(b) => gamma.eval(b).to_string(),
                    }
                }
                other => bail!("unknown groth mode '{other}' (expected double or principal)"),
            };
            let g = GrothOutput { perm: w.to_string(), mode, beta: beta_text, y_zero: zero_y, value };
            Ok(Output { text: report::groth(&g, format)?, ok: true })
        }
    }
}

#[derive(Serialize)]
pub struct GrothOutput {
    pub perm: String,
    pub mode: String,
    pub beta: String,
    pub y_zero: bool,
    pub value: String,
}

fn threads(flag: Option<usize>, cfg: &FileConfig) -> Result<Option<usize>> {
    let n = match cfg.pick(flag, "threads")? {
        Some(n) => Some(n),
        None => match std::env::var("HOOKLAB_THREADS") {
            Ok(v) => Some(usize::from_str(v.trim()).context("HOOKLAB_THREADS")?),
            Err(_) => None,
        },
    };
    if n == Some(0) {
        bail!("thread count must be at least 1");
    }
    Ok(n)
}

fn main_inner() -> Result<bool> {
    let cli = Cli::parse();
    let cfg = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let format = cfg.pick(cli.format, "format")?.unwrap_or(Format::Json);
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads(cli.threads, &cfg)? {
        pool = pool.num_threads(n);
    }
    let pool = pool.build()?;
    let out = pool.install(|| run_command(cli.command, &cfg, format))?;
    print!("{}", out.text);
    Ok(out.ok)
}

fn main() -> ExitCode {
    match main_inner() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
