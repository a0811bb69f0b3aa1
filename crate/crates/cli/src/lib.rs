//! Command-line front end: space files in, line-oriented reports out.

pub mod spacefile;

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use gtspace::explorer::{enumerate_up_to, sample_spaces, summarize, verify_theorems};
use gtspace::realfn::{urysohn_construct, MAX_DEPTH};
use gtspace::{classify, enumerate_spaces, mine_counterexamples, ExplorerError, GtSpace, Property, RealFnError, SetFamily, Status};

pub use spacefile::{parse_blocks, parse_named, parse_space, render_space, render_witness, Block, SyntaxError};

/// Ground sets up to this size are verified exhaustively; larger ones are sampled.
pub const EXHAUSTIVE_VERIFY: usize = 3;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gtspace", version, about = "Explore finite generalized topological spaces")]
pub struct Cli {
    /// Omit headers and tables; print only report lines.
    #[arg(long, global = true)]
    pub machine: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every separation axiom as `axiom <name> <true|false>`.
    Classify { file: PathBuf },
    /// Print one derived family, one set per line.
    Families {
        #[arg(long)]
        kind: FamilyKind,
        file: PathBuf,
    },
    /// Check the theorem catalogue on one space or on a population.
    Verify {
        #[arg(required_unless_present = "n", conflicts_with = "n")]
        file: Option<PathBuf>,
        /// Largest ground set of the population.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=5))]
        n: Option<u64>,
        /// Spaces drawn per sampled ground-set size.
        #[arg(long, default_value_t = 100_000)]
        sample: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search small spaces for witnesses of a property.
    Mine {
        #[arg(long)]
        property: Property,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=4))]
        n: u64,
        #[arg(long, default_value_t = 1)]
        limit: usize,
    },
    /// Run the dyadic construction between two disjoint closed sets.
    Urysohn {
        file: PathBuf,
        /// Points of the set sent to 0, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<String>,
        /// Points of the set sent to 1, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        b: Vec<String>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=MAX_DEPTH as i64))]
        depth: u32,
    },
    /// Stream every space on exactly `n` points as space blocks.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=5))]
        n: u64,
        /// One space per relabeling class.
        #[arg(long, conflicts_with = "sample")]
        dedup: bool,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Gamma,
    GammaClosed,
    SGammaOpen,
    SGammaClosed,
    KernelFixed,
    SLambdaClosed,
    SLambdaOpen,
    SgLambdaClosed,
    SgLambdaOpen,
    SLambdaGDelta,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::Gamma,
        FamilyKind::GammaClosed,
        FamilyKind::SGammaOpen,
        FamilyKind::SGammaClosed,
        FamilyKind::KernelFixed,
        FamilyKind::SLambdaClosed,
        FamilyKind::SLambdaOpen,
        FamilyKind::SgLambdaClosed,
        FamilyKind::SgLambdaOpen,
        FamilyKind::SLambdaGDelta,
    ];

    /// Accepted spellings; the first is canonical.
    pub fn names(self) -> &'static [&'static str] {
        match self {
            FamilyKind::Gamma => &["γ", "gamma"],
            FamilyKind::GammaClosed => &["γ-closed", "gamma-closed"],
            FamilyKind::SGammaOpen => &["sγ-open", "sgamma-open"],
            FamilyKind::SGammaClosed => &["sγ-closed", "sgamma-closed"],
            FamilyKind::KernelFixed => &["sker-fixed", "kernel-fixed"],
            FamilyKind::SLambdaClosed => &["sλ-closed", "slambda-closed"],
            FamilyKind::SLambdaOpen => &["sλ-open", "slambda-open"],
            FamilyKind::SgLambdaClosed => &["sgλ-closed", "sglambda-closed"],
            FamilyKind::SgLambdaOpen => &["sgλ-open", "sglambda-open"],
            FamilyKind::SLambdaGDelta => &["sλGδ", "slambda-gdelta"],
        }
    }

    pub fn family(self, space: &GtSpace) -> SetFamily {
        match self {
            FamilyKind::Gamma => space.gamma().clone(),
            FamilyKind::GammaClosed => space.gamma_closed(),
            FamilyKind::SGammaOpen => space.s_gamma_open().clone(),
            FamilyKind::SGammaClosed => space.s_gamma_closed().clone(),
            FamilyKind::KernelFixed => space.kernel_fixed().clone(),
            FamilyKind::SLambdaClosed => space.s_lambda_closed().clone(),
            FamilyKind::SLambdaOpen => space.s_lambda_open().clone(),
            FamilyKind::SgLambdaClosed => space.sg_lambda_closed().clone(),
            FamilyKind::SgLambdaOpen => space.sg_lambda_open().clone(),
            FamilyKind::SLambdaGDelta => space.s_lambda_gdelta().clone(),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL.into_iter().find(|k| k.names().contains(&s)).ok_or_else(|| {
            let known: Vec<&str> = FamilyKind::ALL.iter().map(|k| k.names()[0]).collect();
            format!("unknown family `{s}`; expected one of {}", known.join(", "))
        })
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.names()[0])
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: SyntaxError },
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error(transparent)]
    Explorer(#[from] ExplorerError),
    #[error(transparent)]
    RealFn(#[from] RealFnError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn load(path: &Path) -> Result<(String, GtSpace), CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: shown.clone(),
        source,
    })?;
    parse_named(&text).map_err(|source| CliError::Parse { path: shown, source })
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let human = !cli.machine;
    match &cli.command {
        Command::Classify { file } => {
            let (name, space) = load(file)?;
            if human {
                writeln!(out, "# {name}: {} points, {} open sets", space.len(), space.gamma().len())?;
            }
            for (axiom, value) in classify(&space).entries() {
                writeln!(out, "axiom {axiom} {value}")?;
            }
        }
        Command::Families { kind, file } => {
            let (name, space) = load(file)?;
            let family = kind.family(&space);
            if human {
                writeln!(out, "# {kind} sets of {name}: {}", family.len())?;
            }
            for s in family.iter() {
                writeln!(out, "{}", space.render(s))?;
            }
        }
        Command::Verify { file: Some(file), .. } => {
            let (name, space) = load(file)?;
            if human {
                writeln!(out, "# {name}")?;
            }
            let reports = verify_theorems(&space);
            let mut failed = 0;
            for r in &reports {
                writeln!(out, "theorem {} {}", r.id, r.status)?;
            }
            for w in reports.iter().filter_map(|r| r.witness.as_ref()) {
                failed += 1;
                writeln!(out)?;
                write!(out, "{}", render_witness(&format!("w{failed}"), w))?;
            }
            return Ok(if failed > 0 { EXIT_FAILED } else { EXIT_OK });
        }
        Command::Verify { n, sample, seed, .. } => {
            let n = n.expect("clap requires a file or --n") as usize;
            let mut spaces = enumerate_up_to(n.min(EXHAUSTIVE_VERIFY), false)?;
            for k in EXHAUSTIVE_VERIFY + 1..=n {
                spaces.extend(sample_spaces(k, *sample, *seed)?);
            }
            let summary = summarize(&spaces);
            if human {
                writeln!(out, "# {} spaces on at most {n} points", summary.spaces)?;
                writeln!(out, "# theorem status verified vacuous failed")?;
            }
            for t in &summary.tallies {
                if human {
                    writeln!(out, "theorem {} {} {} {} {}", t.id, t.status(), t.verified, t.vacuous, t.failed)?;
                } else {
                    writeln!(out, "theorem {} {}", t.id, t.status())?;
                }
            }
            let mut shown = 0;
            for w in summary.tallies.iter().filter_map(|t| t.first_failure.as_ref()) {
                shown += 1;
                writeln!(out)?;
                write!(out, "{}", render_witness(&format!("w{shown}"), w))?;
            }
            if human {
                writeln!(out, "# empty-kernel fallbacks: {} spaces", summary.empty_kernel_spaces)?;
                let (ok, total) = summary.urysohn_continuity;
                writeln!(out, "# depth-{} step functions continuous: {ok} of {total}", gtspace::explorer::HARNESS_DEPTH)?;
            }
            let failed = summary.tallies.iter().any(|t| t.status() == Status::Failed);
            return Ok(if failed { EXIT_FAILED } else { EXIT_OK });
        }
        Command::Mine { property, n, limit } => {
            let found = mine_counterexamples(*n as usize, *property, *limit)?;
            if human {
                writeln!(out, "# {} witnesses of {property} on at most {n} points", found.len())?;
            }
            for (i, w) in found.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", render_witness(&format!("w{}", i + 1), w))?;
            }
        }
        Command::Urysohn { file, a, b, depth } => {
            let (name, space) = load(file)?;
            let lookup = |names: &[String]| space.subset(names.iter().map(String::as_str)).map_err(|_| {
                let bad = names.iter().find(|p| space.ground().position(p).is_none());
                CliError::UnknownPoint(bad.cloned().unwrap_or_default())
            });
            let (a, b) = (lookup(a)?, lookup(b)?);
            let (family, f) = urysohn_construct(&space, a, b, *depth)?;
            if human {
                writeln!(
                    out,
                    "# {name}: A = {}, B = {}, depth {depth}",
                    space.render(a),
                    space.render(b)
                )?;
            }
            for (q, v) in &family.levels {
                writeln!(out, "V {} {}", q.render(), space.render(*v))?;
            }
            writeln!(out, "V {} {}", gtspace::Dyadic::ONE.render(), space.render(family.top))?;
            for (p, label) in space.ground().labels().iter().enumerate() {
                writeln!(out, "f {label} {}", f.value(p).render())?;
            }
        }
        Command::Enumerate { n, dedup, sample, seed } => {
            let n = *n as usize;
            let spaces = match sample {
                Some(size) => sample_spaces(n, *size, *seed)?,
                None => enumerate_spaces(n, *dedup)?,
            };
            if human {
                writeln!(out, "# {} spaces on {n} points", spaces.len())?;
            }
            for (i, s) in spaces.iter().enumerate() {
                if i > 0 || human {
                    writeln!(out)?;
                }
                write!(out, "{}", render_space(&format!("n{n}-{}", i + 1), s))?;
            }
        }
    }
    Ok(EXIT_OK)
}
