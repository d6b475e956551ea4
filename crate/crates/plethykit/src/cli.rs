//! The `plethykit` command line.
//!
//! JSON goes to stdout, diagnostics to stderr. Exit codes: 0 for
//! isomorphic / verified / found, 1 for the negative verdict, 2 for invalid
//! input.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plethykit_core::oracle::{specialize_bialternant, specialize_ssyt, DEFAULT_SSYT_BUDGET};
use plethykit_core::plethysm::{gl_isomorphic, sl_isomorphic};
use plethykit_core::search::DEFAULT_INSTANCE_CAP;
use plethykit_core::staircase::{
    corollary_i_family, corollary_ii_family, gl_pairs, main_family, main_gl_condition,
    to_instances, verify_pairwise, MainShape,
};
use plethykit_core::twist::{solve_twist, verify_twist, DEFAULT_BOUND};
use plethykit_core::{hookcontent, Partition, QPolynomial, SLInstance};
use rayon::prelude::*;
use serde::Serialize;

use crate::parallel::{classify_all, enumerate_classes, pool_from_env, SharedCache};
use crate::wire::{
    ClassJson, DescriptorJson, FamilyJson, InstanceJson, SlJson, TwistJson, WireError,
};

#[derive(Debug, Parser)]
#[command(
    name = "plethykit",
    version,
    about = "SL(2) and GL(2) isomorphisms of plethysms S_λ(S_δ(C²))"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether two instances are isomorphic.
    Verify {
        /// `{"lambda":[...],"d":n}` or `{"lambda":[...],"delta":[a,b]}`
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Mode::Sl)]
        mode: Mode,
    },
    /// Generate and check one of the staircase families.
    Family(FamilyArgs),
    /// Search for a twist turning an SL-isomorphism into a GL-isomorphism.
    Twist {
        a: String,
        b: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Enumerate equivalence classes, one JSON line per class.
    Search {
        #[arg(long, default_value_t = 12)]
        max_weight: usize,
        #[arg(long, default_value_t = 10)]
        max_d: usize,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
        #[arg(long, default_value_t = DEFAULT_INSTANCE_CAP)]
        cap: usize,
    },
    /// Compare hook-content, bialternant and tableau specializations.
    OracleCheck {
        #[arg(long)]
        max_weight: usize,
        #[arg(long)]
        max_d: usize,
        #[arg(long, default_value_t = DEFAULT_SSYT_BUDGET)]
        budget: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Sl,
    Gl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Main,
    Cor1,
    Cor2,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(value_enum)]
    pub kind: FamilyKind,
    /// Comma-separated `x` sequence (main only).
    #[arg(long, value_delimiter = ',')]
    pub x: Vec<usize>,
    /// Comma-separated `y` sequence (main only).
    #[arg(long, value_delimiter = ',')]
    pub y: Vec<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub u: usize,
    #[arg(long)]
    pub v: usize,
    #[arg(long)]
    pub z: usize,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Wire(#[from] WireError),
    #[error(transparent)]
    Core(#[from] plethykit_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("writing output: {0}")]
    Io(#[from] io::Error),
}

pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let pool = match pool_from_env() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli.command)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    let cache = SharedCache::new();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match command {
        Command::Verify { a, b, mode } => verify(&cache, &mut out, &a, &b, mode)?,
        Command::Family(args) => family(&cache, &mut out, &args)?,
        Command::Twist { a, b, bound } => twist(&cache, &mut out, &a, &b, bound)?,
        Command::Search {
            max_weight,
            max_d,
            bound,
            cap,
        } => search(&cache, &mut out, max_weight, max_d, bound, cap)?,
        Command::OracleCheck {
            max_weight,
            max_d,
            budget,
            inject_fault,
        } => oracle_check(&mut out, max_weight, max_d, budget, inject_fault)?,
    };
    out.flush()?;
    Ok(code)
}

fn emit<W: Write, T: Serialize>(out: &mut W, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(WireError::from)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct Verdict {
    mode: &'static str,
    isomorphic: bool,
}

fn verify<W: Write>(
    src: &SharedCache,
    out: &mut W,
    a: &str,
    b: &str,
    mode: Mode,
) -> Result<u8, CliError> {
    let (a, b) = (InstanceJson::parse(a)?, InstanceJson::parse(b)?);
    let isomorphic = match mode {
        Mode::Sl => sl_isomorphic(src, &a.to_sl()?, &b.to_sl()?)?,
        Mode::Gl => gl_isomorphic(src, &a.to_gl()?, &b.to_gl()?)?,
    };
    let name = if mode == Mode::Sl { "sl" } else { "gl" };
    emit(
        out,
        &Verdict {
            mode: name,
            isomorphic,
        },
    )?;
    Ok(if isomorphic { 0 } else { 1 })
}

fn family<W: Write>(src: &SharedCache, out: &mut W, args: &FamilyArgs) -> Result<u8, CliError> {
    let (kind, descriptors, gl_condition) = match args.kind {
        FamilyKind::Main => {
            if args.s.is_some() {
                return Err(CliError::Usage("--s applies to cor1 and cor2 only".into()));
            }
            let shape = MainShape::of(&args.x, &args.y)?;
            let fam = main_family(&args.x, &args.y, args.u, args.v, args.z)?;
            let cond = main_gl_condition(&args.x, &args.y, args.u, args.v, args.z, shape)?;
            ("main", fam.descriptors.to_vec(), Some(cond))
        }
        FamilyKind::Cor1 | FamilyKind::Cor2 => {
            if !args.x.is_empty() || !args.y.is_empty() {
                return Err(CliError::Usage("--x and --y apply to main only".into()));
            }
            if args.u == 0 || args.v == 0 || args.z == 0 {
                return Err(CliError::Usage("u, v and z must be positive".into()));
            }
            let s = args.s.unwrap_or(0);
            if args.kind == FamilyKind::Cor1 {
                ("cor1", corollary_i_family(s, args.u, args.v, args.z), None)
            } else {
                ("cor2", corollary_ii_family(s, args.u, args.v, args.z), None)
            }
        }
    };
    let instances = to_instances(&descriptors)?;
    let verified = verify_pairwise(src, &instances)?;
    let pairs = gl_pairs(src, &instances)?;
    let json = FamilyJson {
        kind: kind.into(),
        descriptors: descriptors.iter().map(DescriptorJson::from).collect(),
        instances: instances.iter().map(SlJson::from).collect(),
        verified,
        gl_pairs: pairs.into_iter().map(|(i, j)| [i, j]).collect(),
        gl_condition,
    };
    emit(out, &json)?;
    Ok(if verified { 0 } else { 1 })
}

fn twist<W: Write>(
    src: &SharedCache,
    out: &mut W,
    a: &str,
    b: &str,
    bound: usize,
) -> Result<u8, CliError> {
    if bound == 0 {
        return Err(CliError::Usage("--bound must be positive".into()));
    }
    let (a, b) = (
        InstanceJson::parse(a)?.to_sl()?,
        InstanceJson::parse(b)?.to_sl()?,
    );
    let solution = solve_twist(src, &a, &b, bound)?;
    let verified = match &solution {
        Some(t) => verify_twist(src, &a, &b, t)?,
        None => false,
    };
    emit(out, &TwistJson::new(solution, verified))?;
    Ok(if solution.is_some() { 0 } else { 1 })
}

fn search<W: Write>(
    src: &SharedCache,
    out: &mut W,
    max_weight: usize,
    max_d: usize,
    bound: usize,
    cap: usize,
) -> Result<u8, CliError> {
    let classes = enumerate_classes(src, max_weight, max_d, cap)?;
    let labels = classify_all(src, &classes, bound)?;
    for (class, gl) in classes.iter().zip(&labels) {
        emit(out, &ClassJson::new(class, gl))?;
    }
    eprintln!("{} classes", classes.len());
    Ok(0)
}

#[derive(Serialize)]
struct OracleReport {
    checked: usize,
    agree: bool,
    first_disagreement: Option<SlJson>,
}

fn oracle_check<W: Write>(
    out: &mut W,
    max_weight: usize,
    max_d: usize,
    budget: u64,
    inject_fault: bool,
) -> Result<u8, CliError> {
    let mut instances = Vec::new();
    for n in 0..=max_weight {
        for lambda in Partition::all_of_weight(n) {
            for d in lambda.length().saturating_sub(1)..=max_d {
                instances.push(SLInstance::new(lambda.clone(), d)?);
            }
        }
    }
    let results = instances
        .par_iter()
        .map(|inst| triple_agrees(inst, budget, inject_fault))
        .collect::<Result<Vec<bool>, CliError>>()?;
    let first = results
        .iter()
        .position(|ok| !ok)
        .map(|i| SlJson::from(&instances[i]));
    if let Some(bad) = &first {
        eprintln!("disagreement at lambda = {:?}, d = {}", bad.lambda, bad.d);
    }
    let agree = first.is_none();
    emit(
        out,
        &OracleReport {
            checked: instances.len(),
            agree,
            first_disagreement: first,
        },
    )?;
    Ok(if agree { 0 } else { 1 })
}

fn triple_agrees(inst: &SLInstance, budget: u64, inject_fault: bool) -> Result<bool, CliError> {
    let (lambda, d) = (inst.lambda(), inst.d());
    let mut p = hookcontent::p_poly(lambda, d)?;
    if inject_fault {
        p = &p + &QPolynomial::one();
    }
    let hc = p.shift(lambda.b_statistic());
    Ok(specialize_bialternant(lambda, d)? == hc && specialize_ssyt(lambda, d, budget)? == hc)
}
