//! `bellcong`: compute Bell-family sequences and verify their congruences.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use bellcong::exact::{
    bell_numbers, bell_polynomial, derangements, root_ratio_monotonicity, stirling2_explicit,
};
use bellcong::harness::{Format, ReportDocument, SweepConfig};
use bellcong::lab::{run_sweep, Identity};
use bellcong::modp::{bell_polynomials_modp, PrimeModulus, PrimePower, StirlingCache};
use bellcong::{Error, Limits};
use clap::{Args, Parser, Subcommand, ValueEnum};

const CACHE_ENV: &str = "BELLCONG_CACHE_DIR";

#[derive(Parser)]
#[command(
    name = "bellcong",
    version,
    about = "Exact Bell numbers and congruence checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact value.
    Compute {
        #[arg(value_enum)]
        sequence: Sequence,
        /// Index n.
        n: u64,
        /// Second index k (stirling only).
        k: Option<u64>,
    },
    /// Run a verification sweep and write a report.
    Verify(VerifyArgs),
    /// Check strict decrease of B_{n+1}^{1/(n+1)} / B_n^{1/n} for 1 <= n < n_max.
    ExperimentRootratio {
        #[arg(long)]
        n_max: u64,
    },
    /// Time mod-p Bell polynomial table builds up to degree p^a.
    Bench {
        #[arg(long = "p")]
        p: u64,
        #[arg(long = "a", default_value_t = 1)]
        a: u32,
        #[arg(long, default_value_t = 3)]
        reps: u32,
    },
    /// Manage the on-disk table of Stirling rows mod p.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
        #[arg(long, env = CACHE_ENV, global = true)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    Bell,
    Bellpoly,
    Stirling,
    Derangement,
}

#[derive(Subcommand)]
enum CacheAction {
    /// Build and store rows 0..=n_max for each prime.
    Warm {
        #[arg(long = "p", required = true)]
        p: Vec<u64>,
        #[arg(long)]
        n_max: usize,
    },
    /// Delete every cached table.
    Clear,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to check; repeat for several. Defaults to all.
    #[arg(long = "identity", value_parser = parse_identity)]
    identities: Vec<Identity>,
    /// Single prime (overrides the config prime range).
    #[arg(long = "p")]
    p: Option<u64>,
    /// Single exponent a, or Touchard's m.
    #[arg(long = "a")]
    a: Option<u32>,
    /// Single n.
    #[arg(long = "n", conflicts_with = "n_max")]
    n: Option<u64>,
    /// Upper end of the n range.
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long = "j")]
    j: Option<u64>,
    #[arg(long = "k")]
    k: Option<u64>,
    /// TOML or JSON sweep configuration; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
    /// Report destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
}

fn parse_identity(s: &str) -> Result<Identity, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit 2 for bad input, 3 for a cap breach.
struct Failure(Error);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self.0 {
            Error::ResourceLimit { .. } => 3,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { sequence, n, k } => compute(sequence, n, k),
        Command::Verify(args) => verify(args),
        Command::ExperimentRootratio { n_max } => root_ratio(n_max),
        Command::Bench { p, a, reps } => bench(p, a, reps),
        Command::Cache { action, cache_dir } => cache(action, cache_dir),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.0);
            ExitCode::from(f.code())
        }
    }
}

fn compute(sequence: Sequence, n: u64, k: Option<u64>) -> Result<u8, Failure> {
    let limits = Limits::default();
    limits.check_bell_index(n)?;
    if k.is_some() && !matches!(sequence, Sequence::Stirling) {
        return Err(Error::InvalidArgument("only stirling takes a second index".into()).into());
    }
    let idx = n as usize;
    let value = match sequence {
        Sequence::Bell => bell_numbers(idx, &limits)?[idx].to_string(),
        Sequence::Bellpoly => bell_polynomial(idx, &limits)?.to_string(),
        Sequence::Derangement => derangements(idx, &limits)?[idx].to_string(),
        Sequence::Stirling => {
            let k = k.ok_or_else(|| {
                Error::InvalidArgument("usage: bellcong compute stirling <n> <k>".into())
            })?;
            stirling2_explicit(n, k)?.to_string()
        }
    };
    println!("{value}");
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<u8, Failure> {
    let mut cfg = match &args.config {
        Some(path) => SweepConfig::from_path(path)?,
        None => SweepConfig::default(),
    };
    if !args.identities.is_empty() {
        cfg.identities = args.identities;
    }
    if let Some(p) = args.p {
        cfg.prime_range = [p, p];
    }
    if let Some(a) = args.a {
        cfg.a_range = [a, a];
    }
    if let Some(n) = args.n {
        cfg.n_range = [n, n];
    }
    if let Some(n_max) = args.n_max {
        cfg.n_range[1] = n_max;
    }
    cfg.j = args.j.or(cfg.j);
    cfg.k = args.k.or(cfg.k);
    if let Some(f) = args.format {
        cfg.output.format = f;
    }
    if let Some(out) = args.out {
        cfg.output.path = Some(out);
    }
    if let Some(jobs) = args.jobs {
        cfg.parallelism = jobs;
    }
    if let Some(p) = args.p {
        PrimeModulus::new(p)?;
    }

    let cases = cfg.cases()?;
    for case in &cases {
        if let Err(e @ Error::ResourceLimit { .. }) = case.check_limits(&cfg.caps) {
            eprintln!("case {case} is over the configured caps");
            return Err(e.into());
        }
    }
    let cache = args.cache_dir.map(StirlingCache::new);

    let start = Instant::now();
    let reports = run_sweep(cases, cfg.parallelism, &cfg.caps, cache.as_ref());
    let doc = ReportDocument::new(cfg.clone(), &reports, start.elapsed());

    let mut rendered = doc.render(cfg.output.format);
    if !rendered.ends_with('\n') {
        rendered.push('\n');
    }
    match &cfg.output.path {
        Some(path) => std::fs::write(path, rendered).map_err(Error::from)?,
        None => print!("{rendered}"),
    }
    Ok(if doc.all_passed() { 0 } else { 1 })
}

fn root_ratio(n_max: u64) -> Result<u8, Failure> {
    let steps = root_ratio_monotonicity(n_max, &Limits::default())?;
    println!("n\tr_n > r_(n+1)");
    for s in &steps {
        let verdict = if s.decreasing {
            "decreasing"
        } else {
            "not decreasing"
        };
        println!("{}\t{verdict}", s.n);
    }
    let down = steps.iter().filter(|s| s.decreasing).count();
    println!(
        "{} comparisons, {down} strictly decreasing (checked range only: 1 <= n < {n_max})",
        steps.len()
    );
    Ok(0)
}

fn bench(p: u64, a: u32, reps: u32) -> Result<u8, Failure> {
    let limits = Limits::default();
    let q = PrimePower::new(PrimeModulus::new(p)?, a)?;
    limits.check_prime_power(q.value())?;
    let degree = q.value() as usize;
    let scalars = ((degree + 1) * (degree + 2) / 2) as f64;
    println!(
        "p={p} a={a} p^a={degree}: Bell polynomials mod p up to degree p^a, {scalars} residues"
    );
    let mut times = Vec::with_capacity(reps as usize);
    for rep in 1..=reps.max(1) {
        let start = Instant::now();
        let table = bell_polynomials_modp(degree, q.modulus(), &limits)?;
        let secs = start.elapsed().as_secs_f64();
        std::hint::black_box(table);
        println!(
            "rep {rep}: {:.6} ms, {:.3e} scalars/s",
            secs * 1e3,
            scalars / secs.max(f64::MIN_POSITIVE)
        );
        times.push(secs);
    }
    times.sort_by(f64::total_cmp);
    let median = times[times.len() / 2];
    println!(
        "median: {:.6} ms, {:.3e} scalars/s",
        median * 1e3,
        scalars / median.max(f64::MIN_POSITIVE)
    );
    Ok(0)
}

fn cache(action: CacheAction, dir: Option<PathBuf>) -> Result<u8, Failure> {
    let dir = dir.ok_or_else(|| {
        Error::InvalidArgument(format!(
            "no cache directory: pass --cache-dir or set {CACHE_ENV}"
        ))
    })?;
    let cache = StirlingCache::new(dir);
    match action {
        CacheAction::Warm { p, n_max } => {
            let limits = Limits::default();
            for p in p {
                let path = cache.warm(PrimeModulus::new(p)?, n_max, &limits)?;
                println!("{}", path.display());
            }
        }
        CacheAction::Clear => {
            let removed = cache.clear()?;
            println!("removed {removed} file(s)");
        }
    }
    Ok(0)
}
