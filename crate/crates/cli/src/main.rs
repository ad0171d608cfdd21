mod cache;
mod export;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use eulerstab::eulerian::{brute_force, parse_family, recurrence, FamilySpec, QMode};
use eulerstab::report::{render_text, tally};
use eulerstab::suites::{run_suite, Suite, SuiteConfig};
use eulerstab::MPoly;

use cache::Cache;

#[derive(Parser)]
#[command(name = "eulerstab", version, about = "Multivariate Eulerian polynomials: generation and verification")]
struct Cli {
    /// Worker threads for enumeration (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a polynomial of one family.
    Gen(GenArgs),
    /// Run a named verification suite; exits 1 if an asserted check fails.
    Verify(VerifyArgs),
    /// Write table, polynomial or appendix data as CSV or JSON.
    Export(export::ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Rec,
    Brute,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct GenArgs {
    /// A, B, D, Dstar, G:r, affA, affC, affB or Dstem.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// Number of colors for G (alternative to G:r).
    #[arg(long)]
    r: Option<u8>,
    /// sym, multisym, none or a rational value; B and G only.
    #[arg(long, default_value = "none")]
    q: QMode,
    #[arg(long, value_enum, default_value_t = Method::Rec)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, env = "EULERSTAB_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// oracles, identities, realroots, stability, motzkin, conjectures or all.
    suite: Suite,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample points per stability search.
    #[arg(long, default_value_t = eulerstab::stability::DEFAULT_BUDGET)]
    budget: u64,
    /// Caps every rank bound of the suite.
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Verify(a) => verify(a),
        Command::Export(a) => export::run(a).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        // output piped into `head` and the like
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<std::io::Error>())
        .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

pub(crate) fn family_spec(code: &str, n: usize, r: Option<u8>, q: QMode) -> anyhow::Result<FamilySpec> {
    let (family, coded_r) = parse_family(code)?;
    if let (Some(a), Some(b)) = (coded_r, r) {
        if a != b {
            bail!("--r {b} conflicts with family {code}");
        }
    }
    Ok(FamilySpec::new(family, n, coded_r.or(r).unwrap_or(0), q)?)
}

fn build(spec: &FamilySpec, method: Method, cache: &Cache) -> anyhow::Result<MPoly> {
    cache.get_or_compute(spec, method, || match method {
        Method::Rec => Ok(recurrence(spec)?),
        Method::Brute => Ok(brute_force(spec)?),
        Method::Both => unreachable!("resolved by caller"),
    })
}

fn gen(a: GenArgs) -> anyhow::Result<bool> {
    let spec = family_spec(&a.family, a.n, a.r, a.q)?;
    let cache = Cache::new(a.cache_dir);
    let (poly, agree) = match a.method {
        Method::Both => {
            if !spec.has_two_constructions() {
                bail!("{} has no pair of independent constructions", spec.code());
            }
            let rec = build(&spec, Method::Rec, &cache)?;
            let brute = build(&spec, Method::Brute, &cache)?;
            let agree = rec == brute;
            if agree {
                eprintln!("recurrence and enumeration agree ({} terms)", rec.len());
            } else {
                eprintln!("MISMATCH: recurrence and enumeration differ");
                eprintln!("enumeration: {brute}");
            }
            (rec, agree)
        }
        m => (build(&spec, m, &cache)?, true),
    };
    match a.format {
        Format::Text => println!("{poly}"),
        Format::Json => println!("{}", poly.to_json()),
    }
    Ok(agree)
}

fn verify(a: VerifyArgs) -> anyhow::Result<bool> {
    let cfg = SuiteConfig {
        seed: a.seed,
        budget: a.budget,
        max_n: a.max_n,
    };
    let checks = run_suite(a.suite, &cfg);
    let json = serde_json::to_string_pretty(&checks)?;
    if let Some(path) = &a.report {
        std::fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
    }
    match a.format {
        Format::Text => print!("{}", render_text(&checks)),
        Format::Json => println!("{json}"),
    }
    Ok(tally(&checks).failed == 0)
}
