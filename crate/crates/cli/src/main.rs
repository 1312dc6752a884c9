//! `mdc`: solve, verify and generate maximum degree contraction instances.

mod bench;
mod gen;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mdc_core::io::{read_certificate, write_certificate};
use mdc_core::universal::DEFAULT_MONTE_CARLO_DELTA;
use mdc_core::{
    build_universal, check_labeled_solution, check_solution, InstanceFile, UniversalMode,
    UniversalOptions,
};
use serde_json::json;

use run::{Algo, RunConfig};

type CliResult<T = ()> = Result<T, Box<dyn std::error::Error + Send + Sync>>;

#[derive(Parser)]
#[command(name = "mdc", version, about = "Maximum degree contraction solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print a JSON report.
    Solve(SolveArgs),
    /// Check a certificate against an instance.
    Verify {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Generate an instance file.
    Gen {
        #[command(subcommand)]
        kind: gen::GenCommand,
    },
    /// Print an (n, l)-universal family, one set per line.
    Universal {
        n: usize,
        l: usize,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Run solvers over every instance file in a directory.
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Constructed,
    Montecarlo,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Universal family construction; defaults to exhaustive when the graph is small enough.
    #[arg(long = "universal-mode", alias = "mode", value_enum)]
    mode: Option<ModeArg>,
    /// Failure probability of a Monte Carlo family.
    #[arg(long, default_value_t = DEFAULT_MONTE_CARLO_DELTA)]
    delta: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl FamilyArgs {
    fn mode(&self, n: usize) -> UniversalMode {
        match self.mode {
            None => match UniversalMode::default_for(n, self.seed) {
                UniversalMode::MonteCarlo { seed, .. } => UniversalMode::MonteCarlo {
                    delta: self.delta,
                    seed,
                },
                exact => exact,
            },
            Some(ModeArg::Exhaustive) => UniversalMode::Exhaustive,
            Some(ModeArg::Constructed) => UniversalMode::Constructed,
            Some(ModeArg::Montecarlo) => UniversalMode::MonteCarlo {
                delta: self.delta,
                seed: self.seed,
            },
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    algo: Algo,
    #[arg(long)]
    instance: PathBuf,
    /// Also write the certificate (when the answer is yes) to this file.
    #[arg(long)]
    certificate_out: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    /// Skip the degree-counting pre-checks.
    #[arg(long)]
    no_precheck: bool,
    /// Try labelings on all cores. Does not change the answer.
    #[arg(long)]
    parallel: bool,
}

fn solve(args: SolveArgs) -> CliResult {
    let file = InstanceFile::read(&args.instance)?;
    let config = RunConfig {
        mode: args.family.mode(file.n),
        precheck: !args.no_precheck,
        parallel: args.parallel,
    };
    let start = Instant::now();
    let run = run::run(args.algo, &file, &config)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let mut report = json!({
        "answer": if run.certificate.is_some() { "yes" } else { "no" },
        "stats": {
            "nodes_expanded": run.nodes_expanded,
            "rules_fired": run.rules_fired,
            "elapsed_ms": elapsed_ms,
        },
    });
    if let Some(cert) = &run.certificate {
        report["certificate"] = serde_json::to_value(cert)?;
        if let Some(path) = &args.certificate_out {
            write_certificate(path, cert)?;
        }
    }
    if let Some(delta) = run.monte_carlo_delta {
        report["monte_carlo_delta"] = json!(delta);
    }
    println!("{report}");
    Ok(())
}

fn verify(instance: PathBuf, certificate: PathBuf) -> CliResult {
    let file = InstanceFile::read(&instance)?;
    let cert = read_certificate(&certificate)?;
    let outcome = match file.to_labeled()? {
        Some(li) => check_labeled_solution(&li, &cert),
        None => check_solution(&file.to_instance()?, &cert),
    };
    match outcome {
        Ok(()) => println!("valid"),
        Err(violation) => println!("invalid: {violation}"),
    }
    Ok(())
}

fn universal(n: usize, l: usize, family: FamilyArgs) -> CliResult {
    let fam = build_universal(n, l, family.mode(n), &UniversalOptions::default())?;
    let mut out = String::new();
    for set in fam.iter() {
        let line: Vec<String> = set.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    print!("{out}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => solve(args),
        Command::Verify {
            instance,
            certificate,
        } => verify(instance, certificate),
        Command::Gen { kind } => gen::gen(kind),
        Command::Universal { n, l, family } => universal(n, l, family),
        Command::Bench(args) => bench::bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
