use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use clap::Args;
use mdc_core::{InstanceFile, UniversalMode};

use crate::run::{run, Algo, RunConfig};
use crate::CliResult;

#[derive(Args)]
pub struct BenchArgs {
    /// Directory of instance files (`*.json`, sidecars excluded).
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "brute,fpt")]
    algos: Vec<Algo>,
    #[arg(long, default_value_t = 10_000)]
    timeout_ms: u64,
    /// Seed for Monte Carlo families on large instances.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn corpus_files(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        let name = path.file_name().unwrap_or_default().to_string_lossy();
        if path.is_file() && name.ends_with(".json") && !name.ends_with(".meta.json") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// One row: answer, nodes, elapsed. Runs on a worker thread so a slow solver
/// can be abandoned; an abandoned worker keeps running until the process exits.
fn timed(algo: Algo, file: InstanceFile, config: RunConfig, timeout: Duration) -> (String, String, u128) {
    let (tx, rx) = mpsc::channel();
    let start = Instant::now();
    thread::spawn(move || {
        let _ = tx.send(run(algo, &file, &config).map_err(|e| e.to_string()));
    });
    match rx.recv_timeout(timeout) {
        Ok(Ok(r)) => {
            let answer = if r.certificate.is_some() { "yes" } else { "no" };
            (answer.into(), r.nodes_expanded.to_string(), start.elapsed().as_millis())
        }
        Ok(Err(_)) => ("error".into(), "-".into(), start.elapsed().as_millis()),
        Err(_) => ("timeout".into(), "-".into(), timeout.as_millis()),
    }
}

pub fn bench(args: BenchArgs) -> CliResult {
    let timeout = Duration::from_millis(args.timeout_ms);
    println!("instance\talgo\tanswer\tnodes_expanded\telapsed_ms");
    for path in corpus_files(&args.corpus)? {
        let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
        let file = InstanceFile::read(&path)?;
        let config = RunConfig {
            mode: UniversalMode::default_for(file.n, args.seed),
            precheck: true,
            parallel: false,
        };
        for &algo in &args.algos {
            let (answer, nodes, ms) = timed(algo, file.clone(), config, timeout);
            println!("{name}\t{}\t{answer}\t{nodes}\t{ms}", algo.name());
        }
    }
    Ok(())
}
