use std::path::{Path, PathBuf};

use clap::Subcommand;
use mdc_core::reductions::{
    gen_random_mdc, gen_random_pis, gen_random_rbds, preprocess_rbds, reduce_pis_to_mdc,
    reduce_rbds_to_mdc, RbdsParams,
};
use mdc_core::InstanceFile;
use serde_json::json;

use crate::CliResult;

#[derive(Subcommand)]
pub enum GenCommand {
    /// Reduced instance of a random k x k permutation independent set.
    Pis {
        #[arg(long)]
        k: usize,
        /// Edge probability between cells in different rows and columns.
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; the role sidecar goes next to it. Prints to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduced instance of a random red-blue dominating set.
    Rbds {
        #[arg(long)]
        red: usize,
        #[arg(long)]
        blue: usize,
        #[arg(long)]
        p: f64,
        /// Dominating set budget.
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Uniform random graph with exactly m edges.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// `foo.json` -> `foo.meta.json`.
pub fn sidecar_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().unwrap_or_default().to_string_lossy();
    out.with_file_name(format!("{stem}.meta.json"))
}

fn emit(file: InstanceFile, out: Option<PathBuf>, sidecar: Option<serde_json::Value>) -> CliResult {
    match out {
        None => print!("{}", file.to_json_string()),
        Some(path) => {
            file.write(&path)?;
            if let Some(meta) = sidecar {
                std::fs::write(sidecar_path(&path), serde_json::to_string(&meta)? + "\n")?;
            }
        }
    }
    Ok(())
}

pub fn gen(cmd: GenCommand) -> CliResult {
    match cmd {
        GenCommand::Pis { k, p, seed, out } => {
            let pis = gen_random_pis(k, p, seed)?;
            let red = reduce_pis_to_mdc(&pis);
            let provenance = json!({"generator": "pis", "k": k, "p": p, "seed": seed});
            let file = InstanceFile::from_instance(&red.instance).with_metadata(provenance);
            emit(file, out, Some(red.metadata()))
        }
        GenCommand::Rbds {
            red,
            blue,
            p,
            l,
            seed,
            out,
        } => {
            let inst = gen_random_rbds(RbdsParams { red, blue, p, l }, seed)?;
            let pre = preprocess_rbds(&inst)?;
            let reduction = reduce_rbds_to_mdc(&pre);
            let provenance = json!({
                "generator": "rbds", "red": red, "blue": blue, "p": p, "l": l, "seed": seed,
            });
            let mut meta = reduction.metadata();
            meta["source_edges"] = json!(pre.instance().edges());
            meta["red_origin"] = json!(pre.origin());
            let file = InstanceFile::from_instance(&reduction.instance).with_metadata(provenance);
            emit(file, out, Some(meta))
        }
        GenCommand::Random {
            n,
            m,
            k,
            d,
            seed,
            out,
        } => {
            let inst = gen_random_mdc(n, m, k, d, seed)?;
            let provenance = json!({"generator": "random", "n": n, "m": m, "seed": seed});
            emit(InstanceFile::from_instance(&inst).with_metadata(provenance), out, None)
        }
    }
}
