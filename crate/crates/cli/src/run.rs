use clap::ValueEnum;
use mdc_core::{
    solve_brute, solve_fpt, solve_labeled, solve_labeled_brute, BruteOptions, Certificate,
    FptOptions, InstanceFile, LabeledOptions, UniversalMode,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Brute,
    Fpt,
    LabeledBrute,
    Labeled,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Brute => "brute",
            Algo::Fpt => "fpt",
            Algo::LabeledBrute => "labeled-brute",
            Algo::Labeled => "labeled",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    pub mode: UniversalMode,
    pub precheck: bool,
    pub parallel: bool,
}

#[derive(Debug)]
pub struct Run {
    pub certificate: Option<Certificate>,
    pub monte_carlo_delta: Option<f64>,
    pub nodes_expanded: u64,
    pub rules_fired: u64,
}

pub fn run(
    algo: Algo,
    file: &InstanceFile,
    config: &RunConfig,
) -> Result<Run, Box<dyn std::error::Error + Send + Sync>> {
    let plain = |certificate, nodes_expanded| Run {
        certificate,
        monte_carlo_delta: None,
        nodes_expanded,
        rules_fired: 0,
    };
    match algo {
        Algo::Brute => {
            let out = solve_brute(&file.to_instance()?, &BruteOptions::default())?;
            Ok(plain(out.certificate, out.subsets_checked))
        }
        Algo::Fpt => {
            let opts = FptOptions {
                precheck: config.precheck,
                parallel: config.parallel,
                ..FptOptions::with_mode(config.mode)
            };
            let out = solve_fpt(&file.to_instance()?, &opts)?;
            Ok(Run {
                certificate: out.certificate,
                monte_carlo_delta: out.monte_carlo_delta,
                nodes_expanded: out.stats.nodes_expanded,
                rules_fired: out.stats.rules_fired(),
            })
        }
        Algo::LabeledBrute | Algo::Labeled => {
            let li = file
                .to_labeled()?
                .ok_or_else(|| format!("--algo {} needs an instance with labels", algo.name()))?;
            if algo == Algo::LabeledBrute {
                let out = solve_labeled_brute(&li, &BruteOptions::default())?;
                Ok(plain(out.certificate, out.subsets_checked))
            } else {
                let out = solve_labeled(&li, &LabeledOptions::default());
                Ok(Run {
                    certificate: out.certificate,
                    monte_carlo_delta: None,
                    nodes_expanded: out.stats.nodes_expanded,
                    rules_fired: out.stats.rules_fired(),
                })
            }
        }
    }
}
