//! Argument handling and dispatch for the `minortotals` binary.
//!
//! [`run`] returns the complete output as a string so callers (and tests) never depend on
//! process state.

use std::collections::BTreeSet;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use minortotals::{BaseSpec, DividingDynamics, Natural, DEFAULT_SAMPLE_SIZE};

mod commands;
mod render;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "minortotals",
    version,
    about = "Triangular numbers, their units digits in any base, and cumulative growth"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute S_n = n(n+1)/2, optionally with its base-L digits.
    Tri {
        /// Decimal n of any length.
        n: String,
        #[arg(long)]
        base: Option<u64>,
    },
    /// Exact units-digit frequencies of S_n in one base.
    Residues {
        #[arg(long)]
        base: u64,
    },
    /// Gappy / non-gappy classification for a set of bases, e.g. `3..10` or `4,8,16`.
    Classify {
        #[arg(long)]
        bases: String,
    },
    /// Case-by-case congruences S_{Lk+i} == j (mod L).
    Prove {
        #[arg(long)]
        base: u64,
    },
    /// Empirical units-digit counts of S_1..S_N against the exact frequencies.
    Freq {
        #[arg(long)]
        base: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLE_SIZE)]
        count: u64,
    },
    /// Run the cumulative growth model and fit a power law.
    Simulate {
        /// `linear`, `constant:c` or `decline:D,a`.
        #[arg(long)]
        dynamics: String,
        #[arg(long)]
        steps: u64,
        /// Total cell count before the first step.
        #[arg(long, default_value = "0")]
        initial: String,
        /// Also report the units-digit histogram of the totals in this base.
        #[arg(long)]
        base: Option<u64>,
    },
}

pub fn run(cli: Cli) -> Result<String> {
    let format = cli.format;
    match cli.command {
        Command::Tri { n, base } => {
            let n = parse_natural(&n)?;
            let base = base.map(parse_base).transpose()?;
            commands::tri(&n, base, format)
        }
        Command::Residues { base } => commands::residues(parse_base(base)?, format),
        Command::Classify { bases } => commands::classify(&parse_bases(&bases)?, format),
        Command::Prove { base } => commands::prove(parse_base(base)?, format),
        Command::Freq { base, count } => commands::freq(parse_base(base)?, count, format),
        Command::Simulate {
            dynamics,
            steps,
            initial,
            base,
        } => {
            let dynamics: DividingDynamics = dynamics.parse()?;
            let initial = parse_natural(&initial)?;
            let base = base.map(parse_base).transpose()?;
            commands::simulate(dynamics, steps, initial, base, format)
        }
    }
}

fn parse_natural(text: &str) -> Result<Natural> {
    Ok(text.parse::<Natural>()?)
}

fn parse_base(base: u64) -> Result<BaseSpec> {
    Ok(BaseSpec::new(base)?)
}

/// Parses `a..b` (inclusive), single bases, and comma-separated mixtures of both.
///
/// The result is sorted and deduplicated.
pub fn parse_bases(spec: &str) -> Result<Vec<BaseSpec>> {
    let mut bases = BTreeSet::new();
    for item in spec.split(',').map(str::trim) {
        if item.is_empty() {
            bail!("invalid base list {spec:?}: empty item");
        }
        let number = |s: &str| -> Result<u64> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                bail!("invalid base list {spec:?}: {s:?} is not a number");
            }
            s.parse()
                .with_context(|| format!("invalid base list {spec:?}"))
        };
        match item.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (number(lo)?, number(hi)?);
                if lo > hi {
                    bail!("invalid base range {item:?}: start exceeds end");
                }
                for l in lo..=hi {
                    bases.insert(BaseSpec::new(l)?);
                }
            }
            None => {
                bases.insert(BaseSpec::new(number(item)?)?);
            }
        }
    }
    Ok(bases.into_iter().collect())
}
