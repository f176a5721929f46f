//! `exponacci`: tables, spiral geometry and identity checks for
//! `G(n) = a G(n-1) + b G(n-2) + c d^n` from the command line.

mod commands;
mod config;
mod error;
mod output;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{AmplitudeChoice, Format, ParamsConfig, Style, WindingChoice, ZChoice};

#[derive(Debug, Parser)]
#[command(name = "exponacci", version, about = "Generalized Fibonacci numbers G(n) = a G(n-1) + b G(n-2) + c d^n")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every subcommand. Missing parameters default to the
/// Fibonacci numbers (1, 1, 0, 0; 0, 1).
#[derive(Debug, Args)]
#[command(next_help_heading = "Common")]
pub struct Common {
    /// Coefficient of G(n-1) [default: 1]
    #[arg(short = 'a', global = true, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Coefficient of G(n-2) [default: 1]
    #[arg(short = 'b', global = true, allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Input amplitude [default: 0]
    #[arg(short = 'c', global = true, allow_negative_numbers = true)]
    pub c: Option<f64>,
    /// Input base [default: 0]
    #[arg(short = 'd', global = true, allow_negative_numbers = true)]
    pub d: Option<f64>,
    /// G(0) [default: 0]
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub g0: Option<f64>,
    /// G(1) [default: 1]
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub g1: Option<f64>,
    /// JSON config; flags override its fields
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

impl Common {
    fn params(&self) -> ParamsConfig {
        ParamsConfig {
            a: self.a,
            b: self.b,
            c: self.c,
            d: self.d,
            g0: self.g0,
            g1: self.g1,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// G(n) by iteration and in closed form, with the Horadam transform
    Seq {
        /// Last index [default: 10]
        #[arg(short = 'n')]
        n: Option<u64>,
    },
    /// Partial sums, alternating sums and Gamma(n)
    Sums {
        /// Last index [default: 10]
        #[arg(short = 'n')]
        n: Option<u64>,
    },
    /// Rectangular and arched spiral geometry
    Spiral {
        /// [default: both]
        #[arg(long, value_enum)]
        style: Option<Style>,
        /// Corner points P(0) ..= P(N) [default: 12]
        #[arg(long)]
        corners: Option<u64>,
        /// Arcs 1 ..= N [default: 8]
        #[arg(long)]
        arcs: Option<u64>,
        /// Sample intervals per arc [default: 60]
        #[arg(long)]
        samples: Option<u32>,
        /// Exit 3 if the parameters wind the other way [default: auto]
        #[arg(long, value_enum)]
        winding: Option<WindingChoice>,
        /// Adds a height column
        #[arg(long, value_enum)]
        z_mode: Option<ZChoice>,
        /// Constant scaling the exponential heights [default: c]
        #[arg(long, value_enum)]
        amplitude: Option<AmplitudeChoice>,
        /// Asymptote intersections near corner N (outwinding only; N >= 40 recommended)
        #[arg(long)]
        quadruple: Option<u64>,
        /// Also write the point table as CSV to this file
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Samples of the complex continuation G(t)
    Curve {
        /// [default: 10]
        #[arg(long)]
        t_max: Option<f64>,
        /// Must divide t-max [default: 0.01]
        #[arg(long)]
        step: Option<f64>,
    },
    /// Fuzz the product-difference identities
    Verify {
        /// shannon, product-difference, catalan, docagne, tagiuri, gamma-diff or all [default: all]
        #[arg(long)]
        identity: Option<String>,
        /// Random draws per identity [default: 1000]
        #[arg(long)]
        samples: Option<usize>,
        /// Default: $EXPONACCI_SEED, else 42
        #[arg(long)]
        seed: Option<u64>,
        /// Indices are drawn from [-N, N] [default: 10]
        #[arg(long)]
        max_index: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match commands::run(&cli.common, cli.common.params(), &cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
