//! `mqm`: minimize Boolean functions, expand SOP expressions, and reproduce
//! the worst-case comparison counts of QM and MQM.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "mqm",
    version,
    about = "Quine-McCluskey and E-sum MQM minimizer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Qm,
    Mqm,
}

#[derive(Subcommand)]
enum Command {
    /// Minimize a function given as `n=<N> m(...) d(...)` or as an expression.
    Minimize {
        /// Function in list form, e.g. "n=4 m(4,5,6) d(0)".
        spec: Option<String>,
        /// Sum-of-products expression, e.g. "AD + A'BC".
        #[arg(long)]
        expr: Option<String>,
        /// Variable names, most significant first (default A, B, C, ...).
        #[arg(long)]
        vars: Option<String>,
        /// File with one spec or expression per line.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "mqm")]
        method: MethodArg,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Expand an expression to canonical minterms and report the growth.
    Expand {
        #[arg(long)]
        vars: String,
        #[arg(long)]
        expr: String,
    },
    /// Worst-case first-pass comparison counts, formula vs. measured.
    Bench {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        /// Print wall-clock time per row to stderr.
        #[arg(long)]
        timing: bool,
    },
    /// Cross-check QM, MQM and the brute-force oracle on random functions.
    Compare {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(commands::EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out = std::io::stdout().lock();
    let code = match cli.command {
        Command::Minimize {
            spec,
            expr,
            vars,
            file,
            method,
            json,
        } => commands::minimize(&mut out, spec, expr, vars, file, method, json),
        Command::Expand { vars, expr } => commands::expand(&mut out, &vars, &expr),
        Command::Bench {
            n_min,
            n_max,
            timing,
        } => commands::bench(&mut out, n_min, n_max, timing),
        Command::Compare { n, trials, seed } => commands::compare(&mut out, n, trials, seed),
    };
    ExitCode::from(code)
}
