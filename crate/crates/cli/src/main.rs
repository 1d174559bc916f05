use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use confschro_cli::commands::{self, tolerance_from_env};
use confschro_cli::config::{ConfigArgs, RunConfig};
use confschro_cli::functions::Builtin;
use confschro_cli::CliError;

#[derive(Debug, Parser)]
#[command(name = "confschro", version, about = "Conformable Schrödinger free-particle toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Conformable derivative of a builtin function
    Deriv {
        /// poly:<c0,c1,..>, sin, cos, exp or power:<p>
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        beta: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        /// Step of the difference quotient
        #[arg(long, default_value_t = 1e-7)]
        epsilon: f64,
    },
    /// Sample a free-particle state on a grid and write CSV
    Solve {
        #[command(flatten)]
        config: ConfigArgs,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Schrödinger residual at random points; exit 1 if above tolerance
    Audit {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 50)]
        points: usize,
        /// Pose the equation at this multiple of the state's energy
        #[arg(long, default_value_t = 1.0)]
        energy_factor: f64,
        /// Write the JSON report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List quantum-number chains
    Qn {
        #[arg(long = "n")]
        n_dims: usize,
        #[arg(long)]
        lmax: u32,
    },
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let stdout = io::stdout();
    let mut stdout = stdout.lock();
    match cli.command {
        Command::Deriv { function, beta, t, epsilon } => {
            let f: Builtin = function.parse()?;
            commands::deriv(&f, beta, t, epsilon, &mut stdout)?;
        }
        Command::Solve { config, out } => {
            let run = RunConfig::from_args(&config)?.build()?;
            let mut w = BufWriter::new(File::create(&out)?);
            let s = commands::solve(&run, &mut w)?;
            w.flush()?;
            if s.skipped > 0 {
                eprintln!("warning: skipped {} singular grid point(s)", s.skipped);
            }
            writeln!(stdout, "rows {} skipped {} max_residual {:e}", s.rows, s.skipped, s.max_residual)?;
        }
        Command::Audit { config, points, energy_factor, out } => {
            let cfg = RunConfig::from_args(&config)?;
            let run = cfg.build()?;
            let tolerance = tolerance_from_env()?;
            let report = commands::audit(&run, points, run.seed, energy_factor, tolerance)?;
            let json = serde_json::to_string_pretty(&report)?;
            match out {
                Some(path) => std::fs::write(path, json + "\n")?,
                None => writeln!(stdout, "{json}")?,
            }
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Qn { n_dims, lmax } => {
            commands::qn(n_dims, lmax, &mut stdout)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
