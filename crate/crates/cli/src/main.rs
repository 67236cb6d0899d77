use std::f64::consts::PI;
use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};

use qce_cli::{cmd_experiment, cmd_figure, cmd_scaling, ExperimentKind, Figure, FigureOptions};

/// Entanglement between a qubit and the laser field that drives it.
#[derive(Debug, Parser)]
#[command(name = "qce", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct FigureArgs {
    #[arg(long, default_value = "out")]
    out: PathBuf,
    #[arg(long, default_value_t = qce_core::quadrature::DEFAULT_N_THETA)]
    ntheta: usize,
    #[arg(long, default_value_t = qce_core::quadrature::DEFAULT_N_PHI)]
    nphi: usize,
    #[arg(long, default_value_t = qce_core::DEFAULT_TAIL_EPS)]
    tail_eps: f64,
    #[arg(long, default_value_t = PI)]
    tau_max: f64,
    /// Samples per series on the uniform (fig1) or analytic (fig2, fig3) grid.
    #[arg(long, default_value_t = 101)]
    points: usize,
}

impl FigureArgs {
    fn options(&self) -> FigureOptions {
        FigureOptions {
            n_theta: self.ntheta,
            n_phi: self.nphi,
            tail_eps: self.tail_eps,
            tau_max: self.tau_max,
            points: self.points,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// E(τ) for five initial states and the Bloch average at n̄ = 10.
    Fig1(FigureArgs),
    /// Jaynes–Cummings ⟨E⟩ vs τ at several n̄, exact and closed form.
    Fig2(FigureArgs),
    /// Raman ⟨E⟩ vs τ at several n̄, exact and closed form.
    Fig3(FigureArgs),
    /// Gate report for one experimental configuration.
    Experiment {
        #[arg(long, value_enum)]
        kind: ExperimentKind,
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Also run the exact simulator when n̄ is small enough.
        #[arg(long)]
        simulate: bool,
    },
    /// NOT-gate entanglement vs n̄ for m-photon transitions.
    Scaling {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 100.0)]
        nbar_min: f64,
        #[arg(long, default_value_t = 1e10)]
        nbar_max: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
}

fn main() -> Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    let written = match cli.command {
        Command::Fig1(a) => cmd_figure(Figure::Fig1, &a.options(), &a.out)?,
        Command::Fig2(a) => cmd_figure(Figure::Fig2, &a.options(), &a.out)?,
        Command::Fig3(a) => cmd_figure(Figure::Fig3, &a.options(), &a.out)?,
        Command::Experiment {
            kind,
            config,
            out,
            simulate,
        } => cmd_experiment(kind, &config, &out, simulate)?,
        Command::Scaling {
            m,
            nbar_min,
            nbar_max,
            points,
            out,
        } => cmd_scaling(m, nbar_min, nbar_max, points, &out)?,
    };
    println!("{}", written.display());
    Ok(())
}
