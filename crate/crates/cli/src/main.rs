//! `eulerkern`: kernels, identities, volumes, zeta values and Monte Carlo
//! runs from the command line.

mod commands;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eulerkern::mc::{McConfig, DEFAULT_CHUNK_SIZE};
use eulerkern::zeta::{EndpointHandling, QuadratureConfig};

use commands::OddMethod;
use report::{Format, RunReport, Status};

#[derive(Parser, Debug)]
#[command(name = "eulerkern", version, about = "Exact kernels, polytope volumes and zeta values")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "EULERKERN_FORMAT", default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form kernels K_n and the recurrence oracle.
    #[command(subcommand)]
    Kernel(KernelCmd),
    /// Exact Euler/Bernoulli and kernel identity suite.
    Identities,
    /// Table of polytope volumes delta_n, n = 2..N.
    Delta {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..))]
        max_n: u32,
    },
    /// Table of S(n) = sum_k (4k+1)^-n, n = 1..N.
    S {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..))]
        max_n: u32,
    },
    /// Zeta values.
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Seeded Monte Carlo estimates.
    #[command(subcommand)]
    Mc(McCmd),
}

#[derive(Subcommand, Debug)]
enum KernelCmd {
    /// Print both branches of K_n and its split line.
    Show {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Check recurrence_step(K_{n-1}) = K_n for n = 2..N.
    Verify {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..))]
        max_n: u32,
    },
}

#[derive(Subcommand, Debug)]
enum ZetaCmd {
    /// zeta(2n) exactly.
    Even {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// zeta(2n+1) numerically, or S(2n+1) exactly with `--method formula`.
    Odd {
        n: u32,
        #[arg(long, value_enum, default_value_t = OddMethod::Quadrature)]
        method: OddMethod,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// zeta(2n) for n = 1..N.
    Table {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
}

#[derive(Args, Debug)]
struct QuadArgs {
    /// Gauss-Legendre panels.
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    panels: u64,
    /// Nodes per panel.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(2..))]
    nodes: u64,
}

#[derive(Args, Debug)]
struct McArgs {
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Samples per independent stream.
    #[arg(long, default_value_t = DEFAULT_CHUNK_SIZE, value_parser = clap::value_parser!(u64).range(1..))]
    chunk: u64,
}

#[derive(Subcommand, Debug)]
enum McCmd {
    /// Hit-or-miss estimate of delta_n.
    Volume {
        #[arg(value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        #[command(flatten)]
        run: McArgs,
    },
    /// Estimate of zeta(2n+1) from the log-tan integral over Delta_2n.
    ZetaOdd {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[command(flatten)]
        run: McArgs,
    },
}

fn mc_config(dimension: usize, run: &McArgs) -> McConfig {
    McConfig { dimension, samples: run.samples, seed: run.seed, chunk_size: run.chunk }
}

fn run(command: &Command) -> eulerkern::Result<RunReport> {
    match command {
        Command::Kernel(KernelCmd::Show { n }) => commands::kernel_show(*n),
        Command::Kernel(KernelCmd::Verify { max_n }) => commands::kernel_verify(*max_n),
        Command::Identities => commands::identities(),
        Command::Delta { max_n } => commands::delta_table(*max_n),
        Command::S { max_n } => commands::s_table(*max_n),
        Command::Zeta(ZetaCmd::Even { n }) => commands::zeta_even_one(*n),
        Command::Zeta(ZetaCmd::Table { max_n }) => commands::zeta_table(*max_n),
        Command::Zeta(ZetaCmd::Odd { n, method, quad }) => {
            let cfg = QuadratureConfig {
                panels: quad.panels as usize,
                nodes_per_panel: quad.nodes as usize,
                endpoint_handling: EndpointHandling::OpenShifted,
            };
            commands::zeta_odd(*n, *method, &cfg)
        }
        Command::Mc(McCmd::Volume { n, run }) => commands::mc_volume_cmd(&mc_config(*n as usize, run)),
        Command::Mc(McCmd::ZetaOdd { n, run }) => commands::mc_zeta_odd_cmd(*n, &mc_config(2 * *n as usize, run)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Zeta(ZetaCmd::Odd { n: 0, method, .. }) = &cli.command {
        if *method != OddMethod::Formula {
            eprintln!("error: zeta(1) diverges; `zeta odd 0` needs --method formula");
            return ExitCode::from(2);
        }
    }
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut out = io::stdout().lock();
    if let Err(e) = report.render(cli.format, &mut out).and_then(|_| out.flush()) {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    match report.status {
        Status::Fail => ExitCode::FAILURE,
        Status::Pass | Status::Info => ExitCode::SUCCESS,
    }
}
