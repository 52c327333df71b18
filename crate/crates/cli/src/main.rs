//! `sidecast` command-line front end.
//!
//! Exit status is 0 on success, 1 when a certificate or checked claim is
//! refuted, and 2 on usage or input errors.

mod commands;
mod config;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{OutputFormat, RunConfig};

#[derive(Debug, Parser)]
#[command(name = "sidecast", version, about = "Broadcast rates of networks with side information")]
struct Cli {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Iterations for heuristic independent-set searches.
    #[arg(long, global = true, default_value_t = 20_000)]
    budget: u64,
    /// Largest vertex count for exact chromatic searches.
    #[arg(long, global = true, default_value_t = 1024)]
    exact_limit: usize,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a network (.bhg) or its confusion graph (.gen).
    Gen(commands::GenArgs),
    /// Rate report: alpha_arrow, beta_t, beta*, codeword bounds.
    Analyze(commands::AnalyzeArgs),
    /// Maximum (or large) independent set of a confusion graph.
    Mis(commands::MisArgs),
    /// Chromatic number bounds with a coloring.
    Chi(commands::ChiArgs),
    /// Build a coloring from a named construction or a translate cover.
    Color(commands::ColorArgs),
    /// Check an independent set or a coloring against a graph.
    Verify(commands::VerifyArgs),
    /// Lift an antihole independent set or coloring by two blocks.
    Lift(commands::LiftArgs),
    /// Min-rank search, optionally with a linear vs non-linear gap report.
    Minrank(commands::MinrankArgs),
    /// Codeword-count bounds for disjoint copies of a network.
    Bounds(commands::BoundsArgs),
    /// Write the network-coding instance of a network.
    ExportNet(commands::ExportNetArgs),
    /// Independent-set lower bounds for antihole confusion graphs.
    TableAppendixC(commands::TableArgs),
    /// Verify the shipped 7-coloring of the 7-antihole confusion graph.
    VerifyAppendixD(commands::AppendixDArgs),
}

/// What a command produced.
pub struct Outcome {
    pub text: String,
    pub json: serde_json::Value,
    /// False when a certificate or claim was refuted.
    pub ok: bool,
}

impl Outcome {
    pub fn ok(text: String, json: serde_json::Value) -> Self {
        Outcome { text, json, ok: true }
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let cfg = RunConfig::new(cli.seed, cli.exact_limit, cli.budget, cli.workers, cli.json)?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.worker_count)
        .build_global()
        .ok();
    match &cli.command {
        Command::Gen(a) => commands::gen(a, &cfg),
        Command::Analyze(a) => commands::analyze(a, &cfg),
        Command::Mis(a) => commands::mis(a, &cfg),
        Command::Chi(a) => commands::chi(a, &cfg),
        Command::Color(a) => commands::color(a, &cfg),
        Command::Verify(a) => commands::verify(a, &cfg),
        Command::Lift(a) => commands::lift(a, &cfg),
        Command::Minrank(a) => commands::minrank(a, &cfg),
        Command::Bounds(a) => commands::bounds(a, &cfg),
        Command::ExportNet(a) => commands::export_net(a, &cfg),
        Command::TableAppendixC(a) => commands::table_appendix_c(a, &cfg),
        Command::VerifyAppendixD(a) => commands::verify_appendix_d(a, &cfg),
    }
    .map(|out| {
        if cfg.output_format == OutputFormat::Json {
            Outcome {
                text: serde_json::to_string_pretty(&out.json).expect("json output") + "\n",
                ..out
            }
        } else {
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
