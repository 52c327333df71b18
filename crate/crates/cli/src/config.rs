use anyhow::{bail, Result};
use sidecast::graphcore::SearchLimits;
use sidecast::rates::{options_for, RateOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Settings shared by every subcommand. Two runs with the same config and
/// inputs print the same bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    /// Exact chromatic searches run on graphs with at most this many
    /// vertices; exact independence searches also accept up to `2^14`.
    pub exact_vertex_limit: usize,
    pub heuristic_budget: u64,
    pub worker_count: usize,
    pub output_format: OutputFormat,
}

impl RunConfig {
    pub fn new(
        seed: u64,
        exact_vertex_limit: usize,
        heuristic_budget: u64,
        worker_count: Option<usize>,
        json: bool,
    ) -> Result<Self> {
        if exact_vertex_limit == 0 {
            bail!("--exact-limit must be positive");
        }
        if heuristic_budget == 0 {
            bail!("--budget must be positive");
        }
        let worker_count = match worker_count {
            Some(0) => bail!("--workers must be positive"),
            Some(w) => w,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        Ok(RunConfig {
            seed,
            exact_vertex_limit,
            heuristic_budget,
            worker_count,
            output_format: if json {
                OutputFormat::Json
            } else {
                OutputFormat::Text
            },
        })
    }

    pub fn rate_options(&self) -> RateOptions {
        options_for(self.exact_vertex_limit, self.seed, self.heuristic_budget)
    }

    pub fn chi_limits(&self) -> SearchLimits {
        self.rate_options().chi_limits
    }

    pub fn mis_limits(&self) -> SearchLimits {
        self.rate_options().mis_limits
    }
}
