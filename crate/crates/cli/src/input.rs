//! Loading networks and graphs from files or family names.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use sidecast::codes::{antihole_confusion_graph, Construction};
use sidecast::instances::{
    antihole_instance, cycle_instance, pair_miss_instance, two_missing_instance, PairMissSpec,
};
use sidecast::{confusion_generators, BroadcastHypergraph, CayleyGraph, SideInfoGraph};

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Reads files referenced from inside `.col` documents, relative to `base`.
pub fn resolver(base: Option<&Path>) -> impl Fn(&str) -> Result<String, String> + '_ {
    move |name: &str| {
        let p = match base {
            Some(dir) if Path::new(name).is_relative() => dir.join(name),
            _ => PathBuf::from(name),
        };
        fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))
    }
}

/// A network given as a `.bhg` path or a family name such as `cycle:5`,
/// `antihole:7`, `two-missing:3`, `complete:4`, `edgeless:4` or
/// `pair-miss:<spec.gen>`.
pub fn load_network(spec: &str) -> Result<(BroadcastHypergraph, String)> {
    let path = Path::new(spec);
    if path.exists() {
        let h = BroadcastHypergraph::parse_bhg(&read(path)?)
            .with_context(|| format!("parsing {spec}"))?;
        let name = path
            .file_stem()
            .map_or(spec.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok((h, name));
    }
    let Some((family, arg)) = spec.split_once(':') else {
        bail!("`{spec}` is neither a file nor a family like `cycle:5`");
    };
    let num = || -> Result<usize> {
        arg.parse()
            .with_context(|| format!("bad parameter `{arg}` in `{spec}`"))
    };
    let h = match family {
        "cycle" => cycle_instance(num()?)?,
        "antihole" => antihole_instance(num()?)?,
        "two-missing" => two_missing_instance(num()?)?,
        "complete" => BroadcastHypergraph::from_side_info_graph(&SideInfoGraph::complete(num()?)?),
        "edgeless" => BroadcastHypergraph::from_side_info_graph(&SideInfoGraph::edgeless(num()?)?),
        "pair-miss" => {
            let spec = PairMissSpec::parse(&read(Path::new(arg))?)?;
            pair_miss_instance(&spec)?
        }
        _ => bail!("unknown network family `{family}`"),
    };
    Ok((h, spec.to_string()))
}

/// Where a graph comes from: a network's confusion graph, a `.gen` file or
/// the antihole shortcut.
#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Network (`.bhg` file or family such as `cycle:5`); its confusion
    /// graph is used.
    pub network: Option<String>,
    /// Block length for the confusion graph.
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Cayley graph in `.gen` format instead of a network.
    #[arg(long, value_name = "FILE", conflicts_with = "network")]
    pub gen: Option<PathBuf>,
    /// Confusion graph of the complement of the M-cycle.
    #[arg(long, value_name = "M", conflicts_with_all = ["network", "gen"])]
    pub antihole: Option<usize>,
}

impl GraphArgs {
    pub fn load(&self) -> Result<(CayleyGraph, String)> {
        if let Some(m) = self.antihole {
            return Ok((antihole_confusion_graph(m)?, format!("antihole:{m}")));
        }
        if let Some(p) = &self.gen {
            let g = CayleyGraph::parse_gen(&read(p)?)
                .with_context(|| format!("parsing {}", p.display()))?;
            return Ok((g, p.display().to_string()));
        }
        let Some(spec) = &self.network else {
            bail!("give a network, --gen FILE or --antihole M");
        };
        let (h, name) = load_network(spec)?;
        let c = confusion_generators(&h, self.t)?;
        let name = if self.t == 1 {
            name
        } else {
            format!("{name} (t = {})", self.t)
        };
        Ok((c, name))
    }
}

/// The graph a named construction colors.
pub fn construction_graph(c: &Construction) -> Result<CayleyGraph> {
    Ok(match c {
        Construction::Syndrome { k } => confusion_generators(&two_missing_instance(*k)?, 1)?,
        Construction::ReedSolomon { k, t, .. } => {
            confusion_generators(&two_missing_instance(*k)?, *t)?
        }
        Construction::Mod3 { spec, .. } | Construction::Pow2 { spec, .. } => {
            confusion_generators(&pair_miss_instance(spec)?, 1)?
        }
        Construction::Lift { inner_dim, .. } => antihole_confusion_graph(inner_dim + 2)?,
    })
}
