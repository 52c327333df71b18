use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use num_bigint::BigUint;
use serde_json::json;
use sidecast::codes::{
    antihole_confusion_graph, antihole_lift_coloring, antihole_lift_is, Construction,
};
use sidecast::confusion::ENUMERATION_DIM_LIMIT;
use sidecast::graphcore::{
    chromatic_interval, independent_set_heuristic, max_independent_set_exact,
    random_translate_cover, verify_coloring, verify_independent_set, SearchError,
};
use sidecast::minrank::{min_rank_search, Matrix, MinRankOutcome};
use sidecast::netexport::{to_network, GapReport};
use sidecast::rates::{beta_t, ceil_log2, codeword_bounds, gamma, rate_report, BetaStar};
use sidecast::{
    confusion_generators, BitGraph, CayleyGraph, Graph, ColoringCert, IndependentSetCert, Optimality,
};

use crate::config::RunConfig;
use crate::input::{construction_graph, load_network, read, resolver, GraphArgs};
use crate::Outcome;

const APPENDIX_D: &str = include_str!("../../core/fixtures/appendix_d.col");

/// Lower bounds on the independence number of the antihole confusion
/// graphs for odd m from 5 to 23, from an earlier large search.
const REFERENCE_ALPHA: [(usize, u64); 10] = [
    (5, 5),
    (7, 22),
    (9, 93),
    (11, 386),
    (13, 1586),
    (15, 6476),
    (17, 26317),
    (19, 106744),
    (21, 430592),
    (23, 1744414),
];

fn write_or_return(out: &Option<PathBuf>, content: String, summary: String) -> Result<String> {
    match out {
        Some(p) => {
            fs::write(p, &content).with_context(|| format!("writing {}", p.display()))?;
            Ok(format!("{summary}\nwrote {}\n", p.display()))
        }
        None => Ok(content),
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Network (`.bhg` file or family such as `cycle:5`).
    pub network: String,
    /// Print the confusion graph (.gen) instead of the network (.bhg).
    #[arg(long)]
    pub confusion: bool,
    /// Block length for --confusion.
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Write to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

pub fn gen(a: &GenArgs, _cfg: &RunConfig) -> Result<Outcome> {
    let (h, name) = load_network(&a.network)?;
    let (content, format) = if a.confusion {
        (confusion_generators(&h, a.t)?.to_gen(), "gen")
    } else {
        (h.to_bhg(), "bhg")
    };
    let summary = format!("{name}: {} blocks, {} receivers", h.n(), h.edges().len());
    let json = json!({
        "network": name,
        "blocks": h.n(),
        "receivers": h.edges().len(),
        "format": format,
        "content": content,
    });
    Ok(Outcome::ok(write_or_return(&a.out, content, summary)?, json))
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Network (`.bhg` file or family such as `cycle:5`).
    pub network: String,
    /// Largest block length for beta_t.
    #[arg(long, default_value_t = 1)]
    pub t_max: usize,
    /// Numbers of disjoint copies for the codeword bounds.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub copies: Vec<u32>,
}

pub fn analyze(a: &AnalyzeArgs, cfg: &RunConfig) -> Result<Outcome> {
    let (h, name) = load_network(&a.network)?;
    let report = rate_report(&h, &name, a.t_max, &a.copies, &cfg.rate_options())?;
    Ok(Outcome {
        text: report.to_text(),
        json: report.to_json(),
        ok: report.chain_ok(),
    })
}

#[derive(Debug, Args)]
pub struct MisArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Skip the exact search.
    #[arg(long)]
    pub heuristic: bool,
    /// Write the set as `.iset`.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

fn independent_set(c: &CayleyGraph, heuristic: bool, cfg: &RunConfig) -> Result<IndependentSetCert> {
    let order = c.vertex_count() as usize;
    let limits = cfg.mis_limits();
    if !heuristic && order <= limits.vertex_limit {
        match max_independent_set_exact(c, limits) {
            Ok(set) => return Ok(set),
            Err(SearchError::BudgetExhausted { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    if c.dim() > ENUMERATION_DIM_LIMIT {
        bail!(
            "graph on 2^{} vertices is above the search limit of 2^{ENUMERATION_DIM_LIMIT}",
            c.dim()
        );
    }
    Ok(independent_set_heuristic(c, cfg.seed, cfg.heuristic_budget))
}

pub fn mis(a: &MisArgs, cfg: &RunConfig) -> Result<Outcome> {
    let (c, name) = a.graph.load()?;
    let set = independent_set(&c, a.heuristic, cfg)?;
    verify_independent_set(&c, &set).context("search returned a dependent set")?;
    let order = c.vertex_count();
    let exact = set.optimality() == Optimality::Exact;
    let rel = if exact { "=" } else { ">=" };
    let chi_f = if exact { "=" } else { "<=" };
    let summary = format!(
        "{name}: alpha {rel} {} on {order} vertices; chi_f {chi_f} {order}/{} ~ {:.3}",
        set.len(),
        set.len(),
        order as f64 / set.len() as f64
    );
    let json = json!({
        "graph": name,
        "vertices": order,
        "size": set.len(),
        "optimality": set.optimality(),
        "words": set.words(),
    });
    let text = match &a.out {
        Some(_) => write_or_return(&a.out, set.to_iset(), summary)?,
        None => format!("{summary}\n"),
    };
    Ok(Outcome::ok(text, json))
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Write the coloring as `.col`.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

pub fn chi(a: &ChiArgs, cfg: &RunConfig) -> Result<Outcome> {
    let (c, name) = a.graph.load()?;
    let order = c.vertex_count() as usize;
    let limits = cfg.chi_limits();
    if order > limits.vertex_limit {
        bail!(
            "{name} has {order} vertices, above --exact-limit {}",
            limits.vertex_limit
        );
    }
    // vertex transitivity gives chi >= |V| / alpha
    let extra = match max_independent_set_exact(&c, cfg.mis_limits()) {
        Ok(set) if !set.is_empty() => order.div_ceil(set.len()),
        _ => 0,
    };
    let out = chromatic_interval(&c, limits, extra)?;
    let value = if out.is_exact() {
        format!("chi = {}", out.upper)
    } else {
        format!("chi in [{}, {}]", out.lower, out.upper)
    };
    let bits = if ceil_log2(out.lower as u64) == ceil_log2(out.upper as u64) {
        format!("{}", ceil_log2(out.upper as u64))
    } else {
        format!(
            "[{}, {}]",
            ceil_log2(out.lower as u64),
            ceil_log2(out.upper as u64)
        )
    };
    let summary = format!("{name}: {value}, beta = {bits} bits");
    let json = json!({
        "graph": name,
        "vertices": order,
        "lower": out.lower,
        "upper": out.upper,
        "exact": out.is_exact(),
        "clique": out.clique,
    });
    let text = match &a.out {
        Some(_) => write_or_return(&a.out, out.coloring.to_col(), summary)?,
        None => format!("{summary}\n"),
    };
    Ok(Outcome::ok(text, json))
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    /// Named construction, e.g. "syndrome 3", "rs 2 2", "lift inner.col".
    #[arg(long, value_name = "DESCRIPTOR", conflicts_with = "cover")]
    pub construction: Option<String>,
    /// Cover the graph by random translates of this independent set.
    #[arg(long, value_name = "ISET")]
    pub cover: Option<PathBuf>,
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Write the coloring as `.col`.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

pub fn color(a: &ColorArgs, cfg: &RunConfig) -> Result<Outcome> {
    let (col, graph, name) = if let Some(desc) = &a.construction {
        let toks: Vec<&str> = desc.split_whitespace().collect();
        let c = Construction::parse(&toks, &resolver(None))?;
        let graph = construction_graph(&c)?;
        (ColoringCert::from_construction(c), graph, desc.clone())
    } else if let Some(path) = &a.cover {
        let (graph, name) = a.graph.load()?;
        let set = IndependentSetCert::parse_iset(&read(path)?)?;
        let col = random_translate_cover(&graph, &set, cfg.seed)?;
        (col, graph, format!("translate cover of {name}"))
    } else {
        bail!("give --construction DESCRIPTOR or --cover ISET");
    };
    let checked = if graph.dim() <= ENUMERATION_DIM_LIMIT {
        Some(verify_coloring(&graph, &col))
    } else {
        None
    };
    let (status, ok) = match &checked {
        Some(Ok(used)) => (format!("{used} colors, proper"), true),
        Some(Err(v)) => (format!("improper: {v}"), false),
        None => ("not verified (graph too large)".to_string(), true),
    };
    let summary = format!("{name}: {status}");
    let json = json!({
        "coloring": name,
        "vertices": col.order(),
        "colors": col.color_count(),
        "verified": matches!(checked, Some(Ok(_))),
        "status": status,
    });
    let text = match &a.out {
        Some(_) => write_or_return(&a.out, col.to_col(), summary)?,
        None => format!("{summary}\n"),
    };
    Ok(Outcome { text, json, ok })
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Independent set to check.
    #[arg(long, value_name = "FILE", required_unless_present = "col", conflicts_with = "col")]
    pub iset: Option<PathBuf>,
    /// Coloring to check.
    #[arg(long, value_name = "FILE")]
    pub col: Option<PathBuf>,
    #[command(flatten)]
    pub graph: GraphArgs,
}

pub fn verify(a: &VerifyArgs, _cfg: &RunConfig) -> Result<Outcome> {
    let (c, name) = a.graph.load()?;
    if let Some(p) = &a.iset {
        let set = IndependentSetCert::parse_iset(&read(p)?)?;
        let r = verify_independent_set(&c, &set);
        let status = match &r {
            Ok(()) => format!("independent set of size {}", set.len()),
            Err(v) => format!("not independent: {v}"),
        };
        let json = json!({
            "graph": name,
            "certificate": "iset",
            "size": set.len(),
            "valid": r.is_ok(),
            "status": status,
        });
        return Ok(Outcome {
            text: format!("{status}\n"),
            json,
            ok: r.is_ok(),
        });
    }
    let p = a.col.as_ref().expect("clap requires one certificate");
    let col = ColoringCert::parse_col(&read(p)?, &resolver(p.parent()))?;
    check_coloring(&c, &name, &col, None)
}

fn check_coloring(
    c: &CayleyGraph,
    name: &str,
    col: &ColoringCert,
    expected: Option<usize>,
) -> Result<Outcome> {
    let r = verify_coloring(c, col);
    let (status, ok) = match &r {
        Ok(used) if expected.is_some_and(|e| *used > e) => (
            format!("{used} colors, proper, but more than {}", expected.unwrap()),
            false,
        ),
        Ok(used) => (format!("{used} colors, proper"), true),
        Err(v) => (format!("improper: {v}"), false),
    };
    let json = json!({
        "graph": name,
        "certificate": "col",
        "colors": r.as_ref().ok(),
        "valid": ok,
        "status": status,
    });
    Ok(Outcome {
        text: format!("{status}\n"),
        json,
        ok,
    })
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    /// Independent set of an antihole confusion graph.
    #[arg(long, value_name = "FILE", required_unless_present = "col", conflicts_with = "col")]
    pub iset: Option<PathBuf>,
    /// Coloring of an antihole confusion graph.
    #[arg(long, value_name = "FILE")]
    pub col: Option<PathBuf>,
    /// Write the lifted certificate here.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

pub fn lift(a: &LiftArgs, _cfg: &RunConfig) -> Result<Outcome> {
    if let Some(p) = &a.iset {
        let set = IndependentSetCert::parse_iset(&read(p)?)?;
        let lifted = antihole_lift_is(&set)?;
        let m = lifted.order().trailing_zeros();
        let summary = format!(
            "lifted {} words to {} words, independent in the {m}-antihole confusion graph",
            set.len(),
            lifted.len()
        );
        let json = json!({
            "input_size": set.len(),
            "size": lifted.len(),
            "antihole": m,
            "words": lifted.words(),
        });
        let text = write_or_return(&a.out, lifted.to_iset(), summary)?;
        return Ok(Outcome::ok(text, json));
    }
    let p = a.col.as_ref().expect("clap requires one certificate");
    let inner = ColoringCert::parse_col(&read(p)?, &resolver(p.parent()))?;
    let lifted = antihole_lift_coloring(&inner)?;
    let table = ColoringCert::from_table(lifted.to_table());
    let m = table.order().trailing_zeros();
    let summary = format!(
        "lifted a {}-coloring to the {m}-antihole confusion graph",
        table.color_count()
    );
    let json = json!({"antihole": m, "colors": table.color_count()});
    let text = write_or_return(&a.out, table.to_col(), summary)?;
    Ok(Outcome::ok(text, json))
}

#[derive(Debug, Args)]
pub struct MinrankArgs {
    /// Complement of the M-cycle.
    #[arg(long, value_name = "M", conflicts_with_all = ["cycle", "elg"])]
    pub antihole: Option<usize>,
    /// The M-cycle.
    #[arg(long, value_name = "M", conflicts_with = "elg")]
    pub cycle: Option<usize>,
    /// Undirected graph in `.elg` edge-list format.
    #[arg(long, value_name = "FILE")]
    pub elg: Option<PathBuf>,
    /// Field size q.
    #[arg(long, default_value_t = 2)]
    pub field: u32,
    #[arg(long, default_value_t = 3)]
    pub max_rank: usize,
    /// Independent-set size of the network's confusion graph; prints the
    /// linear versus non-linear gap.
    #[arg(long, value_name = "G")]
    pub gamma: Option<u64>,
    /// Write the witness matrix as `.mat`.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

fn cycle_graph(m: usize) -> BitGraph {
    BitGraph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m)))
}

pub fn minrank(a: &MinrankArgs, _cfg: &RunConfig) -> Result<Outcome> {
    let (g, name) = if let Some(m) = a.antihole {
        (cycle_graph(m).complement(), format!("antihole:{m}"))
    } else if let Some(m) = a.cycle {
        (cycle_graph(m), format!("cycle:{m}"))
    } else if let Some(p) = &a.elg {
        (BitGraph::parse_elg(&read(p)?)?, p.display().to_string())
    } else {
        bail!("give --antihole M, --cycle M or --elg FILE");
    };
    let outcome = min_rank_search(&g, a.field, a.max_rank)?;
    let (lower, status, witness) = match &outcome {
        MinRankOutcome::Found { rank, witness } => {
            (*rank as u64, format!("min-rank = {rank}"), Some(witness))
        }
        MinRankOutcome::Above(r) => (*r as u64 + 1, format!("min-rank > {r}"), None),
    };
    let mut text = format!("{name} over GF({}): {status}\n", a.field);
    let mut json = json!({
        "graph": name,
        "field": a.field,
        "max_rank": a.max_rank,
        "linear_lower": lower,
        "witness": witness.map(Matrix::to_mat),
    });
    if let Some(gamma) = a.gamma {
        let star = BetaStar::new(g.order(), gamma, false)?;
        let report = GapReport::new(
            lower,
            format!("min-rank over GF({})", a.field),
            star,
            format!("independent set of size {gamma}"),
        )?;
        text.push_str(&report.to_text());
        json["gap"] = report.to_json();
    }
    if let (Some(p), Some(w)) = (&a.out, witness) {
        fs::write(p, w.to_mat()).with_context(|| format!("writing {}", p.display()))?;
        text.push_str(&format!("wrote {}\n", p.display()));
    }
    Ok(Outcome::ok(text, json))
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Network whose independence number is computed exactly.
    #[arg(conflicts_with_all = ["blocks", "gamma"])]
    pub network: Option<String>,
    /// Number of blocks, with --gamma.
    #[arg(long, requires = "gamma")]
    pub blocks: Option<usize>,
    /// Independence number of the confusion graph, with --blocks.
    #[arg(long, requires = "blocks")]
    pub gamma: Option<u64>,
    /// Numbers of disjoint copies.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub k: Vec<u32>,
    /// Check that fewer than C^k codewords suffice (C = codewords for one copy).
    #[arg(long, value_name = "C")]
    pub against: Option<u64>,
}

pub fn bounds(a: &BoundsArgs, cfg: &RunConfig) -> Result<Outcome> {
    let (n, g, name) = match (&a.network, a.blocks, a.gamma) {
        (Some(spec), _, _) => {
            let (h, name) = load_network(spec)?;
            let (g, exact) = gamma(&h, &cfg.rate_options())?;
            if !exact {
                bail!("could not compute the independence number of {name} exactly");
            }
            (h.n(), g, name)
        }
        (None, Some(n), Some(g)) => (n, g, format!("n = {n}, gamma = {g}")),
        _ => bail!("give a network or --blocks N --gamma G"),
    };
    let mut text = format!("{name}\n");
    let mut rows = Vec::new();
    let mut ok = true;
    for &k in &a.k {
        let b = codeword_bounds(n, g, k)?;
        let lower_dec = ratio_decimal(&b.lower, 4);
        text.push_str(&format!(
            "k = {k}: {} ~ {lower_dec} <= |C| <= {}, and <= {} ; at most {} bits\n",
            b.lower,
            b.upper,
            b.upper_alt,
            b.max_bits()
        ));
        let mut row = json!({
            "k": k,
            "lower": b.lower.to_string(),
            "lower_decimal": lower_dec,
            "min_codewords": b.min_codewords().to_string(),
            "upper": b.upper.to_string(),
            "upper_alt": b.upper_alt.to_string(),
            "max_bits": b.max_bits(),
        });
        if let Some(c) = a.against {
            let target = BigUint::from(c).pow(k);
            let below = b.upper_alt_below(&target);
            ok &= below;
            text.push_str(&format!(
                "       upper_alt < {c}^{k}: {}\n",
                if below { "yes" } else { "no" }
            ));
            row["below_product"] = json!(below);
        }
        rows.push(row);
    }
    let json = json!({"network": name, "blocks": n, "gamma": g, "bounds": rows});
    Ok(Outcome { text, json, ok })
}

fn ratio_decimal(x: &num_rational::BigRational, places: usize) -> String {
    use num_traits::ToPrimitive;
    format!("{:.*}", places, x.to_f64().unwrap_or(f64::INFINITY))
}

#[derive(Debug, Args)]
pub struct ExportNetArgs {
    /// Network (`.bhg` file or family such as `cycle:5`).
    pub network: String,
    /// Capacity of the bottleneck edge; defaults to the upper bound on beta_1.
    #[arg(long)]
    pub capacity: Option<u64>,
    /// Print Graphviz DOT instead of JSON.
    #[arg(long)]
    pub dot: bool,
    /// Write to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

pub fn export_net(a: &ExportNetArgs, cfg: &RunConfig) -> Result<Outcome> {
    let (h, name) = load_network(&a.network)?;
    let capacity = match a.capacity {
        Some(c) => c,
        None => beta_t(&h, 1, &cfg.rate_options())?.upper as u64,
    };
    let net = to_network(&h, capacity);
    let content = if a.dot { net.to_dot() } else { net.to_json() + "\n" };
    let summary = format!(
        "{name}: {} vertices, {} edges, bottleneck capacity {capacity}",
        net.nodes.len(),
        net.edges.len()
    );
    let json = serde_json::to_value(&net)?;
    Ok(Outcome::ok(write_or_return(&a.out, content, summary)?, json))
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Largest antihole size (odd, at most 21).
    #[arg(long, default_value_t = 13)]
    pub max_m: usize,
    /// Run the exact search up to this size; the heuristic above it.
    #[arg(long, default_value_t = 7)]
    pub exact_up_to: usize,
}

pub fn table_appendix_c(a: &TableArgs, cfg: &RunConfig) -> Result<Outcome> {
    if a.max_m > 21 {
        bail!("--max-m above 21 needs more than 2^22 vertices");
    }
    let mut text = String::from("   m   alpha >=   chi_f <=   reference alpha >=\n");
    let mut rows = Vec::new();
    for m in (5..=a.max_m).step_by(2) {
        let c = antihole_confusion_graph(m)?;
        let set = independent_set(&c, m > a.exact_up_to, cfg)?;
        verify_independent_set(&c, &set).context("search returned a dependent set")?;
        let size = set.len() as u64;
        let reference = REFERENCE_ALPHA.iter().find(|r| r.0 == m).map(|r| r.1);
        let exact = set.optimality() == Optimality::Exact;
        let chi_f = (1u64 << m) as f64 / size as f64;
        text.push_str(&format!(
            "{m:>4}   {size:>8}{}   {chi_f:>8.3}   {:>10}\n",
            if exact { "*" } else { " " },
            reference.map_or("-".into(), |r| r.to_string())
        ));
        rows.push(json!({
            "m": m,
            "alpha_lower": size,
            "exact": exact,
            "chi_f_upper": format!("{chi_f:.3}"),
            "reference": reference,
        }));
    }
    text.push_str("(* exact)\n");
    Ok(Outcome::ok(text, json!({ "rows": rows })))
}

#[derive(Debug, Args)]
pub struct AppendixDArgs {
    /// Coloring to check instead of the shipped table.
    #[arg(long, value_name = "FILE")]
    pub col: Option<PathBuf>,
}

pub fn verify_appendix_d(a: &AppendixDArgs, _cfg: &RunConfig) -> Result<Outcome> {
    let text = match &a.col {
        Some(p) => read(p)?,
        None => APPENDIX_D.to_string(),
    };
    let col = ColoringCert::parse_col(&text, &resolver(a.col.as_deref().and_then(Path::parent)))?;
    let c = antihole_confusion_graph(7)?;
    check_coloring(&c, "antihole:7", &col, Some(7))
}
