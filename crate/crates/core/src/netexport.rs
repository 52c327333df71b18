//! Broadcast networks as network-coding instances, and the linear versus
//! non-linear gap report.
//!
//! A network with `n` blocks and `m` receivers becomes a directed graph with
//! a source `s_i` per block, a sink `t_e` per receiver and two relays `u`
//! and `w`. Every source feeds `u`, `w` feeds every sink, and each sink is
//! wired straight to the sources of the blocks its receiver knows. All of
//! these edges have unbounded capacity; the single edge `u -> w` carries the
//! finite capacity `c`. Sink `t_e` demands the block its receiver wants.
//! The demands can be met exactly when `c` is at least the broadcast rate
//! for the chosen block length; no solver is included here.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::model::{BroadcastHypergraph, ModelError, Receiver};
use crate::rates::BetaStar;

#[derive(Debug, Error)]
pub enum NetError {
    #[error("network file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("network file: {0}")]
    Malformed(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("the non-linear rate bound is zero, so the ratio is undefined")]
    ZeroRate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Source,
    Sink,
    Relay,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: String,
    pub kind: NodeKind,
}

/// Edge capacity; unbounded edges are written as the token `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Capacity {
    Infinite,
    Finite(u64),
}

impl Serialize for Capacity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Capacity::Infinite => s.serialize_str("inf"),
            Capacity::Finite(c) => s.serialize_u64(*c),
        }
    }
}

impl<'de> Deserialize<'de> for Capacity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(u64),
            Token(String),
        }
        match Raw::deserialize(d)? {
            Raw::Number(c) => Ok(Capacity::Finite(c)),
            Raw::Token(t) if t == "inf" => Ok(Capacity::Infinite),
            Raw::Token(t) => Err(serde::de::Error::custom(format!(
                "capacity must be a number or \"inf\", got {t:?}"
            ))),
        }
    }
}

impl fmt::Display for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Capacity::Infinite => f.write_str("inf"),
            Capacity::Finite(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetEdge {
    pub from: String,
    pub to: String,
    pub capacity: Capacity,
}

/// Sink `sink` wants block `block`, which originates at `source`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Demand {
    pub sink: String,
    pub source: String,
    pub block: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkInstance {
    pub nodes: Vec<Node>,
    pub edges: Vec<NetEdge>,
    pub demands: Vec<Demand>,
}

fn source_id(i: usize) -> String {
    format!("s{}", i + 1)
}

fn sink_id(e: usize) -> String {
    format!("t{}", e + 1)
}

/// Builds the network-coding instance with bottleneck capacity `capacity`.
///
/// Node ids are `s1..sn`, `t1..tm`, `u` and `w`; block numbers in demands
/// are 1-indexed like the `.bhg` format.
pub fn to_network(h: &BroadcastHypergraph, capacity: u64) -> NetworkInstance {
    let n = h.n();
    let mut nodes: Vec<Node> = (0..n)
        .map(|i| Node {
            id: source_id(i),
            kind: NodeKind::Source,
        })
        .collect();
    nodes.extend((0..h.edges().len()).map(|e| Node {
        id: sink_id(e),
        kind: NodeKind::Sink,
    }));
    for id in ["u", "w"] {
        nodes.push(Node {
            id: id.to_string(),
            kind: NodeKind::Relay,
        });
    }
    let inf = |from: String, to: String| NetEdge {
        from,
        to,
        capacity: Capacity::Infinite,
    };
    let mut edges: Vec<NetEdge> = (0..n).map(|i| inf(source_id(i), "u".into())).collect();
    edges.extend((0..h.edges().len()).map(|e| inf("w".into(), sink_id(e))));
    for (e, r) in h.edges().iter().enumerate() {
        edges.extend(r.known.iter().map(|&j| inf(source_id(j), sink_id(e))));
    }
    edges.push(NetEdge {
        from: "u".into(),
        to: "w".into(),
        capacity: Capacity::Finite(capacity),
    });
    let demands = h
        .edges()
        .iter()
        .enumerate()
        .map(|(e, r)| Demand {
            sink: sink_id(e),
            source: source_id(r.target),
            block: r.target + 1,
        })
        .collect();
    NetworkInstance {
        nodes,
        edges,
        demands,
    }
}

impl NetworkInstance {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("network serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, NetError> {
        Ok(serde_json::from_str(text)?)
    }

    /// The finite-capacity edges (exactly one for instances built here).
    pub fn bottlenecks(&self) -> Vec<&NetEdge> {
        self.edges
            .iter()
            .filter(|e| e.capacity != Capacity::Infinite)
            .collect()
    }

    /// Recovers the broadcast network from an instance in the shape
    /// produced by [`to_network`].
    pub fn to_hypergraph(&self) -> Result<BroadcastHypergraph, NetError> {
        let index = |id: &str, prefix: char| -> Result<usize, NetError> {
            id.strip_prefix(prefix)
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .map(|i| i - 1)
                .ok_or_else(|| NetError::Malformed(format!("unexpected node id {id:?}")))
        };
        let n = self
            .nodes
            .iter()
            .filter(|v| v.kind == NodeKind::Source)
            .count();
        let m = self
            .nodes
            .iter()
            .filter(|v| v.kind == NodeKind::Sink)
            .count();
        let mut known: Vec<Vec<usize>> = vec![Vec::new(); m];
        for e in &self.edges {
            if e.from.starts_with('s') && e.to.starts_with('t') {
                let (j, t) = (index(&e.from, 's')?, index(&e.to, 't')?);
                if t >= m {
                    return Err(NetError::Malformed(format!("edge to unknown sink {}", e.to)));
                }
                known[t].push(j);
            }
        }
        let mut target: Vec<Option<usize>> = vec![None; m];
        for d in &self.demands {
            let t = index(&d.sink, 't')?;
            if t >= m || d.block == 0 {
                return Err(NetError::Malformed(format!("bad demand {d:?}")));
            }
            target[t] = Some(d.block - 1);
        }
        let edges = known
            .into_iter()
            .zip(target)
            .enumerate()
            .map(|(t, (k, want))| {
                want.map(|w| Receiver::new(w, k))
                    .ok_or_else(|| NetError::Malformed(format!("sink t{} has no demand", t + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BroadcastHypergraph::new(n, edges)?)
    }

    /// Graphviz rendering; unbounded edges are drawn dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph network {\n  rankdir=LR;\n");
        for v in &self.nodes {
            let shape = match v.kind {
                NodeKind::Source => "box",
                NodeKind::Sink => "doublecircle",
                NodeKind::Relay => "circle",
            };
            out.push_str(&format!("  {} [shape={shape}];\n", v.id));
        }
        for e in &self.edges {
            match e.capacity {
                Capacity::Infinite => {
                    out.push_str(&format!("  {} -> {} [style=dashed];\n", e.from, e.to))
                }
                Capacity::Finite(c) => out.push_str(&format!(
                    "  {} -> {} [label=\"{c}\", penwidth=2];\n",
                    e.from, e.to
                )),
            }
        }
        for d in &self.demands {
            out.push_str(&format!(
                "  // {} demands block {} from {}\n",
                d.sink, d.block, d.source
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Ratio between a lower bound on linear code length and an upper bound on
/// the non-linear rate `n - log2 gamma`.
#[derive(Debug, Clone)]
pub struct GapReport {
    pub linear_lower: u64,
    pub linear_source: String,
    pub beta_star: BetaStar,
    pub beta_source: String,
}

impl GapReport {
    pub fn new(
        linear_lower: u64,
        linear_source: impl Into<String>,
        beta_star: BetaStar,
        beta_source: impl Into<String>,
    ) -> Result<Self, NetError> {
        if beta_star.cmp_int(0) != Ordering::Greater {
            return Err(NetError::ZeroRate);
        }
        Ok(GapReport {
            linear_lower,
            linear_source: linear_source.into(),
            beta_star,
            beta_source: beta_source.into(),
        })
    }

    pub fn ratio(&self) -> f64 {
        self.linear_lower as f64 / self.beta_star.to_f64()
    }

    /// Exact test of `ratio >= p / q`, i.e. `n - log2 gamma <= q L / p`.
    pub fn ratio_at_least(&self, p: u64, q: u64) -> bool {
        assert!(p > 0, "zero numerator");
        self.beta_star.cmp_ratio(q * self.linear_lower, p) != Ordering::Greater
    }

    pub fn to_text(&self) -> String {
        format!(
            "linear length  >= {}  ({})\nrate           <= {}  ({})\nratio          >= {:.4}\n",
            self.linear_lower,
            self.linear_source,
            self.beta_star,
            self.beta_source,
            self.ratio()
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "linear_lower": self.linear_lower,
            "linear_source": self.linear_source,
            "beta_star": {
                "gamma": self.beta_star.gamma,
                "exact": self.beta_star.gamma_exact,
                "expression": self.beta_star.expression(),
                "value": self.beta_star.decimal(),
            },
            "beta_source": self.beta_source,
            "ratio": format!("{:.6}", self.ratio()),
        })
    }
}
