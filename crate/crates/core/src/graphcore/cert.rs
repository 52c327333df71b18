//! Independent-set and coloring certificates and their text formats.
//!
//! `.iset`: `dim <m>` then one hex word per line.
//! `.col`: either `table <m>` followed by `2^m` color integers in vertex
//! order, or a single `construction <name> <params...>` line.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::codes::Construction;
use crate::confusion::{parse_dim_and_hex, ConfusionError};

#[derive(Debug, Error)]
pub enum CertError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown construction `{0}`")]
    UnknownConstructionName(String),
    #[error("cannot load referenced file `{path}`: {msg}")]
    Reference { path: String, msg: String },
    #[error("construction parameters rejected: {0}")]
    Construction(String),
    #[error(transparent)]
    Format(#[from] ConfusionError),
}

/// How much a search vouches for an independent set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Optimality {
    /// Proven maximum.
    Exact,
    /// Found by a heuristic; a lower bound only.
    Heuristic,
    /// Read from a file or built by a construction; a lower bound only.
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSetCert {
    order: usize,
    words: Vec<u64>,
    claimed_size: usize,
    optimality: Optimality,
}

impl IndependentSetCert {
    pub fn new(order: usize, words: Vec<u64>, optimality: Optimality) -> Self {
        let claimed_size = words.len();
        IndependentSetCert {
            order,
            words,
            claimed_size,
            optimality,
        }
    }

    /// A certificate whose claimed size may disagree with its word list; the
    /// verifier reports the mismatch.
    pub fn with_claimed_size(mut self, claimed: usize) -> Self {
        self.claimed_size = claimed;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn claimed_size(&self) -> usize {
        self.claimed_size
    }

    pub fn optimality(&self) -> Optimality {
        self.optimality
    }

    pub fn is_exact(&self) -> bool {
        self.optimality == Optimality::Exact
    }

    pub fn to_iset(&self) -> String {
        let mut out = match pow2_dim(self.order) {
            Some(d) => format!("dim {d}\n"),
            None => format!("vertices {}\n", self.order),
        };
        for w in &self.words {
            out.push_str(&format!("{w:x}\n"));
        }
        out
    }

    pub fn parse_iset(text: &str) -> Result<Self, CertError> {
        let (dim, words) = parse_dim_and_hex(text)?;
        Ok(IndependentSetCert::new(1 << dim, words, Optimality::Unverified))
    }
}

pub(crate) fn pow2_dim(order: usize) -> Option<usize> {
    order.is_power_of_two().then(|| order.trailing_zeros() as usize)
}

/// Explicit color table or a named construction evaluated lazily.
#[derive(Debug, Clone)]
pub enum Assignment {
    Table(Vec<u32>),
    Construction(Box<Construction>),
}

#[derive(Debug, Clone)]
pub struct ColoringCert {
    order: usize,
    assignment: Assignment,
    color_count: usize,
}

impl ColoringCert {
    /// Table certificate; the color count is the number of distinct colors.
    pub fn from_table(table: Vec<u32>) -> Self {
        let color_count = table.iter().collect::<BTreeSet<_>>().len();
        ColoringCert {
            order: table.len(),
            assignment: Assignment::Table(table),
            color_count,
        }
    }

    pub fn from_construction(c: Construction) -> Self {
        ColoringCert {
            order: c.order(),
            color_count: c.color_count(),
            assignment: Assignment::Construction(Box::new(c)),
        }
    }

    pub fn with_color_count(mut self, count: usize) -> Self {
        self.color_count = count;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn assignment(&self) -> &Assignment {
        &self.assignment
    }

    pub fn color_of(&self, v: u64) -> u32 {
        match &self.assignment {
            Assignment::Table(t) => t[v as usize],
            Assignment::Construction(c) => c.color_of(v),
        }
    }

    /// Colors of all vertices in order.
    pub fn to_table(&self) -> Vec<u32> {
        match &self.assignment {
            Assignment::Table(t) => t.clone(),
            Assignment::Construction(_) => (0..self.order as u64).map(|v| self.color_of(v)).collect(),
        }
    }

    /// Vertices grouped by color, classes ordered by least vertex.
    pub fn color_classes(&self) -> Vec<Vec<u64>> {
        let mut classes: Vec<Vec<u64>> = Vec::new();
        let mut index = std::collections::HashMap::new();
        for v in 0..self.order as u64 {
            let c = self.color_of(v);
            let i = *index.entry(c).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[i].push(v);
        }
        classes
    }

    /// Named constructions are written as their one-line descriptor; those
    /// without one (built in memory from files) are written as tables.
    pub fn to_col(&self) -> String {
        if let Assignment::Construction(c) = &self.assignment {
            if let Some(d) = c.descriptor() {
                return format!("construction {d}\n");
            }
        }
        let mut out = match pow2_dim(self.order) {
            Some(d) => format!("table {d}\n"),
            None => format!("vertices {}\n", self.order),
        };
        for chunk in self.to_table().chunks(16) {
            let line: Vec<String> = chunk.iter().map(u32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses a `.col` document. `resolve` loads files referenced by
    /// `mod3`/`lift` constructions.
    pub fn parse_col(
        text: &str,
        resolve: &dyn Fn(&str) -> Result<String, String>,
    ) -> Result<Self, CertError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, header) = lines.next().ok_or(CertError::Parse {
            line: 0,
            msg: "empty coloring file".into(),
        })?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        match toks.as_slice() {
            ["table", m] | ["vertices", m] => {
                let is_dim = toks[0] == "table";
                let v: usize = m.parse().map_err(|_| CertError::Parse {
                    line,
                    msg: format!("bad size `{m}`"),
                })?;
                let order = if is_dim {
                    if v > 30 {
                        return Err(CertError::Parse {
                            line,
                            msg: "table dimension above 30".into(),
                        });
                    }
                    1usize << v
                } else {
                    v
                };
                let mut table = Vec::with_capacity(order);
                for (line, l) in lines {
                    for tok in l.split_whitespace() {
                        table.push(tok.parse::<u32>().map_err(|_| CertError::Parse {
                            line,
                            msg: format!("bad color `{tok}`"),
                        })?);
                    }
                }
                if table.len() != order {
                    return Err(CertError::Parse {
                        line,
                        msg: format!("expected {order} colors, found {}", table.len()),
                    });
                }
                Ok(ColoringCert::from_table(table))
            }
            ["construction", rest @ ..] => {
                if let Some((line, _)) = lines.next() {
                    return Err(CertError::Parse {
                        line,
                        msg: "construction certificates have a single line".into(),
                    });
                }
                let c = Construction::parse(rest, resolve)?;
                Ok(ColoringCert::from_construction(c))
            }
            _ => Err(CertError::Parse {
                line,
                msg: format!("expected `table <m>` or `construction ...`, got `{header}`"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_files(_: &str) -> Result<String, String> {
        Err("no files".into())
    }

    #[test]
    fn iset_round_trip() {
        let c = IndependentSetCert::new(32, vec![0, 6, 0x18], Optimality::Exact);
        assert_eq!(c.to_iset(), "dim 5\n0\n6\n18\n");
        let back = IndependentSetCert::parse_iset(&c.to_iset()).unwrap();
        assert_eq!(back.words(), c.words());
        assert_eq!(back.optimality(), Optimality::Unverified);
    }

    #[test]
    fn col_table_round_trip() {
        let c = ColoringCert::from_table(vec![1, 2, 2, 1]);
        assert_eq!(c.color_count(), 2);
        let text = c.to_col();
        assert_eq!(text, "table 2\n1 2 2 1\n");
        let back = ColoringCert::parse_col(&text, &no_files).unwrap();
        assert_eq!(back.to_table(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn col_rejects_unknown_construction() {
        let err = ColoringCert::parse_col("construction hamming 3", &no_files).unwrap_err();
        assert!(matches!(err, CertError::UnknownConstructionName(n) if n == "hamming"));
    }

    #[test]
    fn col_rejects_short_table() {
        assert!(ColoringCert::parse_col("table 2\n1 2 3", &no_files).is_err());
    }

    #[test]
    fn classes_ordered_by_least_vertex() {
        let c = ColoringCert::from_table(vec![5, 3, 5, 9]);
        assert_eq!(c.color_classes(), vec![vec![0, 2], vec![1], vec![3]]);
    }
}
