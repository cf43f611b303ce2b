//! Problem instances and their JSON and DOT encodings.
//!
//! ```json
//! {"nodes":["a","b"],
//!  "arcs":[{"from":"a","to":"b","weight":"1/2"}],
//!  "targets":["b"],
//!  "budget":1,
//!  "cost_bound":"0.5"}
//! ```
//!
//! `budget` is a non-negative integer or `"infinite"`; `cost_bound` is
//! optional. Weights and the cost bound are strings, either decimal or `p/q`,
//! and are converted to exact rationals.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_graph, InfluenceGraph, NodeSet};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Budget {
    Finite(usize),
    Infinite,
}

impl Budget {
    pub fn is_infinite(self) -> bool {
        matches!(self, Budget::Infinite)
    }

    /// The budget capped at `n`.
    pub fn cap(self, n: usize) -> usize {
        match self {
            Budget::Finite(b) => b.min(n),
            Budget::Infinite => n,
        }
    }

    pub fn allows(self, size: usize) -> bool {
        match self {
            Budget::Finite(b) => size <= b,
            Budget::Infinite => true,
        }
    }
}

impl FromStr for Budget {
    type Err = Error;

    /// `"infinite"` or a non-negative integer.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "infinite" {
            return Ok(Budget::Infinite);
        }
        if s.starts_with('-') && s[1..].parse::<u64>().is_ok() {
            return Err(Error::NegativeBudget(s.to_string()));
        }
        s.parse()
            .map(Budget::Finite)
            .map_err(|_| Error::Schema(format!("budget must be an integer or \"infinite\", got `{s}`")))
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Budget::Finite(b) => write!(f, "{b}"),
            Budget::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: InfluenceGraph,
    /// `A`, the observed-active nodes.
    pub targets: NodeSet,
    pub budget: Budget,
    pub cost_bound: Option<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    nodes: Vec<String>,
    arcs: Vec<RawArc>,
    targets: Vec<String>,
    budget: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cost_bound: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArc {
    from: String,
    to: String,
    weight: String,
}

impl Instance {
    pub fn new(graph: InfluenceGraph, targets: NodeSet, budget: Budget, cost_bound: Option<Rational>) -> Result<Self> {
        if let Some(c) = &cost_bound {
            if c.is_negative() {
                return Err(Error::NegativeCostBound(format_rational(c)));
            }
        }
        if let Some(bad) = targets.iter().find(|v| v.index() >= graph.node_count()) {
            return Err(Error::UnknownLabel(bad.to_string()));
        }
        Ok(Instance {
            graph,
            targets,
            budget,
            cost_bound,
        })
    }

    /// `a = |A|`.
    pub fn target_count(&self) -> usize {
        self.targets.len()
    }

    pub fn parse(text: &[u8]) -> Result<Self> {
        let raw: RawInstance = serde_json::from_slice(text)?;
        let budget = match &raw.budget {
            serde_json::Value::String(s) if s == "infinite" => Budget::Infinite,
            serde_json::Value::Number(n) => match (n.as_u64(), n.as_i64()) {
                (Some(b), _) => Budget::Finite(b as usize),
                (None, Some(neg)) if neg < 0 => return Err(Error::NegativeBudget(neg.to_string())),
                _ => return Err(Error::Schema(format!("budget must be an integer, got {n}"))),
            },
            other => {
                return Err(Error::Schema(format!(
                    "budget must be an integer or \"infinite\", got {other}"
                )))
            }
        };
        let cost_bound = raw.cost_bound.as_deref().map(parse_rational).transpose()?;
        let arcs = raw
            .arcs
            .iter()
            .map(|a| Ok((a.from.as_str(), a.to.as_str(), parse_rational(&a.weight)?)))
            .collect::<Result<Vec<_>>>()?;
        let graph = build_graph(raw.nodes, arcs)?;
        let targets = graph.node_set(&raw.targets)?;
        if targets.len() != raw.targets.len() {
            return Err(Error::Schema("duplicate label in targets".into()));
        }
        Instance::new(graph, targets, budget, cost_bound)
    }

    /// Canonical pretty-printed JSON; `parse(serialize(x)) == x`.
    pub fn serialize(&self) -> Vec<u8> {
        let mut out = serde_json::to_vec_pretty(&self.to_raw()).expect("instance serialization cannot fail");
        out.push(b'\n');
        out
    }

    fn to_raw(&self) -> RawInstance {
        let g = &self.graph;
        RawInstance {
            nodes: g.labels().to_vec(),
            arcs: g
                .arcs()
                .iter()
                .map(|a| RawArc {
                    from: g.label(a.tail).to_string(),
                    to: g.label(a.head).to_string(),
                    weight: format_rational(&a.weight),
                })
                .collect(),
            targets: g.set_labels(&self.targets),
            budget: match self.budget {
                Budget::Finite(b) => serde_json::Value::from(b as u64),
                Budget::Infinite => serde_json::Value::from("infinite"),
            },
            cost_bound: self.cost_bound.as_ref().map(format_rational),
        }
    }

    /// Graphviz rendering: targets filled, probabilistic arcs dashed, arcs
    /// labelled with their weight.
    pub fn to_dot(&self) -> String {
        let g = &self.graph;
        let mut out = String::from("digraph influence {\n");
        for v in g.nodes() {
            let style = if self.targets.contains(&v) {
                " [style=filled, fillcolor=black, fontcolor=white]"
            } else {
                ""
            };
            let _ = writeln!(out, "  {}{};", quote(g.label(v)), style);
        }
        for arc in g.arcs() {
            let dashed = if arc.is_deterministic() { "" } else { ", style=dashed" };
            let _ = writeln!(
                out,
                "  {} -> {} [label={}{}];",
                quote(g.label(arc.tail)),
                quote(g.label(arc.head)),
                quote(&format_rational(&arc.weight)),
                dashed
            );
        }
        out.push_str("}\n");
        out
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
