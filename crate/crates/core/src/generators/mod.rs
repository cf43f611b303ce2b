//! Instance generators: the hardness reductions, the s-t connectedness
//! construction, seeded random ensembles, and brute-force solvers for the
//! source problems so each reduction can be checked end to end.

mod oracles;
mod random;
mod reductions;
mod stcon;

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

pub use oracles::{has_dominating_set, has_independent_set, has_multicolored_clique, has_set_cover};
pub use random::{gen_random, RandomParams};
pub use reductions::{gen_dominating_set, gen_independent_set, gen_mcc, gen_set_cover, MccInput};
pub use stcon::{count_st_subgraphs, gen_stcon, StConReduction};

/// A simple graph over labelled vertices, either directed or undirected.
///
/// Undirected edges are stored once with endpoints in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub directed: bool,
}

impl SimpleGraph {
    pub fn undirected<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        Self::build(vertices, edges, false)
    }

    pub fn directed<S: AsRef<str>>(vertices: &[S], arcs: &[(S, S)]) -> Result<Self> {
        Self::build(vertices, arcs, true)
    }

    /// Vertices are those listed plus any edge endpoint, in first-seen order.
    fn build<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)], directed: bool) -> Result<Self> {
        let mut labels = Vec::new();
        let mut index = HashMap::new();
        let mut intern = |label: &str, labels: &mut Vec<String>| {
            *index.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                labels.len() - 1
            })
        };
        for v in vertices {
            let before = labels.len();
            intern(v.as_ref(), &mut labels);
            if labels.len() == before {
                return Err(Error::DuplicateLabel(v.as_ref().to_string()));
            }
        }
        let mut seen = BTreeSet::new();
        let mut pairs = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            if u == v {
                return Err(Error::SelfLoop(u.to_string()));
            }
            let (mut a, mut b) = (intern(u, &mut labels), intern(v, &mut labels));
            if !directed && a > b {
                std::mem::swap(&mut a, &mut b);
            }
            if !seen.insert((a, b)) {
                return Err(Error::DuplicateArc { from: u.to_string(), to: v.to_string() });
            }
            pairs.push((a, b));
        }
        Ok(SimpleGraph { vertices: labels, edges: pairs, directed })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Adjacency matrix; symmetric for undirected graphs.
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in &self.edges {
            adj[u][v] = true;
            if !self.directed {
                adj[v][u] = true;
            }
        }
        adj
    }
}

/// Sets over a labelled universe; set `j` is named `S{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    pub universe: Vec<String>,
    pub sets: Vec<BTreeSet<usize>>,
}

impl SetSystem {
    /// The universe is `universe` plus every element mentioned by a set.
    pub fn new<S: AsRef<str>>(universe: &[S], sets: &[Vec<S>]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index = HashMap::new();
        for u in universe {
            if index.insert(u.as_ref().to_string(), labels.len()).is_some() {
                return Err(Error::DuplicateLabel(u.as_ref().to_string()));
            }
            labels.push(u.as_ref().to_string());
        }
        let sets = sets
            .iter()
            .map(|set| {
                set.iter()
                    .map(|u| {
                        *index.entry(u.as_ref().to_string()).or_insert_with(|| {
                            labels.push(u.as_ref().to_string());
                            labels.len() - 1
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(SetSystem { universe: labels, sets })
    }
}
