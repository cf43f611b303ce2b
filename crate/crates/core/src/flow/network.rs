use std::collections::VecDeque;
use std::fmt::Write as _;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Capacity {
    Finite(Rational),
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowArc {
    pub from: usize,
    pub to: usize,
    pub capacity: Capacity,
}

/// Residual edge; `cap == None` is unbounded.
#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: Option<Rational>,
    rev: usize,
}

/// Capacitated digraph with a distinguished source and sink.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    node_count: usize,
    source: usize,
    sink: usize,
    arcs: Vec<FlowArc>,
    // (node, edge index) of each arc's forward residual edge
    handles: Vec<(usize, usize)>,
    graph: Vec<Vec<Edge>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: Rational,
    /// Nodes reachable from the source in the final residual network: the
    /// source side of the minimal minimum cut.
    pub source_side: Vec<bool>,
    /// Complement of the nodes that reach the sink in the final residual
    /// network: the source side of the maximal minimum cut.
    pub maximal_source_side: Vec<bool>,
}

impl FlowNetwork {
    pub fn new(node_count: usize, source: usize, sink: usize) -> Self {
        assert!(source < node_count && sink < node_count && source != sink);
        FlowNetwork {
            node_count,
            source,
            sink,
            arcs: Vec::new(),
            handles: Vec::new(),
            graph: vec![Vec::new(); node_count],
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[FlowArc] {
        &self.arcs
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: Capacity) -> Result<usize> {
        if let Capacity::Finite(c) = &capacity {
            if c.is_negative() {
                return Err(Error::NegativeCapacity {
                    from,
                    to,
                    capacity: format_rational(c),
                });
            }
        }
        let fwd = self.graph[from].len();
        let back = self.graph[to].len() + usize::from(from == to);
        let cap = match &capacity {
            Capacity::Finite(c) => Some(c.clone()),
            Capacity::Unbounded => None,
        };
        self.graph[from].push(Edge { to, cap, rev: back });
        self.graph[to].push(Edge {
            to: from,
            cap: Some(Rational::zero()),
            rev: fwd,
        });
        self.handles.push((from, fwd));
        self.arcs.push(FlowArc { from, to, capacity });
        Ok(self.arcs.len() - 1)
    }

    /// Flow currently routed along arc `index`.
    pub fn flow(&self, index: usize) -> Rational {
        let (u, e) = self.handles[index];
        let edge = &self.graph[u][e];
        self.graph[edge.to][edge.rev]
            .cap
            .clone()
            .expect("reverse residual edges are finite")
    }

    /// Edmonds-Karp: augment along shortest residual paths until none is
    /// left. The number of augmentations is O(V·E) whatever the capacities,
    /// so exact rational capacities terminate.
    pub fn max_flow(&mut self) -> Result<MaxFlow> {
        let mut value = Rational::zero();
        while let Some(path) = self.shortest_augmenting_path() {
            let mut bottleneck: Option<Rational> = None;
            for &(u, e) in &path {
                if let Some(c) = &self.graph[u][e].cap {
                    if bottleneck.as_ref().is_none_or(|b| c < b) {
                        bottleneck = Some(c.clone());
                    }
                }
            }
            let delta = bottleneck.ok_or(Error::UnboundedFlow)?;
            for &(u, e) in &path {
                let (to, rev) = (self.graph[u][e].to, self.graph[u][e].rev);
                if let Some(c) = &mut self.graph[u][e].cap {
                    *c -= &delta;
                }
                if let Some(c) = &mut self.graph[to][rev].cap {
                    *c += &delta;
                }
            }
            value += delta;
        }
        let source_side = self.residual_reach(self.source, false);
        let maximal_source_side = self.residual_reach(self.sink, true).into_iter().map(|r| !r).collect();
        Ok(MaxFlow {
            value,
            source_side,
            maximal_source_side,
        })
    }

    fn shortest_augmenting_path(&self) -> Option<Vec<(usize, usize)>> {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.node_count];
        let mut seen = vec![false; self.node_count];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for (e, edge) in self.graph[u].iter().enumerate() {
                if seen[edge.to] || !has_residual(edge) {
                    continue;
                }
                seen[edge.to] = true;
                prev[edge.to] = Some((u, e));
                if edge.to == self.sink {
                    let mut path = Vec::new();
                    let mut at = self.sink;
                    while let Some((p, pe)) = prev[at] {
                        path.push((p, pe));
                        at = p;
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(edge.to);
            }
        }
        None
    }

    /// Forward reach from `start`, or (with `backward`) the nodes that can
    /// reach `start`, through edges with residual capacity.
    fn residual_reach(&self, start: usize, backward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.node_count];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for edge in &self.graph[u] {
                // backward: u <- edge.to is residual iff the paired edge has capacity
                let usable = if backward {
                    has_residual(&self.graph[edge.to][edge.rev])
                } else {
                    has_residual(edge)
                };
                if usable && !seen[edge.to] {
                    seen[edge.to] = true;
                    stack.push(edge.to);
                }
            }
        }
        seen
    }

    /// Capacity of the cut with the given source side; `None` if unbounded.
    pub fn cut_capacity(&self, source_side: &[bool]) -> Option<Rational> {
        let mut total = Rational::zero();
        for arc in &self.arcs {
            if source_side[arc.from] && !source_side[arc.to] {
                match &arc.capacity {
                    Capacity::Finite(c) => total += c,
                    Capacity::Unbounded => return None,
                }
            }
        }
        Some(total)
    }

    /// Debug rendering of the network with capacities and current flow.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph flow {\n");
        let _ = writeln!(out, "  {} [shape=box, label=\"source\"];", self.source);
        let _ = writeln!(out, "  {} [shape=box, label=\"sink\"];", self.sink);
        for (i, arc) in self.arcs.iter().enumerate() {
            let cap = match &arc.capacity {
                Capacity::Finite(c) => format_rational(c),
                Capacity::Unbounded => "inf".to_string(),
            };
            let _ = writeln!(
                out,
                "  {} -> {} [label=\"{}/{}\"];",
                arc.from,
                arc.to,
                format_rational(&self.flow(i)),
                cap
            );
        }
        out.push_str("}\n");
        out
    }
}

fn has_residual(edge: &Edge) -> bool {
    edge.cap.as_ref().is_none_or(|c| c.is_positive())
}
