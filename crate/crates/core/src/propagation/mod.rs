//! Activation probabilities `p(v|X)` and the cost `C_A(G, X)` under the
//! Independent Cascade model.
//!
//! Two exact engines compute the same distribution along independent routes:
//! [`exact_probabilities`] branches over which frontier nodes a cascade step
//! activates, and [`live_edge_probabilities`] enumerates every success/failure
//! outcome of the probabilistic arcs. [`simulate_once`] and
//! [`monte_carlo_cost`] sample single cascades.

mod exact;
mod live_edge;
mod monte_carlo;
mod simulate;

use num::{One, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::{InfluenceGraph, NodeId, NodeSet};
use crate::rational::{format_rational, Rational};
use crate::Limits;

pub use exact::exact_probabilities;
pub use live_edge::{live_edge_probabilities, scenarios, ScenarioOutcome};
pub use monte_carlo::{monte_carlo_cost, MonteCarloEstimate};
pub use simulate::{simulate_once, simulate_run, simulate_with, ActivationTrace, ArcTrial};

/// `p(v|X)` for every node, indexed by node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityVector(pub Vec<Rational>);

impl ProbabilityVector {
    pub fn get(&self, v: NodeId) -> &Rational {
        &self.0[v.index()]
    }

    pub fn to_json(&self, g: &InfluenceGraph) -> Value {
        let map: Map<String, Value> = g
            .nodes()
            .map(|v| (g.label(v).to_string(), Value::from(format_rational(self.get(v)))))
            .collect();
        Value::Object(map)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Frontier branching with deterministic collapse.
    Recursive,
    /// Enumeration of all probabilistic-arc outcomes.
    LiveEdge,
}

/// `C_A(v, X)` per node plus the total `C_A(G, X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostBreakdown {
    pub per_node: Vec<Rational>,
    pub total: Rational,
}

impl CostBreakdown {
    pub fn from_probabilities(g: &InfluenceGraph, targets: &NodeSet, probs: &ProbabilityVector) -> Self {
        let per_node: Vec<Rational> = g
            .nodes()
            .map(|v| node_cost(targets.contains(&v), probs.get(v)))
            .collect();
        let total = per_node.iter().fold(Rational::zero(), |acc, c| acc + c);
        CostBreakdown { per_node, total }
    }

    pub fn to_json(&self, g: &InfluenceGraph) -> Value {
        let per_node: Map<String, Value> = g
            .nodes()
            .map(|v| (g.label(v).to_string(), Value::from(format_rational(&self.per_node[v.index()]))))
            .collect();
        json!({ "per_node": per_node, "total": format_rational(&self.total) })
    }
}

/// `1 - p` for targets, `p` otherwise.
pub fn node_cost(is_target: bool, p: &Rational) -> Rational {
    if is_target {
        Rational::one() - p
    } else {
        p.clone()
    }
}

pub fn probabilities(g: &InfluenceGraph, effectors: &NodeSet, method: Method, limits: &Limits) -> Result<ProbabilityVector> {
    match method {
        Method::Recursive => exact_probabilities(g, effectors, limits),
        Method::LiveEdge => live_edge_probabilities(g, effectors, limits),
    }
}

/// Exact `C_A(G, X)` with its per-node breakdown.
pub fn cost(g: &InfluenceGraph, targets: &NodeSet, effectors: &NodeSet, method: Method, limits: &Limits) -> Result<CostBreakdown> {
    let probs = probabilities(g, effectors, method, limits)?;
    Ok(CostBreakdown::from_probabilities(g, targets, &probs))
}

pub(crate) fn check_r(g: &InfluenceGraph, limits: &Limits) -> Result<()> {
    let r = g.probabilistic_arc_count();
    if r > limits.max_r || r >= 63 {
        return Err(Error::ResourceLimit(format!(
            "{r} probabilistic arcs exceed the exact-engine ceiling of {} (raise --max-r or use the Monte Carlo estimator)",
            limits.max_r.min(62)
        )));
    }
    Ok(())
}

pub(crate) fn check_subset(g: &InfluenceGraph, set: &NodeSet) -> Result<()> {
    match set.iter().find(|v| v.index() >= g.node_count()) {
        Some(v) => Err(Error::UnknownLabel(v.to_string())),
        None => Ok(()),
    }
}
