use num::{One, Zero};

use super::{check_r, check_subset, ProbabilityVector};
use crate::error::Result;
use crate::graph::{InfluenceGraph, NodeSet};
use crate::rational::Rational;
use crate::Limits;

/// One success/failure outcome for every probabilistic arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioOutcome {
    /// Indices (into the graph's arc list) of the probabilistic arcs that fire.
    pub live_arcs: Vec<usize>,
    pub probability: Rational,
}

/// All `2^r` outcomes; the `i`-th probabilistic arc is live in scenario `s`
/// iff bit `i` of `s` is set.
pub fn scenarios<'g>(g: &'g InfluenceGraph, limits: &Limits) -> Result<impl Iterator<Item = ScenarioOutcome> + 'g> {
    check_r(g, limits)?;
    let prob = g.probabilistic_arcs();
    let r = prob.len();
    Ok((0u64..1 << r).map(move |mask| {
        let mut probability = Rational::one();
        let mut live_arcs = Vec::new();
        for (bit, &a) in prob.iter().enumerate() {
            let w = &g.arc(a).weight;
            if mask & (1 << bit) != 0 {
                probability *= w;
                live_arcs.push(a);
            } else {
                probability *= Rational::one() - w;
            }
        }
        ScenarioOutcome {
            live_arcs,
            probability,
        }
    }))
}

/// `p(v|X) = Σ_S Pr[S] · [v reachable from X over deterministic ∪ live arcs]`.
pub fn live_edge_probabilities(g: &InfluenceGraph, effectors: &NodeSet, limits: &Limits) -> Result<ProbabilityVector> {
    check_subset(g, effectors)?;
    let n = g.node_count();
    let mut acc = vec![Rational::zero(); n];
    let mut live = vec![false; g.arc_count()];
    for scenario in scenarios(g, limits)? {
        live.iter_mut().for_each(|l| *l = false);
        for &a in &scenario.live_arcs {
            live[a] = true;
        }
        let mut seen = g.mask(effectors);
        let mut stack: Vec<usize> = effectors.iter().map(|v| v.index()).collect();
        while let Some(u) = stack.pop() {
            for &a in g.out_arcs(crate::graph::NodeId(u)) {
                let arc = g.arc(a);
                let h = arc.head.index();
                if !seen[h] && (live[a] || arc.is_deterministic()) {
                    seen[h] = true;
                    stack.push(h);
                }
            }
        }
        for (v, &on) in seen.iter().enumerate() {
            if on {
                acc[v] += &scenario.probability;
            }
        }
    }
    Ok(ProbabilityVector(acc))
}
