use itertools::Itertools;

use super::{deterministic_cost, floor_usize, SolveStats};
use crate::error::{Error, Result};
use crate::graph::{condensation, ArcFilter, InfluenceGraph, NodeSet};
use crate::rational::Rational;

/// Influence maximisation (`A = V`) on deterministic graphs in
/// `O(C(b + c, b) · (n + m))`.
///
/// Only source components of the condensation need effectors, one node each;
/// every unchosen source costs at least one, so more than `b + c` sources
/// means "no". Otherwise all `min(b, |R|)`-subsets of the sources are tried.
/// Returns the cheapest such set when its cost is within `c`.
pub fn solve_influence_max(g: &InfluenceGraph, budget: usize, cost_bound: &Rational) -> Result<Option<NodeSet>> {
    if !g.is_deterministic() {
        return Err(Error::Precondition("influence-max requires a deterministic graph (r = 0)".into()));
    }
    let best = influence_max_search(g, budget, cost_bound, &mut SolveStats::default());
    Ok(best
        .filter(|(_, cost)| Rational::from_integer((*cost).into()) <= *cost_bound)
        .map(|(x, _)| x))
}

/// Cheapest source subset of size `min(b, |R|)`, or `None` when
/// `|R| > b + ⌊c⌋`.
pub(super) fn influence_max_search(
    g: &InfluenceGraph,
    budget: usize,
    cost_bound: &Rational,
    stats: &mut SolveStats,
) -> Option<(NodeSet, usize)> {
    let dag = condensation(g, ArcFilter::All, None);
    let sources = dag.sources();
    if sources.len() > budget.saturating_add(floor_usize(cost_bound)) {
        return None;
    }
    let all = vec![true; g.node_count()];
    let pick = budget.min(sources.len());
    let mut best: Option<(usize, Vec<_>)> = None;
    for chosen in sources.iter().combinations(pick) {
        stats.branches += 1;
        stats.candidates += 1;
        let x: Vec<_> = chosen.iter().map(|&&c| dag.components[c][0]).collect();
        let cost = deterministic_cost(g, &all, &x);
        if best.as_ref().is_none_or(|(c, _)| cost < *c) {
            best = Some((cost, x));
        }
    }
    best.map(|(cost, x)| (x.into_iter().collect(), cost))
}
