//! Enumeration algorithms for deterministic graphs (`r = 0`), polynomial for
//! a fixed budget or a fixed cost bound.

use itertools::Itertools;

use super::{
    check_enumeration, deterministic_cost, floor_usize, make_report, solve_zero_cost, subsets_up_to, Algorithm,
    SolveReport, SolveStats,
};
use crate::error::{Error, Result};
use crate::graph::{InfluenceGraph, NodeId, NodeSet};
use crate::instance::Budget;
use crate::rational::Rational;
use crate::Limits;

fn require_deterministic(g: &InfluenceGraph, what: &str) -> Result<()> {
    if g.is_deterministic() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} requires a deterministic graph (r = 0), found r = {}",
            g.probabilistic_arc_count()
        )))
    }
}

/// Minimum-cost `X` with `|X| <= min(b, a)` by exhaustive enumeration.
///
/// On deterministic graphs the targets activated by any solution are
/// themselves a solution that is no worse, so budgets above `a` never help.
pub fn solve_xp_budget(
    g: &InfluenceGraph,
    targets: &NodeSet,
    budget: usize,
    cost_bound: Option<&Rational>,
    limits: &Limits,
) -> Result<SolveReport> {
    require_deterministic(g, "xp-b")?;
    let n = g.node_count();
    let max_size = budget.min(targets.len());
    check_enumeration("xp-b", subsets_up_to(n, max_size), limits)?;
    let target_mask = g.mask(targets);
    let mut stats = SolveStats::default();
    let mut best: Option<(usize, Vec<NodeId>)> = None;
    for size in 0..=max_size {
        for combo in g.nodes().combinations(size) {
            stats.candidates += 1;
            let cost = deterministic_cost(g, &target_mask, &combo);
            // combinations arrive in lexicographic order, so strict < keeps the smallest
            if best.as_ref().is_none_or(|(c, x)| cost < *c || (cost == *c && combo < *x)) {
                best = Some((cost, combo));
            }
        }
    }
    let (_, x) = best.expect("the empty set is always a candidate");
    make_report(g, targets, x.into_iter().collect(), cost_bound, Algorithm::XpBudget, stats, limits)
}

/// Decides whether some `X` with `|X| <= b` has cost at most `c`.
///
/// Tries every set `D` of at most `⌊c⌋` nodes that are to be charged, flips
/// their target status and asks the zero-cost solver; deterministic costs are
/// integers, hence the floor.
pub fn solve_xp_cost(
    g: &InfluenceGraph,
    targets: &NodeSet,
    budget: Budget,
    cost_bound: &Rational,
    limits: &Limits,
) -> Result<Option<NodeSet>> {
    xp_cost_search(g, targets, budget, cost_bound, limits, &mut SolveStats::default())
}

pub(super) fn xp_cost_search(
    g: &InfluenceGraph,
    targets: &NodeSet,
    budget: Budget,
    cost_bound: &Rational,
    limits: &Limits,
    stats: &mut SolveStats,
) -> Result<Option<NodeSet>> {
    require_deterministic(g, "xp-c")?;
    let n = g.node_count();
    let flips = floor_usize(cost_bound).min(n);
    check_enumeration("xp-c", subsets_up_to(n, flips), limits)?;
    for size in 0..=flips {
        for charged in g.nodes().combinations(size) {
            stats.branches += 1;
            let mut flipped = targets.clone();
            for v in charged {
                if !flipped.remove(&v) {
                    flipped.insert(v);
                }
            }
            if let Some(x) = solve_zero_cost(g, &flipped, budget) {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}
