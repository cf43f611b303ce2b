use crate::graph::{condense_masked, extend_mask, ArcFilter, Direction, InfluenceGraph, NodeSet};
use crate::instance::Budget;

/// Finds `X` with `C_A(G, X) = 0` and `|X| <= b`, in linear time.
///
/// A zero-cost solution activates every target with certainty and nothing
/// else, so (1) no target may reach a non-target along any arcs, and (2)
/// effectors must be targets that hit every target through deterministic
/// arcs inside `G[A]`. Each source component of the deterministic
/// condensation of `G[A]` needs its own effector; its smallest node is taken.
pub fn solve_zero_cost(g: &InfluenceGraph, targets: &NodeSet, budget: Budget) -> Option<NodeSet> {
    let target_mask = g.mask(targets);
    let mut reached = target_mask.clone();
    let mut stack: Vec<usize> = targets.iter().map(|v| v.index()).collect();
    extend_mask(g, &mut reached, &mut stack, Direction::Forward, false);
    if reached != target_mask {
        return None;
    }

    let dag = condense_masked(g, ArcFilter::DeterministicOnly, &target_mask);
    let sources = dag.sources();
    if !budget.allows(sources.len()) {
        return None;
    }
    Some(sources.into_iter().map(|c| dag.components[c][0]).collect::<NodeSet>())
}
