use rayon::prelude::*;

use super::{Algorithm, SolveReport, SolveStats};
use crate::error::Result;
use crate::flow::{max_weight_closure, ClosureProblem};
use crate::graph::{deterministic_closure, inverse_deterministic_closure, InfluenceGraph, NodeId, NodeSet};
use crate::propagation::{check_r, exact_probabilities, node_cost, Method};
use crate::rational::Rational;
use crate::{propagation, Limits};

/// The partition of the graph induced by guessing `X_p = X ∩ V_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchAssignment {
    pub x_p: NodeSet,
    pub y_p: NodeSet,
    /// `dcl(X_p)`: forced effectors.
    pub x_o: NodeSet,
    /// `idcl(Y_p)`: nodes that must stay out of `X`.
    pub y_o: NodeSet,
    /// `V ∖ (X_o ∪ Y_o)`: free deterministic part.
    pub free: NodeSet,
}

impl BranchAssignment {
    pub fn new(g: &InfluenceGraph, x_p: NodeSet) -> Self {
        let y_p: NodeSet = g.probabilistic_tails().difference(&x_p).copied().collect();
        let x_o = deterministic_closure(g, &x_p);
        let y_o = inverse_deterministic_closure(g, &y_p);
        let free = g.nodes().filter(|v| !x_o.contains(v) && !y_o.contains(v)).collect();
        BranchAssignment { x_p, y_p, x_o, y_o, free }
    }

    /// False when `dcl(X_p)` reaches a node of `Y_p`, so no deterministically
    /// closed `X` has `X ∩ V_p = X_p`.
    pub fn is_feasible(&self) -> bool {
        self.x_o.is_disjoint(&self.y_p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchOutcome {
    pub assignment: BranchAssignment,
    /// `None` for infeasible branches.
    pub scored: Option<ScoredBranch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoredBranch {
    /// `X_o ∪ X'`.
    pub candidate: NodeSet,
    /// `α(X_o) = Σ_v C_A(v, X_o)`.
    pub alpha: Rational,
    /// `β(X_o, X') = Σ_{v ∈ X'} γ(v, X_o)`.
    pub beta: Rational,
    /// `C_A(G, X_o ∪ X')` from the exact engine.
    pub exact_cost: Rational,
}

impl ScoredBranch {
    pub fn predicted_cost(&self) -> Rational {
        &self.alpha - &self.beta
    }
}

/// Explores every `X_p ⊆ V_p` in order of its bitmask over the sorted `V_p`.
pub fn infinite_budget_branches(g: &InfluenceGraph, targets: &NodeSet, limits: &Limits) -> Result<Vec<BranchOutcome>> {
    check_r(g, limits)?;
    let tails: Vec<NodeId> = g.probabilistic_tails().iter().copied().collect();
    (0u64..1 << tails.len())
        .into_par_iter()
        .map(|mask| {
            let x_p = tails.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            score_branch(g, targets, BranchAssignment::new(g, x_p), limits)
        })
        .collect()
}

fn score_branch(
    g: &InfluenceGraph,
    targets: &NodeSet,
    assignment: BranchAssignment,
    limits: &Limits,
) -> Result<BranchOutcome> {
    if !assignment.is_feasible() {
        return Ok(BranchOutcome { assignment, scored: None });
    }
    let probs = exact_probabilities(g, &assignment.x_o, limits)?;
    let alpha: Rational = g.nodes().map(|v| node_cost(targets.contains(&v), probs.get(v))).sum();

    let free: Vec<NodeId> = assignment.free.iter().copied().collect();
    let mut local = vec![usize::MAX; g.node_count()];
    for (i, v) in free.iter().enumerate() {
        local[v.index()] = i;
    }
    let one = Rational::from_integer(1.into());
    let weights = free
        .iter()
        .map(|&v| {
            let p = probs.get(v);
            if targets.contains(&v) {
                &one - p
            } else {
                p - &one
            }
        })
        .collect();
    // every arc inside G[V'] is deterministic: all of V_p lies in X_o ∪ Y_o
    let arcs = g
        .arcs()
        .iter()
        .filter(|a| local[a.tail.index()] != usize::MAX && local[a.head.index()] != usize::MAX)
        .map(|a| (local[a.tail.index()], local[a.head.index()]))
        .collect();
    let closure = max_weight_closure(&ClosureProblem { weights, arcs })?;

    let mut candidate = assignment.x_o.clone();
    candidate.extend(closure.nodes.iter().map(|&i| free[i]));
    let exact_cost = propagation::cost(g, targets, &candidate, Method::Recursive, limits)?.total;
    Ok(BranchOutcome {
        assignment,
        scored: Some(ScoredBranch { candidate, alpha, beta: closure.weight, exact_cost }),
    })
}

/// Optimum of the unlimited-budget problem in `O(4^r · poly(n))`.
///
/// Candidates are ranked by their re-evaluated exact cost, ties broken by the
/// lexicographically smallest set.
pub fn solve_infinite_budget(g: &InfluenceGraph, targets: &NodeSet, limits: &Limits) -> Result<SolveReport> {
    let outcomes = infinite_budget_branches(g, targets, limits)?;
    let mut stats = SolveStats { branches: outcomes.len() as u64, ..SolveStats::default() };
    let mut best: Option<ScoredBranch> = None;
    for outcome in outcomes {
        let Some(scored) = outcome.scored else {
            stats.skipped_branches += 1;
            continue;
        };
        stats.flow_calls += 1;
        stats.candidates += 1;
        if scored.predicted_cost() != scored.exact_cost {
            log::warn!(
                "branch X_p = {:?}: closure score {} differs from exact cost {}",
                g.set_labels(&outcome.assignment.x_p),
                scored.predicted_cost(),
                scored.exact_cost
            );
            stats.score_mismatches += 1;
        }
        let better = best.as_ref().is_none_or(|b| {
            scored.exact_cost < b.exact_cost || (scored.exact_cost == b.exact_cost && scored.candidate < b.candidate)
        });
        if better {
            best = Some(scored);
        }
    }
    // X = V is deterministically closed and consistent with X_p = V_p
    let best = best.expect("the branch X_p = V_p is always feasible");
    if g.is_directed_tree() {
        stats.tree_targets_only = Some(best.candidate.is_subset(targets));
    }
    Ok(SolveReport {
        decision: None,
        effectors: best.candidate,
        exact_cost: best.exact_cost,
        algorithm: Algorithm::InfiniteBudget,
        stats,
    })
}
