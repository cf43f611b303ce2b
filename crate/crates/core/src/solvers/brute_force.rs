use itertools::Itertools;
use rayon::prelude::*;

use super::{check_enumeration, subsets_up_to, Algorithm, SolveReport, SolveStats};
use crate::error::Result;
use crate::graph::{InfluenceGraph, NodeId, NodeSet};
use crate::instance::Budget;
use crate::propagation::{self, check_r, Method};
use crate::rational::Rational;
use crate::Limits;

/// Exhaustive search over every `X` with `|X| <= b`, scored by the exact
/// engine. Ties go to the lexicographically smallest set.
///
/// Guarded by `max_r` and by the number of candidate sets, which may not
/// exceed `2^max_bruteforce_nodes`.
pub fn solve_brute_force(g: &InfluenceGraph, targets: &NodeSet, budget: Budget, limits: &Limits) -> Result<SolveReport> {
    check_r(g, limits)?;
    let n = g.node_count();
    let cap = budget.cap(n);
    let count = subsets_up_to(n, cap);
    check_enumeration("brute force", count, limits)?;

    let nodes: Vec<NodeId> = g.nodes().collect();
    let candidates: Vec<Vec<NodeId>> = (0..=cap).flat_map(|k| nodes.iter().copied().combinations(k)).collect();
    let scored: Vec<(Rational, NodeSet)> = candidates
        .into_par_iter()
        .map(|x| {
            let x: NodeSet = x.into_iter().collect();
            propagation::cost(g, targets, &x, Method::Recursive, limits).map(|c| (c.total, x))
        })
        .collect::<Result<_>>()?;
    let stats = SolveStats { candidates: scored.len() as u64, ..SolveStats::default() };
    let (exact_cost, effectors) = scored.into_iter().min().expect("the empty set is always a candidate");
    Ok(SolveReport { decision: None, effectors, exact_cost, algorithm: Algorithm::BruteForce, stats })
}
