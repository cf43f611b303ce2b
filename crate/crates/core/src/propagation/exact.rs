use std::collections::BTreeMap;

use num::{One, Zero};

use super::{check_r, check_subset, ProbabilityVector};
use crate::error::Result;
use crate::graph::{InfluenceGraph, NodeSet};
use crate::rational::Rational;
use crate::Limits;

/// Exact `p(v|X)` for all nodes by branching on cascade steps.
///
/// Each call of the search holds the active set and the frontier of nodes
/// that still have their single activation attempt. Deterministic arcs out
/// of the frontier are followed to a fixpoint first; then the inactive nodes
/// `N_p` hit by probabilistic frontier arcs are branched on: a subset
/// `R ⊆ N_p` becomes active with probability
/// `∏_{u∈R}(1 - p̄_u) · ∏_{u∈N_p∖R} p̄_u`, where `p̄_u` is the product of
/// `1 - w` over the frontier arcs into `u`, and `R` is the next frontier.
/// A branch ends when the frontier reaches no inactive node; its weight is
/// then credited to every active node. Every branch spends at least one
/// probabilistic arc, so there are at most `2^r` leaves.
pub fn exact_probabilities(g: &InfluenceGraph, effectors: &NodeSet, limits: &Limits) -> Result<ProbabilityVector> {
    check_subset(g, effectors)?;
    check_r(g, limits)?;
    let mut search = Search {
        g,
        acc: vec![Rational::zero(); g.node_count()],
    };
    let active = g.mask(effectors);
    let frontier = effectors.iter().map(|v| v.index()).collect();
    search.expand(active, frontier, Rational::one());
    Ok(ProbabilityVector(search.acc))
}

struct Search<'g> {
    g: &'g InfluenceGraph,
    acc: Vec<Rational>,
}

impl Search<'_> {
    fn expand(&mut self, mut active: Vec<bool>, mut frontier: Vec<usize>, weight: Rational) {
        let g = self.g;
        // deterministic collapse; newly reached nodes join the frontier
        let mut i = 0;
        while i < frontier.len() {
            let u = frontier[i];
            i += 1;
            for &a in g.out_arcs(crate::graph::NodeId(u)) {
                let arc = g.arc(a);
                if arc.is_deterministic() && !active[arc.head.index()] {
                    active[arc.head.index()] = true;
                    frontier.push(arc.head.index());
                }
            }
        }

        // p̄_u for every inactive head of a probabilistic frontier arc
        let mut stay_inactive: BTreeMap<usize, Rational> = BTreeMap::new();
        for &u in &frontier {
            for &a in g.out_arcs(crate::graph::NodeId(u)) {
                let arc = g.arc(a);
                let v = arc.head.index();
                if active[v] {
                    continue;
                }
                let fail = Rational::one() - &arc.weight;
                stay_inactive
                    .entry(v)
                    .and_modify(|p| *p *= &fail)
                    .or_insert(fail);
            }
        }

        if stay_inactive.is_empty() {
            for (v, &on) in active.iter().enumerate() {
                if on {
                    self.acc[v] += &weight;
                }
            }
            return;
        }

        let candidates: Vec<(usize, Rational)> = stay_inactive.into_iter().collect();
        let mut chosen = Vec::with_capacity(candidates.len());
        self.branch(&active, &candidates, 0, weight, &mut chosen);
    }

    /// Walks the subsets of `candidates` as a binary tree so that prefix
    /// products of `q(X_R|X)` are shared.
    fn branch(
        &mut self,
        active: &[bool],
        candidates: &[(usize, Rational)],
        at: usize,
        weight: Rational,
        chosen: &mut Vec<usize>,
    ) {
        if at == candidates.len() {
            let mut next = active.to_vec();
            for &v in chosen.iter() {
                next[v] = true;
            }
            self.expand(next, chosen.clone(), weight);
            return;
        }
        let (v, ref fail) = candidates[at];
        let succeed = Rational::one() - fail;
        chosen.push(v);
        self.branch(active, candidates, at + 1, &weight * succeed, chosen);
        chosen.pop();
        self.branch(active, candidates, at + 1, weight * fail, chosen);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::rational::ratio;

    #[test]
    fn example_graph_from_v1() {
        let g = example_graph();
        let p = exact_probabilities(&g, &g.node_set(["v1"]).unwrap(), &Limits::default()).unwrap();
        assert_eq!(p.0, vec![ratio(1, 1), ratio(43, 50), ratio(81, 100), ratio(837, 1000)]);
    }

    #[test]
    fn empty_and_full_effector_sets() {
        let g = example_graph();
        let none = exact_probabilities(&g, &NodeSet::new(), &Limits::default()).unwrap();
        assert!(none.0.iter().all(Zero::is_zero));
        let all = exact_probabilities(&g, &g.all_nodes(), &Limits::default()).unwrap();
        assert!(all.0.iter().all(One::is_one));
    }

    #[test]
    fn resource_ceiling() {
        let g = example_graph();
        let limits = Limits { max_r: 4, ..Limits::default() };
        let err = exact_probabilities(&g, &NodeSet::new(), &limits).unwrap_err();
        assert!(err.is_resource_limit());
    }
}
