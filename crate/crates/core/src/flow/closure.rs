use num::{Signed, Zero};

use super::network::{Capacity, FlowNetwork};
use crate::error::Result;
use crate::rational::Rational;

/// Maximum Weight Closure input over local node indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureProblem {
    pub weights: Vec<Rational>,
    pub arcs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    /// Sorted node indices; no arc leaves this set.
    pub nodes: Vec<usize>,
    pub weight: Rational,
}

impl ClosureProblem {
    pub fn node_count(&self) -> usize {
        self.weights.len()
    }

    /// True if no arc leaves `set`.
    pub fn is_closed(&self, set: &[bool]) -> bool {
        self.arcs.iter().all(|&(u, v)| !set[u] || set[v])
    }

    pub fn weight_of(&self, set: &[bool]) -> Rational {
        self.weights
            .iter()
            .zip(set)
            .filter(|(_, &on)| on)
            .fold(Rational::zero(), |acc, (w, _)| acc + w)
    }

    /// The flow network whose minimum cuts are the optimal closures:
    /// `s -> v` with capacity `w(v)` for positive weights, `v -> t` with
    /// `-w(v)` for negative ones, and every original arc unbounded. Nodes of
    /// weight zero touch neither terminal.
    pub fn network(&self) -> Result<FlowNetwork> {
        let n = self.node_count();
        let (source, sink) = (n, n + 1);
        let mut net = FlowNetwork::new(n + 2, source, sink);
        for (v, w) in self.weights.iter().enumerate() {
            if w.is_positive() {
                net.add_arc(source, v, Capacity::Finite(w.clone()))?;
            } else if w.is_negative() {
                net.add_arc(v, sink, Capacity::Finite(-w))?;
            }
        }
        for &(u, v) in &self.arcs {
            net.add_arc(u, v, Capacity::Unbounded)?;
        }
        Ok(net)
    }
}

/// Maximum-weight closed set; among optimal closures the maximal one (the
/// union of all optima) is returned.
pub fn max_weight_closure(problem: &ClosureProblem) -> Result<Closure> {
    let n = problem.node_count();
    let mut net = problem.network()?;
    let flow = net.max_flow()?;
    let nodes: Vec<usize> = (0..n).filter(|&v| flow.maximal_source_side[v]).collect();
    let mut mask = vec![false; n];
    for &v in &nodes {
        mask[v] = true;
    }
    let weight = problem.weight_of(&mask);
    debug_assert!(problem.is_closed(&mask));
    Ok(Closure { nodes, weight })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_int, ratio};
    use proptest::prelude::*;

    #[test]
    fn positive_weights_take_everything() {
        let p = ClosureProblem {
            weights: vec![from_int(1), ratio(1, 2), from_int(3)],
            arcs: vec![(0, 1), (1, 2)],
        };
        let c = max_weight_closure(&p).unwrap();
        assert_eq!(c.nodes, [0, 1, 2]);
        assert_eq!(c.weight, ratio(9, 2));
    }

    #[test]
    fn negative_weights_take_nothing() {
        let p = ClosureProblem {
            weights: vec![from_int(-1), ratio(-1, 2)],
            arcs: vec![(0, 1)],
        };
        let c = max_weight_closure(&p).unwrap();
        assert!(c.nodes.is_empty());
        assert!(c.weight.is_zero());
    }

    #[test]
    fn forced_negative_successor() {
        // closed sets: {}, {b}, {a, b}; best is {a, b} with weight 1
        let p = ClosureProblem {
            weights: vec![from_int(2), from_int(-1)],
            arcs: vec![(0, 1)],
        };
        let c = max_weight_closure(&p).unwrap();
        assert_eq!(c.nodes, [0, 1]);
        assert_eq!(c.weight, from_int(1));
    }

    #[test]
    fn ties_resolve_to_the_maximal_optimum() {
        // {a, b} and {} both weigh 0; the maximal optimum is returned
        let p = ClosureProblem {
            weights: vec![from_int(1), from_int(-1), from_int(0)],
            arcs: vec![(0, 1)],
        };
        let c = max_weight_closure(&p).unwrap();
        assert_eq!(c.nodes, [0, 1, 2]);
        assert!(c.weight.is_zero());
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            n in 1usize..9,
            ws in proptest::collection::vec((-6i64..7, 1i64..4), 9),
            raw in proptest::collection::vec((0usize..9, 0usize..9), 0..20),
        ) {
            let p = ClosureProblem {
                weights: ws[..n].iter().map(|&(a, b)| ratio(a, b)).collect(),
                arcs: raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect(),
            };
            let c = max_weight_closure(&p).unwrap();
            let mut mask = vec![false; n];
            for &v in &c.nodes { mask[v] = true; }
            prop_assert!(p.is_closed(&mask));
            let best = (0u32..1 << n)
                .map(|m| (0..n).map(|i| m & (1 << i) != 0).collect::<Vec<_>>())
                .filter(|s| p.is_closed(s))
                .map(|s| p.weight_of(&s))
                .max()
                .unwrap();
            prop_assert_eq!(c.weight, best);
        }
    }
}
