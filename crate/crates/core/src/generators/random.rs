use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{InfluenceGraph, NodeId};
use crate::instance::{Budget, Instance};
use crate::rational::{ratio, Rational};

/// Parameters of the random ensemble.
///
/// Each ordered pair becomes an arc with probability `arc_density`; an arc is
/// probabilistic with probability `prob_fraction`, taking a weight `k/grid`
/// with `k` uniform in `1..grid`. Once `max_probabilistic` probabilistic
/// arcs exist, further arcs are deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomParams {
    pub nodes: usize,
    pub arc_density: f64,
    pub prob_fraction: f64,
    pub target_fraction: f64,
    pub weight_grid: u32,
    pub max_probabilistic: Option<usize>,
    pub budget: Budget,
    pub cost_bound: Option<Rational>,
    pub seed: u64,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            nodes: 8,
            arc_density: 0.25,
            prob_fraction: 0.5,
            target_fraction: 0.5,
            weight_grid: 8,
            max_probabilistic: None,
            budget: Budget::Finite(2),
            cost_bound: None,
            seed: 0,
        }
    }
}

fn check_fraction(name: &str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must lie in [0, 1], got {value}")))
    }
}

/// A seeded random instance with nodes `n0, n1, ...`.
pub fn gen_random(params: &RandomParams) -> Result<Instance> {
    check_fraction("arc density", params.arc_density)?;
    check_fraction("probabilistic fraction", params.prob_fraction)?;
    check_fraction("target fraction", params.target_fraction)?;
    if params.weight_grid < 2 {
        return Err(Error::InvalidParameter("weight grid must be at least 2".into()));
    }
    let n = params.nodes;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut arcs = Vec::new();
    let mut probabilistic = 0;
    for u in 0..n {
        for v in 0..n {
            if u == v || !rng.gen_bool(params.arc_density) {
                continue;
            }
            let room = params.max_probabilistic.is_none_or(|cap| probabilistic < cap);
            let weight = if rng.gen_bool(params.prob_fraction) && room {
                probabilistic += 1;
                let grid = params.weight_grid;
                ratio(rng.gen_range(1..grid).into(), grid.into())
            } else {
                Rational::one()
            };
            arcs.push((u, v, weight));
        }
    }
    let targets = (0..n).filter(|_| rng.gen_bool(params.target_fraction)).map(NodeId).collect();
    let labels = (0..n).map(|i| format!("n{i}")).collect();
    let graph = InfluenceGraph::from_indexed(labels, arcs)?;
    Instance::new(graph, targets, params.budget, params.cost_bound.clone())
}
