use rand::Rng;
use rayon::prelude::*;

use super::check_subset;
use super::simulate::{cascade, float_weights, sample_rng};
use crate::error::{Error, Result};
use crate::graph::{InfluenceGraph, NodeSet};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub standard_error: f64,
    pub samples: u64,
}

/// Mean number of wrongly (in)activated nodes over `samples` seeded cascades.
///
/// Sample `i` uses ChaCha stream `i` of `seed`, and the per-sample costs are
/// integers summed exactly, so the result is identical for any thread count.
pub fn monte_carlo_cost(
    g: &InfluenceGraph,
    targets: &NodeSet,
    effectors: &NodeSet,
    samples: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    check_subset(g, targets)?;
    check_subset(g, effectors)?;
    let weights = float_weights(g);
    let target_mask = g.mask(targets);
    let (sum, sum_sq) = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample_rng(seed, i);
            let rounds = cascade(g, effectors, |a| {
                g.arc(a).is_deterministic() || rng.gen::<f64>() < weights[a]
            });
            let mut active = vec![false; g.node_count()];
            for v in rounds.iter().flatten() {
                active[v.index()] = true;
            }
            let wrong = active.iter().zip(&target_mask).filter(|(a, t)| a != t).count() as u64;
            (wrong, (wrong as u128) * (wrong as u128))
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));

    let n = samples as f64;
    let mean = sum as f64 / n;
    let standard_error = if samples > 1 {
        let var = (sum_sq as f64 - (sum as f64) * mean) / (n - 1.0);
        (var.max(0.0) / n).sqrt()
    } else {
        0.0
    };
    Ok(MonteCarloEstimate {
        estimate: mean,
        standard_error,
        samples,
    })
}
