use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::check_subset;
use crate::error::Result;
use crate::graph::{InfluenceGraph, NodeSet};
use crate::rational::{format_rational, to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcTrial {
    pub arc: usize,
    pub succeeded: bool,
}

/// One realised cascade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivationTrace {
    /// Newly active nodes per time step; round 0 is the effector set.
    pub rounds: Vec<NodeSet>,
    /// Every activation attempt in the order it was made.
    pub arc_trials: Vec<ArcTrial>,
    /// Product of `w` over successful and `1 - w` over failed trials.
    pub trace_probability: Rational,
}

impl ActivationTrace {
    pub fn active(&self) -> NodeSet {
        self.rounds.iter().flatten().copied().collect()
    }

    pub fn to_json(&self, g: &InfluenceGraph) -> Value {
        let rounds: Vec<Vec<String>> = self.rounds.iter().map(|r| g.set_labels(r)).collect();
        let trials: Vec<Value> = self
            .arc_trials
            .iter()
            .map(|t| {
                let arc = g.arc(t.arc);
                json!({
                    "from": g.label(arc.tail),
                    "to": g.label(arc.head),
                    "weight": format_rational(&arc.weight),
                    "succeeded": t.succeeded,
                })
            })
            .collect();
        json!({
            "rounds": rounds,
            "trials": trials,
            "probability": format_rational(&self.trace_probability),
        })
    }
}

/// Runs one cascade, asking `coin` whether each probabilistic arc fires.
///
/// Nodes activated at step `t` each get one trial per outgoing arc whose
/// head is still inactive when step `t + 1` begins. Deterministic arcs are
/// recorded as successful trials without consulting `coin`.
pub fn simulate_with(g: &InfluenceGraph, effectors: &NodeSet, mut coin: impl FnMut(usize) -> bool) -> Result<ActivationTrace> {
    check_subset(g, effectors)?;
    let mut trials = Vec::new();
    let rounds = cascade(g, effectors, |a| {
        let fired = g.arc(a).is_deterministic() || coin(a);
        trials.push(ArcTrial { arc: a, succeeded: fired });
        fired
    });
    let trace_probability = trials.iter().fold(Rational::one(), |acc, t| {
        let w = &g.arc(t.arc).weight;
        if t.succeeded {
            acc * w
        } else {
            acc * (Rational::one() - w)
        }
    });
    Ok(ActivationTrace {
        rounds,
        arc_trials: trials,
        trace_probability,
    })
}

/// Core cascade loop shared by the tracer and the sampler.
pub(crate) fn cascade(g: &InfluenceGraph, effectors: &NodeSet, mut fire: impl FnMut(usize) -> bool) -> Vec<NodeSet> {
    let mut active = g.mask(effectors);
    let mut rounds = vec![effectors.clone()];
    loop {
        let current = rounds.last().expect("round 0 always exists");
        let mut next = NodeSet::new();
        for &u in current {
            for &a in g.out_arcs(u) {
                let head = g.arc(a).head;
                if active[head.index()] {
                    continue;
                }
                if fire(a) {
                    next.insert(head);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        for v in &next {
            active[v.index()] = true;
        }
        rounds.push(next);
    }
    rounds
}

pub(crate) fn sample_rng(seed: u64, run: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(run);
    rng
}

pub(crate) fn float_weights(g: &InfluenceGraph) -> Vec<f64> {
    g.arcs().iter().map(|a| to_f64(&a.weight)).collect()
}

/// The `run`-th seeded cascade; run `i` draws from its own ChaCha stream so
/// that runs are independent of each other and of scheduling.
pub fn simulate_run(g: &InfluenceGraph, effectors: &NodeSet, seed: u64, run: u64) -> Result<ActivationTrace> {
    let weights = float_weights(g);
    let mut rng = sample_rng(seed, run);
    simulate_with(g, effectors, |a| rng.gen::<f64>() < weights[a])
}

pub fn simulate_once(g: &InfluenceGraph, effectors: &NodeSet, seed: u64) -> Result<ActivationTrace> {
    simulate_run(g, effectors, seed, 0)
}
