//! Exact algorithms for the effectors problem, a brute-force oracle and a
//! dispatcher choosing among them by instance shape.
//!
//! | algorithm         | applies when                  |
//! |-------------------|-------------------------------|
//! | `zero-cost`       | `c = 0`                       |
//! | `infinite-budget` | `b = ∞`, FPT in `r`           |
//! | `influence-max`   | `r = 0`, `A = V`, finite b, c |
//! | `xp-b` / `xp-c`   | `r = 0`                       |
//! | `brute-force`     | small instances, any `r`      |

mod brute_force;
mod infinite_budget;
mod influence_max;
mod xp;
mod zero_cost;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{InfluenceGraph, NodeId, NodeSet};
use crate::instance::{Budget, Instance};
use crate::propagation::{self, Method};
use crate::rational::{format_rational, Rational};
use crate::Limits;

pub use brute_force::solve_brute_force;
pub use infinite_budget::{infinite_budget_branches, solve_infinite_budget, BranchAssignment, BranchOutcome};
pub use influence_max::solve_influence_max;
pub use xp::{solve_xp_budget, solve_xp_cost};
pub use zero_cost::solve_zero_cost;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    ZeroCost,
    XpBudget,
    XpCost,
    InfiniteBudget,
    InfluenceMax,
    BruteForce,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::ZeroCost,
        Algorithm::XpBudget,
        Algorithm::XpCost,
        Algorithm::InfiniteBudget,
        Algorithm::InfluenceMax,
        Algorithm::BruteForce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::ZeroCost => "zero-cost",
            Algorithm::XpBudget => "xp-b",
            Algorithm::XpCost => "xp-c",
            Algorithm::InfiniteBudget => "infinite-budget",
            Algorithm::InfluenceMax => "influence-max",
            Algorithm::BruteForce => "brute-force",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Named(Algorithm),
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "auto" {
            return Ok(Strategy::Auto);
        }
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .map(Strategy::Named)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Search-tree branches (subsets of `V_p`, flipped sets, source subsets).
    pub branches: u64,
    /// Infinite-budget branches dropped because `dcl(X_p)` meets `V_p ∖ X_p`.
    pub skipped_branches: u64,
    pub flow_calls: u64,
    /// Effector sets whose cost was evaluated.
    pub candidates: u64,
    /// Infinite-budget branches whose closure score disagreed with the
    /// re-evaluated exact cost; expected to stay zero.
    pub score_mismatches: u64,
    /// On directed trees: whether the returned effectors are all targets.
    pub tree_targets_only: Option<bool>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    /// `Some(C_A(G, X) <= c)` when a cost bound is known.
    pub decision: Option<bool>,
    /// The witness or optimum; empty when a decision algorithm answers "no".
    pub effectors: NodeSet,
    /// `C_A(G, X)` recomputed by the exact propagation engine.
    pub exact_cost: Rational,
    pub algorithm: Algorithm,
    pub stats: SolveStats,
}

impl SolveReport {
    pub fn to_json(&self, g: &InfluenceGraph) -> Value {
        json!({
            "decision": self.decision.map(|d| if d { "yes" } else { "no" }),
            "effectors": g.set_labels(&self.effectors),
            "cost": format_rational(&self.exact_cost),
            "algorithm": self.algorithm.name(),
            "stats": {
                "branches": self.stats.branches,
                "skipped_branches": self.stats.skipped_branches,
                "flow_calls": self.stats.flow_calls,
                "candidates": self.stats.candidates,
                "score_mismatches": self.stats.score_mismatches,
                "tree_targets_only": self.stats.tree_targets_only,
                "elapsed_ms": self.stats.elapsed.as_secs_f64() * 1e3,
            },
        })
    }
}

/// Builds a report for `effectors`, recomputing the exact cost.
pub(crate) fn make_report(
    g: &InfluenceGraph,
    targets: &NodeSet,
    effectors: NodeSet,
    cost_bound: Option<&Rational>,
    algorithm: Algorithm,
    stats: SolveStats,
    limits: &Limits,
) -> Result<SolveReport> {
    let exact_cost = propagation::cost(g, targets, &effectors, Method::Recursive, limits)?.total;
    Ok(SolveReport {
        decision: cost_bound.map(|c| &exact_cost <= c),
        effectors,
        exact_cost,
        algorithm,
        stats,
    })
}

/// Report for a decision procedure: the witness on "yes", `∅` on "no".
fn decision_report(
    g: &InfluenceGraph,
    targets: &NodeSet,
    witness: Option<NodeSet>,
    algorithm: Algorithm,
    stats: SolveStats,
    limits: &Limits,
) -> Result<SolveReport> {
    let found = witness.is_some();
    let mut report = make_report(g, targets, witness.unwrap_or_default(), None, algorithm, stats, limits)?;
    report.decision = Some(found);
    Ok(report)
}

/// The algorithm chosen by [`Strategy::Auto`]: `c = 0` → zero-cost;
/// `b = ∞` → infinite-budget; `r = 0`, `A = V` with finite `b` and `c` →
/// influence-max; other `r = 0` instances → xp-c when `⌊c⌋ < min(b, a)`,
/// else xp-b; anything else → brute force.
pub fn auto_algorithm(instance: &Instance) -> Algorithm {
    let g = &instance.graph;
    let targets = &instance.targets;
    let c = instance.cost_bound.as_ref();
    if c.is_some_and(Zero::is_zero) {
        Algorithm::ZeroCost
    } else if instance.budget.is_infinite() {
        Algorithm::InfiniteBudget
    } else if !g.is_deterministic() {
        Algorithm::BruteForce
    } else if targets.len() == g.node_count() && c.is_some() {
        Algorithm::InfluenceMax
    } else {
        let b = instance.budget.cap(targets.len());
        match c.map(floor_usize) {
            Some(flips) if flips < b => Algorithm::XpCost,
            _ => Algorithm::XpBudget,
        }
    }
}

/// Runs an exact algorithm on `instance`, chosen by `strategy`.
pub fn solve(instance: &Instance, strategy: Strategy, limits: &Limits) -> Result<SolveReport> {
    let g = &instance.graph;
    let targets = &instance.targets;
    let c = instance.cost_bound.as_ref();
    let algorithm = match strategy {
        Strategy::Named(a) => a,
        Strategy::Auto => auto_algorithm(instance),
    };
    precondition(instance, algorithm)?;
    let start = Instant::now();
    let finite_budget = || match instance.budget {
        Budget::Finite(b) => b,
        Budget::Infinite => unreachable!("checked by precondition"),
    };
    let need_cost = || c.expect("checked by precondition");

    let mut report = match algorithm {
        Algorithm::ZeroCost => {
            let witness = solve_zero_cost(g, targets, instance.budget);
            decision_report(g, targets, witness, algorithm, SolveStats::default(), limits)?
        }
        Algorithm::XpBudget => {
            solve_xp_budget(g, targets, finite_budget(), c, limits)?
        }
        Algorithm::XpCost => {
            let mut stats = SolveStats::default();
            let witness = xp::xp_cost_search(g, targets, instance.budget, need_cost(), limits, &mut stats)?;
            decision_report(g, targets, witness, algorithm, stats, limits)?
        }
        Algorithm::InfiniteBudget => {
            let mut report = solve_infinite_budget(g, targets, limits)?;
            report.decision = c.map(|c| &report.exact_cost <= c);
            report
        }
        Algorithm::InfluenceMax => {
            let b = finite_budget();
            let cost_bound = need_cost();
            let mut stats = SolveStats::default();
            let best = influence_max::influence_max_search(g, b, cost_bound, &mut stats);
            let decision = best.as_ref().is_some_and(|(_, cost)| Rational::from_integer((*cost).into()) <= *cost_bound);
            let mut report = make_report(
                g,
                targets,
                best.map(|(x, _)| x).unwrap_or_default(),
                None,
                algorithm,
                stats,
                limits,
            )?;
            report.decision = Some(decision);
            report
        }
        Algorithm::BruteForce => {
            let mut report = solve_brute_force(g, targets, instance.budget, limits).map_err(|e| match e {
                Error::ResourceLimit(msg) if strategy == Strategy::Auto => Error::ResourceLimit(format!(
                    "no applicable exact algorithm within resource limits ({msg}); \
                     score candidate sets with `cost --method montecarlo` instead"
                )),
                other => other,
            })?;
            report.decision = c.map(|c| &report.exact_cost <= c);
            report
        }
    };
    report.stats.elapsed = start.elapsed();
    Ok(report)
}

/// Checks the structural requirements of `algorithm` on `instance`; resource
/// ceilings are enforced by the algorithms themselves.
pub fn precondition(instance: &Instance, algorithm: Algorithm) -> Result<()> {
    let g = &instance.graph;
    let c = instance.cost_bound.as_ref();
    let violated = match algorithm {
        Algorithm::ZeroCost => (!c.is_none_or(Zero::is_zero)).then_some("cost_bound 0 (or none)"),
        Algorithm::XpBudget if !g.is_deterministic() => Some("a deterministic graph (r = 0)"),
        Algorithm::XpBudget => instance.budget.is_infinite().then_some("a finite budget"),
        Algorithm::XpCost if !g.is_deterministic() => Some("a deterministic graph (r = 0)"),
        Algorithm::XpCost => c.is_none().then_some("a cost_bound"),
        Algorithm::InfiniteBudget => (!instance.budget.is_infinite()).then_some("budget \"infinite\""),
        Algorithm::InfluenceMax if !g.is_deterministic() => Some("a deterministic graph (r = 0)"),
        Algorithm::InfluenceMax if instance.targets.len() != g.node_count() => {
            Some("every node to be a target (A = V)")
        }
        Algorithm::InfluenceMax if instance.budget.is_infinite() => Some("a finite budget"),
        Algorithm::InfluenceMax => c.is_none().then_some("a cost_bound"),
        Algorithm::BruteForce => None,
    };
    match violated {
        Some(why) => Err(Error::Precondition(format!("{algorithm} requires {why}"))),
        None => Ok(()),
    }
}

pub(crate) fn floor_usize(c: &Rational) -> usize {
    c.floor().to_integer().to_usize().unwrap_or(usize::MAX)
}

/// Cost of `effectors` on a deterministic graph: `|A △ reach(X)|`.
pub(crate) fn deterministic_cost(g: &InfluenceGraph, target_mask: &[bool], effectors: &[NodeId]) -> usize {
    let mut seen = vec![false; g.node_count()];
    let mut stack = Vec::with_capacity(effectors.len());
    for &v in effectors {
        if !seen[v.index()] {
            seen[v.index()] = true;
            stack.push(v);
        }
    }
    while let Some(u) = stack.pop() {
        for &a in g.out_arcs(u) {
            let h = g.arc(a).head;
            if !seen[h.index()] {
                seen[h.index()] = true;
                stack.push(h);
            }
        }
    }
    seen.iter().zip(target_mask).filter(|(s, t)| s != t).count()
}

/// `Σ_{k<=max_size} C(n, k)`, saturating.
pub(crate) fn subsets_up_to(n: usize, max_size: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for k in 0..=max_size.min(n) {
        total = total.saturating_add(binom);
        binom = binom.saturating_mul((n - k) as u128) / (k as u128 + 1);
    }
    total
}

pub(crate) fn check_enumeration(what: &str, count: u128, limits: &Limits) -> Result<()> {
    let cap = 1u128 << limits.max_bruteforce_nodes.min(100);
    if count > cap {
        return Err(Error::ResourceLimit(format!(
            "{what} would examine {count} candidate sets, more than 2^{} (raise --max-bruteforce-nodes)",
            limits.max_bruteforce_nodes
        )));
    }
    Ok(())
}
