//! Exact and Monte Carlo solvers for the effectors problem on influence graphs
//! under the Independent Cascade model.
//!
//! Given an influence graph whose arcs carry activation probabilities in
//! `(0, 1]`, a set of observed-active target nodes `A`, a budget `b` and an
//! optional cost bound `c`, the goal is to pick a set `X` of initially active
//! nodes (effectors) that minimises the expected number of wrongly
//! (in)activated nodes once the cascade has run to completion.
//!
//! * [`graph`]: the exact-rational data model, deterministic closures and
//!   strongly connected component condensation.
//! * [`instance`]: problem instances and their JSON / DOT encodings.
//! * [`propagation`]: exact (branching and live-edge) and sampled activation
//!   probabilities and costs.
//! * [`flow`]: max-flow and maximum weight closure over exact rationals.
//! * [`solvers`]: every exact algorithm plus a brute-force oracle and a
//!   dispatcher.
//! * [`generators`]: hardness-reduction instances, random ensembles and tiny
//!   source-problem oracles.

pub mod error;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod instance;
pub mod propagation;
pub mod rational;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{InfluenceGraph, NodeId, NodeSet};
pub use instance::{Budget, Instance};
pub use rational::Rational;

/// Resource ceilings for the exponential code paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of probabilistic arcs the exact engines accept.
    pub max_r: usize,
    /// Brute force refuses when it would examine more than
    /// `2^max_bruteforce_nodes` candidate sets.
    pub max_bruteforce_nodes: usize,
}

impl Limits {
    pub const DEFAULT_MAX_R: usize = 24;
    pub const DEFAULT_MAX_BRUTEFORCE_NODES: usize = 20;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_r: Self::DEFAULT_MAX_R,
            max_bruteforce_nodes: Self::DEFAULT_MAX_BRUTEFORCE_NODES,
        }
    }
}
