//! Exact max-flow / min-cut and Maximum Weight Closure.

mod closure;
mod network;

pub use closure::{max_weight_closure, Closure, ClosureProblem};
pub use network::{Capacity, FlowArc, FlowNetwork, MaxFlow};
