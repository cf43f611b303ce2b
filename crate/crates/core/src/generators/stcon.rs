use std::collections::BTreeSet;

use num::{BigInt, Integer, One, Signed};

use super::SimpleGraph;
use crate::error::{Error, Result};
use crate::graph::{InfluenceGraph, NodeId};
use crate::instance::{Budget, Instance};
use crate::rational::{from_int, inverse_power_of_two, ratio, Rational};
use crate::Limits;

/// The unlimited-budget instance built from an s-t connectedness question
/// "does the DAG have at least `z` subgraphs with an s→t path?".
///
/// The generated instance answers "yes" exactly when the count is *below*
/// `z`: its optimum is `{s}` or `∅`, and `{s}` meets the bound iff
/// `p(t | {s}) <= p_z' - 2^-|E_st|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StConReduction {
    pub instance: Instance,
    /// Vertices on some s→t path, as input indices.
    pub v_st: BTreeSet<usize>,
    /// Arcs on some s→t path, as indices into the input arc list.
    pub e_st: Vec<usize>,
    /// `V_st ∖ {s, t}`.
    pub w: BTreeSet<usize>,
    pub z: BigInt,
    /// `⌈z · 2^-|E ∖ E_st|⌉`.
    pub z_prime: BigInt,
    /// `z' · 2^-|E_st|`.
    pub p_z_prime: Rational,
}

fn check_dag(dag: &SimpleGraph) -> Result<()> {
    if !dag.directed {
        return Err(Error::InvalidParameter("s-t connectedness needs a directed graph".into()));
    }
    let arcs = dag.edges.iter().map(|&(u, v)| (u, v, Rational::one())).collect();
    if !InfluenceGraph::from_indexed(dag.vertices.clone(), arcs)?.is_acyclic() {
        return Err(Error::InvalidParameter("s-t connectedness needs an acyclic graph".into()));
    }
    Ok(())
}

fn reach(n: usize, arcs: impl Iterator<Item = (usize, usize)> + Clone, from: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for (a, b) in arcs.clone() {
            if a == u && !seen[b] {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    seen
}

pub fn gen_stcon(dag: &SimpleGraph, s: &str, t: &str, z: &BigInt) -> Result<StConReduction> {
    check_dag(dag)?;
    let (si, ti) = (dag.vertex(s)?, dag.vertex(t)?);
    if si == ti {
        return Err(Error::InvalidParameter("s and t must differ".into()));
    }
    if !z.is_positive() {
        return Err(Error::InvalidParameter(format!("threshold z must be at least 1, got {z}")));
    }
    let n = dag.vertex_count();
    let forward = reach(n, dag.edges.iter().copied(), si);
    let backward = reach(n, dag.edges.iter().map(|&(u, v)| (v, u)), ti);
    let v_st: BTreeSet<usize> = (0..n).filter(|&v| forward[v] && backward[v]).collect();
    if v_st.is_empty() {
        return Err(Error::InvalidParameter(format!("no directed path from `{s}` to `{t}`")));
    }
    // in a DAG every arc between two such vertices lies on an s→t path
    let e_st: Vec<usize> = (0..dag.edges.len())
        .filter(|&i| v_st.contains(&dag.edges[i].0) && v_st.contains(&dag.edges[i].1))
        .collect();
    let w: BTreeSet<usize> = v_st.iter().copied().filter(|&v| v != si && v != ti).collect();

    let outside = dag.edges.len() - e_st.len();
    let z_prime = z.div_ceil(&num::pow(BigInt::from(2), outside));
    let paths_total = num::pow(BigInt::from(2), e_st.len());
    if z_prime >= paths_total {
        return Err(Error::InvalidParameter(format!(
            "threshold z' = {z_prime} must stay below 2^|E_st| = {paths_total}, otherwise the arc s→s' gets weight 0"
        )));
    }
    let p_z_prime = Rational::from_integer(z_prime.clone()) * inverse_power_of_two(e_st.len());

    let mut local = vec![usize::MAX; n];
    let mut labels = Vec::new();
    for &v in &v_st {
        local[v] = labels.len();
        labels.push(dag.vertices[v].clone());
    }
    let half = ratio(1, 2);
    let mut arcs: Vec<(usize, usize, Rational)> = e_st
        .iter()
        .map(|&i| {
            let (u, v) = dag.edges[i];
            (local[u], local[v], half.clone())
        })
        .collect();
    for &v in &w {
        labels.push(format!("copy:{}", dag.vertices[v]));
        arcs.push((local[v], labels.len() - 1, Rational::one()));
    }
    labels.push(format!("copy:{s}"));
    arcs.push((local[si], labels.len() - 1, Rational::one() - &p_z_prime));

    let targets = w.iter().chain([&si]).map(|&v| NodeId(local[v])).collect();
    let cost_bound = from_int(w.len() as i64 + 1) - inverse_power_of_two(e_st.len());
    let graph = InfluenceGraph::from_indexed(labels, arcs)?;
    let instance = Instance::new(graph, targets, Budget::Infinite, Some(cost_bound))?;
    Ok(StConReduction { instance, v_st, e_st, w, z: z.clone(), z_prime, p_z_prime })
}

/// Number of arc subsets of `dag` that contain a directed s→t path,
/// by enumerating all `2^|E|` subsets. `|E|` is capped by `limits.max_r`.
pub fn count_st_subgraphs(dag: &SimpleGraph, s: &str, t: &str, limits: &Limits) -> Result<u64> {
    check_dag(dag)?;
    let (si, ti) = (dag.vertex(s)?, dag.vertex(t)?);
    let m = dag.edges.len();
    if m > limits.max_r.min(40) {
        return Err(Error::ResourceLimit(format!(
            "counting s-t subgraphs enumerates 2^{m} arc subsets, above the limit 2^{} (raise --max-r)",
            limits.max_r.min(40)
        )));
    }
    let n = dag.vertex_count();
    let count = (0u64..1 << m)
        .filter(|mask| {
            let present = dag.edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            reach(n, present, si)[ti]
        })
        .count();
    Ok(count as u64)
}
