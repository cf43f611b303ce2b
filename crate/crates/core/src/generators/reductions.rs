use std::collections::{BTreeSet, HashMap};

use num::One;

use super::{SetSystem, SimpleGraph};
use crate::error::{Error, Result};
use crate::graph::InfluenceGraph;
use crate::instance::{Budget, Instance};
use crate::rational::{from_int, Rational};

/// A vertex-coloured undirected graph; `colors[v]` lies in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MccInput {
    pub graph: SimpleGraph,
    pub colors: Vec<usize>,
    pub k: usize,
}

impl MccInput {
    pub fn new(graph: SimpleGraph, colors: Vec<usize>, k: usize) -> Result<Self> {
        if graph.directed {
            return Err(Error::InvalidParameter("multicolored clique needs an undirected graph".into()));
        }
        if colors.len() != graph.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "{} colors given for {} vertices",
                colors.len(),
                graph.vertex_count()
            )));
        }
        if let Some(v) = colors.iter().position(|&c| c == 0 || c > k) {
            return Err(Error::InvalidParameter(format!(
                "vertex `{}` has color {} outside 1..={k}",
                graph.vertices[v], colors[v]
            )));
        }
        Ok(MccInput { graph, colors, k })
    }
}

/// Accumulates labelled nodes and weight-1 arcs.
#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    arcs: Vec<(usize, usize, Rational)>,
    targets: BTreeSet<usize>,
}

impl Builder {
    fn node(&mut self, label: String, target: bool) -> usize {
        self.labels.push(label);
        let id = self.labels.len() - 1;
        if target {
            self.targets.insert(id);
        }
        id
    }

    fn arc(&mut self, from: usize, to: usize) {
        self.arcs.push((from, to, Rational::one()));
    }

    fn finish(self, budget: Budget, cost_bound: Rational) -> Result<Instance> {
        let graph = InfluenceGraph::from_indexed(self.labels, self.arcs)?;
        let targets = self.targets.into_iter().map(crate::graph::NodeId).collect();
        Instance::new(graph, targets, budget, Some(cost_bound))
    }
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Multicolored clique → deterministic DAG with `b = C(k,2)`,
/// `c = C(k,2) + k`.
///
/// Every colour pair gets `C(k,2) + k + 1` target nodes `pair:i-j:t`; every
/// vertex a node `vertex:v`; every edge a node `edge:u-v` pointing at its two
/// vertex nodes and at all target nodes of its colour pair. Monochromatic
/// edges have no colour pair and point only at their vertices.
pub fn gen_mcc(input: &MccInput) -> Result<Instance> {
    let k = input.k;
    if k < 2 {
        return Err(Error::InvalidParameter(format!("multicolored clique needs k >= 2, got {k}")));
    }
    let pairs = binom2(k);
    let copies = pairs + k + 1;
    let mut b = Builder::default();
    let mut pair_nodes = HashMap::new();
    for i in 1..=k {
        for j in i + 1..=k {
            let nodes: Vec<usize> = (0..copies).map(|t| b.node(format!("pair:{i}-{j}:{t}"), true)).collect();
            pair_nodes.insert((i, j), nodes);
        }
    }
    let g = &input.graph;
    let vertex_nodes: Vec<usize> = g.vertices.iter().map(|v| b.node(format!("vertex:{v}"), false)).collect();
    for &(u, v) in &g.edges {
        let e = b.node(format!("edge:{}-{}", g.vertices[u], g.vertices[v]), false);
        b.arc(e, vertex_nodes[u]);
        b.arc(e, vertex_nodes[v]);
        let (cu, cv) = (input.colors[u], input.colors[v]);
        if cu != cv {
            let (lo, hi) = (cu.min(cv), cu.max(cv));
            for &p in &pair_nodes[&(lo, hi)] {
                b.arc(e, p);
            }
        }
    }
    b.finish(Budget::Finite(pairs), from_int((pairs + k) as i64))
}

/// Dominating set → deterministic DAG with `b = c = k`: an initiator
/// `init:v` and `k + 1` target copies `copy:v:j` per vertex, the initiator
/// pointing at the copies of `v` and of its neighbours.
pub fn gen_dominating_set(graph: &SimpleGraph, k: usize) -> Result<Instance> {
    if k < 1 {
        return Err(Error::InvalidParameter("dominating set needs k >= 1".into()));
    }
    if graph.directed {
        return Err(Error::InvalidParameter("dominating set needs an undirected graph".into()));
    }
    let mut b = Builder::default();
    let initiators: Vec<usize> = graph.vertices.iter().map(|v| b.node(format!("init:{v}"), false)).collect();
    let copies: Vec<Vec<usize>> = graph
        .vertices
        .iter()
        .map(|v| (1..=k + 1).map(|j| b.node(format!("copy:{v}:{j}"), true)).collect())
        .collect();
    for (v, &init) in initiators.iter().enumerate() {
        for &c in &copies[v] {
            b.arc(init, c);
        }
    }
    for &(u, v) in &graph.edges {
        for (from, to) in [(u, v), (v, u)] {
            for &c in &copies[to] {
                b.arc(initiators[from], c);
            }
        }
    }
    b.finish(Budget::Finite(k), from_int(k as i64))
}

/// Set cover → influence maximisation (`A = V`) with `b = h`, `c = m - h`:
/// nodes `set:Sj` pointing at the element nodes `elem:u` they contain.
pub fn gen_set_cover(system: &SetSystem, h: usize) -> Result<Instance> {
    let m = system.sets.len();
    if h > m {
        return Err(Error::InvalidParameter(format!("cover size h = {h} exceeds the number of sets {m}")));
    }
    let mut b = Builder::default();
    let set_nodes: Vec<usize> = (1..=m).map(|j| b.node(format!("set:S{j}"), true)).collect();
    let elem_nodes: Vec<usize> = system.universe.iter().map(|u| b.node(format!("elem:{u}"), true)).collect();
    for (j, set) in system.sets.iter().enumerate() {
        for &u in set {
            b.arc(set_nodes[j], elem_nodes[u]);
        }
    }
    b.finish(Budget::Finite(h), from_int((m - h) as i64))
}

/// Independent set → influence maximisation with `c = k`, `b = |V| - k`:
/// vertex nodes `vertex:v` pointing at the nodes `edge:u-v` of their edges.
pub fn gen_independent_set(graph: &SimpleGraph, k: usize) -> Result<Instance> {
    let n = graph.vertex_count();
    if k > n {
        return Err(Error::InvalidParameter(format!("independent set size k = {k} exceeds |V| = {n}")));
    }
    if graph.directed {
        return Err(Error::InvalidParameter("independent set needs an undirected graph".into()));
    }
    let mut b = Builder::default();
    let vertex_nodes: Vec<usize> = graph.vertices.iter().map(|v| b.node(format!("vertex:{v}"), true)).collect();
    for &(u, v) in &graph.edges {
        let e = b.node(format!("edge:{}-{}", graph.vertices[u], graph.vertices[v]), true);
        b.arc(vertex_nodes[u], e);
        b.arc(vertex_nodes[v], e);
    }
    b.finish(Budget::Finite(n - k), from_int(k as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{solve, solve_brute_force, solve_influence_max, Strategy};
    use crate::Limits;

    fn triangle() -> MccInput {
        let g = SimpleGraph::undirected(&[], &[("x", "y"), ("y", "z"), ("x", "z")]).unwrap();
        MccInput::new(g, vec![1, 2, 3], 3).unwrap()
    }

    #[test]
    fn mcc_triangle_sizes() {
        let inst = gen_mcc(&triangle()).unwrap();
        assert_eq!(inst.graph.node_count(), 27);
        assert_eq!(inst.target_count(), 21);
        assert_eq!(inst.budget, Budget::Finite(3));
        assert_eq!(inst.cost_bound, Some(from_int(6)));
        assert!(inst.graph.is_deterministic());
        assert!(inst.graph.is_acyclic());
        // the three edge nodes form the clique solution
        let r = solve(&inst, Strategy::Auto, &Limits::default()).unwrap();
        assert_eq!(r.decision, Some(true));
        assert_eq!(r.exact_cost, from_int(6));
    }

    #[test]
    fn mcc_without_edges_is_no() {
        let g = SimpleGraph::undirected(&["x", "y", "z"], &[]).unwrap();
        let inst = gen_mcc(&MccInput::new(g, vec![1, 2, 3], 3).unwrap()).unwrap();
        assert_eq!(inst.graph.node_count(), 21 + 3);
        let r = solve(&inst, Strategy::Auto, &Limits::default()).unwrap();
        assert_eq!(r.decision, Some(false));
    }

    #[test]
    fn mcc_two_colors_is_degenerate() {
        // with one colour pair, b = 1 effector on a pair node leaves exactly
        // k + 1 = c = 3 targets unpaid, so even an edgeless graph meets c
        let g = SimpleGraph::undirected(&["x", "y"], &[]).unwrap();
        let inst = gen_mcc(&MccInput::new(g, vec![1, 2], 2).unwrap()).unwrap();
        assert_eq!(inst.graph.node_count(), 4 + 2);
        let r = solve_brute_force(&inst.graph, &inst.targets, inst.budget, &Limits::default()).unwrap();
        assert_eq!(r.exact_cost, from_int(3));
        assert_eq!(inst.cost_bound, Some(from_int(3)));
    }

    #[test]
    fn mcc_rejects_bad_input() {
        let g = SimpleGraph::undirected(&["x"], &[]).unwrap();
        assert!(MccInput::new(g.clone(), vec![2], 1).is_err());
        assert!(gen_mcc(&MccInput::new(g, vec![1], 1).unwrap()).is_err());
    }

    #[test]
    fn dominating_set_single_vertex() {
        let g = SimpleGraph::undirected(&["v"], &[]).unwrap();
        let inst = gen_dominating_set(&g, 1).unwrap();
        assert_eq!(inst.graph.labels(), ["init:v", "copy:v:1", "copy:v:2"]);
        let r = solve(&inst, Strategy::Auto, &Limits::default()).unwrap();
        assert_eq!(r.decision, Some(true));
        assert_eq!(inst.graph.set_labels(&r.effectors), ["init:v"]);
    }

    #[test]
    fn set_cover_examples() {
        let one = SetSystem::new(&[] as &[&str], &[vec!["u1"]]).unwrap();
        let inst = gen_set_cover(&one, 1).unwrap();
        assert_eq!(inst.graph.node_count(), 2);
        let x = solve_influence_max(&inst.graph, 1, &from_int(0)).unwrap().unwrap();
        assert_eq!(inst.graph.set_labels(&x), ["set:S1"]);

        let two = SetSystem::new(&[] as &[&str], &[vec!["u1"], vec!["u2"]]).unwrap();
        let inst = gen_set_cover(&two, 1).unwrap();
        assert_eq!(solve_influence_max(&inst.graph, 1, &from_int(1)).unwrap(), None);
        assert!(gen_set_cover(&two, 3).is_err());
    }

    #[test]
    fn set_cover_two_sets_cover_three_elements() {
        let s = SetSystem::new(&[] as &[&str], &[vec!["u1", "u2"], vec!["u2", "u3"]]).unwrap();
        let inst = gen_set_cover(&s, 2).unwrap();
        let x = solve_influence_max(&inst.graph, 2, &from_int(0)).unwrap().unwrap();
        assert_eq!(inst.graph.set_labels(&x), ["set:S1", "set:S2"]);
    }

    #[test]
    fn independent_set_examples() {
        let edgeless = SimpleGraph::undirected(&["a", "b", "c"], &[]).unwrap();
        let inst = gen_independent_set(&edgeless, 3).unwrap();
        assert_eq!(inst.budget, Budget::Finite(0));
        assert_eq!(solve_influence_max(&inst.graph, 0, &from_int(3)).unwrap(), Some(BTreeSet::new()));

        let triangle = SimpleGraph::undirected(&[], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let inst = gen_independent_set(&triangle, 2).unwrap();
        assert_eq!(solve_influence_max(&inst.graph, 1, &from_int(2)).unwrap(), None);
        assert!(gen_independent_set(&triangle, 4).is_err());
    }
}
