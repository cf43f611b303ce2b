use std::collections::BTreeSet;

use super::{InfluenceGraph, NodeId, NodeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcFilter {
    All,
    DeterministicOnly,
}

/// DAG of strongly connected components.
///
/// Components are ordered by their smallest node index and list their nodes
/// in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondensedDag {
    pub components: Vec<Vec<NodeId>>,
    /// Sorted, de-duplicated arcs between component indices.
    pub component_arcs: Vec<(usize, usize)>,
    /// `None` for nodes outside the node restriction.
    pub node_to_component: Vec<Option<usize>>,
}

impl CondensedDag {
    /// Components without incoming component arcs.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.components.len()];
        for &(_, to) in &self.component_arcs {
            has_in[to] = true;
        }
        (0..self.components.len()).filter(|&c| !has_in[c]).collect()
    }

    /// Kahn's algorithm; `None` if the component graph has a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let k = self.components.len();
        let mut indeg = vec![0usize; k];
        let mut out = vec![Vec::new(); k];
        for &(a, b) in &self.component_arcs {
            indeg[b] += 1;
            out[a].push(b);
        }
        let mut ready: Vec<usize> = (0..k).filter(|&c| indeg[c] == 0).collect();
        let mut order = Vec::with_capacity(k);
        while let Some(c) = ready.pop() {
            order.push(c);
            for &d in &out[c] {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    ready.push(d);
                }
            }
        }
        (order.len() == k).then_some(order)
    }
}

/// Strongly connected components of the filtered, restricted graph
/// (iterative Tarjan, linear time).
pub fn condensation(g: &InfluenceGraph, filter: ArcFilter, restriction: Option<&NodeSet>) -> CondensedDag {
    let keep = match restriction {
        Some(set) => g.mask(set),
        None => vec![true; g.node_count()],
    };
    condense_masked(g, filter, &keep)
}

pub(crate) fn condense_masked(g: &InfluenceGraph, filter: ArcFilter, keep: &[bool]) -> CondensedDag {
    let n = g.node_count();
    let usable = |a: usize| {
        let arc = &g.arcs[a];
        keep[arc.head.0] && (filter == ArcFilter::All || arc.is_deterministic())
    };

    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp_of = vec![usize::MAX; n];
    let mut raw_components: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0usize;
    // (node, position in its out-arc list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if !keep[root] || index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (u, ref mut pos)) = call.last_mut() {
            let out = &g.out_arcs[u];
            if *pos < out.len() {
                let a = out[*pos];
                *pos += 1;
                if !usable(a) {
                    continue;
                }
                let v = g.arcs[a].head.0;
                if index[v] == UNVISITED {
                    index[v] = counter;
                    low[v] = counter;
                    counter += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    call.push((v, 0));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[u]);
            }
            if low[u] == index[u] {
                let mut members = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp_of[w] = raw_components.len();
                    members.push(w);
                    if w == u {
                        break;
                    }
                }
                raw_components.push(members);
            }
        }
    }

    // canonical order: by smallest member
    for members in &mut raw_components {
        members.sort_unstable();
    }
    let mut order: Vec<usize> = (0..raw_components.len()).collect();
    order.sort_by_key(|&c| raw_components[c][0]);
    let mut rank = vec![0usize; raw_components.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let components: Vec<Vec<NodeId>> = order
        .iter()
        .map(|&c| raw_components[c].iter().map(|&v| NodeId(v)).collect())
        .collect();
    let node_to_component: Vec<Option<usize>> = (0..n)
        .map(|v| keep[v].then(|| rank[comp_of[v]]))
        .collect();

    let mut component_arcs = BTreeSet::new();
    for (a, arc) in g.arcs.iter().enumerate() {
        if !keep[arc.tail.0] || !usable(a) {
            continue;
        }
        let (cu, cv) = (rank[comp_of[arc.tail.0]], rank[comp_of[arc.head.0]]);
        if cu != cv {
            component_arcs.insert((cu, cv));
        }
    }

    CondensedDag {
        components,
        component_arcs: component_arcs.into_iter().collect(),
        node_to_component,
    }
}
