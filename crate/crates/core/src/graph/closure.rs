use super::{mask_to_set, InfluenceGraph, NodeSet};

/// `dcl(S)`: every node reachable from `S` along weight-one arcs only.
pub fn deterministic_closure(g: &InfluenceGraph, seeds: &NodeSet) -> NodeSet {
    mask_to_set(&closure_mask(g, seeds, Direction::Forward, true))
}

/// `idcl(S)`: every node that reaches `S` along weight-one arcs only.
pub fn inverse_deterministic_closure(g: &InfluenceGraph, seeds: &NodeSet) -> NodeSet {
    mask_to_set(&closure_mask(g, seeds, Direction::Backward, true))
}

/// Nodes reachable from `seeds` along any arcs.
pub fn reachable(g: &InfluenceGraph, seeds: &NodeSet) -> NodeSet {
    mask_to_set(&closure_mask(g, seeds, Direction::Forward, false))
}

#[derive(Clone, Copy)]
pub(crate) enum Direction {
    Forward,
    Backward,
}

pub(crate) fn closure_mask(g: &InfluenceGraph, seeds: &NodeSet, dir: Direction, deterministic_only: bool) -> Vec<bool> {
    let mut seen = g.mask(seeds);
    let mut stack: Vec<usize> = seeds.iter().map(|v| v.0).collect();
    extend_mask(g, &mut seen, &mut stack, dir, deterministic_only);
    seen
}

/// Grows `seen` from the nodes on `stack`, which must already be marked.
pub(crate) fn extend_mask(
    g: &InfluenceGraph,
    seen: &mut [bool],
    stack: &mut Vec<usize>,
    dir: Direction,
    deterministic_only: bool,
) {
    while let Some(u) = stack.pop() {
        let incident = match dir {
            Direction::Forward => &g.out_arcs[u],
            Direction::Backward => &g.in_arcs[u],
        };
        for &a in incident {
            let arc = &g.arcs[a];
            if deterministic_only && !arc.is_deterministic() {
                continue;
            }
            let next = match dir {
                Direction::Forward => arc.head.0,
                Direction::Backward => arc.tail.0,
            };
            if !seen[next] {
                seen[next] = true;
                stack.push(next);
            }
        }
    }
}
