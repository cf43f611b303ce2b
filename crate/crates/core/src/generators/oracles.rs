//! Exhaustive solvers for the source problems of the reductions.

use itertools::Itertools;

use super::{MccInput, SetSystem, SimpleGraph};

/// A clique using exactly one vertex of each colour `1..=k`.
pub fn has_multicolored_clique(input: &MccInput) -> bool {
    let adj = input.graph.adjacency();
    let classes: Vec<Vec<usize>> =
        (1..=input.k).map(|c| (0..input.colors.len()).filter(|&v| input.colors[v] == c).collect()).collect();
    classes
        .iter()
        .map(|class| class.iter().copied())
        .multi_cartesian_product()
        .any(|pick| pick.iter().tuple_combinations().all(|(&u, &v)| adj[u][v]))
}

/// Some `D` with `|D| <= k` such that every vertex is in `D` or adjacent to it.
pub fn has_dominating_set(graph: &SimpleGraph, k: usize) -> bool {
    let adj = graph.adjacency();
    let n = graph.vertex_count();
    (0..=k.min(n)).any(|size| {
        (0..n)
            .combinations(size)
            .any(|d| (0..n).all(|v| d.iter().any(|&u| u == v || adj[u][v])))
    })
}

/// Exactly `h` sets whose union is the universe.
pub fn has_set_cover(system: &SetSystem, h: usize) -> bool {
    let n = system.universe.len();
    h <= system.sets.len()
        && system.sets.iter().combinations(h).any(|chosen| {
            let mut covered = vec![false; n];
            for &u in chosen.into_iter().flatten() {
                covered[u] = true;
            }
            covered.into_iter().all(|c| c)
        })
}

/// Some independent set of size at least `k`.
pub fn has_independent_set(graph: &SimpleGraph, k: usize) -> bool {
    let adj = graph.adjacency();
    let n = graph.vertex_count();
    k <= n && (0..n).combinations(k).any(|set| set.iter().tuple_combinations().all(|(&u, &v)| !adj[u][v]))
}
