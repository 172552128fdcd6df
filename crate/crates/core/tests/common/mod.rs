#![allow(dead_code)]

use handlegraph::Graph;
use itertools::Itertools;

/// Multigraph isomorphism by trying every vertex bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let norm = |edges: Vec<(usize, usize)>| {
        let mut e: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(x, y)| (x.min(y), x.max(y)))
            .collect();
        e.sort_unstable();
        e
    };
    let target = norm(b.edges().to_vec());
    let n = a.vertex_count();
    (0..n)
        .permutations(n)
        .any(|p| norm(a.edges().iter().map(|&(x, y)| (p[x], p[y])).collect()) == target)
}

/// Every edge multiset on `v` vertices with `e` edges, no pruning.
pub fn all_multigraphs(v: usize, e: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a..v).map(move |b| (a, b))).collect();
    pairs
        .into_iter()
        .combinations_with_replacement(e)
        .map(|edges| Graph::new(v, edges).unwrap())
        .collect()
}

/// Isomorphism classes of the graphs accepted by `keep`, deduplicated by
/// brute-force isomorphism.
pub fn brute_classes(v: usize, e: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in all_multigraphs(v, e) {
        if keep(&g) && !reps.iter().any(|r| brute_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}
