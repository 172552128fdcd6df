//! First homology of a connected graph and the induced integer
//! representation of its automorphisms.
//!
//! A basis of `H_1` comes from a spanning tree: each non-tree edge `e`
//! closes a unique cycle `e + path(head(e) → tail(e))`. Since a cycle is
//! determined by its coefficients on non-tree edges, the coordinates of
//! any cycle are read straight off those coefficients.

use std::collections::VecDeque;

use serde::Serialize;

use crate::automorphism::{automorphism_group, AutGroup, GraphMap};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Subdivision};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// An integer 1-chain: one coefficient per edge, relative to the edge's
/// positive dart `2k`.
pub type Chain = Vec<i64>;

/// Deterministic BFS spanning tree from vertex 0, exploring darts in
/// identifier order. Returns sorted tree edges.
pub fn spanning_tree(g: &Graph) -> Result<Vec<EdgeId>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut visited = vec![false; g.vertex_count()];
    visited[0] = true;
    let mut tree = Vec::new();
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for d in g.darts_at(v) {
            let w = g.target(d);
            if !visited[w] {
                visited[w] = true;
                tree.push(g.edge_of(d));
                queue.push_back(w);
            }
        }
    }
    tree.sort_unstable();
    Ok(tree)
}

/// Spanning tree picked greedily from `order` (Kruskal with unit
/// weights): an edge is kept when it joins two different components.
pub fn spanning_tree_greedy(g: &Graph, order: &[EdgeId]) -> Result<Vec<EdgeId>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut parent: Vec<usize> = g.vertices().collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut tree = Vec::new();
    for &e in order {
        let (a, b) = *g.edges().get(e).ok_or(Error::NotSpanningTree)?;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            tree.push(e);
        }
    }
    if tree.len() + 1 != g.vertex_count() {
        return Err(Error::NotSpanningTree);
    }
    tree.sort_unstable();
    Ok(tree)
}

/// Signed boundary of a chain, one entry per vertex.
pub fn boundary(g: &Graph, chain: &[i64]) -> Vec<i64> {
    let mut out = vec![0; g.vertex_count()];
    for (e, &c) in chain.iter().enumerate() {
        let (a, b) = g.edges()[e];
        out[b] += c;
        out[a] -= c;
    }
    out
}

/// Image of a chain under the chain map of `m`.
pub fn push_chain(m: &GraphMap, chain: &[i64]) -> Chain {
    let mut out = vec![0; chain.len()];
    for (e, &c) in chain.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let img = m.dart_map[2 * e];
        let sign = if img.is_multiple_of(2) { 1 } else { -1 };
        out[img / 2] += sign * c;
    }
    out
}

/// Fundamental cycle basis attached to a spanning tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBasis {
    tree_edges: Vec<EdgeId>,
    cotree_edges: Vec<EdgeId>,
    cycles: Vec<Chain>,
}

impl CycleBasis {
    /// Basis from the BFS spanning tree, cotree edges in identifier order.
    pub fn new(g: &Graph) -> Result<Self> {
        let tree = spanning_tree(g)?;
        Self::from_tree(g, &tree)
    }

    /// Basis from an arbitrary spanning tree.
    pub fn from_tree(g: &Graph, tree: &[EdgeId]) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        let mut in_tree = vec![false; g.edge_count()];
        for &e in tree {
            if e >= g.edge_count() || in_tree[e] {
                return Err(Error::NotSpanningTree);
            }
            in_tree[e] = true;
        }
        if tree.len() + 1 != g.vertex_count() {
            return Err(Error::NotSpanningTree);
        }
        // potential[v] = tree chain from vertex 0 to v
        let mut potential: Vec<Option<Chain>> = vec![None; g.vertex_count()];
        potential[0] = Some(vec![0; g.edge_count()]);
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for d in g.darts_at(v) {
                let e = g.edge_of(d);
                let w = g.target(d);
                if !in_tree[e] || potential[w].is_some() {
                    continue;
                }
                let mut chain = potential[v].clone().expect("visited");
                chain[e] += if d % 2 == 0 { 1 } else { -1 };
                potential[w] = Some(chain);
                queue.push_back(w);
            }
        }
        let potential: Vec<Chain> = potential
            .into_iter()
            .collect::<Option<_>>()
            .ok_or(Error::NotSpanningTree)?;

        let mut tree_edges = tree.to_vec();
        tree_edges.sort_unstable();
        let cotree_edges: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| !in_tree[e]).collect();
        let cycles = cotree_edges
            .iter()
            .map(|&e| {
                let (tail, head) = g.edges()[e];
                let mut c: Chain = potential[tail]
                    .iter()
                    .zip(&potential[head])
                    .map(|(t, h)| t - h)
                    .collect();
                c[e] += 1;
                c
            })
            .collect();
        Ok(CycleBasis {
            tree_edges,
            cotree_edges,
            cycles,
        })
    }

    /// Reorders the basis; `order` lists every cotree edge exactly once.
    pub fn with_cotree_order(&self, order: &[EdgeId]) -> Result<Self> {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        let mut current = self.cotree_edges.clone();
        current.sort_unstable();
        if sorted != current {
            return Err(Error::BadCotreeOrder);
        }
        let cycles = order
            .iter()
            .map(|e| {
                let i = self
                    .cotree_edges
                    .iter()
                    .position(|x| x == e)
                    .expect("checked");
                self.cycles[i].clone()
            })
            .collect();
        Ok(CycleBasis {
            tree_edges: self.tree_edges.clone(),
            cotree_edges: order.to_vec(),
            cycles,
        })
    }

    pub fn rank(&self) -> usize {
        self.cotree_edges.len()
    }

    pub fn tree_edges(&self) -> &[EdgeId] {
        &self.tree_edges
    }

    pub fn cotree_edges(&self) -> &[EdgeId] {
        &self.cotree_edges
    }

    pub fn cycles(&self) -> &[Chain] {
        &self.cycles
    }

    /// Coordinates of a cycle in this basis.
    pub fn coordinates(&self, cycle: &[i64]) -> Vec<i64> {
        self.cotree_edges.iter().map(|&e| cycle[e]).collect()
    }

    /// Matrix of the induced map on `H_1`; column `i` holds the
    /// coordinates of the image of basis cycle `i`.
    pub fn homology_matrix<T: Scalar>(&self, g: &Graph, m: &GraphMap) -> Result<Matrix<T>> {
        if !m.is_automorphism(g)? {
            return Err(Error::NotAutomorphism);
        }
        Ok(self.matrix_unchecked(m))
    }

    pub(crate) fn matrix_unchecked<T: Scalar>(&self, m: &GraphMap) -> Matrix<T> {
        let r = self.rank();
        let mut out = Matrix::zeros(r, r);
        for (j, cycle) in self.cycles.iter().enumerate() {
            let image = push_chain(m, cycle);
            for (i, &e) in self.cotree_edges.iter().enumerate() {
                out[(i, j)] = T::from_i64(image[e]);
            }
        }
        out
    }

    /// `1 - trace` on `H_1`; the trace on `H_0` of a connected graph is 1.
    pub fn lefschetz_number(&self, g: &Graph, m: &GraphMap) -> Result<i64> {
        let mat: Matrix<i64> = self.homology_matrix(g, m)?;
        Ok(1 - mat.trace())
    }

    /// Elements of `group` acting as the identity on `H_1`.
    pub fn kernel(&self, group: &AutGroup) -> AutGroup {
        let elements = group
            .elements()
            .iter()
            .filter(|m| self.matrix_unchecked::<i64>(m).is_identity())
            .cloned()
            .collect();
        AutGroup::from_sorted_unchecked(elements)
    }

    /// Integer matrix `C` with `coords_self = C · coords_other`.
    pub fn change_of_basis<T: Scalar>(&self, other: &CycleBasis) -> Matrix<T> {
        let r = self.rank();
        let mut c = Matrix::zeros(r, other.rank());
        for (j, cycle) in other.cycles.iter().enumerate() {
            for (i, v) in self.coordinates(cycle).into_iter().enumerate() {
                c[(i, j)] = T::from_i64(v);
            }
        }
        c
    }
}

/// Checks that the matrices of `m` in two bases are conjugate by the
/// change-of-basis matrix `C`: `M_self = C · M_other · C⁻¹`.
pub fn basis_change_conjugacy(
    g: &Graph,
    b1: &CycleBasis,
    b2: &CycleBasis,
    m: &GraphMap,
) -> Result<bool> {
    let m1: Matrix<i64> = b1.homology_matrix(g, m)?;
    let m2: Matrix<i64> = b2.homology_matrix(g, m)?;
    let c: Matrix<i64> = b1.change_of_basis(b2);
    let Some(c_inv) = c.inverse_unimodular() else {
        return Ok(false);
    };
    Ok(m1 == &(&c * &m2) * &c_inv)
}

/// Checks that the homology matrix of `m` and of its subdivision are
/// conjugate through the chain map `e ↦ e' + e''` of the subdivision.
pub fn subdivision_conjugacy(g: &Graph, corr: &Subdivision, m: &GraphMap) -> Result<bool> {
    let (s, _) = g.subdivide_all();
    let b = CycleBasis::new(g)?;
    let bs = CycleBasis::new(&s)?;
    let ms = m.subdivided(g, corr)?;
    let mat: Matrix<i64> = b.homology_matrix(g, m)?;
    let mat_s: Matrix<i64> = bs.homology_matrix(&s, &ms)?;
    let mut c = Matrix::<i64>::zeros(bs.rank(), b.rank());
    for (j, cycle) in b.cycles().iter().enumerate() {
        let sub: Chain = cycle.iter().flat_map(|&x| [x, x]).collect();
        c.set_column(j, &bs.coordinates(&sub));
    }
    let Some(c_inv) = c.inverse_unimodular() else {
        return Ok(false);
    };
    Ok(mat_s == &(&c * &mat) * &c_inv)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfCheck {
    pub lefschetz: i64,
    pub chi_fixed: i64,
    pub equal: bool,
    pub subdivided: bool,
}

/// Lefschetz number against the Euler characteristic of the fixed
/// subgraph. Edge-inverting maps are replaced by their subdivision first.
pub fn hopf_check(g: &Graph, m: &GraphMap) -> Result<HopfCheck> {
    if !m.is_automorphism(g)? {
        return Err(Error::NotAutomorphism);
    }
    if m.inverted_edges().is_empty() {
        let b = CycleBasis::new(g)?;
        return Ok(hopf_with_basis(g, &b, m, false));
    }
    let (s, corr) = g.subdivide_all();
    let ms = m.subdivided(g, &corr)?;
    let bs = CycleBasis::new(&s)?;
    Ok(hopf_with_basis(&s, &bs, &ms, true))
}

pub(crate) fn hopf_with_basis(
    g: &Graph,
    b: &CycleBasis,
    m: &GraphMap,
    subdivided: bool,
) -> HopfCheck {
    let lefschetz = 1 - b.matrix_unchecked::<i64>(m).trace();
    let chi_fixed = m
        .fixed_subgraph(g)
        .expect("inversion-free map on its own graph")
        .euler_characteristic();
    HopfCheck {
        lefschetz,
        chi_fixed,
        equal: lefschetz == chi_fixed,
        subdivided,
    }
}

/// Faithfulness of the homology representation of the full automorphism
/// group, together with the hypotheses under which it is guaranteed
/// (connected, no free edges, genus at least 2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionVerdict {
    pub genus: usize,
    pub kernel_order: Option<usize>,
    pub holds: bool,
    pub witness: Option<GraphMap>,
    pub connected: bool,
    pub has_free_edges: bool,
    pub hypotheses_hold: bool,
    pub aut_order: Option<usize>,
    pub action: &'static str,
}

impl PropositionVerdict {
    /// Kernel nontrivial although every hypothesis holds.
    pub fn is_violation(&self) -> bool {
        self.hypotheses_hold && !self.holds
    }
}

pub const ACTION_MODEL: &str = "full dart-level automorphism group, edge inversions permitted";

pub fn proposition_verdict(g: &Graph) -> Result<PropositionVerdict> {
    let connected = g.is_connected();
    let genus = g.cycle_rank();
    let has_free_edges = g.has_free_edges();
    let hypotheses_hold = connected && !has_free_edges && genus >= 2;
    if !connected {
        return Ok(PropositionVerdict {
            genus,
            kernel_order: None,
            holds: false,
            witness: None,
            connected,
            has_free_edges,
            hypotheses_hold,
            aut_order: None,
            action: ACTION_MODEL,
        });
    }
    let group = automorphism_group(g)?;
    let basis = CycleBasis::new(g)?;
    Ok(verdict_from_group(g, &basis, &group))
}

pub(crate) fn verdict_from_group(
    g: &Graph,
    basis: &CycleBasis,
    group: &AutGroup,
) -> PropositionVerdict {
    let kernel = basis.kernel(group);
    let has_free_edges = g.has_free_edges();
    let genus = basis.rank();
    PropositionVerdict {
        genus,
        kernel_order: Some(kernel.order()),
        holds: kernel.order() == 1,
        witness: kernel.elements().get(1).cloned(),
        connected: true,
        has_free_edges,
        hypotheses_hold: !has_free_edges && genus >= 2,
        aut_order: Some(group.order()),
        action: ACTION_MODEL,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::{automorphism_group, closure};

    type M = Matrix<i64>;

    fn rot(n: usize, step: usize) -> GraphMap {
        GraphMap {
            vertex_map: (0..n).map(|v| (v + step) % n).collect(),
            dart_map: (0..2 * n).map(|d| (d + 2 * step) % (2 * n)).collect(),
        }
    }

    fn c4_reflection_through_vertices() -> GraphMap {
        GraphMap {
            vertex_map: vec![0, 3, 2, 1],
            dart_map: vec![7, 6, 5, 4, 3, 2, 1, 0],
        }
    }

    fn loop_reversal() -> GraphMap {
        GraphMap {
            vertex_map: vec![0],
            dart_map: vec![1, 0],
        }
    }

    #[test]
    fn spanning_trees() {
        assert_eq!(spanning_tree(&Graph::theta()).unwrap(), vec![0]);
        assert!(spanning_tree(&Graph::rose(3)).unwrap().is_empty());
        assert_eq!(spanning_tree(&Graph::cycle(5)).unwrap().len(), 4);
        let split = Graph::new(2, vec![]).unwrap();
        assert_eq!(spanning_tree(&split), Err(Error::NotConnected));
        assert_eq!(
            spanning_tree_greedy(&Graph::theta(), &[2, 1, 0]).unwrap(),
            vec![2]
        );
        assert_eq!(
            spanning_tree_greedy(&Graph::cycle(4), &[3, 2, 1, 0]).unwrap(),
            vec![1, 2, 3]
        );
        assert_eq!(
            spanning_tree_greedy(&Graph::cycle(4), &[3]),
            Err(Error::NotSpanningTree)
        );
    }

    #[test]
    fn cycle_bases() {
        let rose = Graph::rose(2);
        let b = CycleBasis::new(&rose).unwrap();
        assert_eq!(b.cycles(), &[vec![1, 0], vec![0, 1]]);

        let theta = Graph::theta();
        let b = CycleBasis::new(&theta).unwrap();
        assert_eq!(b.cotree_edges(), &[1, 2]);
        assert_eq!(b.cycles(), &[vec![-1, 1, 0], vec![-1, 0, 1]]);

        let c3 = Graph::cycle(3);
        let b = CycleBasis::new(&c3).unwrap();
        assert_eq!(b.cycles(), &[vec![1, 1, 1]]);
        for g in [
            rose,
            theta,
            c3,
            Graph::theta().with_pendant_leaves(1, 2).unwrap(),
        ] {
            let b = CycleBasis::new(&g).unwrap();
            assert_eq!(b.rank(), g.genus().unwrap());
            for (i, c) in b.cycles().iter().enumerate() {
                assert!(boundary(&g, c).iter().all(|&x| x == 0));
                let coords = b.coordinates(c);
                for (j, &x) in coords.iter().enumerate() {
                    assert_eq!(x, i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn homology_matrix_examples() {
        let theta = Graph::theta();
        let b = CycleBasis::new(&theta).unwrap();
        let id: M = b
            .homology_matrix(&theta, &GraphMap::identity(&theta))
            .unwrap();
        assert!(id.is_identity());

        let rose1 = Graph::rose(1);
        let b1 = CycleBasis::new(&rose1).unwrap();
        let m: M = b1.homology_matrix(&rose1, &loop_reversal()).unwrap();
        assert_eq!(m, M::from_i64_rows(&[&[-1]]));

        let rose2 = Graph::rose(2);
        let b2 = CycleBasis::new(&rose2).unwrap();
        let swap = GraphMap {
            vertex_map: vec![0],
            dart_map: vec![2, 3, 0, 1],
        };
        let rev0 = GraphMap {
            vertex_map: vec![0],
            dart_map: vec![1, 0, 2, 3],
        };
        let ms: M = b2.homology_matrix(&rose2, &swap).unwrap();
        let mr: M = b2.homology_matrix(&rose2, &rev0).unwrap();
        assert_eq!(ms, M::from_i64_rows(&[&[0, 1], &[1, 0]]));
        assert_eq!(mr, M::from_i64_rows(&[&[-1, 0], &[0, 1]]));

        for n in 1..8 {
            let c = Graph::cycle(n);
            let b = CycleBasis::new(&c).unwrap();
            let m: M = b.homology_matrix(&c, &rot(n, 1)).unwrap();
            assert!(m.is_identity());
        }

        let bad = GraphMap {
            vertex_map: vec![0, 2, 1],
            dart_map: (0..6).collect(),
        };
        let c3 = Graph::cycle(3);
        let b3 = CycleBasis::new(&c3).unwrap();
        assert_eq!(
            b3.homology_matrix::<i64>(&c3, &bad),
            Err(Error::NotAutomorphism)
        );
    }

    #[test]
    fn lefschetz_examples() {
        for (g, genus) in [
            (Graph::theta(), 2),
            (Graph::rose(4), 4),
            (Graph::cycle(3), 1),
        ] {
            let b = CycleBasis::new(&g).unwrap();
            assert_eq!(
                b.lefschetz_number(&g, &GraphMap::identity(&g)).unwrap(),
                1 - genus
            );
        }
        let c4 = Graph::cycle(4);
        let b = CycleBasis::new(&c4).unwrap();
        assert_eq!(b.lefschetz_number(&c4, &rot(4, 1)).unwrap(), 0);
        let rose1 = Graph::rose(1);
        let b = CycleBasis::new(&rose1).unwrap();
        assert_eq!(b.lefschetz_number(&rose1, &loop_reversal()).unwrap(), 2);
    }

    #[test]
    fn hopf_examples() {
        let c4 = Graph::cycle(4);
        let h = hopf_check(&c4, &rot(4, 1)).unwrap();
        assert_eq!((h.lefschetz, h.chi_fixed, h.equal), (0, 0, true));
        let h = hopf_check(&c4, &c4_reflection_through_vertices()).unwrap();
        assert_eq!(
            (h.lefschetz, h.chi_fixed, h.equal, h.subdivided),
            (2, 2, true, false)
        );
        let h = hopf_check(&Graph::rose(1), &loop_reversal()).unwrap();
        assert_eq!(
            (h.lefschetz, h.chi_fixed, h.equal, h.subdivided),
            (2, 2, true, true)
        );
    }

    #[test]
    fn kernel_examples() {
        let theta = Graph::theta();
        let b = CycleBasis::new(&theta).unwrap();
        let aut = automorphism_group(&theta).unwrap();
        assert_eq!(b.kernel(&aut).order(), 1);

        for n in 2..8 {
            let c = Graph::cycle(n);
            let b = CycleBasis::new(&c).unwrap();
            let rotations = closure(&c, &[rot(n, 1)], 100).unwrap();
            assert_eq!(b.kernel(&rotations), rotations);
        }

        let leaves = theta.with_pendant_leaves(0, 2).unwrap();
        let b = CycleBasis::new(&leaves).unwrap();
        let swap = GraphMap {
            vertex_map: vec![0, 1, 3, 2],
            dart_map: vec![0, 1, 2, 3, 4, 5, 8, 9, 6, 7],
        };
        assert!(swap.is_automorphism(&leaves).unwrap());
        assert!(b
            .kernel(&automorphism_group(&leaves).unwrap())
            .contains(&swap));
    }

    #[test]
    fn verdict_examples() {
        let v = proposition_verdict(&Graph::theta()).unwrap();
        assert_eq!(
            (
                v.connected,
                v.genus,
                v.has_free_edges,
                v.kernel_order,
                v.holds
            ),
            (true, 2, false, Some(1), true)
        );
        assert!(v.witness.is_none());
        let v = proposition_verdict(&Graph::cycle(6)).unwrap();
        assert_eq!(
            (
                v.connected,
                v.genus,
                v.has_free_edges,
                v.kernel_order,
                v.holds
            ),
            (true, 1, false, Some(6), false)
        );
        assert!(!v.is_violation());
        assert!(v.witness.is_some());
        let v = proposition_verdict(&Graph::rose(3)).unwrap();
        assert_eq!(
            (
                v.connected,
                v.genus,
                v.has_free_edges,
                v.kernel_order,
                v.holds
            ),
            (true, 3, false, Some(1), true)
        );
        let v = proposition_verdict(&Graph::new(2, vec![(0, 0), (1, 1)]).unwrap()).unwrap();
        assert!(!v.connected && v.kernel_order.is_none() && !v.hypotheses_hold);
    }

    #[test]
    fn verdict_json_shape() {
        let v = proposition_verdict(&Graph::theta()).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.starts_with(r#"{"genus":2,"kernel_order":1,"holds":true,"witness":null"#));
    }

    #[test]
    fn basis_change_examples() {
        let theta = Graph::theta();
        let b1 = CycleBasis::new(&theta).unwrap();
        let b2 = CycleBasis::from_tree(&theta, &[1]).unwrap();
        assert_ne!(b1, b2);
        let id = GraphMap::identity(&theta);
        assert!(basis_change_conjugacy(&theta, &b1, &b2, &id).unwrap());
        let swap = GraphMap {
            vertex_map: vec![1, 0],
            dart_map: vec![1, 0, 3, 2, 5, 4],
        };
        assert!(basis_change_conjugacy(&theta, &b1, &b2, &swap).unwrap());

        let rose = Graph::rose(2);
        let b = CycleBasis::new(&rose).unwrap();
        let permuted = b.with_cotree_order(&[1, 0]).unwrap();
        for m in automorphism_group(&rose).unwrap().elements() {
            assert!(basis_change_conjugacy(&rose, &b, &permuted, m).unwrap());
        }
        assert_eq!(b.with_cotree_order(&[0, 0]), Err(Error::BadCotreeOrder));
        assert_eq!(
            CycleBasis::from_tree(&theta, &[]),
            Err(Error::NotSpanningTree)
        );
    }

    #[test]
    fn subdivision_conjugacy_examples() {
        for g in [Graph::theta(), Graph::rose(2), Graph::cycle(3)] {
            let (_, corr) = g.subdivide_all();
            for m in automorphism_group(&g).unwrap().elements() {
                assert!(subdivision_conjugacy(&g, &corr, m).unwrap());
            }
        }
    }
}
