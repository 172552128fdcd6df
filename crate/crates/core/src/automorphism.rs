//! Dart-level graph automorphisms.
//!
//! A [`GraphMap`] carries a vertex permutation together with a dart
//! permutation. Acting on darts makes loop reversals and permutations of
//! parallel edges visible; a vertex permutation alone cannot see them.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet, VecDeque};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Dart, EdgeId, Graph, Subdivision, Subgraph, Vertex};

/// Default cap on automorphism-group size.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphMap {
    pub vertex_map: Vec<Vertex>,
    pub dart_map: Vec<Dart>,
}

/// Ordered by dart map first; the vertex map only breaks ties on graphs
/// with isolated vertices.
impl Ord for GraphMap {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dart_map
            .cmp(&other.dart_map)
            .then_with(|| self.vertex_map.cmp(&other.vertex_map))
    }
}

impl PartialOrd for GraphMap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

impl GraphMap {
    pub fn identity(g: &Graph) -> Self {
        GraphMap {
            vertex_map: g.vertices().collect(),
            dart_map: g.darts().collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(i, &v)| i == v)
            && self.dart_map.iter().enumerate().all(|(i, &d)| i == d)
    }

    fn check_domain(&self, g: &Graph) -> Result<()> {
        if self.vertex_map.len() != g.vertex_count() || self.dart_map.len() != g.dart_count() {
            return Err(Error::DomainMismatch {
                expected_vertices: g.vertex_count(),
                expected_darts: g.dart_count(),
                vertices: self.vertex_map.len(),
                darts: self.dart_map.len(),
            });
        }
        Ok(())
    }

    /// True iff both maps are bijections, darts move with their origins and
    /// reversal commutes with the dart map.
    pub fn is_automorphism(&self, g: &Graph) -> Result<bool> {
        self.check_domain(g)?;
        if !is_permutation(&self.vertex_map) || !is_permutation(&self.dart_map) {
            return Ok(false);
        }
        Ok(g.darts().all(|d| {
            let img = self.dart_map[d];
            g.origin(img) == self.vertex_map[g.origin(d)]
                && self.dart_map[g.reverse(d)] == g.reverse(img)
        }))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GraphMap) -> Result<GraphMap> {
        if self.vertex_map.len() != other.vertex_map.len()
            || self.dart_map.len() != other.dart_map.len()
        {
            return Err(Error::DomainMismatch {
                expected_vertices: self.vertex_map.len(),
                expected_darts: self.dart_map.len(),
                vertices: other.vertex_map.len(),
                darts: other.dart_map.len(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &GraphMap) -> GraphMap {
        GraphMap {
            vertex_map: other
                .vertex_map
                .iter()
                .map(|&v| self.vertex_map[v])
                .collect(),
            dart_map: other.dart_map.iter().map(|&d| self.dart_map[d]).collect(),
        }
    }

    pub fn inverse(&self) -> GraphMap {
        let mut vertex_map = vec![0; self.vertex_map.len()];
        for (v, &w) in self.vertex_map.iter().enumerate() {
            vertex_map[w] = v;
        }
        let mut dart_map = vec![0; self.dart_map.len()];
        for (d, &e) in self.dart_map.iter().enumerate() {
            dart_map[e] = d;
        }
        GraphMap {
            vertex_map,
            dart_map,
        }
    }

    /// Edges whose two darts are exchanged.
    pub fn inverted_edges(&self) -> Vec<EdgeId> {
        (0..self.dart_map.len() / 2)
            .filter(|&e| self.dart_map[2 * e] == 2 * e + 1)
            .collect()
    }

    /// Fixed vertices plus edges whose darts are both fixed. Requires an
    /// inversion-free map.
    pub fn fixed_subgraph(&self, g: &Graph) -> Result<Subgraph> {
        self.check_domain(g)?;
        let inverted = self.inverted_edges();
        if !inverted.is_empty() {
            return Err(Error::InvertsEdges(inverted));
        }
        Ok(Subgraph {
            vertices: g.vertices().filter(|&v| self.vertex_map[v] == v).collect(),
            edges: (0..g.edge_count())
                .filter(|&e| self.dart_map[2 * e] == 2 * e)
                .collect(),
        })
    }

    /// The induced map on the barycentric subdivision described by `corr`.
    pub fn subdivided(&self, g: &Graph, corr: &Subdivision) -> Result<GraphMap> {
        self.check_domain(g)?;
        if corr.original_vertices != g.vertex_count()
            || corr.original_edges != g.edge_count()
            || corr.halves.len() != g.dart_count()
        {
            return Err(Error::CorrespondenceMismatch);
        }
        let n = g.vertex_count();
        let mut vertex_map: Vec<Vertex> = self.vertex_map.clone();
        vertex_map.extend((0..g.edge_count()).map(|k| n + g.edge_of(self.dart_map[2 * k])));
        let mut dart_map = vec![0; 2 * g.dart_count()];
        for d in g.darts() {
            let src = corr.halves[d];
            let dst = corr.halves[self.dart_map[d]];
            dart_map[src[0]] = dst[0];
            dart_map[src[1]] = dst[1];
        }
        Ok(GraphMap {
            vertex_map,
            dart_map,
        })
    }
}

/// A finite group of automorphisms of one graph, sorted, identity first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct AutGroup {
    elements: Vec<GraphMap>,
}

impl AutGroup {
    /// Sorts, deduplicates and checks closure, identity and inverses.
    pub fn from_elements(mut elements: Vec<GraphMap>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let group = AutGroup { elements };
        if group.elements.is_empty() || !group.elements[0].is_identity() {
            return Err(Error::NotClosed);
        }
        let set: HashSet<&GraphMap> = group.elements.iter().collect();
        for a in &group.elements {
            if !set.contains(&a.inverse()) {
                return Err(Error::NotClosed);
            }
            for b in &group.elements {
                if !set.contains(&a.compose(b)?) {
                    return Err(Error::NotClosed);
                }
            }
        }
        Ok(group)
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<GraphMap>) -> Self {
        AutGroup { elements }
    }

    pub fn trivial(g: &Graph) -> Self {
        AutGroup {
            elements: vec![GraphMap::identity(g)],
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GraphMap] {
        &self.elements
    }

    pub fn identity(&self) -> &GraphMap {
        &self.elements[0]
    }

    pub fn index_of(&self, m: &GraphMap) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    pub fn contains(&self, m: &GraphMap) -> bool {
        self.index_of(m).is_some()
    }
}

/// Subgroup generated by `generators` (breadth-first closure).
pub fn closure(g: &Graph, generators: &[GraphMap], cap: usize) -> Result<AutGroup> {
    for s in generators {
        if !s.is_automorphism(g)? {
            return Err(Error::NotAutomorphism);
        }
    }
    let id = GraphMap::identity(g);
    let mut seen: HashSet<GraphMap> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in generators {
            let y = s.compose_unchecked(&x);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<GraphMap> = seen.into_iter().collect();
    elements.sort();
    Ok(AutGroup::from_sorted_unchecked(elements))
}

pub fn automorphism_group(g: &Graph) -> Result<AutGroup> {
    automorphism_group_capped(g, DEFAULT_GROUP_CAP)
}

/// One independent piece of a dart matching: a list of alternative
/// partial dart assignments.
type Block = Vec<Vec<(Dart, Dart)>>;
/// (valence, loops, sorted neighbour (valence, multiplicity)).
type VertexSignature = (usize, usize, Vec<(usize, usize)>);

struct Search<'a> {
    g: &'a Graph,
    mult: Vec<Vec<usize>>,
    loops: Vec<usize>,
    signature: Vec<VertexSignature>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        let mut mult = vec![vec![0; n]; n];
        let mut loops = vec![0; n];
        for &(a, b) in g.edges() {
            if a == b {
                loops[a] += 1;
            } else {
                mult[a][b] += 1;
                mult[b][a] += 1;
            }
        }
        let val = g.valences();
        let signature = (0..n)
            .map(|v| {
                let neigh = (0..n)
                    .filter(|&w| w != v && mult[v][w] > 0)
                    .map(|w| (val[w], mult[v][w]))
                    .sorted()
                    .collect();
                (val[v], loops[v], neigh)
            })
            .collect();
        Search {
            g,
            mult,
            loops,
            signature,
        }
    }

    fn vertex_maps(&self) -> Vec<Vec<Vertex>> {
        let n = self.g.vertex_count();
        let mut out = Vec::new();
        let mut sigma = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend(0, &mut sigma, &mut used, &mut out);
        out
    }

    fn extend(
        &self,
        v: usize,
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = sigma.len();
        if v == n {
            out.push(sigma.clone());
            return;
        }
        for w in 0..n {
            if used[w] || self.signature[w] != self.signature[v] {
                continue;
            }
            if (0..v).any(|u| self.mult[v][u] != self.mult[w][sigma[u]]) {
                continue;
            }
            sigma[v] = w;
            used[w] = true;
            self.extend(v + 1, sigma, used, out);
            used[w] = false;
        }
        sigma[v] = usize::MAX;
    }

    /// Number of dart matchings over `sigma`, saturating.
    fn matching_count(&self, sigma: &[Vertex]) -> usize {
        let n = sigma.len();
        let factorial = |k: usize| (1..=k).try_fold(1usize, |acc, i| acc.checked_mul(i));
        let mut total = Some(1usize);
        for u in 0..n {
            let k = self.loops[u];
            let flips = 1usize.checked_shl(k as u32);
            total = total.and_then(|t| t.checked_mul(factorial(k)?)?.checked_mul(flips?));
            for v in u + 1..n {
                total = total.and_then(|t| t.checked_mul(factorial(self.mult[u][v])?));
            }
        }
        total.unwrap_or(usize::MAX)
    }

    /// Dart-matching blocks compatible with the vertex map `sigma`.
    fn blocks(&self, sigma: &[Vertex]) -> Vec<Block> {
        let g = self.g;
        let mut bundles: BTreeMap<(Vertex, Vertex), Vec<Dart>> = BTreeMap::new();
        for d in g.darts() {
            bundles
                .entry((g.origin(d), g.target(d)))
                .or_default()
                .push(d);
        }
        let mut blocks = Vec::new();
        for (&(u, v), darts) in &bundles {
            let targets = &bundles[&(sigma[u], sigma[v])];
            if u == v {
                // loops: darts come in reverse pairs, use positive darts only
                let src: Vec<EdgeId> = darts
                    .iter()
                    .filter(|&&d| d % 2 == 0)
                    .map(|&d| d / 2)
                    .collect();
                let dst: Vec<EdgeId> = targets
                    .iter()
                    .filter(|&&d| d % 2 == 0)
                    .map(|&d| d / 2)
                    .collect();
                debug_assert_eq!(src.len(), self.loops[u]);
                let k = src.len();
                let mut choices = Vec::new();
                for perm in (0..k).permutations(k) {
                    for flips in 0..(1usize << k) {
                        let mut assign = Vec::with_capacity(2 * k);
                        for (i, &e) in src.iter().enumerate() {
                            let f = dst[perm[i]];
                            let flip = (flips >> i) & 1;
                            assign.push((2 * e, 2 * f + flip));
                            assign.push((2 * e + 1, 2 * f + 1 - flip));
                        }
                        choices.push(assign);
                    }
                }
                blocks.push(choices);
            } else if u < v {
                let k = darts.len();
                let choices = (0..k)
                    .permutations(k)
                    .map(|perm| {
                        darts
                            .iter()
                            .enumerate()
                            .flat_map(|(i, &d)| {
                                let t = targets[perm[i]];
                                [(d, t), (g.reverse(d), g.reverse(t))]
                            })
                            .collect()
                    })
                    .collect();
                blocks.push(choices);
            }
        }
        blocks
    }
}

/// Full dart-level automorphism group by backtracking over vertex images
/// (pruned by valence, loop count, neighbour profile and edge
/// multiplicities), then every dart matching between corresponding
/// parallel-edge bundles and loop sets.
pub fn automorphism_group_capped(g: &Graph, cap: usize) -> Result<AutGroup> {
    let search = Search::new(g);
    let mut elements = Vec::new();
    for sigma in search.vertex_maps() {
        let count = search.matching_count(&sigma);
        if elements.len().saturating_add(count) > cap {
            return Err(Error::CapExceeded(cap));
        }
        let blocks = search.blocks(&sigma);
        let mut dart_map = vec![0; g.dart_count()];
        expand(&blocks, 0, &mut dart_map, &mut |dm| {
            elements.push(GraphMap {
                vertex_map: sigma.clone(),
                dart_map: dm.to_vec(),
            })
        });
    }
    elements.sort();
    Ok(AutGroup::from_sorted_unchecked(elements))
}

fn expand(blocks: &[Block], i: usize, dart_map: &mut Vec<Dart>, emit: &mut impl FnMut(&[Dart])) {
    match blocks.get(i) {
        None => emit(dart_map),
        Some(block) => {
            for choice in block {
                for &(d, t) in choice {
                    dart_map[d] = t;
                }
                expand(blocks, i + 1, dart_map, emit);
            }
        }
    }
}
