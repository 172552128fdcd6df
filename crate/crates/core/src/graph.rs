//! Dart-based finite multigraphs.
//!
//! Edge `k` joining `from` to `to` owns darts `2k` (originating at `from`)
//! and `2k + 1` (originating at `to`). Loops and parallel edges are
//! allowed. Vertex identifiers are `0..n`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Dart = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<usize>,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        for (k, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::DanglingVertex { edge: k, vertex: v });
                }
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    /// One vertex carrying `g` loops.
    pub fn rose(g: usize) -> Self {
        Graph {
            vertex_count: 1,
            edges: vec![(0, 0); g],
        }
    }

    /// Two vertices joined by `k` parallel edges (`k = 3` is the theta graph).
    pub fn banana(k: usize) -> Self {
        Graph {
            vertex_count: 2,
            edges: vec![(0, 1); k],
        }
    }

    pub fn theta() -> Self {
        Self::banana(3)
    }

    /// Cycle on `n ≥ 1` vertices with edge `i` running from `i` to `i+1 mod n`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 1);
        Graph {
            vertex_count: n,
            edges: (0..n).map(|i| (i, (i + 1) % n)).collect(),
        }
    }

    /// Path on `n ≥ 1` vertices.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1);
        Graph {
            vertex_count: n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count
    }

    pub fn darts(&self) -> std::ops::Range<Dart> {
        0..self.dart_count()
    }

    #[inline]
    pub fn edge_of(&self, d: Dart) -> EdgeId {
        d / 2
    }

    #[inline]
    pub fn reverse(&self, d: Dart) -> Dart {
        d ^ 1
    }

    #[inline]
    pub fn origin(&self, d: Dart) -> Vertex {
        let (a, b) = self.edges[d / 2];
        if d.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    #[inline]
    pub fn target(&self, d: Dart) -> Vertex {
        self.origin(d ^ 1)
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        a == b
    }

    /// Darts originating at `v`, in identifier order.
    pub fn darts_at(&self, v: Vertex) -> impl Iterator<Item = Dart> + '_ {
        self.darts().filter(move |&d| self.origin(d) == v)
    }

    pub fn with_edge(&self, from: Vertex, to: Vertex) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push((from, to));
        Graph::new(self.vertex_count, edges)
    }

    /// Appends `count` new leaf vertices, each joined to `at` by a pendant edge.
    pub fn with_pendant_leaves(&self, at: Vertex, count: usize) -> Result<Self> {
        if at >= self.vertex_count {
            return Err(Error::UnknownVertex(at));
        }
        let mut edges = self.edges.clone();
        edges.extend((0..count).map(|i| (at, self.vertex_count + i)));
        Graph::new(self.vertex_count + count, edges)
    }

    /// Parses the JSON document `{"vertices":[0,..,n-1],"edges":[[from,to],...]}`.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: GraphDoc =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        if doc.vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut seen = vec![false; doc.vertices.len()];
        for (position, &v) in doc.vertices.iter().enumerate() {
            if v < seen.len() && seen[v] {
                return Err(Error::DuplicateVertex(v));
            }
            if v != position {
                return Err(Error::BadVertexList { position, found: v });
            }
            seen[v] = true;
        }
        Graph::new(
            doc.vertices.len(),
            doc.edges.into_iter().map(|[a, b]| (a, b)).collect(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    /// Number of darts originating at `v`; loops count twice.
    pub fn valence(&self, v: Vertex) -> Result<usize> {
        if v >= self.vertex_count {
            return Err(Error::UnknownVertex(v));
        }
        Ok(self.valences()[v])
    }

    pub fn valences(&self) -> Vec<usize> {
        let mut val = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            val[a] += 1;
            val[b] += 1;
        }
        val
    }

    pub fn component_count(&self) -> usize {
        let mut comp = vec![usize::MAX; self.vertex_count];
        let adj = self.adjacency();
        let mut count = 0;
        for start in self.vertices() {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64
    }

    /// Cycle rank `|E| - |V| + 1` of a connected graph.
    pub fn genus(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(self.cycle_rank())
    }

    /// `|E| - |V| + c`, defined for any graph.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertex_count
    }

    /// Edges with at least one endpoint of valence 1.
    pub fn free_edges(&self) -> Vec<EdgeId> {
        let val = self.valences();
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| val[a] == 1 || val[b] == 1)
            .map(|(k, _)| k)
            .collect()
    }

    pub fn has_free_edges(&self) -> bool {
        !self.free_edges().is_empty()
    }

    /// Barycentric subdivision.
    ///
    /// Edge `k = (u, v)` gets midpoint vertex `n + k` and is replaced by new
    /// edge `2k = (u, n+k)` and new edge `2k+1 = (n+k, v)`.
    pub fn subdivide_all(&self) -> (Graph, Subdivision) {
        let n = self.vertex_count;
        let mut edges = Vec::with_capacity(2 * self.edges.len());
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            edges.push((u, n + k));
            edges.push((n + k, v));
        }
        let sub = Graph {
            vertex_count: n + self.edges.len(),
            edges,
        };
        let halves = (0..self.dart_count())
            .map(|d| {
                let k = d / 2;
                if d % 2 == 0 {
                    [4 * k, 4 * k + 2]
                } else {
                    [4 * k + 3, 4 * k + 1]
                }
            })
            .collect();
        let corr = Subdivision {
            original_vertices: n,
            original_edges: self.edges.len(),
            halves,
        };
        (sub, corr)
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Relabels vertices by `perm` (old → new), keeping edge order and orientation.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        Graph {
            vertex_count: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| (perm[a], perm[b]))
                .collect(),
        }
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphDoc {
            vertices: self.vertices().collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
        .serialize(serializer)
    }
}

/// Dart correspondence produced by [`Graph::subdivide_all`]: each original
/// dart maps to the ordered pair (half at its origin, half at the midpoint
/// continuing in the same direction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub original_vertices: usize,
    pub original_edges: usize,
    pub halves: Vec<[Dart; 2]>,
}

impl Subdivision {
    pub fn midpoint(&self, e: EdgeId) -> Vertex {
        self.original_vertices + e
    }
}

/// A subgraph: sorted vertex and edge subsets of a parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl Subgraph {
    pub fn whole(g: &Graph) -> Self {
        Subgraph {
            vertices: g.vertices().collect(),
            edges: (0..g.edge_count()).collect(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    /// Every included edge has both endpoints included.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.edges.iter().all(|&e| {
            e < g.edge_count() && {
                let (a, b) = g.edges()[e];
                self.vertices.binary_search(&a).is_ok() && self.vertices.binary_search(&b).is_ok()
            }
        })
    }
}
