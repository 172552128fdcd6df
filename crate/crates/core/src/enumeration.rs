//! Exhaustive generation of small multigraphs up to isomorphism and the
//! batch verification harness built on it.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::automorphism::{automorphism_group, GraphMap};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{
    hopf_with_basis, proposition_verdict, verdict_from_group, CycleBasis, HopfCheck,
};

pub const MAX_VERTICES: usize = 6;
pub const MAX_EDGES: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub min_genus: usize,
    pub max_genus: usize,
}

impl EnumBounds {
    pub fn new(
        max_vertices: usize,
        max_edges: usize,
        min_genus: usize,
        max_genus: usize,
    ) -> Result<Self> {
        let b = EnumBounds {
            max_vertices,
            max_edges,
            min_genus,
            max_genus,
        };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_VERTICES).contains(&self.max_vertices) {
            return Err(Error::InvalidBounds(format!(
                "max_vertices {} not in 1..={MAX_VERTICES}",
                self.max_vertices
            )));
        }
        if self.max_edges > MAX_EDGES {
            return Err(Error::InvalidBounds(format!(
                "max_edges {} exceeds {MAX_EDGES}",
                self.max_edges
            )));
        }
        if self.min_genus > self.max_genus {
            return Err(Error::InvalidBounds(format!(
                "min_genus {} exceeds max_genus {}",
                self.min_genus, self.max_genus
            )));
        }
        Ok(())
    }
}

/// Lexicographically least sorted edge list over the vertex relabelings
/// that list vertices by non-increasing (valence, loop count). The
/// ordering key is an isomorphism invariant, so equal signatures mean
/// isomorphic multigraphs and conversely.
pub fn canonical_form(g: &Graph) -> Result<String> {
    Ok(canonical_graph(g)?.0)
}

/// Signature together with the canonically relabeled graph (edges sorted).
pub fn canonical_graph(g: &Graph) -> Result<(String, Graph)> {
    let n = g.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::OutOfRange(format!(
            "{n} vertices; canonical form supports at most {MAX_VERTICES}"
        )));
    }
    let val = g.valences();
    let mut loops = vec![0; n];
    for &(a, b) in g.edges() {
        if a == b {
            loops[a] += 1;
        }
    }
    let key = |v: usize| std::cmp::Reverse((val[v], loops[v]));
    // blocks of vertices sharing a key, in canonical block order
    let order: Vec<usize> = (0..n).sorted_by_key(|&v| key(v)).collect();
    let blocks: Vec<Vec<usize>> = order
        .iter()
        .copied()
        .chunk_by(|&v| key(v))
        .into_iter()
        .map(|(_, grp)| grp.collect())
        .collect();

    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut new_label = vec![0; n];
    for_each_block_arrangement(&blocks, 0, 0, &mut new_label, &mut |label| {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (label[a], label[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
    });
    let edges = best.expect("at least one arrangement");
    let sig = format!(
        "{}:{}",
        n,
        edges.iter().map(|(a, b)| format!("{a}-{b}")).join(",")
    );
    Ok((sig, Graph::new(n, edges)?))
}

fn for_each_block_arrangement(
    blocks: &[Vec<usize>],
    i: usize,
    offset: usize,
    label: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    let Some(block) = blocks.get(i) else {
        emit(label);
        return;
    };
    for perm in block.iter().permutations(block.len()) {
        for (k, &&v) in perm.iter().enumerate() {
            label[v] = offset + k;
        }
        for_each_block_arrangement(blocks, i + 1, offset + block.len(), label, emit);
    }
}

/// One isomorphism class: its signature and canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub signature: String,
    pub graph: Graph,
}

/// Which multigraphs to generate.
#[derive(Clone, Copy, Debug)]
pub struct ClassFilter {
    pub connected: bool,
    pub no_leaves: bool,
    pub min_rank: usize,
    pub max_rank: usize,
}

/// All multigraph isomorphism classes with `1..=max_vertices` vertices and
/// at most `max_edges` edges passing `filter`, sorted by
/// (vertices, edges, signature). Rank means cycle rank `E - V + c`.
pub fn enumerate_classes(
    max_vertices: usize,
    max_edges: usize,
    filter: ClassFilter,
) -> Result<Vec<GraphClass>> {
    if !(1..=MAX_VERTICES).contains(&max_vertices) || max_edges > MAX_EDGES {
        return Err(Error::InvalidBounds(format!(
            "({max_vertices} vertices, {max_edges} edges) outside 1..={MAX_VERTICES} / ..={MAX_EDGES}"
        )));
    }
    let cells: Vec<(usize, usize)> = (1..=max_vertices)
        .flat_map(|v| (0..=max_edges).map(move |e| (v, e)))
        .filter(|&(v, e)| {
            // a connected graph needs v - 1 edges; its rank is e - v + 1
            !filter.connected
                || (e + 1 >= v && (filter.min_rank..=filter.max_rank).contains(&(e + 1 - v)))
        })
        .collect();
    let per_cell: Vec<Result<Vec<GraphClass>>> = cells
        .par_iter()
        .map(|&(v, e)| enumerate_cell(v, e, filter))
        .collect();
    let mut out = Vec::new();
    for cell in per_cell {
        out.extend(cell?);
    }
    Ok(out)
}

fn enumerate_cell(v: usize, e: usize, filter: ClassFilter) -> Result<Vec<GraphClass>> {
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a..v).map(move |b| (a, b))).collect();
    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    for edges in pairs.iter().copied().combinations_with_replacement(e) {
        let mut val = vec![0usize; v];
        for &(a, b) in &edges {
            val[a] += 1;
            val[b] += 1;
        }
        // every class has a labeling with non-increasing valences
        if val.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        if filter.no_leaves && val.contains(&1) {
            continue;
        }
        let g = Graph::new(v, edges)?;
        if filter.connected && !g.is_connected() {
            continue;
        }
        let rank = g.cycle_rank();
        if rank < filter.min_rank || rank > filter.max_rank {
            continue;
        }
        let (sig, canon) = canonical_graph(&g)?;
        classes.entry(sig).or_insert(canon);
    }
    Ok(classes
        .into_iter()
        .map(|(signature, graph)| GraphClass { signature, graph })
        .collect())
}

/// Connected multigraphs without valence-1 vertices and with genus in
/// range, one per isomorphism class.
pub fn enumerate_graphs(b: &EnumBounds) -> Result<Vec<GraphClass>> {
    b.validate()?;
    enumerate_classes(
        b.max_vertices,
        b.max_edges,
        ClassFilter {
            connected: true,
            no_leaves: true,
            min_rank: b.min_genus,
            max_rank: b.max_genus,
        },
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CensusCell {
    pub vertices: usize,
    pub edges: usize,
    pub genus: usize,
    pub classes: usize,
}

pub fn census(classes: &[GraphClass]) -> Vec<CensusCell> {
    let mut counts: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for c in classes {
        let g = &c.graph;
        *counts
            .entry((g.vertex_count(), g.edge_count(), g.cycle_rank()))
            .or_insert(0) += 1;
    }
    counts
        .into_iter()
        .map(|((vertices, edges, genus), classes)| CensusCell {
            vertices,
            edges,
            genus,
            classes,
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelRecord {
    pub signature: String,
    pub graph: Graph,
    pub genus: usize,
    pub kernel_order: usize,
    pub witness: Option<GraphMap>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfViolation {
    pub signature: String,
    pub map: GraphMap,
    pub check: HopfCheck,
}

#[derive(Clone, Debug, Serialize)]
pub struct CapRecord {
    pub signature: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub bounds: EnumBounds,
    pub graphs_checked: usize,
    pub automorphisms_checked: usize,
    pub hopf_checks: usize,
    pub proposition_violations: Vec<KernelRecord>,
    pub hopf_violations: Vec<HopfViolation>,
    pub counterexamples_outside_hypotheses: Vec<KernelRecord>,
    pub cap_exceeded: Vec<CapRecord>,
    pub census: Vec<CensusCell>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.proposition_violations.is_empty() && self.hopf_violations.is_empty()
    }

    /// Plain-text table, one row per census cell, followed by a summary.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        s.push_str(" V  E  genus  classes\n");
        for c in &self.census {
            s.push_str(&format!(
                "{:>2} {:>2} {:>6} {:>8}\n",
                c.vertices, c.edges, c.genus, c.classes
            ));
        }
        for r in &self.counterexamples_outside_hypotheses {
            s.push_str(&format!(
                "outside hypotheses: {} genus {} kernel order {}\n",
                r.signature, r.genus, r.kernel_order
            ));
        }
        for r in &self.proposition_violations {
            s.push_str(&format!(
                "VIOLATION: {} kernel order {}\n",
                r.signature, r.kernel_order
            ));
        }
        for r in &self.hopf_violations {
            s.push_str(&format!(
                "HOPF VIOLATION: {} L={} chi={}\n",
                r.signature, r.check.lefschetz, r.check.chi_fixed
            ));
        }
        for r in &self.cap_exceeded {
            s.push_str(&format!("cap exceeded: {} ({})\n", r.signature, r.message));
        }
        s.push_str(&self.summary_line());
        s.push('\n');
        s
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} graphs, {} automorphisms, {} proposition violations, {} hopf violations, {} outside-hypotheses kernels",
            if self.passed() { "PASS" } else { "FAIL" },
            self.graphs_checked,
            self.automorphisms_checked,
            self.proposition_violations.len(),
            self.hopf_violations.len(),
            self.counterexamples_outside_hypotheses.len()
        )
    }
}

struct GraphOutcome {
    automorphisms: usize,
    hopf_checks: usize,
    kernel: Option<KernelRecord>,
    violation: bool,
    hopf_violations: Vec<HopfViolation>,
    cap: Option<CapRecord>,
}

fn check_graph(class: &GraphClass) -> GraphOutcome {
    let g = &class.graph;
    let group = match automorphism_group(g) {
        Ok(grp) => grp,
        Err(e) => {
            return GraphOutcome {
                automorphisms: 0,
                hopf_checks: 0,
                kernel: None,
                violation: false,
                hopf_violations: Vec::new(),
                cap: Some(CapRecord {
                    signature: class.signature.clone(),
                    message: e.to_string(),
                }),
            }
        }
    };
    let basis = CycleBasis::new(g).expect("enumerated graphs are connected");
    let verdict = verdict_from_group(g, &basis, &group);
    let (sub, corr) = g.subdivide_all();
    let sub_basis = CycleBasis::new(&sub).expect("subdivision preserves connectivity");
    let mut hopf_violations = Vec::new();
    for m in group.elements() {
        let check = if m.inverted_edges().is_empty() {
            hopf_with_basis(g, &basis, m, false)
        } else {
            let ms = m.subdivided(g, &corr).expect("matching subdivision");
            hopf_with_basis(&sub, &sub_basis, &ms, true)
        };
        if !check.equal {
            hopf_violations.push(HopfViolation {
                signature: class.signature.clone(),
                map: m.clone(),
                check,
            });
        }
    }
    let kernel_order = verdict.kernel_order.unwrap_or(1);
    let kernel = (kernel_order > 1).then(|| KernelRecord {
        signature: class.signature.clone(),
        graph: g.clone(),
        genus: verdict.genus,
        kernel_order,
        witness: verdict.witness.clone(),
    });
    GraphOutcome {
        automorphisms: group.order(),
        hopf_checks: group.order(),
        kernel,
        violation: verdict.is_violation(),
        hopf_violations,
        cap: None,
    }
}

/// Runs the faithfulness and Hopf checks over every enumerated graph.
/// Violations are collected, never fatal.
pub fn verify_proposition(b: &EnumBounds) -> Result<VerificationReport> {
    let classes = enumerate_graphs(b)?;
    verify_classes(*b, &classes)
}

pub fn verify_classes(bounds: EnumBounds, classes: &[GraphClass]) -> Result<VerificationReport> {
    let outcomes: Vec<GraphOutcome> = classes.par_iter().map(check_graph).collect();
    let mut report = VerificationReport {
        bounds,
        graphs_checked: classes.len(),
        automorphisms_checked: 0,
        hopf_checks: 0,
        proposition_violations: Vec::new(),
        hopf_violations: Vec::new(),
        counterexamples_outside_hypotheses: Vec::new(),
        cap_exceeded: Vec::new(),
        census: census(classes),
    };
    for o in outcomes {
        report.automorphisms_checked += o.automorphisms;
        report.hopf_checks += o.hopf_checks;
        report.hopf_violations.extend(o.hopf_violations);
        report.cap_exceeded.extend(o.cap);
        if let Some(k) = o.kernel {
            if o.violation {
                report.proposition_violations.push(k);
            } else {
                report.counterexamples_outside_hypotheses.push(k);
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct SharpnessCase {
    pub name: String,
    pub graph: Graph,
    pub free_edges: Vec<usize>,
    pub kernel_order: usize,
    pub witness: Option<GraphMap>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SharpnessReport {
    pub cases: Vec<SharpnessCase>,
    pub passed: bool,
}

/// Genus-2 cores with two pendant leaves on one vertex: the leaf swap
/// acts trivially on homology. The bare theta graph is the control.
pub fn verify_free_edge_sharpness() -> Result<SharpnessReport> {
    let cases = [
        (
            "theta + 2 pendant leaves",
            Graph::theta().with_pendant_leaves(0, 2)?,
        ),
        (
            "rose-2 + 2 pendant leaves",
            Graph::rose(2).with_pendant_leaves(0, 2)?,
        ),
        ("theta (control)", Graph::theta()),
    ];
    let mut out = Vec::new();
    for (name, g) in cases {
        let v = proposition_verdict(&g)?;
        out.push(SharpnessCase {
            name: name.to_string(),
            free_edges: g.free_edges(),
            graph: g,
            kernel_order: v.kernel_order.expect("connected"),
            witness: v.witness,
        });
    }
    let passed = out[0].kernel_order >= 2 && out[1].kernel_order >= 2 && out[2].kernel_order == 1;
    Ok(SharpnessReport { cases: out, passed })
}
