//! Brute-force search for finite subgroups of GL(2, ℤ).
//!
//! Every 2×2 integer matrix with bounded entries and determinant ±1 is
//! tested for finite order by direct powering (orders 1, 2, 3, 4, 6 are
//! the only ones possible, but the search does not assume it). Pairs of
//! torsion elements are closed under multiplication; a closure that grows
//! past the cap is recorded as infinite.

use std::collections::{BTreeMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use super::finite_group::FiniteGroup;
use super::so3::{classify_so3, SO3Class};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub type Mat2 = Matrix<i64>;

/// Highest power tried when looking for a torsion element's order.
pub const MAX_TORSION_ORDER: u32 = 12;

type Key = [i64; 4];

const IDENTITY: Key = [1, 0, 0, 1];

#[inline]
fn mul(a: &Key, b: &Key) -> Key {
    checked_mul(a, b).expect("entries of bounded torsion products fit in i64")
}

/// `None` on overflow; only closures of infinite groups get that far.
#[inline]
fn checked_mul(a: &Key, b: &Key) -> Option<Key> {
    let dot = |x: i64, y: i64, z: i64, w: i64| x.checked_mul(y)?.checked_add(z.checked_mul(w)?);
    Some([
        dot(a[0], b[0], a[1], b[2])?,
        dot(a[0], b[1], a[1], b[3])?,
        dot(a[2], b[0], a[3], b[2])?,
        dot(a[2], b[1], a[3], b[3])?,
    ])
}

fn to_mat(k: &Key) -> Mat2 {
    Mat2::from_rows(vec![vec![k[0], k[1]], vec![k[2], k[3]]])
}

fn key_order(k: &Key) -> Option<u32> {
    let mut p = *k;
    for n in 1..=MAX_TORSION_ORDER {
        if p == IDENTITY {
            return Some(n);
        }
        p = mul(&p, k);
    }
    None
}

/// All finite-order matrices with entries in `[-bound, bound]`, with their orders.
pub fn torsion_elements(entry_bound: i64) -> Vec<(Mat2, u32)> {
    torsion_keys(entry_bound)
        .into_iter()
        .map(|(k, o)| (to_mat(&k), o))
        .collect()
}

fn torsion_keys(bound: i64) -> Vec<(Key, u32)> {
    let range = -bound..=bound;
    let mut out = Vec::new();
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    let det = a * d - b * c;
                    if det.abs() != 1 {
                        continue;
                    }
                    let k = [a, b, c, d];
                    if let Some(o) = key_order(&k) {
                        out.push((k, o));
                    }
                }
            }
        }
    }
    out
}

/// Closure of `gens` under multiplication, or `None` past `cap` elements.
fn close(gens: &[Key], cap: usize) -> Option<Vec<Key>> {
    let mut seen: HashSet<Key> = HashSet::from([IDENTITY]);
    let mut queue = VecDeque::from([IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = checked_mul(&x, s)?;
            if seen.insert(y) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    let mut v: Vec<Key> = seen.into_iter().collect();
    v.sort_unstable();
    Some(v)
}

/// Order of the group generated by two matrices, or `None` when the
/// closure exceeds `cap`.
pub fn generated_order(a: &Mat2, b: &Mat2, cap: usize) -> Option<usize> {
    let k = |m: &Mat2| [m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]];
    close(&[k(a), k(b)], cap).map(|v| v.len())
}

#[derive(Clone, Debug, Serialize)]
pub struct FiniteSubgroup {
    pub order: usize,
    pub class: SO3Class,
    pub type_name: String,
    pub generators: [Mat2; 2],
}

#[derive(Clone, Debug, Serialize)]
pub struct Gl2Report {
    pub entry_bound: i64,
    pub finite_subgroup_orders: Vec<usize>,
    pub maximal_types: Vec<String>,
    pub infinite_pairs: usize,
    pub closure_cap: usize,
    pub torsion_elements: usize,
    pub torsion_order_counts: BTreeMap<u32, usize>,
    pub pairs_tried: usize,
    pub distinct_finite_subgroups: usize,
    pub max_order: usize,
    pub maximal_subgroups: Vec<FiniteSubgroup>,
}

impl Gl2Report {
    /// Maximal orders exactly {12, 8} and every maximal group of type D6 or D4.
    pub fn matches_expected(&self) -> bool {
        let orders: std::collections::BTreeSet<usize> =
            self.maximal_subgroups.iter().map(|h| h.order).collect();
        self.max_order == 12
            && orders == [8, 12].into_iter().collect()
            && self.maximal_types.iter().all(|t| t == "D6" || t == "D4")
    }
}

pub fn gl2_torsion_search(entry_bound: i64, closure_cap: usize) -> Result<Gl2Report> {
    if entry_bound < 1 {
        return Err(Error::InvalidBounds(format!(
            "entry bound {entry_bound} < 1"
        )));
    }
    if closure_cap < 24 {
        return Err(Error::InvalidBounds(format!(
            "closure cap {closure_cap} < 24"
        )));
    }
    let torsion = torsion_keys(entry_bound);
    let mut torsion_order_counts = BTreeMap::new();
    for (_, o) in &torsion {
        *torsion_order_counts.entry(*o).or_insert(0) += 1;
    }

    let n = torsion.len();
    // per first generator: (finite closures with their generator pair, infinite count)
    type Closures = Vec<(Vec<Key>, [Key; 2])>;
    let per_row: Vec<(Closures, usize)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut found = Vec::new();
            let mut local: HashSet<Vec<Key>> = HashSet::new();
            let mut infinite = 0;
            for j in i..n {
                let gens = [torsion[i].0, torsion[j].0];
                match close(&gens, closure_cap) {
                    Some(elems) => {
                        if local.insert(elems.clone()) {
                            found.push((elems, gens));
                        }
                    }
                    None => infinite += 1,
                }
            }
            (found, infinite)
        })
        .collect();

    let mut subgroups: Vec<(Vec<Key>, [Key; 2])> = Vec::new();
    let mut seen: HashSet<Vec<Key>> = HashSet::new();
    let mut infinite_pairs = 0;
    for (found, inf) in per_row {
        infinite_pairs += inf;
        for (elems, gens) in found {
            if seen.insert(elems.clone()) {
                subgroups.push((elems, gens));
            }
        }
    }
    subgroups.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));

    let sets: Vec<HashSet<Key>> = subgroups
        .iter()
        .map(|(e, _)| e.iter().copied().collect())
        .collect();
    let mut maximal_subgroups = Vec::new();
    for (idx, (elems, gens)) in subgroups.iter().enumerate() {
        let contained = (0..idx).any(|k| {
            subgroups[k].0.len() > elems.len() && elems.iter().all(|x| sets[k].contains(x))
        });
        if contained {
            continue;
        }
        let mats: Vec<Mat2> = elems.iter().map(to_mat).collect();
        let class = classify_so3(&FiniteGroup::from_matrices(&mats)?);
        maximal_subgroups.push(FiniteSubgroup {
            order: elems.len(),
            class,
            type_name: class.short_name(),
            generators: [to_mat(&gens[0]), to_mat(&gens[1])],
        });
    }

    let mut finite_subgroup_orders: Vec<usize> = subgroups.iter().map(|(e, _)| e.len()).collect();
    finite_subgroup_orders.sort_unstable();
    finite_subgroup_orders.dedup();

    let mut maximal_types: Vec<(usize, String)> = maximal_subgroups
        .iter()
        .map(|h| (h.order, h.type_name.clone()))
        .collect();
    maximal_types.sort_by(|a, b| b.cmp(a));
    maximal_types.dedup();

    Ok(Gl2Report {
        entry_bound,
        max_order: finite_subgroup_orders.last().copied().unwrap_or(1),
        finite_subgroup_orders,
        maximal_types: maximal_types.into_iter().map(|(_, t)| t).collect(),
        infinite_pairs,
        closure_cap,
        torsion_elements: n,
        torsion_order_counts,
        pairs_tried: n * (n + 1) / 2,
        distinct_finite_subgroups: subgroups.len(),
        maximal_subgroups,
    })
}
