//! Finite groups given by multiplication tables.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::automorphism::AutGroup;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Largest order accepted by [`is_isomorphic`].
pub const ISOMORPHISM_GUARD: usize = 120;

/// A finite group on elements `0..n`, element `0` the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
}

impl FiniteGroup {
    /// Validates identity, inverses (Latin square) and associativity.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidTable(format!("row {i} has wrong length")));
        }
        let group = FiniteGroup {
            order: n,
            table: rows.into_iter().flatten().collect(),
        };
        group.validate()?;
        Ok(group)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        if let Some(&bad) = self.table.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        for i in 0..n {
            let row: BTreeSet<usize> = (0..n).map(|j| self.mul(i, j)).collect();
            let col: BTreeSet<usize> = (0..n).map(|j| self.mul(j, i)).collect();
            if row.len() != n || col.len() != n {
                return Err(Error::InvalidTable(format!("element {i} has no inverse")));
            }
        }
        // Light's test: checking (x s) y = x (s y) for a generating set suffices.
        for s in self.generating_set() {
            for x in 0..n {
                for y in 0..n {
                    if self.mul(self.mul(x, s), y) != self.mul(x, self.mul(s, y)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({x}, {s}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul(a, b) == 0)
            .expect("validated group")
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        p.sort_unstable();
        p
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    /// Greedy generating set, preferring elements of large order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (0..self.order).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order_bounded(a)), a));
        let mut gens = Vec::new();
        let mut covered = vec![false; self.order];
        covered[0] = true;
        for a in by_order {
            if !covered[a] {
                gens.push(a);
                for x in self.generated(&gens) {
                    covered[x] = true;
                }
            }
        }
        gens
    }

    // element_order without assuming the table is a group yet
    fn element_order_bounded(&self, a: usize) -> usize {
        let mut x = a;
        for k in 1..=self.order {
            if x == 0 {
                return k;
            }
            x = self.mul(x, a);
        }
        0
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|a| self.element_order(a) == self.order)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i + j) % n))
            .collect();
        FiniteGroup { order: n, table }
    }

    /// Dihedral group of the given order `2n` (`n ≥ 1`); element
    /// `i + n·k` stands for `r^i s^k`.
    pub fn dihedral(order: usize) -> Self {
        assert!(order >= 2 && order.is_multiple_of(2));
        let n = order / 2;
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let (i, s1) = (a % n, a / n);
            for b in 0..order {
                let (j, s2) = (b % n, b / n);
                let rot = if s1 == 0 {
                    (i + j) % n
                } else {
                    (i + n - j) % n
                };
                table.push(rot + n * ((s1 + s2) % 2));
            }
        }
        FiniteGroup { order, table }
    }

    pub fn klein_four() -> Self {
        Self::direct_product(&Self::cyclic(2), &Self::cyclic(2))
    }

    /// Quaternion group; element `u + 4·s` is `(-1)^s` times unit `u` of `1, i, j, k`.
    pub fn quaternion() -> Self {
        // unit products: (sign, unit)
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mut table = Vec::with_capacity(64);
        for a in 0..8 {
            for b in 0..8 {
                let (s, u) = UNIT[a % 4][b % 4];
                table.push(u + 4 * ((s + a / 4 + b / 4) % 2));
            }
        }
        FiniteGroup { order: 8, table }
    }

    /// Group generated by permutations of `0..k` (images listed per point).
    /// Composition `(p·q)(x) = p(q(x))`.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Self {
        let k = generators.first().map_or(0, Vec::len);
        let id: Vec<usize> = (0..k).collect();
        let mut elements = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in generators {
                let y: Vec<usize> = x.iter().map(|&i| s[i]).collect();
                if elements.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        // identity is the lexicographically least permutation, so it lands at 0
        let elements: Vec<Vec<usize>> = elements.into_iter().collect();
        let index: HashMap<&Vec<usize>, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for p in &elements {
            for q in &elements {
                let pq: Vec<usize> = q.iter().map(|&x| p[x]).collect();
                table.push(index[&pq]);
            }
        }
        FiniteGroup { order: n, table }
    }

    pub fn symmetric(k: usize) -> Self {
        assert!(k >= 1);
        if k == 1 {
            return Self::cyclic(1);
        }
        let mut transposition: Vec<usize> = (0..k).collect();
        transposition.swap(0, 1);
        let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
        Self::from_permutations(&[transposition, cycle])
    }

    /// Even permutations, generated by the 3-cycles `(0 1 i)`.
    pub fn alternating(k: usize) -> Self {
        if k < 3 {
            return Self::cyclic(1);
        }
        let gens: Vec<Vec<usize>> = (2..k)
            .map(|i| {
                let mut p: Vec<usize> = (0..k).collect();
                p[0] = 1;
                p[1] = i;
                p[i] = 0;
                p
            })
            .collect();
        Self::from_permutations(&gens)
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (n, m) = (a.order, b.order);
        let order = n * m;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                table.push(a.mul(x / m, y / m) * m + b.mul(x % m, y % m));
            }
        }
        FiniteGroup { order, table }
    }

    /// Multiplication table of a finite matrix group closed under products.
    pub fn from_matrices<T: Scalar>(matrices: &[Matrix<T>]) -> Result<Self> {
        let n = matrices.len();
        let id_pos = matrices
            .iter()
            .position(Matrix::is_identity)
            .ok_or(Error::NotClosed)?;
        let mut ordered: Vec<&Matrix<T>> = Vec::with_capacity(n);
        ordered.push(&matrices[id_pos]);
        ordered.extend(
            matrices
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != id_pos)
                .map(|(_, m)| m),
        );
        let index: HashMap<&Matrix<T>, usize> =
            ordered.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        if index.len() != n {
            return Err(Error::InvalidTable("duplicate matrices".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for a in &ordered {
            for b in &ordered {
                table.push(*index.get(&(*a * *b)).ok_or(Error::NotClosed)?);
            }
        }
        Ok(FiniteGroup { order: n, table })
    }
}

/// Abstract group of a closed set of graph automorphisms, indexed in the
/// group's sorted order; multiplication is composition `a ∘ b`.
pub fn group_from_maps(group: &AutGroup) -> Result<FiniteGroup> {
    let elems = group.elements();
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in elems {
        for b in elems {
            let ab = a.compose(b)?;
            table.push(group.index_of(&ab).ok_or(Error::NotClosed)?);
        }
    }
    let g = FiniteGroup { order: n, table };
    g.validate()?;
    Ok(g)
}

/// Brute-force isomorphism test: generators of `a` are sent to
/// equal-order elements of `b` and the assignment is propagated along
/// right multiplication.
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    for g in [a, b] {
        if g.order() > ISOMORPHISM_GUARD {
            return Err(Error::GroupTooLarge(g.order()));
        }
    }
    if a.order() != b.order() || a.order_profile() != b.order_profile() {
        return Ok(false);
    }
    let gens = a.generating_set();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let ord = a.element_order(s);
            (0..b.order())
                .filter(|&t| b.element_order(t) == ord)
                .collect()
        })
        .collect();
    let mut images = vec![0; gens.len()];
    Ok(search_images(a, b, &gens, &candidates, 0, &mut images))
}

fn search_images(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    images: &mut Vec<usize>,
) -> bool {
    if depth == gens.len() {
        return extends_to_isomorphism(a, b, gens, images);
    }
    for &t in &candidates[depth] {
        images[depth] = t;
        if search_images(a, b, gens, candidates, depth + 1, images) {
            return true;
        }
    }
    false
}

fn extends_to_isomorphism(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> bool {
    let n = a.order();
    let mut phi = vec![usize::MAX; n];
    phi[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = a.mul(x, s);
            let img = b.mul(phi[x], t);
            if phi[y] == usize::MAX {
                phi[y] = img;
                queue.push_back(y);
            } else if phi[y] != img {
                return false;
            }
        }
    }
    let mut hit = vec![false; n];
    phi.iter()
        .all(|&y| y != usize::MAX && !std::mem::replace(&mut hit[y], true))
}
