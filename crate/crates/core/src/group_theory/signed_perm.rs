//! The hyperoctahedral group of signed permutation matrices.

use itertools::Itertools;

use super::finite_group::FiniteGroup;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::IntMatrix;

/// Largest order for which [`SignedPermutationGroup::table`] builds a
/// multiplication table.
pub const TABLE_LIMIT: usize = 400;

#[derive(Clone, Debug)]
pub struct SignedPermutationGroup {
    pub dimension: usize,
    /// Identity first, the rest sorted.
    pub matrices: Vec<IntMatrix>,
}

impl SignedPermutationGroup {
    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn table(&self) -> Result<FiniteGroup> {
        if self.order() > TABLE_LIMIT {
            return Err(Error::GroupTooLarge(self.order()));
        }
        FiniteGroup::from_matrices(&self.matrices)
    }
}

/// All `g × g` matrices with one `±1` per row and column; order `2^g g!`.
pub fn signed_permutation_group(g: usize) -> Result<SignedPermutationGroup> {
    if !(1..=6).contains(&g) {
        return Err(Error::OutOfRange(format!("dimension {g} not in 1..=6")));
    }
    let mut matrices = Vec::new();
    for perm in (0..g).permutations(g) {
        for signs in 0..(1u32 << g) {
            let mut m = Matrix::zeros(g, g);
            for (col, &row) in perm.iter().enumerate() {
                m[(row, col)] = if (signs >> col) & 1 == 1 { -1 } else { 1 };
            }
            matrices.push(m);
        }
    }
    matrices.sort();
    let id = matrices
        .iter()
        .position(Matrix::is_identity)
        .expect("identity present");
    let identity = matrices.remove(id);
    matrices.insert(0, identity);
    Ok(SignedPermutationGroup {
        dimension: g,
        matrices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_theory::{classify_so3, is_isomorphic, SO3Class};

    #[test]
    fn orders() {
        let g1 = signed_permutation_group(1).unwrap();
        assert_eq!(g1.order(), 2);
        assert!(g1.matrices.contains(&IntMatrix::from_i64_rows(&[&[1]])));
        assert!(g1.matrices.contains(&IntMatrix::from_i64_rows(&[&[-1]])));
        assert_eq!(signed_permutation_group(2).unwrap().order(), 8);
        assert_eq!(signed_permutation_group(3).unwrap().order(), 48);
        assert_eq!(signed_permutation_group(6).unwrap().order(), 46080);
        assert!(signed_permutation_group(0).is_err());
        assert!(signed_permutation_group(7).is_err());
    }

    #[test]
    fn tables() {
        let g2 = signed_permutation_group(2).unwrap().table().unwrap();
        assert_eq!(classify_so3(&g2), SO3Class::Dihedral(8));
        assert!(is_isomorphic(&g2, &FiniteGroup::dihedral(8)).unwrap());
        assert_eq!(
            signed_permutation_group(4)
                .unwrap()
                .table()
                .unwrap()
                .order(),
            384
        );
        assert_eq!(
            signed_permutation_group(5).unwrap().table(),
            Err(Error::GroupTooLarge(3840))
        );
    }
}
