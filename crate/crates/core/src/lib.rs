//! Finite group actions on finite multigraphs and their integer homology
//! representations.
//!
//! The crate builds, in exact integer arithmetic:
//!
//! - dart-based multigraphs with Euler characteristic, genus, free edges
//!   and barycentric subdivision ([`graph`]);
//! - full dart-level automorphism groups, edge inversions and fixed
//!   subgraphs ([`automorphism`]);
//! - fundamental cycle bases, the induced matrices in `GL(g, ℤ)`,
//!   Lefschetz numbers, the Hopf trace check and the faithfulness verdict
//!   ([`homology`]);
//! - finite groups by multiplication table, recognition of the finite
//!   rotation groups, torsion in `GL(2, ℤ)` ([`group_theory`]);
//! - exhaustive enumeration of small multigraphs without free edges and a
//!   batch verifier ([`enumeration`]).
//!
//! Matrix code is generic over the integer ring through [`Scalar`]; the
//! aliases below fix the width used throughout the public API.

pub mod automorphism;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod group_theory;
pub mod homology;
pub mod matrix;
pub mod scalar;

pub use automorphism::{
    automorphism_group, automorphism_group_capped, closure, AutGroup, GraphMap,
};
pub use error::{Error, Result};
pub use graph::{Graph, Subdivision, Subgraph};
pub use homology::{
    basis_change_conjugacy, hopf_check, proposition_verdict, spanning_tree, spanning_tree_greedy,
    subdivision_conjugacy, CycleBasis, HopfCheck, PropositionVerdict,
};
pub use matrix::Matrix;
pub use scalar::Scalar;

/// Homology matrices: `g × g` over `i64`.
pub type IntMatrix = Matrix<i64>;
/// Wide variant for products that could overflow `i64`.
pub type WideMatrix = Matrix<i128>;
