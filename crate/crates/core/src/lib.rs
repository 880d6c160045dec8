//! Spectral gaps of weighted Laplacians on the hyperoctahedral group B_n.
//!
//! The group ring element `w = Σ a_{ij} (ij) + Σ α_A s_A` defines a
//! continuous-time random walk on B_n whose spectral gap is the smallest
//! eigenvalue of `Δ(w) = Σ w_s (1 − s)` over all nontrivial irreducible
//! representations. This crate builds every irrep of B_n explicitly, computes
//! `ψ(w, σ)` per irrep, and checks the reduction of the gap to the family
//! `F_n = {([n−1,1],∅)} ∪ {([n−k],[k]) : 1 ≤ k ≤ n}`.

pub mod constructions;
pub mod eigen;
pub mod error;
pub mod group;
pub mod partitions;
pub mod report;
pub mod reps;
pub mod spectral;
pub mod weightfile;

pub use error::{Error, Result};
pub use group::{build_weight_element, GroupRingElement, SignedPermutation, SubsetMask};
pub use partitions::{Bipartition, Partition};
pub use reps::BnRepresentation;
pub use constructions::{witness_std, witness_vnk, VerificationReport, WitnessSpec};
pub use spectral::{psi_family, psi_global, psi_irrep, psi_pn, GapValue};
