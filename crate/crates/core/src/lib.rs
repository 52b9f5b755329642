//! Maximal lattice-free simplices, test sets of perturbed integer programs
//! and Frobenius numbers, all in exact integer arithmetic.

mod completion;
pub mod enumerate;
pub mod error;
pub mod frobenius;
pub mod hnf;
pub mod int;
pub mod mlfb;
pub mod polyhedra;
pub mod testset;

pub use enumerate::{PointEnumerator, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use frobenius::{
    frobenius_brauer_shockley, frobenius_by_mlfb, frobenius_naive, frobenius_ss3, representable, special_basis_3,
    ss3_reduce, FrobeniusInstance, SpecialBasis, Ss3Outcome, Ss3State,
};
pub use hnf::{hnf, kernel_lattice_basis};
pub use int::{IntMat, IntVec};
pub use mlfb::{compute_mlfb, enumerate_candidates, filter_maximal, Body, Geometry, MlfbResult};
pub use polyhedra::{body_rhs, lex_sign, max_vectors, SimplicialData};
pub use testset::{brute_force_test_set, compute_test_set, ip_solve, transform_test_set, TestSet, TestVector};
