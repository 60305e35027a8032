//! Path counting and spectral statistics on trees with level-dependent
//! branching.
//!
//! A layered tree whose node at level k-1 branches into p_k children defines
//! a tridiagonal transfer operator: ones above the diagonal (a step down),
//! the up-step weights w_k below it. Everything in this crate grows out of
//! that operator:
//!
//! - [`pathcount`]: exact integer/rational counts Z_N(k) of N-step paths,
//!   their entropy, and watermelon bundles.
//! - [`spectral`]: characteristic polynomials (monic Hermite for the
//!   unit-slope growing tree), semicircle bulk statistics, and the Airy law
//!   at the spectral edge.
//! - [`genfunc`]: the counting series as explicit rational functions, with
//!   continued-fraction and determinant routes kept independent.
//! - [`qdyck`]: area-weighted Dyck paths, Carlitz-Riordan q-Catalan
//!   polynomials, the q-Airy ratio, and the double-scaling collapse at
//!   q -> 1.
//! - [`rmt`]: random tridiagonal matrices whose mean-square structure is
//!   the growing tree, sampled reproducibly.
//! - [`scaling`]: power-law fits for the edge shift, entropy and watermelon
//!   corrections, and the Lifshitz tail of return probabilities.
//!
//! Supporting layers: [`profile`] (weight sequences), [`poly`] (exact dense
//! polynomials), [`tridiag`] (QL eigenvalues and Sturm counts), [`airy`]
//! (Ai, Ai', zeros), [`numeric`] (log-domain helpers), [`error`].

pub mod airy;
pub mod error;
pub mod genfunc;
pub mod numeric;
pub mod pathcount;
pub mod poly;
pub mod profile;
pub mod qdyck;
pub mod rmt;
pub mod scaling;
pub mod spectral;
pub mod tridiag;

pub use error::{Error, Result};
pub use pathcount::PathCountVector;
pub use profile::{auto_profile, auto_profile_rational, BranchingProfile};
