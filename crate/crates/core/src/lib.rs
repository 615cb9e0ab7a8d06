//! Exact computations on pseudo-Riemannian Lie algebras: Levi-Civita
//! connection, curvature, Ricci operator, flatness and algebraic Ricci
//! solitons (`Ric = ηI + D` with `D` a derivation).
//!
//! All arithmetic is over exact rationals; no floating point enters any
//! decision.

pub mod error;
pub mod geometry;
pub mod lie;
pub mod matrix;
pub mod rational;
pub mod soliton;

pub use error::{Error, Result};
pub use matrix::{kernel_basis, mat_inverse, mat_mul, signature_of, solve_linear, Matrix, Signature, SolutionSet};
pub use rational::{q, Rational};
