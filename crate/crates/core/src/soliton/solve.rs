use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{DerivationSpace, LieAlgebra};
use crate::matrix::{solve_linear, Matrix, SolutionSet};
use crate::rational::Rational;

/// Outcome of testing `Ric = η·I + D` with `D ∈ Der(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum SolitonResult {
    NotSoliton,
    Soliton { eta: Rational, d: Matrix },
    /// `I ∈ Der(g)`, so `D = ricci_op − η·I` is a derivation for every `η`.
    EveryEta { ricci_op: Matrix },
}

impl SolitonResult {
    pub fn is_soliton(&self) -> bool {
        !matches!(self, SolitonResult::NotSoliton)
    }

    pub fn verdict_name(&self) -> &'static str {
        match self {
            SolitonResult::NotSoliton => "NotSoliton",
            SolitonResult::Soliton { .. } => "Soliton",
            SolitonResult::EveryEta { .. } => "EveryEta",
        }
    }

    /// The unique `η`, when there is one.
    pub fn eta(&self) -> Option<&Rational> {
        match self {
            SolitonResult::Soliton { eta, .. } => Some(eta),
            _ => None,
        }
    }

    /// Whether `eta` is an admissible soliton constant for this result.
    pub fn admits_eta(&self, eta: &Rational) -> bool {
        match self {
            SolitonResult::NotSoliton => false,
            SolitonResult::Soliton { eta: e, .. } => e == eta,
            SolitonResult::EveryEta { .. } => true,
        }
    }
}

/// Soliton test for one algebra with its derivation algebra computed once.
///
/// The unknowns are `(η, c_1, …, c_m)` in `vec(Ric) = η·vec(I) + Σ c_k vec(B_k)`
/// where `B_k` is a basis of `Der(g)`.
#[derive(Clone, Debug)]
pub struct SolitonSolver {
    algebra: LieAlgebra,
    der: DerivationSpace,
    system: Matrix,
    identity_is_derivation: bool,
}

impl SolitonSolver {
    pub fn new(algebra: &LieAlgebra) -> Self {
        let n = algebra.dim();
        let der = algebra.derivation_basis();
        let id = Matrix::column_vector(Matrix::identity(n).vectorize());
        let system = id.hstack(&der.as_columns()).expect("same row count");
        let identity_is_derivation = der.contains(&Matrix::identity(n));
        SolitonSolver {
            algebra: algebra.clone(),
            der,
            system,
            identity_is_derivation,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn derivations(&self) -> &DerivationSpace {
        &self.der
    }

    pub fn solve(&self, ricci_op: &Matrix) -> Result<SolitonResult> {
        let n = self.algebra.dim();
        if ricci_op.rows() != n || ricci_op.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} operator on a {n}-dimensional algebra",
                ricci_op.rows(),
                ricci_op.cols()
            )));
        }
        let rhs = Matrix::column_vector(ricci_op.vectorize());
        match solve_linear(&self.system, &rhs)? {
            SolutionSet::Inconsistent => Ok(SolitonResult::NotSoliton),
            SolutionSet::Solutions { .. } if self.identity_is_derivation => Ok(SolitonResult::EveryEta {
                ricci_op: ricci_op.clone(),
            }),
            SolutionSet::Solutions { particular, .. } => {
                let eta = particular[(0, 0)].clone();
                let d = ricci_op.sub(&Matrix::identity(n).scale(&eta))?;
                debug_assert!(self.der.contains(&d));
                Ok(SolitonResult::Soliton { eta, d })
            }
        }
    }

    /// Dimension of the `η` solution space when consistent: 0 means unique.
    pub fn eta_freedom(&self) -> usize {
        usize::from(self.identity_is_derivation)
    }

    /// Exact check that a `Soliton` result decomposes `ricci_op`.
    pub fn decomposition_is_exact(&self, ricci_op: &Matrix, result: &SolitonResult) -> bool {
        match result {
            SolitonResult::NotSoliton => true,
            SolitonResult::Soliton { eta, d } => {
                let n = self.algebra.dim();
                Matrix::identity(n).scale(eta).add(d).as_ref() == Ok(ricci_op) && self.der.contains(d)
            }
            SolitonResult::EveryEta { ricci_op: r } => r == ricci_op && self.der.contains(r),
        }
    }
}

/// One-shot soliton test; use [`SolitonSolver`] to amortize `Der(g)`.
pub fn soliton_solve(g: &LieAlgebra, ricci_op: &Matrix) -> Result<SolitonResult> {
    SolitonSolver::new(g).solve(ricci_op)
}
