//! Closed-form soliton criteria for the four-dimensional catalog.
//!
//! Each family carries a list of exact linear relations on the entries
//! `R_{ij}` of the Ricci operator, an expression for `η`, and a template for
//! the derivation `D`. Parameters are substituted before the relations are
//! built, so every relation is linear in `R` with rational coefficients.
//!
//! Two readings exist. [`Reading::AsPrinted`] keeps the published condition
//! lists verbatim. [`Reading::Corrected`] replaces the misprints and adds the
//! missing conditions that the Leibniz rule forces (see [`Source`]). In both
//! readings the relation `R = η·I + D_template(R)` is enforced entry by entry,
//! and any such entry not already implied by the listed relations is kept as
//! a [`Source::Template`] condition so it shows up in diagnostics.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{catalog_get, CatalogId, Family};
use crate::matrix::{kernel_basis, Matrix};
use crate::rational::Rational;

const N: usize = 4;

/// A homogeneous linear form in the 16 entries of a 4×4 matrix, indexed
/// row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinExpr(Vec<Rational>);

impl LinExpr {
    pub fn zero() -> Self {
        LinExpr(vec![Rational::zero(); N * N])
    }

    /// The entry `R_{ij}` with 1-based indices.
    pub fn entry(i: usize, j: usize) -> Self {
        let mut e = LinExpr::zero();
        e.0[(i - 1) * N + (j - 1)] = Rational::one();
        e
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn eval(&self, r: &Matrix) -> Rational {
        self.0
            .iter()
            .zip(r.entries())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, x)| c * x)
            .sum()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        LinExpr(self.0.iter().map(|c| c * s).collect())
    }
}

impl std::ops::Add for LinExpr {
    type Output = LinExpr;
    fn add(self, rhs: LinExpr) -> LinExpr {
        LinExpr(self.0.into_iter().zip(rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Sub for LinExpr {
    type Output = LinExpr;
    fn sub(self, rhs: LinExpr) -> LinExpr {
        LinExpr(self.0.into_iter().zip(rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl std::ops::Neg for LinExpr {
    type Output = LinExpr;
    fn neg(self) -> LinExpr {
        LinExpr(self.0.into_iter().map(|a| -a).collect())
    }
}

impl std::ops::Mul<LinExpr> for &Rational {
    type Output = LinExpr;
    fn mul(self, rhs: LinExpr) -> LinExpr {
        rhs.scale(self)
    }
}

impl fmt::Display for LinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (idx / N + 1, idx % N + 1);
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            write!(f, "R_{{{i}{j}}}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn r(i: usize, j: usize) -> LinExpr {
    LinExpr::entry(i, j)
}

fn z() -> LinExpr {
    LinExpr::zero()
}

/// Where a condition comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Source {
    /// A listed condition of the published statement.
    Bullet,
    /// A remark attached to the statement (parameter implications).
    Note,
    /// Forced by `R = η·I + D_template` and not implied by the listed conditions.
    Template,
    /// Added or corrected relation; only in [`Reading::Corrected`].
    Erratum,
    /// A published relation that the corrected reading replaces; only in
    /// [`Reading::AsPrinted`].
    Misprint,
}

/// Which version of the condition lists to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum Reading {
    #[default]
    Corrected,
    AsPrinted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// The form must vanish.
    Zero(LinExpr),
    /// `R_{ij} ≠ 0` is only allowed when the parameter condition holds.
    NonzeroImplies { entry: (usize, usize), param_ok: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub label: String,
    pub source: Source,
    pub relation: Relation,
}

impl Condition {
    pub fn holds(&self, r: &Matrix) -> bool {
        match &self.relation {
            Relation::Zero(e) => e.eval(r).is_zero(),
            Relation::NonzeroImplies { entry: (i, j), param_ok } => *param_ok || r[(i - 1, j - 1)].is_zero(),
        }
    }

    /// The linear equation this condition imposes at the given parameters.
    pub fn equation(&self) -> Option<LinExpr> {
        match &self.relation {
            Relation::Zero(e) => Some(e.clone()),
            Relation::NonzeroImplies { param_ok: true, .. } => None,
            Relation::NonzeroImplies { entry: (i, j), param_ok: false } => Some(r(*i, *j)),
        }
    }
}

/// The criterion of one catalog algebra at fixed parameters.
#[derive(Clone, Debug)]
pub struct TheoremPredicate {
    pub id: CatalogId,
    pub reading: Reading,
    pub conditions: Vec<Condition>,
    pub eta: LinExpr,
    /// Row-major 4×4 template for `D`.
    pub template: Vec<LinExpr>,
}

/// Verdict of a predicate on one matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateOutcome {
    pub holds: bool,
    pub eta: Option<Rational>,
    pub d: Option<Matrix>,
    pub failed_conditions: Vec<String>,
}

impl TheoremPredicate {
    pub fn evaluate(&self, r: &Matrix) -> Result<PredicateOutcome> {
        if r.rows() != N || r.cols() != N {
            return Err(Error::DimensionMismatch(format!(
                "criteria apply to 4x4 operators, got {}x{}",
                r.rows(),
                r.cols()
            )));
        }
        let failed: Vec<String> = self
            .conditions
            .iter()
            .filter(|c| !c.holds(r))
            .map(|c| c.label.clone())
            .collect();
        if !failed.is_empty() {
            return Ok(PredicateOutcome {
                holds: false,
                eta: None,
                d: None,
                failed_conditions: failed,
            });
        }
        Ok(PredicateOutcome {
            holds: true,
            eta: Some(self.eta.eval(r)),
            d: Some(self.instantiate_template(r)),
            failed_conditions: Vec::new(),
        })
    }

    pub fn instantiate_template(&self, r: &Matrix) -> Matrix {
        let data = self.template.iter().map(|e| e.eval(r)).collect();
        Matrix::from_vec(N, N, data).expect("16 entries")
    }

    /// All active linear equations as rows of an `m × 16` matrix.
    pub fn equation_matrix(&self) -> Matrix {
        equations_to_matrix(self.conditions.iter().filter_map(Condition::equation))
    }

    /// A basis of the matrices satisfying every condition.
    pub fn solution_basis(&self) -> Vec<Matrix> {
        kernel_basis(&self.equation_matrix())
            .into_iter()
            .map(|v| Matrix::from_vec(N, N, v.column(0)).expect("16 entries"))
            .collect()
    }

    /// Conditions of the given origin.
    pub fn conditions_from(&self, source: Source) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(move |c| c.source == source)
    }
}

fn equations_to_matrix(rows: impl Iterator<Item = LinExpr>) -> Matrix {
    let rows: Vec<Vec<Rational>> = rows.map(|e| e.0).collect();
    if rows.is_empty() {
        Matrix::zeros(0, N * N)
    } else {
        Matrix::from_rows(rows).expect("rectangular")
    }
}

/// Whether `e` lies in the row span of `m`.
fn implied_by(m: &Matrix, e: &LinExpr) -> bool {
    if m.rows() == 0 {
        return e.is_zero();
    }
    let extended = equations_to_matrix(m.to_rows().into_iter().map(LinExpr).chain([e.clone()]));
    extended.rank() == m.rank()
}

struct Builder {
    reading: Reading,
    conds: Vec<Condition>,
}

impl Builder {
    fn push(&mut self, source: Source, label: String, relation: Relation) {
        let skip = matches!(
            (source, self.reading),
            (Source::Erratum, Reading::AsPrinted) | (Source::Misprint, Reading::Corrected)
        );
        if !skip {
            self.conds.push(Condition { label, source, relation });
        }
    }

    fn eq_as(&mut self, source: Source, lhs: LinExpr, rhs: LinExpr) {
        let label = format!("{lhs} = {rhs}");
        self.push(source, label, Relation::Zero(lhs - rhs));
    }

    fn eq(&mut self, lhs: LinExpr, rhs: LinExpr) {
        self.eq_as(Source::Bullet, lhs, rhs);
    }

    fn zeros(&mut self, entries: &[(usize, usize)]) {
        for &(i, j) in entries {
            self.eq(r(i, j), z());
        }
    }

    fn erratum(&mut self, lhs: LinExpr, rhs: LinExpr) {
        self.eq_as(Source::Erratum, lhs, rhs);
    }

    fn misprint(&mut self, lhs: LinExpr, rhs: LinExpr) {
        self.eq_as(Source::Misprint, lhs, rhs);
    }

    fn note_zero(&mut self, entries: &[(usize, usize)]) {
        for &(i, j) in entries {
            self.eq_as(Source::Note, r(i, j), z());
        }
    }

    fn implies(&mut self, entry: (usize, usize), param_ok: bool, what: &str) {
        let label = format!("R_{{{}{}}} ≠ 0 ⟹ {what}", entry.0, entry.1);
        self.push(Source::Note, label, Relation::NonzeroImplies { entry, param_ok });
    }
}

/// `R_ii − η` on the diagonal positions of a template row list.
fn shifted(i: usize, eta: &LinExpr) -> LinExpr {
    r(i, i) - eta.clone()
}

/// Builds the criterion of `id` in the given reading.
pub fn theorem(id: &CatalogId, reading: Reading) -> Result<TheoremPredicate> {
    id.validate()?;
    use Family::*;
    let a = id.alpha();
    let b = id.beta();
    let one = Rational::one();
    let mut c = Builder {
        reading,
        conds: Vec::new(),
    };
    // Each arm fills `c` and returns (η, template rows).
    let (eta, rows): (LinExpr, [[LinExpr; 4]; 4]) = match id.family {
        FourG1 => {
            let rows = std::array::from_fn(|i| std::array::from_fn(|j| r(i + 1, j + 1)));
            (z(), rows)
        }
        G21Plus2G1 => {
            c.zeros(&[(2, 1), (3, 1), (4, 1), (1, 3), (1, 4), (2, 3), (2, 4)]);
            let e = r(2, 2);
            let rows = [
                [shifted(1, &e), r(1, 2), z(), z()],
                [z(), z(), z(), z()],
                [z(), r(3, 2), shifted(3, &e), r(3, 4)],
                [z(), r(4, 2), r(4, 3), shifted(4, &e)],
            ];
            (e, rows)
        }
        TwoG21 => {
            c.zeros(&[(2, 1), (3, 1), (4, 1)]);
            c.zeros(&[(3, 2), (4, 2), (1, 4), (2, 4)]);
            c.zeros(&[(1, 3), (2, 3), (4, 3)]);
            c.eq(r(2, 2), r(4, 4));
            let e = r(2, 2);
            let rows = [
                [shifted(1, &e), r(1, 2), z(), z()],
                [z(), z(), z(), z()],
                [z(), z(), shifted(3, &e), r(3, 4)],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
        G31PlusG1 => {
            c.zeros(&[(2, 1), (3, 1), (4, 1), (2, 4), (3, 4)]);
            let e = r(2, 2) + r(3, 3) - r(1, 1);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), r(1, 4)],
                [z(), shifted(2, &e), r(2, 3), z()],
                [z(), r(3, 2), shifted(3, &e), z()],
                [z(), r(4, 2), r(4, 3), shifted(4, &e)],
            ];
            (e, rows)
        }
        G32PlusG1 => {
            c.zeros(&[(2, 1), (3, 1), (4, 1)]);
            c.zeros(&[(3, 2), (4, 2)]);
            c.zeros(&[(1, 4), (2, 4), (3, 4)]);
            c.eq(r(2, 2), r(1, 1));
            let e = r(3, 3);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), z()],
                [z(), shifted(1, &e), r(2, 3), z()],
                [z(), z(), z(), z()],
                [z(), z(), r(4, 3), shifted(4, &e)],
            ];
            (e, rows)
        }
        G33PlusG1 => {
            c.zeros(&[(3, 1), (4, 1), (3, 2), (4, 2), (1, 4), (2, 4), (3, 4)]);
            let e = r(3, 3);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), z()],
                [r(2, 1), shifted(2, &e), r(2, 3), z()],
                [z(), z(), z(), z()],
                [z(), z(), r(4, 3), shifted(4, &e)],
            ];
            (e, rows)
        }
        G34ZeroPlusG1 | G34AlphaPlusG1 | G35ZeroPlusG1 => {
            // R_{21} = ±R_{12}: + for the g3.4 families, − for g3.5^0.
            let s = if id.family == G35ZeroPlusG1 { -&one } else { one.clone() };
            c.zeros(&[(3, 1), (4, 1), (3, 2), (4, 2)]);
            c.zeros(&[(1, 4), (2, 4), (3, 4)]);
            c.eq(r(2, 1), &s * r(1, 2));
            c.eq(r(2, 2), r(1, 1));
            let e = r(3, 3);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), z()],
                [&s * r(1, 2), shifted(1, &e), r(2, 3), z()],
                [z(), z(), z(), z()],
                [z(), z(), r(4, 3), shifted(4, &e)],
            ];
            (e, rows)
        }
        G35AlphaPlusG1 => {
            c.zeros(&[(3, 1), (3, 2), (1, 4), (2, 4), (3, 4)]);
            c.eq(r(2, 1), -r(1, 2));
            c.eq(r(4, 2), &a * r(4, 1));
            c.eq(r(2, 2), r(1, 1));
            c.implies((4, 1), a == one, "α = 1");
            // The e4-components of the Leibniz rule give R_{41} = αR_{42} and
            // R_{42} = -αR_{41}, so R_{41} = 0 for every α > 0.
            c.erratum(r(4, 1), z());
            let e = r(3, 3);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), z()],
                [-r(1, 2), shifted(1, &e), r(2, 3), z()],
                [z(), z(), z(), z()],
                [r(4, 1), &a * r(4, 1), r(4, 3), shifted(4, &e)],
            ];
            (e, rows)
        }
        G36PlusG1 | G37PlusG1 => {
            // g3.6 has the symmetric lower block, g3.7 the skew one.
            let s = if id.family == G36PlusG1 { one.clone() } else { -&one };
            c.zeros(&[(1, 4), (2, 4), (3, 4), (4, 1), (4, 2), (4, 3)]);
            c.eq(r(2, 1), -r(1, 2));
            c.eq(r(3, 1), &s * r(1, 3));
            c.eq(r(3, 2), &s * r(2, 3));
            c.eq(r(3, 3), r(2, 2));
            c.eq(r(2, 2), r(1, 1));
            let e = r(1, 1);
            let rows = [
                [z(), r(1, 2), r(1, 3), z()],
                [-r(1, 2), z(), r(2, 3), z()],
                [&s * r(1, 3), &s * r(2, 3), z(), z()],
                [z(), z(), z(), shifted(4, &e)],
            ];
            (e, rows)
        }
        G41 => {
            c.zeros(&[(2, 1), (3, 1), (4, 1)]);
            c.zeros(&[(3, 2), (4, 2), (4, 3)]);
            c.eq(r(2, 3), r(1, 2));
            c.eq(r(2, 2) + r(4, 4) - r(1, 1), r(3, 3) + r(4, 4) - r(2, 2));
            let e = r(2, 2) + r(4, 4) - r(1, 1);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), r(1, 4)],
                [z(), shifted(2, &e), r(1, 2), r(2, 4)],
                [z(), z(), shifted(3, &e), r(3, 4)],
                [z(), z(), z(), shifted(4, &e)],
            ];
            (e, rows)
        }
        G42Alpha => {
            c.zeros(&[(3, 2), (4, 1), (4, 2), (4, 3)]);
            c.eq(r(2, 1) + r(3, 1), &a * r(2, 1));
            c.eq(r(1, 2), &a * r(1, 2));
            c.eq(r(3, 3), r(2, 2));
            c.eq(r(3, 1), &a * r(3, 1));
            c.eq(r(1, 2) + r(1, 3), &a * r(1, 3));
            c.implies((3, 1), a == one, "α = 1");
            c.implies((1, 2), a == one, "α = 1");
            c.note_zero(&[(3, 1), (1, 2)]);
            let e = r(4, 4);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), r(1, 4)],
                [r(2, 1), shifted(2, &e), r(2, 3), r(2, 4)],
                [r(3, 1), z(), shifted(2, &e), r(3, 4)],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
        G43 => {
            c.zeros(&[(2, 1), (3, 1), (4, 1)]);
            c.zeros(&[(3, 2), (4, 2), (4, 3)]);
            c.zeros(&[(1, 3), (1, 2)]);
            c.eq(r(3, 3), r(2, 2));
            let e = r(4, 4);
            let rows = [
                [shifted(1, &e), z(), z(), r(1, 4)],
                [z(), shifted(2, &e), r(2, 3), r(2, 4)],
                [z(), z(), shifted(2, &e), r(3, 4)],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
        G44 => {
            c.zeros(&[(2, 1), (3, 1), (4, 1)]);
            c.zeros(&[(3, 2), (4, 2), (4, 3)]);
            c.eq(r(2, 3), r(1, 2));
            c.eq(r(3, 3), r(2, 2));
            c.eq(r(2, 2), r(1, 1));
            let e = r(4, 4);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), r(1, 4)],
                [z(), shifted(1, &e), r(1, 2), r(2, 4)],
                [z(), z(), shifted(1, &e), r(3, 4)],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
        G45AlphaBeta => {
            c.zeros(&[(4, 1), (4, 2), (4, 3)]);
            c.eq(r(2, 1), &b * r(2, 1));
            c.eq(r(3, 1), &a * r(3, 1));
            c.eq(r(1, 2), &b * r(1, 2));
            c.eq(&a * r(3, 2), &b * r(3, 2));
            c.eq(r(1, 3), &a * r(1, 3));
            c.eq(&b * r(2, 3), &a * r(2, 3));
            c.implies((2, 1), b == one, "β = 1");
            c.implies((3, 1), a == one, "α = 1");
            c.implies((1, 2), b == one, "β = 1");
            c.implies((3, 2), a == b, "α = β");
            c.implies((1, 3), a == one, "α = 1");
            c.implies((2, 3), a == b, "α = β");
            let e = r(4, 4);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), r(1, 4)],
                [r(2, 1), shifted(2, &e), r(2, 3), r(2, 4)],
                [r(3, 1), r(3, 2), shifted(3, &e), r(3, 4)],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
        G46AlphaBeta => {
            c.zeros(&[(4, 1), (4, 2), (4, 3)]);
            c.eq(r(3, 3), r(2, 2));
            c.eq(r(3, 2), -r(2, 3));
            c.eq(&b * r(2, 1) + r(3, 1), &a * r(2, 1));
            c.eq(-r(2, 1) + &b * r(3, 1), &a * r(3, 1));
            c.eq(&a * r(1, 2), &b * r(1, 2) - r(1, 3));
            c.eq(&a * r(1, 3), r(1, 2) + &b * r(1, 3));
            if b.is_zero() {
                c.note_zero(&[(1, 3), (1, 2), (2, 1), (3, 1)]);
            }
            let e = r(4, 4);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), r(1, 4)],
                [r(2, 1), shifted(2, &e), r(2, 3), r(2, 4)],
                [r(3, 1), -r(2, 3), shifted(2, &e), r(3, 4)],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
        G47 => {
            c.zeros(&[(2, 1), (3, 1), (4, 1)]);
            c.zeros(&[(3, 2), (4, 2), (4, 3)]);
            c.eq(r(3, 4), -r(1, 2));
            c.eq(r(2, 4), r(1, 3) - r(1, 2));
            c.eq(r(3, 3), r(2, 2));
            c.eq(r(4, 4), r(2, 2) + r(3, 3) - r(1, 1));
            let e = r(4, 4);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), r(1, 4)],
                [z(), shifted(2, &e), r(2, 3), r(1, 3) - r(1, 2)],
                [z(), z(), shifted(2, &e), -r(1, 2)],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
        G48MinusOne => {
            c.zeros(&[(2, 1), (3, 1), (4, 1)]);
            c.zeros(&[(3, 2), (2, 3), (4, 2), (4, 3)]);
            c.eq(r(4, 4), r(2, 2) + r(3, 3) - r(1, 1));
            let e = r(4, 4);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), r(1, 4)],
                [z(), shifted(2, &e), z(), r(1, 3)],
                [z(), z(), shifted(3, &e), r(1, 2)],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
        G48Alpha => {
            c.zeros(&[(2, 1), (3, 1), (4, 1)]);
            c.eq(r(3, 4), -(&a * r(1, 2)));
            c.eq(&a * r(3, 2), r(3, 2));
            c.zeros(&[(4, 2), (4, 3)]);
            c.eq(r(2, 4), r(1, 3));
            c.eq(&a * r(2, 3), r(2, 3));
            c.eq(r(4, 4), r(2, 2) + r(3, 3) - r(1, 1));
            c.implies((2, 3), a == one, "α = 1");
            c.implies((3, 2), a == one, "α = 1");
            let e = r(4, 4);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), r(1, 4)],
                [z(), shifted(2, &e), r(2, 3), r(1, 3)],
                [z(), r(3, 2), shifted(3, &e), -(&a * r(1, 2))],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
        G49Zero => {
            c.zeros(&[(2, 1), (3, 1), (4, 1)]);
            c.zeros(&[(4, 2), (4, 3)]);
            c.eq(r(3, 4), -r(1, 3));
            c.misprint(r(3, 2), -r(3, 2));
            c.erratum(r(3, 2), -r(2, 3));
            c.eq(r(2, 4), -r(1, 2));
            c.eq(r(4, 4), r(2, 2) + r(3, 3) - r(1, 1));
            c.erratum(r(2, 2), r(3, 3));
            let e = r(4, 4);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), r(1, 4)],
                [z(), shifted(2, &e), r(2, 3), -r(1, 2)],
                [z(), -r(2, 3), shifted(3, &e), -r(1, 3)],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
        G49Alpha => {
            c.zeros(&[(2, 1), (3, 1), (4, 1)]);
            c.zeros(&[(4, 2), (4, 3)]);
            c.eq(r(3, 4), -(&a * r(1, 2)) - r(1, 3));
            c.misprint(r(3, 2), -r(3, 2));
            c.erratum(r(3, 2), -r(2, 3));
            c.eq(r(2, 2), r(3, 3));
            c.eq(r(2, 4), -r(1, 2) + &a * r(1, 3));
            c.eq(r(4, 4), r(2, 2) + r(3, 3) - r(1, 1));
            let e = r(4, 4);
            let rows = [
                [shifted(1, &e), r(1, 2), r(1, 3), r(1, 4)],
                [z(), shifted(2, &e), r(2, 3), -r(1, 2) + &a * r(1, 3)],
                [z(), -r(2, 3), shifted(2, &e), -(&a * r(1, 2)) - r(1, 3)],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
        G410 => {
            c.zeros(&[(3, 1), (4, 1), (3, 2)]);
            c.zeros(&[(4, 2), (4, 3), (3, 4)]);
            c.eq(r(3, 3), r(4, 4));
            c.eq(r(2, 2), r(1, 1));
            c.eq(r(2, 1), -r(1, 2));
            c.eq(r(1, 4), r(2, 3));
            c.eq(r(2, 4), -r(1, 3));
            let e = r(4, 4);
            let rows = [
                [shifted(1, &r(3, 3)), r(1, 2), r(1, 3), r(2, 3)],
                [-r(1, 2), shifted(1, &r(3, 3)), r(2, 3), -r(1, 3)],
                [z(), z(), z(), z()],
                [z(), z(), z(), z()],
            ];
            (e, rows)
        }
    };
    let template: Vec<LinExpr> = rows.into_iter().flatten().collect();

    // Entries of R = η·I + D that the listed relations do not already force.
    let listed = equations_to_matrix(c.conds.iter().filter_map(Condition::equation));
    let mut extra = Vec::new();
    for (idx, t) in template.iter().enumerate() {
        let (i, j) = (idx / N + 1, idx % N + 1);
        let mut rhs = t.clone();
        if i == j {
            rhs = rhs + eta.clone();
        }
        let gap = r(i, j) - rhs.clone();
        if !gap.is_zero() && !implied_by(&listed, &gap) {
            extra.push(Condition {
                label: format!("R_{{{i}{j}}} = {rhs} (from the form of D)"),
                source: Source::Template,
                relation: Relation::Zero(gap),
            });
        }
    }
    c.conds.extend(extra);

    Ok(TheoremPredicate {
        id: id.clone(),
        reading,
        conditions: c.conds,
        eta,
        template,
    })
}

/// Evaluates the corrected criterion of `id` on `r`.
pub fn theorem_predicate(id: &CatalogId, r: &Matrix) -> Result<PredicateOutcome> {
    theorem(id, Reading::Corrected)?.evaluate(r)
}

/// Instantiates the derivation template and checks the Leibniz rule on all
/// basis pairs.
pub fn predicted_derivation_is_derivation(id: &CatalogId, r: &Matrix) -> Result<bool> {
    let outcome = theorem_predicate(id, r)?;
    let d = match outcome.d {
        Some(d) if outcome.holds => d,
        _ => return Err(Error::PredicateNotSatisfied(outcome.failed_conditions.join("; "))),
    };
    Ok(catalog_get(id)?.is_derivation(&d))
}
