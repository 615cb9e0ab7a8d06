//! Dense exact matrices over [`Rational`] and the linear algebra built on them.
//!
//! Elimination always takes the first nonzero entry as pivot. With exact
//! arithmetic pivot size does not matter, and a fixed rule keeps outputs
//! deterministic.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Counts of positive and negative squares of a nondegenerate symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub positives: usize,
    pub negatives: usize,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.positives, self.negatives)
    }
}

/// Full solution set of `a·x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionSet {
    Inconsistent,
    /// Every solution is `particular + N·t` where the columns of `N` are the
    /// `nullspace` vectors (one `t` per column of `b`).
    Solutions {
        particular: Matrix,
        nullspace: Vec<Matrix>,
    },
}

impl SolutionSet {
    pub fn is_consistent(&self) -> bool {
        matches!(self, SolutionSet::Solutions { .. })
    }
}

/// Row-reduced echelon form together with the pivot column of each nonzero row.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from nested rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {ncols}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let data = rows.into_iter().flatten().collect();
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Integer convenience constructor. Panics on ragged input.
    pub fn from_i64<const C: usize>(rows: &[[i64; C]]) -> Self {
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Rational::from_int(x)))
            .collect();
        Matrix {
            rows: rows.len(),
            cols: C,
            data,
        }
    }

    pub fn column_vector(entries: Vec<Rational>) -> Self {
        let rows = entries.len();
        Matrix {
            rows,
            cols: 1,
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// First `(i, j)` with `i > j` where `m[i][j] != m[j][i]`, 0-based.
    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != self[(j, i)])
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| &self[(i, i)])
            .sum()
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn check_same_shape(&self, other: &Matrix, op: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{op} of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "sum")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "difference")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// Exact matrix product.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · v` for a coordinate vector.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Reduced row echelon form, first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let d = &f * &m[(r, j)];
                    m[(i, j)] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of {}x{}",
                self.rows, self.cols
            )));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &pivot;
                for j in c..n {
                    let d = &f * &m[(c, j)];
                    m[(i, j)] -= d;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse; `Error::Singular` when the determinant vanishes.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse of {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n))?;
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = matrix[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut out = Matrix::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Coefficients `c_0..c_n` of `det(λI − A) = Σ c_k λ^k` (Faddeev–LeVerrier).
    pub fn characteristic_polynomial(&self) -> Result<Vec<Rational>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("characteristic polynomial".into()));
        }
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m)?;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            m = next;
            let am = self.mul(&m)?;
            coeffs[n - k] = -(am.trace() / Rational::from_int(k as i64));
        }
        Ok(coeffs)
    }

    /// Stacks the entries row by row into a single column.
    pub fn vectorize(&self) -> Vec<Rational> {
        self.data.clone()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{:?}", self.to_rows())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.mul(b)
}

pub fn mat_inverse(a: &Matrix) -> Result<Matrix> {
    a.inverse()
}

/// Solves `a·x = b`, returning either `Inconsistent` or a particular solution
/// with a basis of the kernel of `a`.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<SolutionSet> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "system with {} equations but right-hand side of {} rows",
            a.rows, b.rows
        )));
    }
    let n = a.cols;
    let Rref { matrix, pivots } = a.hstack(b)?.rref();
    if pivots.last().is_some_and(|&p| p >= n) {
        return Ok(SolutionSet::Inconsistent);
    }
    let mut particular = Matrix::zeros(n, b.cols);
    for (r, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            particular[(p, j)] = matrix[(r, n + j)].clone();
        }
    }
    Ok(SolutionSet::Solutions {
        particular,
        nullspace: kernel_from_rref(&matrix, &pivots, n),
    })
}

/// Exact basis of `{x : a·x = 0}`, one column matrix per free variable.
pub fn kernel_basis(a: &Matrix) -> Vec<Matrix> {
    let Rref { matrix, pivots } = a.rref();
    kernel_from_rref(&matrix, &pivots, a.cols)
}

fn kernel_from_rref(rref: &Matrix, pivots: &[usize], n: usize) -> Vec<Matrix> {
    let free = (0..n).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut x = vec![Rational::zero(); n];
        x[f] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = -&rref[(r, f)];
        }
        Matrix::column_vector(x)
    })
    .collect()
}

/// Signature of a nondegenerate symmetric form by exact congruence
/// diagonalization.
///
/// When the current diagonal pivot is zero, a later nonzero diagonal entry is
/// swapped in; if every remaining diagonal entry is zero but some `g[k][j]`
/// is not, the congruence `e_k ← e_k + e_j` produces the pivot `2·g[k][j]`.
pub fn signature_of(g: &Matrix) -> Result<Signature> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "signature of {}x{}",
            g.rows, g.cols
        )));
    }
    if let Some((i, j)) = g.first_asymmetry() {
        return Err(Error::NotSymmetric { row: i + 1, col: j + 1 });
    }
    let n = g.rows;
    let mut m = g.clone();
    let mut sig = Signature {
        positives: 0,
        negatives: 0,
    };
    for k in 0..n {
        if m[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                m.swap_rows(k, j);
                m.swap_cols(k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                for c in 0..n {
                    let v = m[(j, c)].clone();
                    m[(k, c)] += v;
                }
                for r in 0..n {
                    let v = m[(r, j)].clone();
                    m[(r, k)] += v;
                }
            } else {
                return Err(Error::Degenerate {
                    rank: g.rank(),
                    dim: n,
                });
            }
        }
        let pivot = m[(k, k)].clone();
        for i in k + 1..n {
            if m[(i, k)].is_zero() {
                continue;
            }
            let f = &m[(i, k)] / &pivot;
            for c in k..n {
                let d = &f * &m[(k, c)];
                m[(i, c)] -= d;
            }
            for r in k..n {
                let d = &f * &m[(r, k)];
                m[(r, i)] -= d;
            }
        }
        if pivot.is_positive() {
            sig.positives += 1;
        } else {
            sig.negatives += 1;
        }
    }
    Ok(sig)
}
