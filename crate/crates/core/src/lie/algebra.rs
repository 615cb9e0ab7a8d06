//! Lie algebras given by structure constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{kernel_basis, solve_linear, Matrix};
use crate::rational::Rational;

/// A finite-dimensional Lie algebra in a fixed basis `e_1..e_n`.
///
/// Only the brackets `[e_i, e_j]` with `i < j` are stored; the others follow
/// from antisymmetry. Indices are 0-based in the API and 1-based in every
/// user-facing text or file.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    name: Option<String>,
    /// `brackets[pair_index(i, j)]` holds the coordinates of `[e_i, e_j]`.
    brackets: Vec<Vec<Rational>>,
}

/// A single Jacobi failure: the cyclic sum for basis triple `(i, j, k)`
/// (1-based) and its nonzero value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobiReport {
    Ok,
    Failures(Vec<JacobiFailure>),
}

impl JacobiReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, JacobiReport::Ok)
    }
}

/// A basis of the derivation algebra `Der(g)`, as `n×n` matrices acting on
/// basis coordinates (column `j` is `D(e_j)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub basis: Vec<Matrix>,
    pub n: usize,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `n² × dim` matrix whose columns are the vectorized basis elements.
    pub fn as_columns(&self) -> Matrix {
        let n2 = self.n * self.n;
        let mut m = Matrix::zeros(n2, self.basis.len());
        for (c, b) in self.basis.iter().enumerate() {
            for (r, x) in b.entries().iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    /// Exact membership of `d` in the span of the basis.
    pub fn contains(&self, d: &Matrix) -> bool {
        if d.rows() != self.n || d.cols() != self.n {
            return false;
        }
        let rhs = Matrix::column_vector(d.vectorize());
        solve_linear(&self.as_columns(), &rhs)
            .map(|s| s.is_consistent())
            .unwrap_or(false)
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// The abelian algebra of dimension `n`.
    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            dim: n,
            name: None,
            brackets: vec![vec![Rational::zero(); n]; n * n.saturating_sub(1) / 2],
        }
    }

    /// Builds an algebra from `[e_i, e_j] = Σ_k coeffs[k] e_k` entries
    /// (0-based, `i < j`). The Jacobi identity is *not* checked here; see
    /// [`LieAlgebra::new`] and [`LieAlgebra::jacobi_check`].
    pub fn from_brackets<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    {
        let mut g = LieAlgebra::abelian(dim);
        let mut seen = vec![false; g.brackets.len()];
        for (i, j, coeffs) in entries {
            if i >= j {
                return Err(Error::InvalidStructure(format!(
                    "bracket [e{}, e{}] must have i < j",
                    i + 1,
                    j + 1
                )));
            }
            if j >= dim {
                return Err(Error::InvalidStructure(format!(
                    "bracket [e{}, e{}] out of range for dimension {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if coeffs.len() != dim {
                return Err(Error::InvalidStructure(format!(
                    "bracket [e{}, e{}] has {} coefficients, expected {dim}",
                    i + 1,
                    j + 1,
                    coeffs.len()
                )));
            }
            let p = pair_index(dim, i, j);
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidStructure(format!(
                    "bracket [e{}, e{}] given twice",
                    i + 1,
                    j + 1
                )));
            }
            g.brackets[p] = coeffs;
        }
        Ok(g)
    }

    /// Like [`LieAlgebra::from_brackets`] but rejects structure constants
    /// that violate the Jacobi identity.
    pub fn new<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    {
        let g = Self::from_brackets(dim, entries)?;
        match g.jacobi_check() {
            JacobiReport::Ok => Ok(g),
            JacobiReport::Failures(f) => {
                let (i, j, k) = f[0].triple;
                Err(Error::Jacobi(i, j, k))
            }
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.brackets[pair_index(self.dim, i, j)][k].clone(),
            Greater => -&self.brackets[pair_index(self.dim, j, i)][k],
            Equal => Rational::zero(),
        }
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.brackets[pair_index(self.dim, i, j)].clone(),
            Greater => self.brackets[pair_index(self.dim, j, i)]
                .iter()
                .map(|x| -x)
                .collect(),
            Equal => vec![Rational::zero(); self.dim],
        }
    }

    /// Nonzero brackets `(i, j, [e_i, e_j])` with `i < j`, in lexicographic order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[Rational])> + '_ {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.brackets[pair_index(n, i, j)].as_slice()))
            .filter(|(_, _, v)| v.iter().any(|x| !x.is_zero()))
    }

    /// Equal structure constants, ignoring the name.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.brackets == other.brackets
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().flatten().all(Rational::is_zero)
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim;
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of length {} and {} in dimension {n}",
                x.len(),
                y.len()
            )));
        }
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            for j in i + 1..n {
                // x_i y_j − x_j y_i multiplies [e_i, e_j]
                let w = &x[i] * &y[j] - &x[j] * &y[i];
                if w.is_zero() {
                    continue;
                }
                for (o, c) in out.iter_mut().zip(&self.brackets[pair_index(n, i, j)]) {
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(e_i) = [e_i, ·]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m[(k, j)] = self.structure_constant(i, j, k);
            }
        }
        m
    }

    /// Evaluates the cyclic Jacobi sum on every basis triple `i < j < k`.
    pub fn jacobi_check(&self) -> JacobiReport {
        let n = self.dim;
        let mut failures = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let residual = self.jacobi_residual(i, j, k);
                    if residual.iter().any(|x| !x.is_zero()) {
                        failures.push(JacobiFailure {
                            triple: (i + 1, j + 1, k + 1),
                            residual,
                        });
                    }
                }
            }
        }
        if failures.is_empty() {
            JacobiReport::Ok
        } else {
            JacobiReport::Failures(failures)
        }
    }

    fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let n = self.dim;
        let unit = |a: usize| {
            let mut v = vec![Rational::zero(); n];
            v[a] = Rational::one();
            v
        };
        let term = |a: usize, b: usize, c: usize| {
            self.bracket(&self.bracket_basis(a, b), &unit(c))
                .expect("dimensions agree")
        };
        let mut r = term(i, j, k);
        for (x, y) in r.iter_mut().zip(term(j, k, i)) {
            *x += y;
        }
        for (x, y) in r.iter_mut().zip(term(k, i, j)) {
            *x += y;
        }
        r
    }

    /// The linear map `D ↦ (D[e_i,e_j] − [De_i,e_j] − [e_i,De_j])_{i<j}` as a
    /// matrix with `n · n(n−1)/2` rows and `n²` columns. The unknown `D` is
    /// vectorized row-major: column `a·n + b` holds `D[a][b]`.
    pub fn derivation_constraints(&self) -> Matrix {
        let n = self.dim;
        let pairs = n * n.saturating_sub(1) / 2;
        let mut m = Matrix::zeros(pairs * n, n * n);
        let var = |a: usize, b: usize| a * n + b;
        for i in 0..n {
            for j in i + 1..n {
                let p = pair_index(n, i, j);
                for k in 0..n {
                    let row = p * n + k;
                    for mm in 0..n {
                        // D[e_i,e_j]: Σ_m c_ij^m D[k][m]
                        let c = self.structure_constant(i, j, mm);
                        if !c.is_zero() {
                            m[(row, var(k, mm))] += &c;
                        }
                        // [De_i, e_j]: Σ_m D[m][i] c_mj^k
                        let c = self.structure_constant(mm, j, k);
                        if !c.is_zero() {
                            m[(row, var(mm, i))] -= &c;
                        }
                        // [e_i, De_j]: Σ_m D[m][j] c_im^k
                        let c = self.structure_constant(i, mm, k);
                        if !c.is_zero() {
                            m[(row, var(mm, j))] -= &c;
                        }
                    }
                }
            }
        }
        m
    }

    /// Exact basis of `Der(g)`.
    pub fn derivation_basis(&self) -> DerivationSpace {
        let n = self.dim;
        let basis = kernel_basis(&self.derivation_constraints())
            .into_iter()
            .map(|v| Matrix::from_vec(n, n, v.vectorize()).expect("n² entries"))
            .collect();
        DerivationSpace { basis, n }
    }

    /// Leibniz defects `D[e_i,e_j] − [De_i,e_j] − [e_i,De_j]` on every basis
    /// pair `i < j` where the defect is nonzero (1-based pairs).
    pub fn leibniz_defects(&self, d: &Matrix) -> Result<Vec<((usize, usize), Vec<Rational>)>> {
        let n = self.dim;
        if d.rows() != n || d.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} map on a {n}-dimensional algebra",
                d.rows(),
                d.cols()
            )));
        }
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.apply(&self.bracket_basis(i, j))?;
                let a = self.bracket(&d.column(i), &unit(n, j))?;
                let b = self.bracket(&unit(n, i), &d.column(j))?;
                let defect: Vec<Rational> = lhs
                    .iter()
                    .zip(a.iter().zip(&b))
                    .map(|(l, (x, y))| l - x - y)
                    .collect();
                if defect.iter().any(|x| !x.is_zero()) {
                    out.push(((i + 1, j + 1), defect));
                }
            }
        }
        Ok(out)
    }

    /// Whether `d` satisfies the Leibniz rule on all basis pairs.
    pub fn is_derivation(&self, d: &Matrix) -> bool {
        self.leibniz_defects(d).is_ok_and(|v| v.is_empty())
    }

    /// Structure constants in the basis `f_j = Σ_i a[i][j] e_i`.
    pub fn change_basis(&self, a: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim;
        if a.rows() != n || a.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} basis change in dimension {n}",
                a.rows(),
                a.cols()
            )));
        }
        let a_inv = a.inverse()?;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let w = self.bracket(&a.column(i), &a.column(j))?;
                entries.push((i, j, a_inv.apply(&w)?));
            }
        }
        let mut g = LieAlgebra::from_brackets(n, entries)?;
        g.name = self.name.clone();
        Ok(g)
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

impl fmt::Display for LieAlgebra {
    /// Lists the nonzero brackets, e.g. `[e2, e3] = e1 - e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, v) in self.nonzero_brackets() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "[e{}, e{}] = {}", i + 1, j + 1, format_combination(v))?;
        }
        if first {
            write!(f, "abelian")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}; {})", self.name.as_deref().unwrap_or("-"), self)
    }
}

/// `Σ v_k e_k` as text, e.g. `e1 - 2e2`, `(1/2)e3`, or `0`.
pub fn format_combination(v: &[Rational]) -> String {
    let mut s = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            if mag.is_integer() {
                s.push_str(&mag.to_string());
            } else {
                s.push_str(&format!("({mag})"));
            }
        }
        s.push_str(&format!("e{}", k + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
