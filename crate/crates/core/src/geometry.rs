//! Pseudo-Riemannian inner products on a Lie algebra and the curvature they
//! induce.
//!
//! Conventions:
//!
//! * Koszul: `2⟨∇_u v, w⟩ = ⟨[u,v],w⟩ + ⟨[w,u],v⟩ + ⟨[w,v],u⟩`
//! * curvature: `R_{uv} = ∇_{[u,v]} − [∇_u, ∇_v]`
//! * Ricci form: `ric(u,v) = tr(w ↦ R_{uw} v)`, and `⟨Ric(u), v⟩ = ric(u,v)`
//!
//! The general path works in any basis by solving against the Gram matrix.
//! The orthonormal path (`*_orthonormal`) uses the structure constants
//! `ξ_{ijk} = ⟨[v_i,v_j],v_k⟩` and is only available when the Gram matrix is
//! a diagonal of ±1; it serves as an independent cross-check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::{signature_of, Matrix, Signature};
use crate::rational::Rational;

/// A nondegenerate symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerProduct {
    g: Matrix,
    g_inv: Matrix,
    sig: Signature,
}

impl InnerProduct {
    /// Validates symmetry and nondegeneracy and records the signature.
    pub fn new(g: Matrix) -> Result<Self> {
        let sig = signature_of(&g)?;
        let g_inv = g.inverse()?;
        Ok(InnerProduct { g, g_inv, sig })
    }

    /// `diag(signs)`; convenient for orthonormal bases.
    pub fn diagonal(signs: &[i64]) -> Result<Self> {
        let d: Vec<Rational> = signs.iter().map(|&s| Rational::from_int(s)).collect();
        InnerProduct::new(Matrix::diagonal(&d))
    }

    pub fn gram(&self) -> &Matrix {
        &self.g
    }

    pub fn gram_inverse(&self) -> &Matrix {
        &self.g_inv
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let gv = self.g.apply(v).expect("vector length matches metric");
        u.iter().zip(&gv).map(|(a, b)| a * b).sum()
    }

    /// The diagonal signs `⟨v_i, v_i⟩` when the basis is orthonormal.
    pub fn orthonormal_signs(&self) -> Option<Vec<Rational>> {
        let n = self.dim();
        let one = Rational::one();
        let minus_one = -&one;
        for i in 0..n {
            for j in 0..n {
                let x = &self.g[(i, j)];
                let ok = if i == j {
                    *x == one || *x == minus_one
                } else {
                    x.is_zero()
                };
                if !ok {
                    return None;
                }
            }
        }
        Some((0..n).map(|i| self.g[(i, i)].clone()).collect())
    }

    /// The form in the basis `f_j = Σ_i a[i][j] e_i`, i.e. `aᵀ G a`.
    pub fn change_basis(&self, a: &Matrix) -> Result<InnerProduct> {
        InnerProduct::new(a.transpose().mul(&self.g)?.mul(a)?)
    }
}

/// JSON metric file: `{ "g": [["1", "0"], ["0", "-1"]] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricFile {
    pub g: Matrix,
}

pub fn parse_metric(json: &str) -> Result<InnerProduct> {
    let file: MetricFile = serde_json::from_str(json)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    InnerProduct::new(file.g)
}

pub fn metric_to_json(ip: &InnerProduct) -> String {
    serde_json::to_string_pretty(&MetricFile { g: ip.g.clone() }).expect("serializable")
}

/// Christoffel symbols `Γ_{ij}^k` with `∇_{e_i} e_j = Σ_k Γ_{ij}^k e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    n: usize,
    gamma: Vec<Rational>,
}

impl Connection {
    fn zero(n: usize) -> Self {
        Connection {
            n,
            gamma: vec![Rational::zero(); n * n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.gamma[(i * self.n + j) * self.n + k]
    }

    fn gamma_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Rational {
        &mut self.gamma[(i * self.n + j) * self.n + k]
    }

    /// Coordinates of `∇_{e_i} e_j`.
    pub fn covariant(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.n).map(|k| self.gamma(i, j, k).clone()).collect()
    }

    /// Matrix of the endomorphism `∇_{e_i}`; column `j` is `∇_{e_i} e_j`.
    pub fn nabla(&self, i: usize) -> Matrix {
        let n = self.n;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m[(k, j)] = self.gamma(i, j, k).clone();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(Rational::is_zero)
    }

    /// Index triples (1-based `(i, j, k)`) where `Γ_{ij}^k − Γ_{ji}^k ≠ c_{ij}^k`.
    pub fn torsion_violations(&self, g: &LieAlgebra) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    if self.gamma(i, j, k) - self.gamma(j, i, k) != g.structure_constant(i, j, k) {
                        out.push((i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        out
    }

    /// Index triples where `⟨∇_{e_i}e_j, e_k⟩ + ⟨e_j, ∇_{e_i}e_k⟩ ≠ 0`.
    pub fn metric_violations(&self, ip: &InnerProduct) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            // ∇_i is skew with respect to G exactly when Gᵀ∇ + ∇ᵀG = 0.
            let a = ip.gram().mul(&self.nabla(i)).expect("square");
            for j in 0..n {
                for k in j..n {
                    if !(&a[(k, j)] + &a[(j, k)]).is_zero() {
                        out.push((i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        out
    }
}

fn check_dims(g: &LieAlgebra, ip: &InnerProduct) -> Result<()> {
    if g.dim() != ip.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}-dimensional algebra with a {}x{} metric",
            g.dim(),
            ip.dim(),
            ip.dim()
        )));
    }
    Ok(())
}

/// Levi-Civita connection from the Koszul formula in an arbitrary basis:
/// `2·G·Γ_{ij} = K_{ij}` with `(K_{ij})_k = ⟨[e_i,e_j],e_k⟩ + ⟨[e_k,e_i],e_j⟩ + ⟨[e_k,e_j],e_i⟩`.
pub fn levi_civita(g: &LieAlgebra, ip: &InnerProduct) -> Result<Connection> {
    check_dims(g, ip)?;
    let n = g.dim();
    // gb[i][j] = G·[e_i, e_j], so ⟨[e_i,e_j], e_k⟩ = gb[i][j][k].
    let gb: Vec<Vec<Vec<Rational>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| ip.gram().apply(&g.bracket_basis(i, j)).expect("dims checked"))
                .collect()
        })
        .collect();
    let half = Rational::new(1, 2);
    let mut conn = Connection::zero(n);
    for i in 0..n {
        for j in 0..n {
            let k_vec: Vec<Rational> = (0..n)
                .map(|k| &gb[i][j][k] + &gb[k][i][j] + &gb[k][j][i])
                .collect();
            let sol = ip.gram_inverse().apply(&k_vec)?;
            for (k, x) in sol.into_iter().enumerate() {
                *conn.gamma_mut(i, j, k) = &half * x;
            }
        }
    }
    Ok(conn)
}

/// Levi-Civita connection in an orthonormal basis:
/// `∇_{v_i}v_j = Σ_k ⟨v_k,v_k⟩ · ½(ξ_{ijk} − ξ_{jki} + ξ_{kij}) v_k`.
pub fn levi_civita_orthonormal(g: &LieAlgebra, ip: &InnerProduct) -> Result<Connection> {
    check_dims(g, ip)?;
    let eps = ip.orthonormal_signs().ok_or(Error::NotOrthonormal)?;
    let n = g.dim();
    let xi = |i: usize, j: usize, k: usize| &eps[k] * g.structure_constant(i, j, k);
    let half = Rational::new(1, 2);
    let mut conn = Connection::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = xi(i, j, k) - xi(j, k, i) + xi(k, i, j);
                *conn.gamma_mut(i, j, k) = &eps[k] * &half * s;
            }
        }
    }
    Ok(conn)
}

/// Curvature endomorphisms `R_{e_i e_j}` for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureTensor {
    n: usize,
    r: Vec<Matrix>,
}

impl CurvatureTensor {
    pub fn dim(&self) -> usize {
        self.n
    }

    fn pair(&self, i: usize, j: usize) -> usize {
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    /// `R_{e_i e_j}` for any `i, j`, using antisymmetry.
    pub fn endo(&self, i: usize, j: usize) -> Matrix {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.r[self.pair(i, j)].clone(),
            Greater => self.r[self.pair(j, i)].scale(&Rational::from_int(-1)),
            Equal => Matrix::zeros(self.n, self.n),
        }
    }

    /// Stored endomorphisms with their 1-based index pair.
    pub fn stored(&self) -> Vec<((usize, usize), &Matrix)> {
        let n = self.n;
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .zip(&self.r)
            .map(|((i, j), m)| ((i + 1, j + 1), m))
            .collect()
    }

    /// `R_{e_i e_j} e_k`.
    pub fn apply(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        self.endo(i, j).column(k)
    }

    /// Basis triples (1-based) where
    /// `R_{e_i e_j}e_k + R_{e_j e_k}e_i + R_{e_k e_i}e_j ≠ 0`.
    pub fn bianchi_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let endos: Vec<Vec<Matrix>> = (0..n).map(|i| (0..n).map(|j| self.endo(i, j)).collect()).collect();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (&endos[i][j], &endos[j][k], &endos[k][i]);
                    if (0..n).any(|r| !(&a[(r, k)] + &b[(r, i)] + &c[(r, j)]).is_zero()) {
                        out.push((i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        out
    }
}

/// `R_{ij} = Σ_k c_{ij}^k ∇_{e_k} − (∇_{e_i}∇_{e_j} − ∇_{e_j}∇_{e_i})`.
pub fn curvature(g: &LieAlgebra, conn: &Connection) -> Result<CurvatureTensor> {
    if g.dim() != conn.dim() {
        return Err(Error::DimensionMismatch("connection computed for another algebra".into()));
    }
    let n = g.dim();
    let nablas: Vec<Matrix> = (0..n).map(|i| conn.nabla(i)).collect();
    let mut r = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut m = nablas[j].commutator(&nablas[i])?;
            for k in 0..n {
                let c = g.structure_constant(i, j, k);
                if !c.is_zero() {
                    m = m.add(&nablas[k].scale(&c))?;
                }
            }
            r.push(m);
        }
    }
    Ok(CurvatureTensor { n, r })
}

/// Whether every curvature endomorphism vanishes exactly.
pub fn is_flat(ct: &CurvatureTensor) -> bool {
    ct.r.iter().all(Matrix::is_zero)
}

/// Ricci form and Ricci operator in the working basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RicciData {
    pub ric: Matrix,
    pub ricci_op: Matrix,
}

/// `ric_{ab} = tr(w ↦ R_{e_a w} e_b)` and `Ric = G⁻¹ · ric`.
pub fn ricci(ip: &InnerProduct, ct: &CurvatureTensor) -> Result<RicciData> {
    let n = ct.dim();
    if ip.dim() != n {
        return Err(Error::DimensionMismatch("metric and curvature dimensions differ".into()));
    }
    let mut ric = Matrix::zeros(n, n);
    for a in 0..n {
        for w in 0..n {
            let r = ct.endo(a, w);
            for b in 0..n {
                let x = &r[(w, b)];
                if !x.is_zero() {
                    ric[(a, b)] += x;
                }
            }
        }
    }
    let ricci_op = ip.gram_inverse().mul(&ric)?;
    Ok(RicciData { ric, ricci_op })
}

/// `Ric(u) = Σ_i ⟨v_i,v_i⟩ R_{v_i u} v_i` in an orthonormal basis.
pub fn ricci_orthonormal(ip: &InnerProduct, ct: &CurvatureTensor) -> Result<RicciData> {
    let eps = ip.orthonormal_signs().ok_or(Error::NotOrthonormal)?;
    let n = ct.dim();
    if eps.len() != n {
        return Err(Error::DimensionMismatch("metric and curvature dimensions differ".into()));
    }
    let mut op = Matrix::zeros(n, n);
    for b in 0..n {
        for (i, e) in eps.iter().enumerate() {
            let col = ct.apply(i, b, i);
            for (k, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    op[(k, b)] += e * x;
                }
            }
        }
    }
    let ric = ip.gram().mul(&op)?;
    Ok(RicciData { ric, ricci_op: op })
}

/// Everything the pipeline derives from an algebra and a metric.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub connection: Connection,
    pub curvature: CurvatureTensor,
    pub ricci: RicciData,
}

impl Geometry {
    pub fn compute(g: &LieAlgebra, ip: &InnerProduct) -> Result<Self> {
        let connection = levi_civita(g, ip)?;
        let curvature = curvature(g, &connection)?;
        let ricci = ricci(ip, &curvature)?;
        Ok(Geometry {
            connection,
            curvature,
            ricci,
        })
    }

    pub fn is_flat(&self) -> bool {
        is_flat(&self.curvature)
    }
}

/// Result of checking `RᵀG = GR` and, for `G = J_{r,s}`, the sign pattern it
/// forces on the entries of `R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfAdjointReport {
    pub self_adjoint: bool,
    /// 1-based `(i, j)`, `i > j`, where `(RᵀG − GR)_{ij} ≠ 0`.
    pub violations: Vec<(usize, usize)>,
    pub pattern: Option<ShapePattern>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapePattern {
    /// e.g. `J_{3,1}`.
    pub name: String,
    /// 1-based `(i, j)`, `i > j`, where `R_{ij} ≠ ±R_{ji}` as the pattern requires.
    pub violations: Vec<(usize, usize)>,
}

impl SelfAdjointReport {
    pub fn holds(&self) -> bool {
        self.self_adjoint && self.pattern.as_ref().is_none_or(|p| p.violations.is_empty())
    }
}

/// Checks self-adjointness of `ricci_op` and, when the Gram matrix is
/// `diag(1,…,1,−1,…,−1)`, the entrywise pattern `R_{ij} = ε_i ε_j R_{ji}`.
pub fn self_adjoint_shape_check(ricci_op: &Matrix, ip: &InnerProduct) -> Result<SelfAdjointReport> {
    let n = ip.dim();
    if ricci_op.rows() != n || ricci_op.cols() != n {
        return Err(Error::DimensionMismatch("operator and metric dimensions differ".into()));
    }
    let lhs = ricci_op.transpose().mul(ip.gram())?;
    let rhs = ip.gram().mul(ricci_op)?;
    let diff = lhs.sub(&rhs)?;
    let violations: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .filter(|&(i, j)| !diff[(i, j)].is_zero())
        .map(|(i, j)| (i + 1, j + 1))
        .collect();
    let pattern = ip.orthonormal_signs().and_then(|eps| {
        let sig = ip.signature();
        let sorted = eps.iter().take(sig.positives).all(Rational::is_positive);
        if !sorted {
            return None;
        }
        let violations = (0..n)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .filter(|&(i, j)| ricci_op[(i, j)] != &eps[i] * &eps[j] * &ricci_op[(j, i)])
            .map(|(i, j)| (i + 1, j + 1))
            .collect();
        Some(ShapePattern {
            name: format!("J_{{{},{}}}", sig.positives, sig.negatives),
            violations,
        })
    });
    Ok(SelfAdjointReport {
        self_adjoint: violations.is_empty(),
        violations,
        pattern,
    })
}

/// `A⁻¹ · Ric · A`: the operator in the basis `x_j = Σ_i a_ij v_i`.
pub fn conjugate_ricci(ricci_op: &Matrix, a: &Matrix) -> Result<Matrix> {
    a.inverse()?.mul(ricci_op)?.mul(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{catalog_get, CatalogId, Family};
    use crate::rational::q;

    fn heis() -> LieAlgebra {
        catalog_get(&CatalogId::plain(Family::G31PlusG1)).unwrap()
    }

    /// `[v2, v3] = -v1`, the orthonormal frame of the first worked example.
    fn example1_orthonormal() -> (LieAlgebra, InnerProduct) {
        let g = LieAlgebra::new(4, [(1, 2, vec![q(-1, 1), q(0, 1), q(0, 1), q(0, 1)])]).unwrap();
        (g, InnerProduct::diagonal(&[1, 1, -1, -1]).unwrap())
    }

    fn example1_original() -> InnerProduct {
        InnerProduct::new(Matrix::from_i64(&[[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]]))
            .unwrap()
    }

    fn example2() -> InnerProduct {
        InnerProduct::new(Matrix::from_i64(&[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]))
            .unwrap()
    }

    fn ex1_ricci() -> Matrix {
        Matrix::diagonal(&[q(-1, 2), q(1, 2), q(1, 2), q(0, 1)])
    }

    #[test]
    fn inner_product_rejects_bad_gram() {
        assert!(matches!(
            InnerProduct::new(Matrix::from_i64(&[[1, 2], [0, 1]])),
            Err(Error::NotSymmetric { .. })
        ));
        assert!(matches!(
            InnerProduct::new(Matrix::from_i64(&[[1, 1], [1, 1]])),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn abelian_connection_vanishes() {
        let g = LieAlgebra::abelian(4);
        let conn = levi_civita(&g, &example2()).unwrap();
        assert!(conn.is_zero());
        let conn = levi_civita_orthonormal(&g, &InnerProduct::diagonal(&[1, 1, 1, -1]).unwrap()).unwrap();
        assert!(conn.is_zero());
    }

    #[test]
    fn example1_connection() {
        let (g, ip) = example1_orthonormal();
        let conn = levi_civita(&g, &ip).unwrap();
        let z = q(0, 1);
        assert_eq!(conn.covariant(0, 1), vec![z.clone(), z.clone(), q(-1, 2), z.clone()]);
        assert_eq!(conn.covariant(1, 0), vec![z.clone(), z.clone(), q(-1, 2), z.clone()]);
        assert_eq!(conn.covariant(0, 2), vec![z.clone(), q(-1, 2), z.clone(), z.clone()]);
        assert_eq!(conn.covariant(1, 2), vec![q(-1, 2), z.clone(), z.clone(), z.clone()]);
        assert_eq!(conn.covariant(2, 1), vec![q(1, 2), z.clone(), z.clone(), z.clone()]);
        assert!(conn.covariant(0, 3).iter().all(Rational::is_zero));
        for i in 0..4 {
            assert!(conn.covariant(i, i).iter().all(Rational::is_zero));
        }
        assert_eq!(levi_civita_orthonormal(&g, &ip).unwrap(), conn);
    }

    #[test]
    fn example2_connection_satisfies_axioms() {
        let g = heis();
        let ip = example2();
        let conn = levi_civita(&g, &ip).unwrap();
        assert!(conn.torsion_violations(&g).is_empty());
        assert!(conn.metric_violations(&ip).is_empty());
        assert!(!conn.is_zero());
        assert_eq!(levi_civita_orthonormal(&g, &ip), Err(Error::NotOrthonormal));
    }

    #[test]
    fn example1_ricci_both_bases() {
        let (g, ip) = example1_orthonormal();
        let geo = Geometry::compute(&g, &ip).unwrap();
        assert_eq!(geo.ricci.ricci_op, ex1_ricci());
        assert!(!geo.is_flat());
        let ct = curvature(&g, &levi_civita_orthonormal(&g, &ip).unwrap()).unwrap();
        assert_eq!(ricci_orthonormal(&ip, &ct).unwrap(), geo.ricci);

        let geo = Geometry::compute(&heis(), &example1_original()).unwrap();
        assert_eq!(geo.ricci.ricci_op, ex1_ricci());
    }

    #[test]
    fn example1_curvature_traces_to_ricci() {
        // Ric(v1) = Σ_i ε_i R_{v_i v1} v_i, assembled by hand from the endomorphisms.
        let (g, ip) = example1_orthonormal();
        let ct = curvature(&g, &levi_civita(&g, &ip).unwrap()).unwrap();
        let eps = [1, 1, -1, -1];
        let mut ric_v1 = vec![Rational::zero(); 4];
        for (i, e) in eps.iter().enumerate() {
            for (k, x) in ct.apply(i, 0, i).into_iter().enumerate() {
                ric_v1[k] += Rational::from_int(*e) * x;
            }
        }
        assert_eq!(ric_v1, vec![q(-1, 2), q(0, 1), q(0, 1), q(0, 1)]);
        // R_{v1 v2} v1 = (1/4) v2 here; the trace check above is what pins it.
        assert!(!ct.endo(0, 1).is_zero());
    }

    #[test]
    fn example2_is_flat() {
        let geo = Geometry::compute(&heis(), &example2()).unwrap();
        assert!(geo.is_flat());
        assert_eq!(geo.curvature.stored().len(), 6);
        assert!(geo.ricci.ricci_op.is_zero());
    }

    #[test]
    fn ricci_relations() {
        let g = catalog_get(&CatalogId::plain(Family::G47)).unwrap();
        let ip = InnerProduct::new(Matrix::from_i64(&[[2, 1, 0, 0], [1, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 3]]))
            .unwrap();
        let geo = Geometry::compute(&g, &ip).unwrap();
        let RicciData { ric, ricci_op } = &geo.ricci;
        assert!(ric.is_symmetric());
        assert_eq!(&ip.gram().mul(ricci_op).unwrap(), ric);
        assert!(self_adjoint_shape_check(ricci_op, &ip).unwrap().self_adjoint);
        assert!(geo.curvature.bianchi_violations().is_empty());
    }

    #[test]
    fn orthonormal_paths_agree_on_g36() {
        let g = catalog_get(&CatalogId::plain(Family::G36PlusG1)).unwrap();
        let ip = InnerProduct::diagonal(&[1, 1, -1, -1]).unwrap();
        let general = Geometry::compute(&g, &ip).unwrap();
        let conn = levi_civita_orthonormal(&g, &ip).unwrap();
        assert_eq!(conn, general.connection);
        let ct = curvature(&g, &conn).unwrap();
        assert_eq!(ricci_orthonormal(&ip, &ct).unwrap(), general.ricci);
    }

    #[test]
    fn orthonormal_paths_agree_on_g37() {
        let g = catalog_get(&CatalogId::plain(Family::G37PlusG1)).unwrap();
        let ip = InnerProduct::diagonal(&[1, 1, -1, -1]).unwrap();
        assert_eq!(levi_civita_orthonormal(&g, &ip).unwrap(), levi_civita(&g, &ip).unwrap());
    }

    #[test]
    fn shape_checks() {
        let j22 = InnerProduct::diagonal(&[1, 1, -1, -1]).unwrap();
        let rep = self_adjoint_shape_check(&ex1_ricci(), &j22).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.pattern.as_ref().unwrap().name, "J_{2,2}");

        let sym = Matrix::from_i64(&[[1, 2, 3], [2, 0, 5], [3, 5, -1]]);
        let id = InnerProduct::diagonal(&[1, 1, 1]).unwrap();
        assert!(self_adjoint_shape_check(&sym, &id).unwrap().holds());

        let mut r = Matrix::zeros(4, 4);
        r[(0, 3)] = q(1, 1);
        r[(3, 0)] = q(1, 1);
        let j31 = InnerProduct::diagonal(&[1, 1, 1, -1]).unwrap();
        let rep = self_adjoint_shape_check(&r, &j31).unwrap();
        assert!(!rep.self_adjoint);
        assert_eq!(rep.violations, vec![(4, 1)]);
        assert_eq!(rep.pattern.unwrap().violations, vec![(4, 1)]);

        // no displayed pattern for an unsorted diagonal
        let mixed = InnerProduct::diagonal(&[1, -1, 1, -1]).unwrap();
        assert!(self_adjoint_shape_check(&r, &mixed).unwrap().pattern.is_none());
    }

    #[test]
    fn conjugation() {
        let r = ex1_ricci();
        assert_eq!(conjugate_ricci(&r, &Matrix::identity(4)).unwrap(), r);
        // transition matrix of the worked example, up to the 1/√2 scale that cancels
        let a = Matrix::from_i64(&[[1, 0, 0, 0], [0, 1, 1, 0], [0, 1, -1, 0], [0, 0, 0, 1]]);
        assert_eq!(conjugate_ricci(&r, &a).unwrap(), r);
        assert_eq!(conjugate_ricci(&r, &Matrix::zeros(4, 4)), Err(Error::Singular));
    }

    #[test]
    fn metric_json() {
        let ip = parse_metric(r#"{ "g": [["1","0"],["0","-1/2"]] }"#).unwrap();
        assert_eq!(ip.signature(), Signature { positives: 1, negatives: 1 });
        assert_eq!(parse_metric(&metric_to_json(&ip)).unwrap(), ip);
        assert!(parse_metric(r#"{ "g": [["1","2"],["0","1"]] }"#).is_err());
        assert!(parse_metric(r#"{ "g": [["1","2"],["0"]] }"#).is_err());
    }
}
