//! The two worked examples with hand-derived reference values.

use serde::Serialize;

use soliton_forge::geometry::InnerProduct;
use soliton_forge::lie::{catalog_get, format_combination, CatalogId, Family, LieAlgebra};
use soliton_forge::soliton::SolitonResult;
use soliton_forge::{q, Error, Matrix, Rational};

use crate::analyze::{analyze, AnalysisReport};

#[derive(Debug, Serialize)]
pub struct Check {
    pub example: &'static str,
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Default, Serialize)]
pub struct ExamplesReport {
    pub checks: Vec<Check>,
}

impl ExamplesReport {
    fn check(&mut self, example: &'static str, name: impl Into<String>, expected: String, actual: String) {
        let pass = expected == actual;
        self.checks.push(Check {
            example,
            name: name.into(),
            expected,
            actual,
            pass,
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn one_line(m: &Matrix) -> String {
    m.to_string().replace('\n', " ")
}

fn eta_of(r: &AnalysisReport) -> String {
    match &r.soliton {
        SolitonResult::Soliton { eta, .. } => eta.to_string(),
        other => other.verdict_name().to_string(),
    }
}

fn d_of(r: &AnalysisReport) -> String {
    match &r.soliton {
        SolitonResult::Soliton { d, .. } => one_line(d),
        other => other.verdict_name().to_string(),
    }
}

fn heisenberg() -> Result<LieAlgebra, Error> {
    catalog_get(&CatalogId::plain(Family::G31PlusG1))
}

/// `corrupt` perturbs one reference value so the mismatch path can be tested.
pub fn run(corrupt: bool) -> Result<ExamplesReport, Error> {
    let mut rep = ExamplesReport::default();
    let z = || Rational::zero();
    let half = q(1, 2);

    // Example 1 in an orthonormal frame: [v2, v3] = -v1, G = diag(1, 1, -1, -1).
    let frame = LieAlgebra::new(4, [(1, 2, vec![q(-1, 1), z(), z(), z()])])?.with_name("g3.1⊕g1 (orthonormal frame)");
    let ip = InnerProduct::diagonal(&[1, 1, -1, -1])?;
    let r1 = analyze(&frame, &ip)?;
    let ex1 = "example 1";
    rep.check(ex1, "signature", "(2, 2)".into(), r1.metric.signature.clone());
    let expected_conn = [
        (1, 2, vec![z(), z(), -&half, z()]),
        (1, 3, vec![z(), -&half, z(), z()]),
        (2, 1, vec![z(), z(), -&half, z()]),
        (2, 3, vec![-&half, z(), z(), z()]),
        (3, 1, vec![z(), -&half, z(), z()]),
        (3, 2, vec![half.clone(), z(), z(), z()]),
    ];
    let expected: Vec<String> = expected_conn
        .iter()
        .map(|(i, j, v)| format!("∇_v{i} v{j} = {}", format_combination(v)))
        .collect();
    let actual: Vec<String> = r1
        .connection
        .iter()
        .map(|c| format!("∇_v{} v{} = {}", c.i, c.j, c.value))
        .collect();
    rep.check(ex1, "connection", expected.join("; "), actual.join("; "));
    let ricci = Matrix::diagonal(&[-&half, half.clone(), half.clone(), z()]);
    rep.check(ex1, "Ricci operator (frame)", one_line(&ricci), one_line(&r1.ricci_op));
    rep.check(ex1, "flat", "false".into(), r1.flat.to_string());
    let eta = if corrupt { q(2, 1) } else { q(3, 2) };
    rep.check(ex1, "η (frame)", eta.to_string(), eta_of(&r1));

    // The same example in the catalog basis, where the metric pairs e2 with e3.
    let heis = heisenberg()?;
    let ip = InnerProduct::new(Matrix::from_i64(&[[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]]))?;
    let r1b = analyze(&heis, &ip)?;
    rep.check(ex1, "Ricci operator (catalog basis)", one_line(&ricci), one_line(&r1b.ricci_op));
    rep.check(ex1, "η (catalog basis)", eta.to_string(), eta_of(&r1b));
    let d = Matrix::diagonal(&[q(-2, 1), q(-1, 1), q(-1, 1), q(-3, 2)]);
    rep.check(ex1, "D (catalog basis)", one_line(&d), d_of(&r1b));

    // Example 2: a flat neutral metric on the same algebra.
    let ip = InnerProduct::new(Matrix::from_i64(&[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]))?;
    let r2 = analyze(&heis, &ip)?;
    let ex2 = "example 2";
    rep.check(ex2, "signature", "(2, 2)".into(), r2.metric.signature.clone());
    rep.check(ex2, "flat", "true".into(), r2.flat.to_string());
    rep.check(ex2, "Ricci operator", one_line(&Matrix::zeros(4, 4)), one_line(&r2.ricci_op));
    rep.check(ex2, "η", "0".into(), eta_of(&r2));
    rep.check(ex2, "D", one_line(&Matrix::zeros(4, 4)), d_of(&r2));
    Ok(rep)
}
