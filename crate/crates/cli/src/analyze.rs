use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use soliton_forge::geometry::{parse_metric, self_adjoint_shape_check, Geometry, InnerProduct, SelfAdjointReport};
use soliton_forge::lie::{format_combination, parse_lie_algebra, recognize, JacobiReport, LieAlgebra};
use soliton_forge::soliton::{theorem_predicate, PredicateOutcome, SolitonResult, SolitonSolver};
use soliton_forge::{Error, Matrix};

use crate::error::CliError;

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub algebra: AlgebraSummary,
    pub metric: MetricSummary,
    /// Nonzero `∇_{e_i} e_j`, 1-based.
    pub connection: Vec<ConnectionEntry>,
    pub flat: bool,
    pub ricci_form: Matrix,
    pub ricci_op: Matrix,
    pub self_adjoint: SelfAdjointReport,
    pub soliton: SolitonResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremMatch>,
}

#[derive(Debug, Serialize)]
pub struct AlgebraSummary {
    pub name: Option<String>,
    pub dim: usize,
    pub brackets: Vec<String>,
    pub catalog_id: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct MetricSummary {
    pub signature: String,
    pub gram: Matrix,
}

#[derive(Debug, Serialize)]
pub struct ConnectionEntry {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct TheoremMatch {
    pub id: String,
    #[serde(flatten)]
    pub outcome: PredicateOutcome,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn input_err(path: &Path) -> impl Fn(Error) -> CliError + '_ {
    move |source| CliError::Input {
        path: PathBuf::from(path),
        source,
    }
}

pub fn bracket_lines(g: &LieAlgebra) -> Vec<String> {
    g.nonzero_brackets()
        .map(|(i, j, v)| format!("[e{}, e{}] = {}", i + 1, j + 1, format_combination(v)))
        .collect()
}

pub fn analyze(g: &LieAlgebra, ip: &InnerProduct) -> Result<AnalysisReport, Error> {
    let geo = Geometry::compute(g, ip)?;
    let n = g.dim();
    let connection = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter_map(|(i, j)| {
            let v = geo.connection.covariant(i, j);
            (!v.iter().all(|x| x.is_zero())).then(|| ConnectionEntry {
                i: i + 1,
                j: j + 1,
                value: format_combination(&v),
            })
        })
        .collect();
    let self_adjoint = self_adjoint_shape_check(&geo.ricci.ricci_op, ip)?;
    let soliton = SolitonSolver::new(g).solve(&geo.ricci.ricci_op)?;
    let catalog_id = recognize(g);
    let theorem = match &catalog_id {
        Some(id) => Some(TheoremMatch {
            id: id.to_string(),
            outcome: theorem_predicate(id, &geo.ricci.ricci_op)?,
        }),
        None => None,
    };
    Ok(AnalysisReport {
        algebra: AlgebraSummary {
            name: g.name().map(str::to_string),
            dim: n,
            brackets: bracket_lines(g),
            catalog_id: catalog_id.map(|id| id.to_string()),
        },
        metric: MetricSummary {
            signature: ip.signature().to_string(),
            gram: ip.gram().clone(),
        },
        connection,
        flat: geo.is_flat(),
        ricci_form: geo.ricci.ric,
        ricci_op: geo.ricci.ricci_op,
        self_adjoint,
        soliton,
        theorem,
    })
}

pub fn load_and_analyze(algebra_path: &Path, metric_path: &Path) -> Result<AnalysisReport, CliError> {
    let g = parse_lie_algebra(&read(algebra_path)?).map_err(input_err(algebra_path))?;
    if let JacobiReport::Failures(f) = g.jacobi_check() {
        let (i, j, k) = f[0].triple;
        return Err(input_err(algebra_path)(Error::Jacobi(i, j, k)));
    }
    let ip = parse_metric(&read(metric_path)?).map_err(input_err(metric_path))?;
    if ip.dim() != g.dim() {
        return Err(input_err(metric_path)(Error::DimensionMismatch(format!(
            "{}x{} metric for a {}-dimensional algebra",
            ip.dim(),
            ip.dim(),
            g.dim()
        ))));
    }
    Ok(analyze(&g, &ip)?)
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let name = r.algebra.name.as_deref().unwrap_or("unnamed");
    let _ = writeln!(s, "algebra: {name} (dimension {})", r.algebra.dim);
    if r.algebra.brackets.is_empty() {
        s.push_str("  abelian\n");
    }
    for b in &r.algebra.brackets {
        let _ = writeln!(s, "  {b}");
    }
    if let Some(id) = &r.algebra.catalog_id {
        let _ = writeln!(s, "catalog: {id}");
    }
    let _ = writeln!(s, "signature: {}", r.metric.signature);
    if r.connection.is_empty() {
        s.push_str("connection: zero\n");
    } else {
        s.push_str("connection:\n");
        for c in &r.connection {
            let _ = writeln!(s, "  ∇_e{} e{} = {}", c.i, c.j, c.value);
        }
    }
    let _ = writeln!(s, "flat: {}", r.flat);
    s.push_str("Ricci operator:\n");
    s.push_str(&indent(&r.ricci_op.to_string()));
    let sa = &r.self_adjoint;
    let _ = write!(s, "self-adjoint: {}", if sa.self_adjoint { "yes" } else { "no" });
    if let Some(p) = &sa.pattern {
        let verdict = if p.violations.is_empty() { "holds" } else { "violated" };
        let _ = write!(s, " (pattern {}: {verdict})", p.name);
    }
    s.push('\n');
    match &r.soliton {
        SolitonResult::NotSoliton => s.push_str("soliton: no\n"),
        SolitonResult::EveryEta { .. } => s.push_str("soliton: yes, for every η (D = Ric - η·I)\n"),
        SolitonResult::Soliton { eta, d } => {
            let _ = writeln!(s, "soliton: yes, η = {eta}");
            s.push_str("D:\n");
            s.push_str(&indent(&d.to_string()));
        }
    }
    if let Some(t) = &r.theorem {
        if t.outcome.holds {
            let eta = t.outcome.eta.as_ref().map(ToString::to_string).unwrap_or_default();
            let _ = writeln!(s, "criterion for {}: holds, η = {eta}", t.id);
        } else {
            let _ = writeln!(s, "criterion for {}: fails", t.id);
            for c in &t.outcome.failed_conditions {
                let _ = writeln!(s, "  {c}");
            }
        }
    }
    s
}
