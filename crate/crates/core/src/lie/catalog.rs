//! Built-in catalog of the real four-dimensional Lie algebras.
//!
//! Bracket tables and parameter ranges follow the standard decomposable /
//! indecomposable lists, with basis `e1..e4` in the listed order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::algebra::{JacobiReport, LieAlgebra};
use crate::error::{Error, Result};
use crate::rational::{q, Rational};

/// The 24 families of four-dimensional Lie algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    FourG1,
    G21Plus2G1,
    TwoG21,
    G31PlusG1,
    G32PlusG1,
    G33PlusG1,
    G34ZeroPlusG1,
    G34AlphaPlusG1,
    G35ZeroPlusG1,
    G35AlphaPlusG1,
    G36PlusG1,
    G37PlusG1,
    G41,
    G42Alpha,
    G43,
    G44,
    G45AlphaBeta,
    G46AlphaBeta,
    G47,
    G48MinusOne,
    G48Alpha,
    G49Zero,
    G49Alpha,
    G410,
}

/// Which parameters a family takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    None,
    Alpha,
    AlphaBeta,
}

impl Family {
    pub const ALL: [Family; 24] = [
        Family::FourG1,
        Family::G21Plus2G1,
        Family::TwoG21,
        Family::G31PlusG1,
        Family::G32PlusG1,
        Family::G33PlusG1,
        Family::G34ZeroPlusG1,
        Family::G34AlphaPlusG1,
        Family::G35ZeroPlusG1,
        Family::G35AlphaPlusG1,
        Family::G36PlusG1,
        Family::G37PlusG1,
        Family::G41,
        Family::G42Alpha,
        Family::G43,
        Family::G44,
        Family::G45AlphaBeta,
        Family::G46AlphaBeta,
        Family::G47,
        Family::G48MinusOne,
        Family::G48Alpha,
        Family::G49Zero,
        Family::G49Alpha,
        Family::G410,
    ];

    /// ASCII identifier accepted on the command line and in reports.
    pub fn id(self) -> &'static str {
        use Family::*;
        match self {
            FourG1 => "4g1",
            G21Plus2G1 => "g2.1+2g1",
            TwoG21 => "2g2.1",
            G31PlusG1 => "g3.1+g1",
            G32PlusG1 => "g3.2+g1",
            G33PlusG1 => "g3.3+g1",
            G34ZeroPlusG1 => "g3.4^0+g1",
            G34AlphaPlusG1 => "g3.4^a+g1",
            G35ZeroPlusG1 => "g3.5^0+g1",
            G35AlphaPlusG1 => "g3.5^a+g1",
            G36PlusG1 => "g3.6+g1",
            G37PlusG1 => "g3.7+g1",
            G41 => "g4.1",
            G42Alpha => "g4.2^a",
            G43 => "g4.3",
            G44 => "g4.4",
            G45AlphaBeta => "g4.5^ab",
            G46AlphaBeta => "g4.6^ab",
            G47 => "g4.7",
            G48MinusOne => "g4.8^-1",
            G48Alpha => "g4.8^a",
            G49Zero => "g4.9^0",
            G49Alpha => "g4.9^a",
            G410 => "g4.10",
        }
    }

    /// Typeset label, e.g. `g3.4^α⊕g1`.
    pub fn label(self) -> &'static str {
        use Family::*;
        match self {
            FourG1 => "4g1",
            G21Plus2G1 => "g2.1⊕2g1",
            TwoG21 => "2g2.1",
            G31PlusG1 => "g3.1⊕g1",
            G32PlusG1 => "g3.2⊕g1",
            G33PlusG1 => "g3.3⊕g1",
            G34ZeroPlusG1 => "g3.4^0⊕g1",
            G34AlphaPlusG1 => "g3.4^α⊕g1",
            G35ZeroPlusG1 => "g3.5^0⊕g1",
            G35AlphaPlusG1 => "g3.5^α⊕g1",
            G36PlusG1 => "g3.6⊕g1",
            G37PlusG1 => "g3.7⊕g1",
            G41 => "g4.1",
            G42Alpha => "g4.2^α",
            G43 => "g4.3",
            G44 => "g4.4",
            G45AlphaBeta => "g4.5^{α,β}",
            G46AlphaBeta => "g4.6^{α,β}",
            G47 => "g4.7",
            G48MinusOne => "g4.8^{-1}",
            G48Alpha => "g4.8^α",
            G49Zero => "g4.9^0",
            G49Alpha => "g4.9^α",
            G410 => "g4.10",
        }
    }

    pub fn arity(self) -> Arity {
        use Family::*;
        match self {
            G34AlphaPlusG1 | G35AlphaPlusG1 | G42Alpha | G48Alpha | G49Alpha => Arity::Alpha,
            G45AlphaBeta | G46AlphaBeta => Arity::AlphaBeta,
            _ => Arity::None,
        }
    }

    pub fn is_decomposable(self) -> bool {
        (self as usize) <= (Family::G37PlusG1 as usize)
    }

    /// Human-readable parameter constraint, empty for parameter-free families.
    pub fn param_condition(self) -> &'static str {
        use Family::*;
        match self {
            G34AlphaPlusG1 => "α > 0, α ≠ 1",
            G35AlphaPlusG1 => "α > 0",
            G42Alpha => "α ≠ 0",
            G45AlphaBeta => "-1 < α ≤ β ≤ 1, αβ ≠ 0, or α = -1, 0 < β ≤ 1",
            G46AlphaBeta => "α > 0, β ∈ ℝ",
            G48Alpha => "-1 < α ≤ 1",
            G49Alpha => "α > 0",
            _ => "",
        }
    }

    /// Fixed parameter grid used by catalog-wide sweeps.
    pub fn parameter_grid(self) -> Vec<Params> {
        let a = |x: Rational| Params::alpha(x);
        match self {
            Family::G34AlphaPlusG1 => vec![a(q(1, 2)), a(q(2, 1))],
            Family::G35AlphaPlusG1 | Family::G49Alpha => {
                vec![a(q(1, 2)), a(q(1, 1)), a(q(2, 1))]
            }
            Family::G42Alpha => vec![a(q(-1, 1)), a(q(1, 2)), a(q(1, 1)), a(q(2, 1))],
            Family::G48Alpha => vec![a(q(-1, 2)), a(q(0, 1)), a(q(1, 2)), a(q(1, 1))],
            Family::G45AlphaBeta => [
                (q(-1, 1), q(1, 2)),
                (q(-1, 1), q(1, 1)),
                (q(-1, 2), q(-1, 2)),
                (q(-1, 2), q(1, 2)),
                (q(-1, 2), q(1, 1)),
                (q(1, 2), q(1, 2)),
                (q(1, 2), q(1, 1)),
                (q(1, 1), q(1, 1)),
            ]
            .into_iter()
            .map(|(x, y)| Params::alpha_beta(x, y))
            .collect(),
            Family::G46AlphaBeta => {
                let mut v = Vec::new();
                for x in [q(1, 2), q(1, 1), q(2, 1)] {
                    for y in [q(0, 1), q(1, 2), q(1, 1), q(2, 1)] {
                        v.push(Params::alpha_beta(x.clone(), y));
                    }
                }
                v
            }
            _ => vec![Params::none()],
        }
    }

    /// Grid points as full catalog ids.
    pub fn grid_ids(self) -> Vec<CatalogId> {
        self.parameter_grid()
            .into_iter()
            .map(|params| CatalogId { family: self, params })
            .collect()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Folds the accepted spellings (`⊕`, `α`, braces, `_`) onto ASCII ids.
fn normalize(s: &str) -> String {
    s.trim()
        .replace('⊕', "+")
        .replace('α', "a")
        .replace('β', "b")
        .replace(['{', '}', ',', ' ', '_', '\\'], "")
        .replace("alpha", "a")
        .replace("beta", "b")
        .replace("oplus", "+")
        .replace('−', "-")
        .replace("mathfrak", "")
        .to_lowercase()
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = normalize(s);
        Family::ALL
            .into_iter()
            .find(|f| normalize(f.id()) == n)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Families whose id starts with `prefix` (after normalization); e.g. `g4.8`
/// selects both `g4.8^-1` and `g4.8^a`. An exact id selects just that family.
pub fn families_matching(prefix: &str) -> Result<Vec<Family>> {
    if let Ok(f) = prefix.parse::<Family>() {
        return Ok(vec![f]);
    }
    let p = normalize(prefix);
    let hits: Vec<Family> = Family::ALL
        .into_iter()
        .filter(|f| {
            let id = normalize(f.id());
            id.strip_prefix(&p)
                .is_some_and(|rest| rest.is_empty() || rest.starts_with(['^', '+']))
        })
        .collect();
    if hits.is_empty() {
        Err(Error::UnknownFamily(prefix.to_string()))
    } else {
        Ok(hits)
    }
}

/// Concrete values of the family parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<Rational>,
}

impl Params {
    pub fn none() -> Self {
        Params::default()
    }

    pub fn alpha(a: Rational) -> Self {
        Params {
            alpha: Some(a),
            beta: None,
        }
    }

    pub fn alpha_beta(a: Rational, b: Rational) -> Self {
        Params {
            alpha: Some(a),
            beta: Some(b),
        }
    }
}

/// A catalog family together with its parameter values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CatalogId {
    pub family: Family,
    pub params: Params,
}

impl CatalogId {
    pub fn new(family: Family, params: Params) -> Self {
        CatalogId { family, params }
    }

    pub fn plain(family: Family) -> Self {
        CatalogId {
            family,
            params: Params::none(),
        }
    }

    /// `α`, or zero for families without it. Only meaningful after validation.
    pub fn alpha(&self) -> Rational {
        self.params.alpha.clone().unwrap_or_else(Rational::zero)
    }

    pub fn beta(&self) -> Rational {
        self.params.beta.clone().unwrap_or_else(Rational::zero)
    }

    /// Checks the parameter ranges of the family.
    pub fn validate(&self) -> Result<()> {
        let fam = self.family;
        let out_of_range = |condition: &str| Error::ParamOutOfRange {
            family: fam.label().to_string(),
            condition: condition.to_string(),
        };
        let (alpha, beta) = (&self.params.alpha, &self.params.beta);
        match fam.arity() {
            Arity::None => {
                if alpha.is_some() || beta.is_some() {
                    return Err(out_of_range("no parameters"));
                }
                return Ok(());
            }
            Arity::Alpha => {
                if beta.is_some() {
                    return Err(out_of_range("only α"));
                }
            }
            Arity::AlphaBeta => {
                if beta.is_none() {
                    return Err(out_of_range(&format!("{}; both α and β are required", fam.param_condition())));
                }
            }
        }
        let Some(a) = alpha else {
            return Err(out_of_range(fam.param_condition()));
        };
        let one = Rational::one();
        let minus_one = -&one;
        let ok = match fam {
            Family::G34AlphaPlusG1 => a.is_positive() && *a != one,
            Family::G35AlphaPlusG1 | Family::G46AlphaBeta | Family::G49Alpha => a.is_positive(),
            Family::G42Alpha => !a.is_zero(),
            Family::G48Alpha => *a > minus_one && *a <= one,
            Family::G45AlphaBeta => {
                let b = beta.as_ref().expect("checked above");
                let generic = *a > minus_one && a <= b && *b <= one && !a.is_zero() && !b.is_zero();
                let edge = *a == minus_one && b.is_positive() && *b <= one;
                generic || edge
            }
            _ => unreachable!("parameter-free families handled above"),
        };
        if ok {
            Ok(())
        } else {
            Err(out_of_range(fam.param_condition()))
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.id())?;
        match (&self.params.alpha, &self.params.beta) {
            (Some(a), Some(b)) => write!(f, " (α={a}, β={b})"),
            (Some(a), None) => write!(f, " (α={a})"),
            _ => Ok(()),
        }
    }
}

/// One bracket `[e_i, e_j] = Σ c_k e_k` with 1-based indices as printed in
/// the tables. `i > j` is allowed and flipped on insertion.
struct Bracket(usize, usize, Vec<(usize, Rational)>);

fn br(i: usize, j: usize, terms: &[(usize, Rational)]) -> Bracket {
    Bracket(i, j, terms.to_vec())
}

fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

fn table(id: &CatalogId) -> Vec<Bracket> {
    use Family::*;
    let a = id.alpha();
    let b = id.beta();
    let one = int(1);
    match id.family {
        FourG1 => vec![],
        G21Plus2G1 => vec![br(1, 2, &[(1, int(1))])],
        TwoG21 => vec![br(1, 2, &[(1, int(1))]), br(3, 4, &[(3, int(1))])],
        G31PlusG1 => vec![br(2, 3, &[(1, int(1))])],
        G32PlusG1 => vec![
            br(2, 3, &[(1, int(1)), (2, int(-1))]),
            br(3, 1, &[(1, int(1))]),
        ],
        G33PlusG1 => vec![br(2, 3, &[(2, int(-1))]), br(3, 1, &[(1, int(1))])],
        G34ZeroPlusG1 => vec![br(2, 3, &[(1, int(1))]), br(3, 1, &[(2, int(-1))])],
        G34AlphaPlusG1 => vec![
            br(2, 3, &[(1, int(1)), (2, -&a)]),
            br(3, 1, &[(1, a.clone()), (2, int(-1))]),
        ],
        G35ZeroPlusG1 => vec![br(2, 3, &[(1, int(1))]), br(3, 1, &[(2, int(1))])],
        G35AlphaPlusG1 => vec![
            br(2, 3, &[(1, int(1)), (2, -&a)]),
            br(3, 1, &[(1, a.clone()), (2, int(1))]),
        ],
        G36PlusG1 => vec![
            br(2, 3, &[(1, int(1))]),
            br(3, 1, &[(2, int(1))]),
            br(1, 2, &[(3, int(-1))]),
        ],
        G37PlusG1 => vec![
            br(2, 3, &[(1, int(1))]),
            br(3, 1, &[(2, int(1))]),
            br(1, 2, &[(3, int(1))]),
        ],
        G41 => vec![br(2, 4, &[(1, int(1))]), br(3, 4, &[(2, int(1))])],
        G42Alpha => vec![
            br(1, 4, &[(1, a.clone())]),
            br(2, 4, &[(2, int(1))]),
            br(3, 4, &[(2, int(1)), (3, int(1))]),
        ],
        G43 => vec![br(1, 4, &[(1, int(1))]), br(3, 4, &[(2, int(1))])],
        G44 => vec![
            br(1, 4, &[(1, int(1))]),
            br(2, 4, &[(1, int(1)), (2, int(1))]),
            br(3, 4, &[(2, int(1)), (3, int(1))]),
        ],
        G45AlphaBeta => vec![
            br(1, 4, &[(1, int(1))]),
            br(2, 4, &[(2, b.clone())]),
            br(3, 4, &[(3, a.clone())]),
        ],
        G46AlphaBeta => vec![
            br(1, 4, &[(1, a.clone())]),
            br(2, 4, &[(2, b.clone()), (3, int(-1))]),
            br(3, 4, &[(2, int(1)), (3, b.clone())]),
        ],
        G47 => vec![
            br(1, 4, &[(1, int(2))]),
            br(2, 4, &[(2, int(1))]),
            br(3, 4, &[(2, int(1)), (3, int(1))]),
            br(2, 3, &[(1, int(1))]),
        ],
        G48MinusOne => vec![
            br(2, 3, &[(1, int(1))]),
            br(2, 4, &[(2, int(1))]),
            br(3, 4, &[(3, int(-1))]),
        ],
        G48Alpha => vec![
            br(1, 4, &[(1, &one + &a)]),
            br(2, 4, &[(2, int(1))]),
            br(3, 4, &[(3, a.clone())]),
            br(2, 3, &[(1, int(1))]),
        ],
        G49Zero => vec![
            br(2, 3, &[(1, int(1))]),
            br(2, 4, &[(3, int(-1))]),
            br(3, 4, &[(2, int(1))]),
        ],
        G49Alpha => vec![
            br(1, 4, &[(1, int(2) * &a)]),
            br(2, 4, &[(2, a.clone()), (3, int(-1))]),
            br(3, 4, &[(2, int(1)), (3, a.clone())]),
            br(2, 3, &[(1, int(1))]),
        ],
        G410 => vec![
            br(1, 3, &[(1, int(1))]),
            br(2, 3, &[(2, int(1))]),
            br(1, 4, &[(2, int(-1))]),
            br(2, 4, &[(1, int(1))]),
        ],
    }
}

/// The catalog algebra for `id`, after validating its parameters.
pub fn catalog_get(id: &CatalogId) -> Result<LieAlgebra> {
    id.validate()?;
    let entries = table(id).into_iter().map(|Bracket(i, j, terms)| {
        let mut coeffs = vec![Rational::zero(); 4];
        for (k, c) in terms {
            coeffs[k - 1] += c;
        }
        if i < j {
            (i - 1, j - 1, coeffs)
        } else {
            (j - 1, i - 1, coeffs.into_iter().map(|c| -c).collect())
        }
    });
    let g = LieAlgebra::from_brackets(4, entries)?.with_name(id.family.label());
    // Catalog transcriptions must be genuine Lie algebras.
    if let JacobiReport::Failures(f) = g.jacobi_check() {
        let (i, j, k) = f[0].triple;
        return Err(Error::Jacobi(i, j, k));
    }
    Ok(g)
}

/// The brackets in the order and orientation of the source table, e.g.
/// `["[e2, e3] = e1 - e2", "[e3, e1] = e1"]`.
pub fn table_brackets(id: &CatalogId) -> Result<Vec<String>> {
    id.validate()?;
    Ok(table(id)
        .into_iter()
        .map(|Bracket(i, j, terms)| {
            let mut coeffs = vec![Rational::zero(); 4];
            for (k, c) in terms {
                coeffs[k - 1] += c;
            }
            format!("[e{i}, e{j}] = {}", super::algebra::format_combination(&coeffs))
        })
        .collect())
}

/// Identifies `g` as a catalog algebra in exactly the catalog basis.
///
/// Parameter values are searched among simple functions of the structure
/// constants (`±c`, `c − 1`, `c/2`), which covers how `α` and `β` enter the
/// tables.
pub fn recognize(g: &LieAlgebra) -> Option<CatalogId> {
    if g.dim() != 4 {
        return None;
    }
    let mut candidates: Vec<Rational> = Vec::new();
    for (_, _, v) in g.nonzero_brackets() {
        for c in v.iter().filter(|c| !c.is_zero()) {
            candidates.extend([c.clone(), -c, c - Rational::one(), c * Rational::new(1, 2)]);
        }
    }
    candidates.sort();
    candidates.dedup();
    let same = |id: &CatalogId| catalog_get(id).is_ok_and(|h| h.same_structure(g));
    for family in Family::ALL {
        let found = match family.arity() {
            Arity::None => Some(CatalogId::plain(family)).filter(same),
            Arity::Alpha => candidates
                .iter()
                .map(|a| CatalogId::new(family, Params::alpha(a.clone())))
                .find(same),
            Arity::AlphaBeta => candidates
                .iter()
                .flat_map(|a| candidates.iter().map(move |b| (a, b)))
                .map(|(a, b)| CatalogId::new(family, Params::alpha_beta(a.clone(), b.clone())))
                .find(same),
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Parses an id with optional `α`, `β` given as text.
pub fn parse_catalog_id(id: &str, alpha: Option<&str>, beta: Option<&str>) -> Result<CatalogId> {
    let family: Family = id.parse()?;
    let parse = |s: Option<&str>| s.map(str::parse::<Rational>).transpose();
    let params = Params {
        alpha: parse(alpha)?,
        beta: parse(beta)?,
    };
    let cid = CatalogId { family, params };
    cid.validate()?;
    Ok(cid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[Rational]) -> Vec<Rational> {
        xs.to_vec()
    }

    #[test]
    fn twenty_four_distinct_ids() {
        let mut ids: Vec<_> = Family::ALL.iter().map(|f| f.id()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 24);
        assert_eq!(Family::ALL.iter().filter(|f| f.is_decomposable()).count(), 12);
    }

    #[test]
    fn ids_round_trip_through_parser() {
        for f in Family::ALL {
            assert_eq!(f.id().parse::<Family>().unwrap(), f);
            assert_eq!(f.label().parse::<Family>().unwrap(), f);
        }
        assert_eq!("g3.1⊕g1".parse::<Family>().unwrap(), Family::G31PlusG1);
        assert_eq!("g4.5^{α,β}".parse::<Family>().unwrap(), Family::G45AlphaBeta);
        assert!("g5.1".parse::<Family>().is_err());
    }

    #[test]
    fn prefix_selection() {
        assert_eq!(
            families_matching("g4.8").unwrap(),
            vec![Family::G48MinusOne, Family::G48Alpha]
        );
        assert_eq!(families_matching("g4.5").unwrap(), vec![Family::G45AlphaBeta]);
        assert_eq!(families_matching("g4.1").unwrap(), vec![Family::G41]);
        assert!(families_matching("g9").is_err());
    }

    #[test]
    fn g21_plus_2g1_has_single_bracket() {
        let g = catalog_get(&CatalogId::plain(Family::G21Plus2G1)).unwrap();
        let brackets: Vec<_> = g.nonzero_brackets().map(|(i, j, c)| (i, j, c.to_vec())).collect();
        assert_eq!(brackets, vec![(0, 1, v(&[int(1), int(0), int(0), int(0)]))]);
    }

    #[test]
    fn g48_half() {
        let g = catalog_get(&CatalogId::new(Family::G48Alpha, Params::alpha(q(1, 2)))).unwrap();
        assert_eq!(g.bracket_basis(0, 3), v(&[q(3, 2), int(0), int(0), int(0)]));
        assert_eq!(g.bracket_basis(1, 3), v(&[int(0), int(1), int(0), int(0)]));
        assert_eq!(g.bracket_basis(2, 3), v(&[int(0), int(0), q(1, 2), int(0)]));
        assert_eq!(g.bracket_basis(1, 2), v(&[int(1), int(0), int(0), int(0)]));
        assert_eq!(g.nonzero_brackets().count(), 4);
    }

    #[test]
    fn table_examples() {
        let g = catalog_get(&CatalogId::plain(Family::G31PlusG1)).unwrap();
        assert_eq!(g.bracket_basis(1, 2), v(&[int(1), int(0), int(0), int(0)]));
        let g = catalog_get(&CatalogId::plain(Family::G47)).unwrap();
        assert_eq!(g.bracket_basis(0, 3), v(&[int(2), int(0), int(0), int(0)]));
        let g = catalog_get(&CatalogId::plain(Family::G32PlusG1)).unwrap();
        assert_eq!(g.to_string(), "[e1, e3] = -e1, [e2, e3] = e1 - e2");
        assert_eq!(
            table_brackets(&CatalogId::plain(Family::G32PlusG1)).unwrap(),
            vec!["[e2, e3] = e1 - e2", "[e3, e1] = e1"]
        );
    }

    #[test]
    fn parameter_ranges() {
        let bad = |f, p| {
            matches!(
                catalog_get(&CatalogId::new(f, p)),
                Err(Error::ParamOutOfRange { .. })
            )
        };
        assert!(bad(Family::G45AlphaBeta, Params::alpha_beta(int(0), int(1))));
        assert!(bad(Family::G45AlphaBeta, Params::alpha_beta(q(1, 2), q(1, 4))));
        assert!(bad(Family::G45AlphaBeta, Params::alpha_beta(int(-1), int(0))));
        assert!(!bad(Family::G45AlphaBeta, Params::alpha_beta(int(-1), int(1))));
        assert!(bad(Family::G34AlphaPlusG1, Params::alpha(int(1))));
        assert!(bad(Family::G34AlphaPlusG1, Params::alpha(int(0))));
        assert!(bad(Family::G35AlphaPlusG1, Params::alpha(int(-1))));
        assert!(bad(Family::G42Alpha, Params::alpha(int(0))));
        assert!(bad(Family::G46AlphaBeta, Params::alpha_beta(int(0), int(3))));
        assert!(bad(Family::G48Alpha, Params::alpha(int(-1))));
        assert!(!bad(Family::G48Alpha, Params::alpha(int(1))));
        assert!(bad(Family::G49Alpha, Params::alpha(int(0))));
        assert!(bad(Family::G42Alpha, Params::none()));
        assert!(bad(Family::G41, Params::alpha(int(1))));
    }

    #[test]
    fn param_error_cites_condition() {
        let err = parse_catalog_id("g4.6^ab", Some("0"), Some("1")).unwrap_err();
        assert!(err.to_string().contains("α > 0"), "{err}");
    }

    #[test]
    fn recognizes_every_grid_point() {
        for f in Family::ALL {
            for id in f.grid_ids() {
                let g = catalog_get(&id).unwrap().with_name("anything");
                assert_eq!(recognize(&g), Some(id.clone()), "{id}");
            }
        }
        let so3_scaled = LieAlgebra::new(4, [(1, 2, v(&[q(2, 1), q(0, 1), q(0, 1), q(0, 1)]))]).unwrap();
        assert_eq!(recognize(&so3_scaled), None);
    }

    #[test]
    fn every_grid_point_is_valid_lie_algebra() {
        for f in Family::ALL {
            for id in f.grid_ids() {
                let g = catalog_get(&id).unwrap_or_else(|e| panic!("{id}: {e}"));
                assert!(g.jacobi_check().is_ok(), "{id}");
            }
        }
    }
}
