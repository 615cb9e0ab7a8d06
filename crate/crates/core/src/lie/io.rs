//! JSON file format for Lie algebras.
//!
//! ```json
//! { "dim": 4, "name": "g3.1+g1",
//!   "brackets": [ { "i": 2, "j": 3, "coeffs": { "1": "1" } } ] }
//! ```
//!
//! Indices are 1-based and each bracket must have `i < j`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieAlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// Keyed by the 1-based output index `k`, as a decimal string.
    pub coeffs: BTreeMap<String, Rational>,
}

impl LieAlgebraFile {
    /// Structure constants without the Jacobi check; callers decide what to
    /// do with [`LieAlgebra::jacobi_check`].
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let n = self.dim;
        let mut entries = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            if b.i == 0 || b.j == 0 {
                return Err(Error::InvalidStructure(format!(
                    "bracket indices are 1-based, got [e{}, e{}]",
                    b.i, b.j
                )));
            }
            let mut coeffs = vec![Rational::zero(); n];
            for (k, c) in &b.coeffs {
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("coefficient index {k:?} is not an integer")))?;
                if k == 0 || k > n {
                    return Err(Error::InvalidStructure(format!(
                        "coefficient index {k} out of range 1..={n} in [e{}, e{}]",
                        b.i, b.j
                    )));
                }
                coeffs[k - 1] = c.clone();
            }
            entries.push((b.i - 1, b.j - 1, coeffs));
        }
        let g = LieAlgebra::from_brackets(n, entries)?;
        Ok(if self.name.is_empty() { g } else { g.with_name(self.name.clone()) })
    }

    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let brackets = g
            .nonzero_brackets()
            .map(|(i, j, v)| BracketEntry {
                i: i + 1,
                j: j + 1,
                coeffs: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| ((k + 1).to_string(), c.clone()))
                    .collect(),
            })
            .collect();
        LieAlgebraFile {
            dim: g.dim(),
            name: g.name().unwrap_or_default().to_string(),
            brackets,
        }
    }
}

pub fn parse_lie_algebra(json: &str) -> Result<LieAlgebra> {
    let file: LieAlgebraFile = serde_json::from_str(json).map_err(|e| {
        Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
    })?;
    file.to_algebra()
}

pub fn lie_algebra_to_json(g: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&LieAlgebraFile::from_algebra(g)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalog::{catalog_get, CatalogId, Family};

    #[test]
    fn parses_heisenberg_plus_line() {
        let json = r#"{ "dim": 4, "name": "g3.1+g1",
            "brackets": [ { "i": 2, "j": 3, "coeffs": { "1": "1" } } ] }"#;
        let g = parse_lie_algebra(json).unwrap();
        assert_eq!(g, catalog_get(&CatalogId::plain(Family::G31PlusG1)).unwrap().with_name("g3.1+g1"));
    }

    #[test]
    fn rejects_bad_files() {
        let cases = [
            r#"{ "dim": 4, "brackets": [ { "i": 3, "j": 2, "coeffs": { "1": "1" } } ] }"#,
            r#"{ "dim": 4, "brackets": [ { "i": 0, "j": 2, "coeffs": { "1": "1" } } ] }"#,
            r#"{ "dim": 4, "brackets": [ { "i": 1, "j": 2, "coeffs": { "5": "1" } } ] }"#,
            r#"{ "dim": 4, "brackets": [ { "i": 1, "j": 2, "coeffs": { "1": "1/0" } } ] }"#,
            r#"{ "dim": 4, "brackets": [ { "i": 1, "j": 2, "coeffs": { "x": "1" } } ] }"#,
            r#"{ "dim": 4, "bracket": [] }"#,
            r#"{ "dim": 4, "#,
        ];
        for c in cases {
            assert!(parse_lie_algebra(c).is_err(), "{c}");
        }
    }

    #[test]
    fn catalog_round_trips_through_json() {
        for f in Family::ALL {
            for id in f.grid_ids() {
                let g = catalog_get(&id).unwrap();
                assert_eq!(parse_lie_algebra(&lie_algebra_to_json(&g)).unwrap(), g);
            }
        }
    }
}
