//! JSON file formats for algebras and representations.
//!
//! Rationals are always strings `"p/q"` (a bare integer is accepted on
//! input). Brackets are listed sparsely; anything unlisted is zero.

use std::path::{Path, PathBuf};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, zero_vector, Matrix, Rational};
use crate::rep::Representation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub result: IndexMap<String, String>,
}

/// Where a representation file finds its algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSource {
    Inline(AlgebraFile),
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub algebra: AlgebraSource,
    pub module_dim: usize,
    pub rho: IndexMap<String, Vec<Vec<String>>>,
    pub lambda: IndexMap<String, Vec<Vec<String>>>,
}

/// The pieces of a representation file before the axioms are checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepParts {
    pub algebra: LeibnizAlgebra,
    pub rho: Vec<Matrix>,
    pub lambda: Vec<Matrix>,
}

fn json_error(e: &serde_json::Error) -> Error {
    let locus = format!("line {} column {}", e.line(), e.column());
    let full = e.to_string();
    // serde_json appends the position, which the locus already carries.
    let message = full
        .strip_suffix(&format!(" at {locus}"))
        .unwrap_or(&full)
        .to_string();
    Error::Parse { locus, message }
}

fn parse_error(locus: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        locus: locus.into(),
        message: message.into(),
    }
}

fn rational_field(locus: &str, s: &str) -> Result<Rational> {
    parse_rational(s)
        .ok_or_else(|| parse_error(locus, format!("`{s}` is not a rational p/q with q > 0")))
}

pub fn parse_algebra(text: &str) -> Result<LeibnizAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    algebra_from_file(&file)
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<LeibnizAlgebra> {
    let n = file.basis.len();
    if file.dim != n {
        return Err(parse_error(
            "dim",
            format!("dim is {} but the basis has {n} labels", file.dim),
        ));
    }
    for (i, label) in file.basis.iter().enumerate() {
        if file.basis[..i].contains(label) {
            return Err(parse_error(
                format!("basis[{i}]"),
                format!("duplicate label `{label}`"),
            ));
        }
    }
    let index = |label: &str| {
        file.basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    };
    let mut table = vec![vec![zero_vector(n); n]; n];
    let mut seen = vec![vec![false; n]; n];
    for (idx, entry) in file.brackets.iter().enumerate() {
        let (i, j) = (index(&entry.left)?, index(&entry.right)?);
        if seen[i][j] {
            return Err(Error::DuplicateBracket(
                entry.left.clone(),
                entry.right.clone(),
            ));
        }
        seen[i][j] = true;
        for (label, value) in &entry.result {
            let k = index(label)?;
            table[i][j][k] = rational_field(&format!("brackets[{idx}].result.{label}"), value)?;
        }
    }
    LeibnizAlgebra::new(file.name.clone(), file.basis.clone(), table)
}

pub fn algebra_to_file(alg: &LeibnizAlgebra) -> AlgebraFile {
    let n = alg.dim();
    let names = alg.basis_names();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let result: IndexMap<String, String> = alg
                .structure(i, j)
                .iter()
                .zip(names)
                .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
                .map(|(c, label)| (label.clone(), format_rational(c)))
                .collect();
            if !result.is_empty() {
                brackets.push(BracketEntry {
                    left: names[i].clone(),
                    right: names[j].clone(),
                    result,
                });
            }
        }
    }
    AlgebraFile {
        name: alg.name().to_string(),
        dim: n,
        basis: names.to_vec(),
        brackets,
    }
}

pub fn serialize_algebra(alg: &LeibnizAlgebra) -> String {
    to_pretty(&algebra_to_file(alg))
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types always serialize");
    s.push('\n');
    s
}

/// Parses a representation file without checking the axioms. A path-valued
/// `algebra` is resolved against `base_dir`.
pub fn parse_rep_parts(text: &str, base_dir: Option<&Path>) -> Result<RepParts> {
    let file: RepFile = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    let algebra = match &file.algebra {
        AlgebraSource::Inline(a) => algebra_from_file(a)?,
        AlgebraSource::Path(p) => {
            let path = base_dir.map_or_else(|| PathBuf::from(p), |b| b.join(p));
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            parse_algebra(&text)?
        }
    };
    let d = file.module_dim;
    if d == 0 {
        return Err(parse_error("module_dim", "must be positive"));
    }
    let rho = matrices(&algebra, &file.rho, d, "rho")?;
    let lambda = matrices(&algebra, &file.lambda, d, "lambda")?;
    Ok(RepParts {
        algebra,
        rho,
        lambda,
    })
}

fn matrices(
    alg: &LeibnizAlgebra,
    map: &IndexMap<String, Vec<Vec<String>>>,
    d: usize,
    field: &str,
) -> Result<Vec<Matrix>> {
    if let Some(label) = map.keys().find(|k| alg.index_of(k).is_none()) {
        return Err(Error::UnknownLabel(label.clone()));
    }
    alg.basis_names()
        .iter()
        .map(|label| {
            let locus = format!("{field}.{label}");
            let rows = map
                .get(label)
                .ok_or_else(|| parse_error(&locus, "missing matrix for this basis label"))?;
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                return Err(parse_error(&locus, format!("matrix must be {d}x{d}")));
            }
            let mut entries = Vec::with_capacity(d * d);
            for (i, row) in rows.iter().enumerate() {
                for (j, s) in row.iter().enumerate() {
                    entries.push(rational_field(&format!("{locus}[{i}][{j}]"), s)?);
                }
            }
            Ok(Matrix::from_entries(d, d, entries))
        })
        .collect()
}

pub fn parse_rep(text: &str, base_dir: Option<&Path>) -> Result<Representation> {
    let parts = parse_rep_parts(text, base_dir)?;
    Representation::new(parts.algebra, parts.rho, parts.lambda)
}

pub fn rep_to_file(rep: &Representation) -> RepFile {
    let names = rep.algebra().basis_names();
    let to_map = |mats: &[Matrix]| -> IndexMap<String, Vec<Vec<String>>> {
        names
            .iter()
            .zip(mats)
            .map(|(label, m)| {
                let rows = m
                    .row_vectors()
                    .map(|r| r.iter().map(format_rational).collect())
                    .collect();
                (label.clone(), rows)
            })
            .collect()
    };
    RepFile {
        algebra: AlgebraSource::Inline(algebra_to_file(rep.algebra())),
        module_dim: rep.module_dim(),
        rho: to_map(rep.rho()),
        lambda: to_map(rep.lambda()),
    }
}

pub fn serialize_rep(rep: &Representation) -> String {
    to_pretty(&rep_to_file(rep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_algebras, catalog_representations};
    use crate::linalg::{int, unit_vector};
    use crate::sl2::sl2_algebra;

    #[test]
    fn sl2_file_lists_six_brackets() {
        let file = algebra_to_file(&sl2_algebra());
        assert_eq!(file.brackets.len(), 6);
        assert_eq!(file.brackets[0].left, "e");
        assert_eq!(file.brackets[0].right, "f");
        assert_eq!(
            file.brackets[0].result.get("h").map(String::as_str),
            Some("1/1")
        );
    }

    #[test]
    fn parse_bracket_value() {
        let text = r#"{"name":"t","dim":3,"basis":["e","f","h"],
            "brackets":[{"left":"e","right":"f","result":{"h":"1/1"}}]}"#;
        let alg = parse_algebra(text).unwrap();
        assert_eq!(
            alg.bracket(&unit_vector(3, 0), &unit_vector(3, 1)).unwrap(),
            unit_vector(3, 2)
        );
    }

    #[test]
    fn parse_errors() {
        let dup = r#"{"name":"t","dim":3,"basis":["e","f","h"],"brackets":[
            {"left":"e","right":"f","result":{"h":"1"}},
            {"left":"e","right":"f","result":{"h":"2"}}]}"#;
        assert_eq!(
            parse_algebra(dup),
            Err(Error::DuplicateBracket("e".into(), "f".into()))
        );

        let unknown = r#"{"name":"t","dim":1,"basis":["e"],"brackets":[
            {"left":"e","right":"q","result":{}}]}"#;
        assert_eq!(parse_algebra(unknown), Err(Error::UnknownLabel("q".into())));

        let bad_rational = r#"{"name":"t","dim":1,"basis":["e"],"brackets":[
            {"left":"e","right":"e","result":{"e":"1/0"}}]}"#;
        match parse_algebra(bad_rational) {
            Err(Error::Parse { locus, .. }) => assert_eq!(locus, "brackets[0].result.e"),
            other => panic!("{other:?}"),
        }

        match parse_algebra("{\n  \"name\": 3\n}") {
            Err(Error::Parse { locus, .. }) => assert!(locus.starts_with("line 2")),
            other => panic!("{other:?}"),
        }

        let bad_dim = r#"{"name":"t","dim":2,"basis":["e"]}"#;
        assert!(matches!(parse_algebra(bad_dim), Err(Error::Parse { .. })));
    }

    #[test]
    fn non_leibniz_files_still_parse() {
        let text = r#"{"name":"bad","dim":1,"basis":["a"],
            "brackets":[{"left":"a","right":"a","result":{"a":"1"}}]}"#;
        let alg = parse_algebra(text).unwrap();
        assert!(!alg.is_valid());
        assert_eq!(alg.structure(0, 0), &[int(1)]);
    }

    #[test]
    fn catalog_round_trips() {
        for alg in catalog_algebras() {
            assert_eq!(parse_algebra(&serialize_algebra(&alg)).unwrap(), alg);
        }
        for rep in catalog_representations() {
            assert_eq!(parse_rep(&serialize_rep(&rep), None).unwrap(), rep);
        }
    }

    #[test]
    fn rep_matrix_errors() {
        let rep = crate::sl2::sl2_leibniz_irrep(1, crate::rep::LambdaVariant::ZeroLambda);
        let mut file = rep_to_file(&rep);
        file.rho.shift_remove("h");
        let text = serde_json::to_string(&file).unwrap();
        match parse_rep(&text, None) {
            Err(Error::Parse { locus, .. }) => assert_eq!(locus, "rho.h"),
            other => panic!("{other:?}"),
        }
    }
}
