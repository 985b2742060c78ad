//! The input file format.
//!
//! A document is a JSON object. Only `algebra` is required:
//!
//! ```text
//! {
//!   "description": "...",
//!   "algebra": { "dim": 3, "names": ["e1","e2","e3"],
//!                "brackets": [ {"x": 1, "y": 2, "result": ["0","0","1"]} ] },
//!   "cr":      { "H": [[...], ...], "j": [[...], ...] },
//!   "metric":  [[...], ...],
//!   "poisson": { "U": [[...], ...], "lambda": [ {"i": 1, "j": 2, "coeff": "1"} ] },
//!   "ideal":   [[...], ...],
//!   "extension": { "V_dim": 1, "alpha": [ {"x": 1, "y": 2, "result": ["1"]} ],
//!                  "mixed": [ {"x": 1, "y": 1, "result": [...]} ] }
//! }
//! ```
//!
//! Indices are 1-based. Rationals are strings `"p/q"` or `"p"`; plain JSON
//! integers are accepted too. A bracket `{x, y, result}` sets `[e_x, e_y]`;
//! `[e_y, e_x]` is its negative unless listed separately, and unlisted
//! brackets are zero. Subspaces (`H`, `U`, `ideal`) are given by spanning
//! rows. `j` and `metric` are matrices given by rows; `j` sends `e_c` to its
//! `c`-th column. `metric`, `ideal` and `extension` need `cr`; `extension`
//! also needs `metric` and `H` equal to the whole algebra. In `mixed`, `x`
//! indexes `H`, `y` indexes `V`, and `result` is `[h_x, v_y]` in `H ⊕ V`.
//! When `cr` is present, `poisson.U` must be supplementary to `H`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cr_kahler::{CrData, CrError, ExtensionSpec, KahlerCrData};
use crate::lie::{default_names, LieAlgebra, LieError};
use crate::linalg::{Matrix, Rational, Subspace, Vector};
use crate::multivector::{pairs, Bivector};
use crate::poisson::{PoissonError, PseudoPoissonData};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// Field path such as `algebra.brackets[2]`, or `line L, column C` for
    /// syntax errors.
    pub location: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct DocumentError {
    pub diagnostics: Vec<Diagnostic>,
}

impl DocumentError {
    fn one(location: impl Into<String>, message: impl Into<String>) -> Self {
        DocumentError {
            diagnostics: vec![Diagnostic {
                location: location.into(),
                message: message.into(),
            }],
        }
    }
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.diagnostics.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: {}", d.location, d.message)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    algebra: RawAlgebra,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cr: Option<RawCr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metric: Option<Vec<Vec<Rational>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    poisson: Option<RawPoisson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ideal: Option<Vec<Vec<Rational>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    extension: Option<RawExtension>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<RawBracket>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    x: usize,
    y: usize,
    result: Vec<Rational>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCr {
    #[serde(rename = "H")]
    h: Vec<Vec<Rational>>,
    j: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoisson {
    #[serde(rename = "U")]
    u: Vec<Vec<Rational>>,
    #[serde(default)]
    lambda: Vec<RawPair>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    i: usize,
    j: usize,
    coeff: Rational,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExtension {
    #[serde(rename = "V_dim")]
    v_dim: usize,
    #[serde(default)]
    alpha: Vec<RawBracket>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    mixed: Vec<RawBracket>,
}

/// A validated document: an algebra with the optional blocks that enable
/// further checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    description: Option<String>,
    algebra: LieAlgebra,
    cr: Option<CrData>,
    kahler: Option<KahlerCrData>,
    poisson: Option<PseudoPoissonData>,
    ideal: Option<Subspace>,
    extension: Option<ExtensionSpec>,
}

fn lie_diag(location: &str, e: LieError) -> DocumentError {
    DocumentError::one(location, e.to_string())
}

fn cr_diag(location: &str, e: CrError) -> DocumentError {
    DocumentError::one(location, e.to_string())
}

fn poisson_diag(location: &str, e: PoissonError) -> DocumentError {
    DocumentError::one(location, e.to_string())
}

impl Document {
    pub fn new(algebra: LieAlgebra) -> Self {
        Document {
            description: None,
            algebra,
            cr: None,
            kahler: None,
            poisson: None,
            ideal: None,
            extension: None,
        }
    }

    pub fn with_description(mut self, d: impl Into<String>) -> Self {
        self.description = Some(d.into());
        self
    }

    pub fn with_cr(mut self, h: Subspace, j: Matrix) -> Result<Self, DocumentError> {
        self.cr = Some(CrData::new(self.algebra.clone(), h, j).map_err(|e| cr_diag("cr", e))?);
        Ok(self)
    }

    pub fn with_metric(mut self, metric: Matrix) -> Result<Self, DocumentError> {
        let cr = self
            .cr
            .clone()
            .ok_or_else(|| DocumentError::one("metric", "a metric needs a cr block"))?;
        self.kahler = Some(KahlerCrData::new(cr, metric).map_err(|e| cr_diag("metric", e))?);
        Ok(self)
    }

    pub fn with_poisson(mut self, u: Subspace, lambda: Bivector) -> Result<Self, DocumentError> {
        let data = match &self.cr {
            Some(cr) => PseudoPoissonData::new(
                self.algebra.clone(),
                cr.h().clone(),
                u,
                Some(cr.j().clone()),
                lambda,
            ),
            None => PseudoPoissonData::without_j(self.algebra.clone(), u, lambda),
        };
        self.poisson = Some(data.map_err(|e| poisson_diag("poisson", e))?);
        Ok(self)
    }

    pub fn with_ideal(mut self, ideal: Subspace) -> Result<Self, DocumentError> {
        if self.cr.is_none() {
            return Err(DocumentError::one("ideal", "an ideal needs a cr block"));
        }
        if ideal.ambient_dim() != self.algebra.dim() {
            return Err(DocumentError::one("ideal", "wrong ambient dimension"));
        }
        self.ideal = Some(ideal);
        Ok(self)
    }

    pub fn with_extension(mut self, spec: ExtensionSpec) -> Result<Self, DocumentError> {
        let k = self.kahler.as_ref().ok_or_else(|| {
            DocumentError::one("extension", "an extension needs cr and metric blocks")
        })?;
        // Shape and antisymmetry problems of alpha are input errors.
        crate::cr_kahler::build_extension(k, &spec).map_err(|e| cr_diag("extension", e))?;
        self.extension = Some(spec);
        Ok(self)
    }

    pub fn description(&self) -> Option<&str> {
        self.description.as_deref()
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn cr(&self) -> Option<&CrData> {
        self.cr.as_ref()
    }

    pub fn kahler(&self) -> Option<&KahlerCrData> {
        self.kahler.as_ref()
    }

    pub fn poisson(&self) -> Option<&PseudoPoissonData> {
        self.poisson.as_ref()
    }

    pub fn ideal(&self) -> Option<&Subspace> {
        self.ideal.as_ref()
    }

    pub fn extension(&self) -> Option<&ExtensionSpec> {
        self.extension.as_ref()
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| {
            let msg = e.to_string();
            let msg = match msg.rfind(" at line ") {
                Some(p) => msg[..p].to_string(),
                None => msg,
            };
            DocumentError::one(format!("line {}, column {}", e.line(), e.column()), msg)
        })?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: RawDocument) -> Result<Self, DocumentError> {
        let n = raw.algebra.dim;
        let names = match raw.algebra.names {
            Some(names) => {
                if names.len() != n {
                    return Err(DocumentError::one(
                        "algebra.names",
                        format!("{} names for dimension {n}", names.len()),
                    ));
                }
                for (i, a) in names.iter().enumerate() {
                    if names[..i].contains(a) {
                        return Err(DocumentError::one(
                            format!("algebra.names[{i}]"),
                            format!("duplicate name {a:?}"),
                        ));
                    }
                }
                names
            }
            None => default_names(n),
        };

        let mut diagnostics = Vec::new();
        let mut table = vec![vec![Vector::zeros(n); n]; n];
        let mut listed = vec![vec![false; n]; n];
        for (idx, b) in raw.algebra.brackets.iter().enumerate() {
            let loc = format!("algebra.brackets[{idx}]");
            if let Err(d) = check_index(&loc, "x", b.x, n).and(check_index(&loc, "y", b.y, n)) {
                diagnostics.push(d);
                continue;
            }
            if b.result.len() != n {
                diagnostics.push(Diagnostic {
                    location: format!("{loc}.result"),
                    message: format!("length {}, expected {n}", b.result.len()),
                });
                continue;
            }
            let (x, y) = (b.x - 1, b.y - 1);
            if listed[x][y] {
                diagnostics.push(Diagnostic {
                    location: loc,
                    message: format!("bracket ({}, {}) listed twice", b.x, b.y),
                });
                continue;
            }
            let v = Vector::new(b.result.clone());
            listed[x][y] = true;
            if !listed[y][x] {
                table[y][x] = -&v;
            }
            table[x][y] = v;
        }
        if !diagnostics.is_empty() {
            return Err(DocumentError { diagnostics });
        }
        let algebra = LieAlgebra::new(names, table).map_err(|e| lie_diag("algebra", e))?;

        let mut doc = Document::new(algebra);
        doc.description = raw.description;
        if let Some(cr) = raw.cr {
            let h = subspace("cr.H", &cr.h, n)?;
            let j = matrix("cr.j", cr.j, n)?;
            doc = doc.with_cr(h, j)?;
        }
        if let Some(m) = raw.metric {
            doc = doc.with_metric(matrix("metric", m, n)?)?;
        }
        if let Some(p) = raw.poisson {
            let u = subspace("poisson.U", &p.u, n)?;
            let mut entries = Vec::new();
            for (idx, e) in p.lambda.iter().enumerate() {
                let loc = format!("poisson.lambda[{idx}]");
                check_index(&loc, "i", e.i, n)
                    .and(check_index(&loc, "j", e.j, n))
                    .map_err(|d| DocumentError {
                        diagnostics: vec![d],
                    })?;
                entries.push((e.i - 1, e.j - 1, e.coeff.clone()));
            }
            doc = doc.with_poisson(u, Bivector::from_entries(n, &entries))?;
        }
        if let Some(rows) = raw.ideal {
            doc = doc.with_ideal(subspace("ideal", &rows, n)?)?;
        }
        if let Some(ext) = raw.extension {
            let to_triples = |items: &[RawBracket]| {
                items
                    .iter()
                    .map(|b| {
                        (
                            b.x.wrapping_sub(1),
                            b.y.wrapping_sub(1),
                            Vector::new(b.result.clone()),
                        )
                    })
                    .collect::<Vec<_>>()
            };
            for (idx, b) in ext.alpha.iter().chain(&ext.mixed).enumerate() {
                if b.x == 0 || b.y == 0 {
                    return Err(DocumentError::one(
                        format!("extension entry {idx}"),
                        "indices are 1-based",
                    ));
                }
            }
            doc = doc.with_extension(ExtensionSpec {
                v_dim: ext.v_dim,
                alpha: to_triples(&ext.alpha),
                mixed: to_triples(&ext.mixed),
            })?;
        }
        Ok(doc)
    }

    fn to_raw(&self) -> RawDocument {
        let n = self.algebra.dim();
        let rows = |s: &Subspace| -> Vec<Vec<Rational>> {
            s.basis().iter().map(|v| v.entries().to_vec()).collect()
        };
        let matrix_rows = |m: &Matrix| -> Vec<Vec<Rational>> {
            m.row_vectors()
                .into_iter()
                .map(|v| v.into_entries())
                .collect()
        };
        let brackets = self
            .algebra
            .nonzero_brackets()
            .filter(|(i, j, _)| i < j)
            .map(|(i, j, v)| RawBracket {
                x: i + 1,
                y: j + 1,
                result: v.into_entries(),
            })
            .collect();
        let to_raw_brackets = |items: &[(usize, usize, Vector)]| {
            items
                .iter()
                .map(|(x, y, v)| RawBracket {
                    x: x + 1,
                    y: y + 1,
                    result: v.entries().to_vec(),
                })
                .collect()
        };
        RawDocument {
            description: self.description.clone(),
            algebra: RawAlgebra {
                dim: n,
                names: Some(self.algebra.names().to_vec()),
                brackets,
            },
            cr: self.cr.as_ref().map(|cr| RawCr {
                h: rows(cr.h()),
                j: matrix_rows(cr.j()),
            }),
            metric: self.kahler.as_ref().map(|k| matrix_rows(k.metric())),
            poisson: self.poisson.as_ref().map(|p| RawPoisson {
                u: rows(p.u()),
                lambda: pairs(n)
                    .into_iter()
                    .filter_map(|(i, j)| {
                        let c = p.lambda().get(i, j);
                        (!c.is_zero()).then(|| RawPair {
                            i: i + 1,
                            j: j + 1,
                            coeff: c,
                        })
                    })
                    .collect(),
            }),
            ideal: self.ideal.as_ref().map(rows),
            extension: self.extension.as_ref().map(|e| RawExtension {
                v_dim: e.v_dim,
                alpha: to_raw_brackets(&e.alpha),
                mixed: to_raw_brackets(&e.mixed),
            }),
        }
    }

    /// Pretty JSON in the input format, ending with a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_raw())
            .expect("document serialization cannot fail");
        s.push('\n');
        s
    }
}

fn check_index(loc: &str, field: &str, value: usize, n: usize) -> Result<(), Diagnostic> {
    if value == 0 || value > n {
        Err(Diagnostic {
            location: format!("{loc}.{field}"),
            message: format!("index {value} out of range 1..={n}"),
        })
    } else {
        Ok(())
    }
}

fn subspace(loc: &str, rows: &[Vec<Rational>], n: usize) -> Result<Subspace, DocumentError> {
    if let Some(r) = rows.iter().position(|r| r.len() != n) {
        return Err(DocumentError::one(
            format!("{loc}[{r}]"),
            format!("length {}, expected {n}", rows[r].len()),
        ));
    }
    let vs: Vec<Vector> = rows.iter().map(|r| Vector::new(r.clone())).collect();
    Ok(Subspace::span(n, &vs).expect("lengths checked"))
}

fn matrix(loc: &str, rows: Vec<Vec<Rational>>, n: usize) -> Result<Matrix, DocumentError> {
    if rows.len() != n {
        return Err(DocumentError::one(
            loc,
            format!("{} rows, expected {n}", rows.len()),
        ));
    }
    Matrix::from_rows(rows, n).map_err(|e| DocumentError::one(loc, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_every_entry() {
        for (id, _) in catalog::list() {
            let doc = catalog::get(id).unwrap().document;
            let text = doc.to_json();
            let back = Document::parse(&text).unwrap();
            assert_eq!(back, doc, "{id}");
            assert_eq!(back.to_json(), text, "{id}");
        }
    }

    #[test]
    fn antisymmetry_diagnostic() {
        let text = r#"{"algebra": {"dim": 3, "brackets": [
            {"x": 1, "y": 2, "result": ["0", "0", "1"]},
            {"x": 2, "y": 1, "result": ["0", "0", "1"]}
        ]}}"#;
        let err = Document::parse(text).unwrap_err();
        assert_eq!(err.diagnostics[0].location, "algebra");
        assert_eq!(
            err.diagnostics[0].message,
            "antisymmetry violated at (1, 2, 3)"
        );
    }

    #[test]
    fn zero_denominator_is_reported_at_token() {
        let text = "{\"algebra\": {\"dim\": 2, \"brackets\": [\n  {\"x\": 1, \"y\": 2, \"result\": [\"1/0\", \"0\"]}]}}";
        let err = Document::parse(text).unwrap_err();
        let d = &err.diagnostics[0];
        assert!(d.location.starts_with("line 2,"), "{}", d.location);
        assert!(
            d.message.contains("1/0") && d.message.contains("zero denominator"),
            "{}",
            d.message
        );
    }

    #[test]
    fn structural_diagnostics() {
        let bad_index =
            r#"{"algebra": {"dim": 2, "brackets": [{"x": 1, "y": 3, "result": ["0", "0"]}]}}"#;
        let err = Document::parse(bad_index).unwrap_err();
        assert_eq!(err.diagnostics[0].location, "algebra.brackets[0].y");

        let unknown = r#"{"algebra": {"dim": 1}, "extra": 1}"#;
        assert!(Document::parse(unknown).is_err());

        let metric_alone = r#"{"algebra": {"dim": 1}, "metric": [["1"]]}"#;
        assert_eq!(
            Document::parse(metric_alone).unwrap_err().diagnostics[0].location,
            "metric"
        );

        let indefinite = r#"{"algebra": {"dim": 2}, "cr": {"H": [["1","0"],["0","1"]], "j": [["0","-1"],["1","0"]]},
            "metric": [["1","0"],["0","-1"]]}"#;
        let err = Document::parse(indefinite).unwrap_err();
        assert!(err.to_string().contains("not positive definite"));

        let jacobi = r#"{"algebra": {"dim": 3, "brackets": [
            {"x": 1, "y": 2, "result": ["0","0","1"]},
            {"x": 1, "y": 3, "result": ["1","0","0"]}]}}"#;
        assert!(Document::parse(jacobi)
            .unwrap_err()
            .to_string()
            .contains("Jacobi"));
    }
}
