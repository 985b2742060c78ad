//! Python bindings. Rationals cross the boundary as strings `"p/q"`, which
//! `fractions.Fraction` accepts directly.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use crlie_core::catalog::{self, algebras};
use crlie_core::cr_kahler::left_symmetric_product;
use crlie_core::multivector::schouten;
use crlie_core::{Bivector, Document, LieAlgebra, Matrix, Rational, Report, Status, Vector};

fn to_vector(xs: &[String]) -> PyResult<Vector> {
    xs.iter()
        .map(|s| {
            s.parse::<Rational>()
                .map_err(|e| PyValueError::new_err(e.to_string()))
        })
        .collect()
}

fn from_vector(v: &Vector) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

fn from_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors().iter().map(from_vector).collect()
}

fn check_len(v: &Vector, n: usize) -> PyResult<()> {
    if v.len() == n {
        Ok(())
    } else {
        Err(PyValueError::new_err(format!(
            "expected {n} coordinates, got {}",
            v.len()
        )))
    }
}

#[pyclass(name = "LieAlgebra", module = "crlie", frozen)]
struct PyLieAlgebra {
    inner: LieAlgebra,
}

#[pymethods]
impl PyLieAlgebra {
    /// `brackets` holds `(x, y, result)` with 1-based `x < y`.
    #[new]
    fn new(names: Vec<String>, brackets: Vec<(usize, usize, Vec<String>)>) -> PyResult<Self> {
        let n = names.len();
        let mut list = Vec::new();
        for (x, y, r) in brackets {
            if x == 0 || y == 0 || x > n || y > n {
                return Err(PyValueError::new_err(format!(
                    "index ({x}, {y}) out of range 1..={n}"
                )));
            }
            list.push((x - 1, y - 1, to_vector(&r)?));
        }
        let inner = LieAlgebra::from_brackets(names, &list)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyLieAlgebra { inner })
    }

    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        let inner = match name {
            "so3" => algebras::so3(),
            "sl2" => algebras::sl2(),
            "heisenberg" => algebras::heisenberg(),
            "aff_aff" => algebras::aff_aff(),
            "so3_plus_r" => algebras::so3_plus_r(),
            other => return Err(PyKeyError::new_err(other.to_string())),
        };
        Ok(PyLieAlgebra { inner })
    }

    #[staticmethod]
    fn abelian(n: usize) -> Self {
        PyLieAlgebra {
            inner: LieAlgebra::abelian(n),
        }
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    fn bracket(&self, x: Vec<String>, y: Vec<String>) -> PyResult<Vec<String>> {
        let v = self
            .inner
            .bracket(&to_vector(&x)?, &to_vector(&y)?)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(from_vector(&v))
    }

    fn killing_form(&self) -> Vec<Vec<String>> {
        from_matrix(&self.inner.killing_form())
    }

    fn is_semisimple(&self) -> bool {
        self.inner.is_semisimple()
    }

    /// Basis rows of the center.
    fn center(&self) -> Vec<Vec<String>> {
        self.inner
            .center()
            .basis()
            .iter()
            .map(from_vector)
            .collect()
    }

    /// `[P, Q]` for bivectors in lexicographic `e_i∧e_j` coordinates; the
    /// result is in lexicographic `e_i∧e_j∧e_k` coordinates.
    fn schouten(&self, p: Vec<String>, q: Vec<String>) -> PyResult<Vec<String>> {
        let n = self.inner.dim();
        let (p, q) = (to_vector(&p)?, to_vector(&q)?);
        check_len(&p, n * n.saturating_sub(1) / 2)?;
        check_len(&q, n * n.saturating_sub(1) / 2)?;
        let t = schouten(
            &self.inner,
            &Bivector::from_coords(n, p),
            &Bivector::from_coords(n, q),
        )
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(from_vector(t.coords()))
    }

    fn __repr__(&self) -> String {
        format!(
            "LieAlgebra(dim={}, names={:?})",
            self.inner.dim(),
            self.inner.names()
        )
    }
}

#[pyclass(name = "Report", module = "crlie", frozen)]
struct PyReport {
    inner: Report,
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
    }
}

#[pymethods]
impl PyReport {
    /// True when no check failed.
    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed()
    }

    /// `(check_id, status)` pairs in emission order.
    fn checks(&self) -> Vec<(String, String)> {
        self.inner
            .checks
            .iter()
            .map(|c| (c.check_id.clone(), status_name(c.status).to_string()))
            .collect()
    }

    /// `(check_id, basis, value)` for the first witness of each failure.
    fn failures(&self) -> Vec<(String, Vec<String>, String)> {
        self.inner
            .failures()
            .filter_map(|c| {
                c.witnesses
                    .first()
                    .map(|w| (c.check_id.clone(), w.basis.clone(), w.value.clone()))
            })
            .collect()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn to_structured(&self) -> String {
        self.inner.to_structured()
    }
}

#[pyclass(name = "Document", module = "crlie", frozen)]
struct PyDocument {
    inner: Document,
}

#[pymethods]
impl PyDocument {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = Document::parse(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyDocument { inner })
    }

    #[staticmethod]
    fn from_catalog(id: &str) -> PyResult<Self> {
        let entry = catalog::get(id).map_err(|e| PyKeyError::new_err(e.to_string()))?;
        Ok(PyDocument {
            inner: entry.document,
        })
    }

    #[getter]
    fn description(&self) -> Option<String> {
        self.inner.description().map(str::to_string)
    }

    #[getter]
    fn algebra(&self) -> PyLieAlgebra {
        PyLieAlgebra {
            inner: self.inner.algebra().clone(),
        }
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn check(&self) -> PyReport {
        PyReport {
            inner: crlie_core::run_all(&self.inner),
        }
    }

    /// Table `t[s][u]` of products of the stored basis vectors of `H`, in
    /// ambient coordinates.
    fn left_symmetric_product(&self) -> PyResult<Vec<Vec<Vec<String>>>> {
        let k = self
            .inner
            .kahler()
            .ok_or_else(|| PyValueError::new_err("document needs `cr` and `metric` blocks"))?;
        let p = left_symmetric_product(k).map_err(|e| PyValueError::new_err(e.to_string()))?;
        let m = p.h_basis().len();
        Ok((0..m)
            .map(|s| {
                (0..m)
                    .map(|u| from_vector(&p.basis_product(s, u)))
                    .collect()
            })
            .collect())
    }
}

/// `(id, description)` for every catalog entry.
#[pyfunction]
fn catalog_list() -> Vec<(String, String)> {
    catalog::list()
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

#[pymodule]
fn crlie(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLieAlgebra>()?;
    m.add_class::<PyDocument>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(catalog_list, m)?)?;
    Ok(())
}
