//! CR and Kähler-CR structures on Lie algebras.
//!
//! A CR structure is a subspace `H` with an endomorphism `j` (stored on the
//! whole algebra, usually zero off `H`) such that `j(H) ⊆ H`, `j² = −1` on
//! `H`, and for `x, y ∈ H`
//!
//! ```text
//! [x,y] − [jx,jy] ∈ H
//! [jx,jy] = [x,y] + j([x,jy] + [jx,y])
//! ```
//!
//! Kähler-CR data adds a positive definite inner product whose form
//! `ω(x,y) = ⟨x, jy⟩` is antisymmetric, closed
//! (`ω([x,y],z) + ω([z,x],y) + ω([y,z],x) = 0`), and nondegenerate on `H`.

mod exactness;
mod extension;
mod lsa;
mod structure;

pub use exactness::{semisimple_exactness, Exactness};
pub use extension::{build_extension, ExtensionOutcome, ExtensionSpec};
pub use lsa::{check_left_symmetric, left_symmetric_product, LeftSymmetricProduct};
pub use structure::{
    center_u, check_radical_not_semisimple, ideal_complement_complex, omega_radical, CenterU,
    ComplexQuotient, OmegaRadical,
};

use crate::lie::{LieAlgebra, LieError};
use crate::linalg::{kernel, LinalgError, Matrix, Rational, Subspace, Vector};
use crate::report::{CheckResult, Report, Witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CrError {
    #[error("{0}")]
    Shape(String),
    #[error("metric is not symmetric: <e{}, e{}> differs from <e{}, e{}>", .0 + 1, .1 + 1, .1 + 1, .0 + 1)]
    MetricNotSymmetric(usize, usize),
    #[error("metric is not positive definite: leading principal minor {} is {value}", .index + 1)]
    MetricNotPositiveDefinite { index: usize, value: Rational },
    #[error("omega restricted to H is degenerate")]
    DegenerateOmega,
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("ideal and H are not supplementary")]
    NotSupplementary,
    #[error("extension base must have H equal to the whole algebra")]
    ExtensionBaseNotWhole,
    #[error("invalid extension cocycle: {0}")]
    InvalidAlpha(String),
    #[error("vector is not in H")]
    NotInH,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `(G, H, j)`. Construction checks shapes only; the CR conditions
/// themselves are verified by [`check_cr`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrData {
    algebra: LieAlgebra,
    h: Subspace,
    j: Matrix,
}

impl CrData {
    pub fn new(algebra: LieAlgebra, h: Subspace, j: Matrix) -> Result<Self, CrError> {
        let n = algebra.dim();
        if h.ambient_dim() != n {
            return Err(CrError::Shape(format!(
                "H lives in dimension {}, algebra has dimension {n}",
                h.ambient_dim()
            )));
        }
        if j.rows() != n || j.cols() != n {
            return Err(CrError::Shape(format!(
                "j is {}x{}, expected {n}x{n}",
                j.rows(),
                j.cols()
            )));
        }
        Ok(CrData { algebra, h, j })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn j(&self) -> &Matrix {
        &self.j
    }

    pub(crate) fn label(&self, v: &Vector) -> String {
        self.algebra.format_vector(v)
    }

    pub(crate) fn name(&self, i: usize) -> String {
        self.algebra.names()[i].clone()
    }

    pub(crate) fn br(&self, x: &Vector, y: &Vector) -> Vector {
        self.algebra.br(x, y)
    }

    pub(crate) fn apply_j(&self, x: &Vector) -> Vector {
        self.j.mul_vec(x)
    }
}

/// CR data with a positive definite inner product (Gram matrix).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KahlerCrData {
    cr: CrData,
    metric: Matrix,
    omega: Matrix,
}

impl KahlerCrData {
    pub fn new(cr: CrData, metric: Matrix) -> Result<Self, CrError> {
        let n = cr.algebra.dim();
        if metric.rows() != n || metric.cols() != n {
            return Err(CrError::Shape(format!(
                "metric is {}x{}, expected {n}x{n}",
                metric.rows(),
                metric.cols()
            )));
        }
        for r in 0..n {
            for c in r + 1..n {
                if metric.get(r, c) != metric.get(c, r) {
                    return Err(CrError::MetricNotSymmetric(r, c));
                }
            }
        }
        if let Some((index, value)) = metric
            .leading_principal_minors()
            .into_iter()
            .enumerate()
            .find(|(_, m)| !m.is_positive())
        {
            return Err(CrError::MetricNotPositiveDefinite { index, value });
        }
        let omega = metric.mul(&cr.j);
        Ok(KahlerCrData { cr, metric, omega })
    }

    pub fn cr(&self) -> &CrData {
        &self.cr
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.cr.algebra
    }

    pub fn h(&self) -> &Subspace {
        &self.cr.h
    }

    pub fn j(&self) -> &Matrix {
        &self.cr.j
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    /// Gram matrix of `ω`: entry `(a, b)` is `ω(e_a, e_b) = ⟨e_a, j e_b⟩`.
    pub fn omega_matrix(&self) -> &Matrix {
        &self.omega
    }

    pub fn omega(&self, x: &Vector, y: &Vector) -> Rational {
        self.omega.bilinear(x, y)
    }

    /// Same data with `⟨,⟩` multiplied by `s > 0`.
    pub fn scaled(&self, s: &Rational) -> Result<Self, CrError> {
        KahlerCrData::new(self.cr.clone(), self.metric.scale(s))
    }

    /// Gram matrix of `ω` restricted to the stored basis of `H`.
    pub(crate) fn omega_on_h(&self) -> Matrix {
        let b = self.h().basis();
        Matrix::from_fn(b.len(), b.len(), |s, t| self.omega(&b[s], &b[t]))
    }
}

/// The CR conditions: `j` preserves `H` with `j² = −1` there, and the two
/// bracket conditions hold on all basis pairs of `H`.
pub fn check_cr(d: &CrData) -> Report {
    let n = d.algebra.dim();
    let hb = d.h.basis();
    let mut report = Report::new();

    let mut preserves = CheckResult::from_witness(
        "cr.j_preserves_h",
        (0..n).find_map(|k| {
            let jk = d.j.column(k);
            (!d.h.contains(&jk).unwrap()).then(|| Witness::new(vec![d.name(k)], d.label(&jk)))
        }),
    );
    // j vanishes on some complement of H iff rank j = dim H.
    if d.j.rank() > d.h.dim() {
        preserves = preserves.with_note("j does not vanish on any complement of H");
    }
    report.push(preserves);

    report.push(CheckResult::from_witness(
        "cr.j_squared",
        hb.iter().find_map(|x| {
            let jj = d.apply_j(&d.apply_j(x));
            let defect = &jj + x;
            (!defect.is_zero()).then(|| Witness::new(vec![d.label(x)], d.label(&defect)))
        }),
    ));

    let pairs = || hb.iter().flat_map(|x| hb.iter().map(move |y| (x, y)));

    report.push(CheckResult::from_witness(
        "cr.bracket_defect_in_h",
        pairs().find_map(|(x, y)| {
            let v = &d.br(x, y) - &d.br(&d.apply_j(x), &d.apply_j(y));
            (!d.h.contains(&v).unwrap())
                .then(|| Witness::new(vec![d.label(x), d.label(y)], d.label(&v)))
        }),
    ));

    report.push(CheckResult::from_witness(
        "cr.integrable",
        pairs().find_map(|(x, y)| {
            let (jx, jy) = (d.apply_j(x), d.apply_j(y));
            let inner = &d.br(x, &jy) + &d.br(&jx, y);
            let v = &(&d.br(&jx, &jy) - &d.br(x, y)) - &d.apply_j(&inner);
            (!v.is_zero()).then(|| Witness::new(vec![d.label(x), d.label(y)], d.label(&v)))
        }),
    ));
    report
}

/// Antisymmetry, closedness and nondegeneracy on `H` of `ω = ⟨·, j·⟩`.
pub fn check_kahler(k: &KahlerCrData) -> Report {
    let n = k.algebra().dim();
    let cr = &k.cr;
    let om = &k.omega;
    let mut report = Report::new();

    let antisym = (0..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .find_map(|(a, b)| {
            let (x, y) = (om.get(a, b), om.get(b, a));
            (!(x + y).is_zero()).then(|| {
                Witness::new(
                    vec![cr.name(a), cr.name(b)],
                    format!(
                        "omega({p},{q}) = {x}, omega({q},{p}) = {y}",
                        p = cr.name(a),
                        q = cr.name(b)
                    ),
                )
            })
        });
    report.push(CheckResult::from_witness(
        "kahler.omega_antisymmetric",
        antisym,
    ));

    let e = |i| Vector::basis(n, i);
    let mut closed = None;
    'outer: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let s = k.omega(k.algebra().basis_bracket(a, b), &e(c))
                    + k.omega(k.algebra().basis_bracket(c, a), &e(b))
                    + k.omega(k.algebra().basis_bracket(b, c), &e(a));
                if !s.is_zero() {
                    closed = Some(Witness::new(
                        vec![cr.name(a), cr.name(b), cr.name(c)],
                        s.to_string(),
                    ));
                    break 'outer;
                }
            }
        }
    }
    report.push(CheckResult::from_witness("kahler.omega_closed", closed));

    let w = k.omega_on_h();
    let radical = kernel(&w.transpose());
    report.push(CheckResult::from_witness(
        "kahler.omega_nondegenerate_on_h",
        radical.basis().first().map(|c| {
            let x = k.h().combine(c);
            Witness::new(vec![cr.label(&x)], "omega(x, H) = 0")
        }),
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{algebras, structures};
    use crate::report::Status;

    #[test]
    fn so3_example_is_cr() {
        let k = structures::so3_kahler();
        assert!(check_cr(k.cr()).all_pass());
        assert!(check_kahler(&k).all_pass());
        let e = |i| Vector::basis(3, i);
        assert_eq!(k.omega(&e(0), &e(1)), Rational::from_int(-1));
        for i in 0..3 {
            assert!(k.omega(&e(2), &e(i)).is_zero());
        }
    }

    #[test]
    fn flat_example_is_cr() {
        let k = structures::rn_flat_kahler();
        assert!(check_cr(k.cr()).all_pass());
        assert!(check_kahler(&k).all_pass());
    }

    #[test]
    fn rotated_so3_plane_still_passes() {
        // H = span{e1, e3}, j e1 = e3, j e3 = -e1
        let j = Matrix::from_int_rows(&[&[0, 0, -1], &[0, 0, 0], &[1, 0, 0]]);
        let d = CrData::new(algebras::so3(), Subspace::coordinate(3, &[0, 2]), j).unwrap();
        assert!(check_cr(&d).all_pass());
    }

    #[test]
    fn integrability_fails_on_mismatched_pairing() {
        let d = structures::aff_aff_bad_j();
        let r = check_cr(&d);
        let c3 = r.get("cr.integrable").unwrap();
        assert_eq!(c3.status, Status::Fail);
        assert_eq!(c3.witnesses[0].basis, vec!["e1", "e2"]);
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn broken_j_is_reported() {
        // j² = +1 on H
        let j = Matrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let d = CrData::new(algebras::so3(), Subspace::coordinate(3, &[0, 1]), j).unwrap();
        let r = check_cr(&d);
        assert_eq!(r.status("cr.j_squared"), Some(Status::Fail));
        assert_eq!(r.status("cr.j_preserves_h"), Some(Status::Pass));

        let leaks = Matrix::from_int_rows(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let d = CrData::new(algebras::so3(), Subspace::coordinate(3, &[0, 1]), leaks).unwrap();
        let r = check_cr(&d);
        let c = r.get("cr.j_preserves_h").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witnesses[0].basis, vec!["e3"]);
        assert!(c.note.is_some());
    }

    #[test]
    fn broken_metric_fails_antisymmetry() {
        let k = structures::so3_bad_metric();
        let r = check_kahler(&k);
        let c = r.get("kahler.omega_antisymmetric").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witnesses[0].basis, vec!["e1", "e2"]);
        assert_eq!(c.witnesses[0].value, "omega(e1,e2) = -1, omega(e2,e1) = 2");
    }

    #[test]
    fn metric_validation() {
        let cr = structures::so3_kahler().cr().clone();
        let indefinite = Matrix::from_int_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
        assert!(matches!(
            KahlerCrData::new(cr.clone(), indefinite),
            Err(CrError::MetricNotPositiveDefinite { index: 1, .. })
        ));
        let asym = Matrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            KahlerCrData::new(cr.clone(), asym),
            Err(CrError::MetricNotSymmetric(0, 1))
        );
        assert!(CrData::new(algebras::so3(), Subspace::zero(2), Matrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn degenerate_omega_on_h() {
        // j = 0 on H = span{e1, e2} gives omega = 0
        let d = CrData::new(
            algebras::so3(),
            Subspace::coordinate(3, &[0, 1]),
            Matrix::zeros(3, 3),
        )
        .unwrap();
        let k = KahlerCrData::new(d, Matrix::identity(3)).unwrap();
        let r = check_kahler(&k);
        assert_eq!(
            r.status("kahler.omega_nondegenerate_on_h"),
            Some(Status::Fail)
        );
    }
}
