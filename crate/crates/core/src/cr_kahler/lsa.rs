//! The product on `H` induced by `ω`: `xy` is the unique element of `H` with
//! `ω(xy, z) = −ω(y, [x, z])` for every `z ∈ H`.

use super::{CrError, KahlerCrData};
use crate::lie::LieAlgebra;
use crate::linalg::{solve, Rational, Subspace, Vector};
use crate::report::{CheckResult, Report, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftSymmetricProduct {
    h: Subspace,
    /// `coords[s][t]`: product of the `s`-th and `t`-th basis vectors of `H`,
    /// in `H`-coordinates.
    coords: Vec<Vec<Vector>>,
}

impl LeftSymmetricProduct {
    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn h_basis(&self) -> &[Vector] {
        self.h.basis()
    }

    /// Product of two basis vectors of `H`, in ambient coordinates.
    pub fn basis_product(&self, s: usize, t: usize) -> Vector {
        self.h.combine(&self.coords[s][t])
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().flatten().all(Vector::is_zero)
    }

    fn mul_coords(&self, x: &Vector, y: &Vector) -> Vector {
        let m = self.h.dim();
        let mut out = Vector::zeros(m);
        for s in 0..m {
            if x[s].is_zero() {
                continue;
            }
            for t in 0..m {
                if !y[t].is_zero() {
                    out.axpy(&(&x[s] * &y[t]), &self.coords[s][t]);
                }
            }
        }
        out
    }

    fn coords_of(&self, x: &Vector) -> Result<Vector, CrError> {
        self.h.coordinates(x)?.ok_or(CrError::NotInH)
    }

    /// `xy` for ambient vectors `x, y ∈ H`.
    pub fn product(&self, x: &Vector, y: &Vector) -> Result<Vector, CrError> {
        let p = self.mul_coords(&self.coords_of(x)?, &self.coords_of(y)?);
        Ok(self.h.combine(&p))
    }

    /// `[x, y]' = xy − yx`.
    pub fn commutator(&self, x: &Vector, y: &Vector) -> Result<Vector, CrError> {
        Ok(&self.product(x, y)? - &self.product(y, x)?)
    }

    /// `H` with the bracket `[,]'`, in the stored basis of `H`. Fails when
    /// `[,]'` violates the Jacobi identity.
    pub fn induced_algebra(&self, names: Vec<String>) -> Result<LieAlgebra, CrError> {
        Ok(LieAlgebra::new(names, self.commutator_table())?)
    }

    fn commutator_table(&self) -> Vec<Vec<Vector>> {
        let m = self.h.dim();
        (0..m)
            .map(|s| {
                (0..m)
                    .map(|t| &self.coords[s][t] - &self.coords[t][s])
                    .collect()
            })
            .collect()
    }
}

pub fn left_symmetric_product(k: &KahlerCrData) -> Result<LeftSymmetricProduct, CrError> {
    let w = k.omega_on_h();
    if w.det().is_zero() {
        return Err(CrError::DegenerateOmega);
    }
    let hb = k.h().basis();
    let m = hb.len();
    let wt = w.transpose();
    let mut coords = vec![vec![Vector::zeros(m); m]; m];
    for (s, x) in hb.iter().enumerate() {
        for (t, y) in hb.iter().enumerate() {
            // Σ_u c_u ω(h_u, z) = −ω(y, [x, z]) for z over the basis of H
            let rhs: Vector = hb.iter().map(|z| -k.omega(y, &k.cr().br(x, z))).collect();
            coords[s][t] = solve(&wt, &rhs)?.expect("nondegenerate system is solvable");
        }
    }
    Ok(LeftSymmetricProduct {
        h: k.h().clone(),
        coords,
    })
}

/// Verifies `ω(xy − yx, u) = ω([x,y], u)` on `H`, the Jacobi identity of
/// `[,]'`, and, when that holds, left symmetry
/// `x(yz) − (xy)z = y(xz) − (yx)z`.
pub fn check_left_symmetric(k: &KahlerCrData, p: &LeftSymmetricProduct) -> Report {
    let hb = k.h().basis();
    let m = hb.len();
    let label = |v: &Vector| k.cr().label(v);
    let mut report = Report::new();

    let mut identity = None;
    'outer: for a in 0..m {
        for b in 0..m {
            let comm = &p.basis_product(a, b) - &p.basis_product(b, a);
            let br = k.cr().br(&hb[a], &hb[b]);
            for u in hb {
                let defect: Rational = k.omega(&comm, u) - k.omega(&br, u);
                if !defect.is_zero() {
                    identity = Some(Witness::new(
                        vec![label(&hb[a]), label(&hb[b]), label(u)],
                        defect.to_string(),
                    ));
                    break 'outer;
                }
            }
        }
    }
    report.push(CheckResult::from_witness(
        "lsa.commutator_is_bracket",
        identity,
    ));

    let induced = LieAlgebra::from_table_unchecked(
        (0..m).map(|s| format!("h{}", s + 1)).collect(),
        p.commutator_table(),
    )
    .expect("commutator table has the right shape");
    let mut jacobi = None;
    'jac: for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let jac = induced.jacobiator(a, b, c);
                if !jac.is_zero() {
                    jacobi = Some(Witness::new(
                        vec![label(&hb[a]), label(&hb[b]), label(&hb[c])],
                        label(&k.h().combine(&jac)),
                    ));
                    break 'jac;
                }
            }
        }
    }
    let jacobi_holds = jacobi.is_none();
    report.push(CheckResult::from_witness("lsa.bracket_jacobi", jacobi));

    if !jacobi_holds {
        report.push(CheckResult::skipped(
            "lsa.left_symmetry",
            "induced bracket fails the Jacobi identity",
        ));
        return report;
    }

    let e = |i| Vector::basis(m, i);
    let mut left_sym = None;
    'ls: for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let (x, y, z) = (e(a), e(b), e(c));
                let lhs = &p.mul_coords(&x, &p.mul_coords(&y, &z))
                    - &p.mul_coords(&p.mul_coords(&x, &y), &z);
                let rhs = &p.mul_coords(&y, &p.mul_coords(&x, &z))
                    - &p.mul_coords(&p.mul_coords(&y, &x), &z);
                let defect = &lhs - &rhs;
                if !defect.is_zero() {
                    left_sym = Some(Witness::new(
                        vec![label(&hb[a]), label(&hb[b]), label(&hb[c])],
                        label(&k.h().combine(&defect)),
                    ));
                    break 'ls;
                }
            }
        }
    }
    report.push(CheckResult::from_witness("lsa.left_symmetry", left_sym));
    report
}
