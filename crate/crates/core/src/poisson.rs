//! Pseudo-Poisson CR structures at the Lie algebra level.
//!
//! A bivector `Λ` is pseudo-Poisson relative to a subspace `U` when its
//! Schouten square lies in `U∧Λ²G`. Coboundary tensors built from a constant
//! `r ∈ Λ²G` are checked through the derivative of `Ad_x[r,r] − [r,r]`, i.e.
//! the Leibniz action of `ad x` on `Λ³G`.

use crate::lie::{format_combination, LieAlgebra};
use crate::linalg::{LinalgError, Matrix, Subspace, Vector};
use crate::multivector::{
    extend_derivation_2, extend_derivation_3, extend_map_2, in_wedge_subspace, pairs, schouten,
    triples, wedge_residual, Bivector, Trivector,
};
use crate::report::{CheckResult, Report, Witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PoissonError {
    #[error("{0}")]
    Shape(String),
    #[error("H and U are not supplementary")]
    NotSupplementary,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `(G, H, U, j, Λ)` with `H ⊕ U = G`. `j` is absent for bare r-matrix data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoPoissonData {
    algebra: LieAlgebra,
    h: Subspace,
    u: Subspace,
    j: Option<Matrix>,
    lambda: Bivector,
}

impl PseudoPoissonData {
    pub fn new(
        algebra: LieAlgebra,
        h: Subspace,
        u: Subspace,
        j: Option<Matrix>,
        lambda: Bivector,
    ) -> Result<Self, PoissonError> {
        let n = algebra.dim();
        if h.ambient_dim() != n || u.ambient_dim() != n || lambda.dim() != n {
            return Err(PoissonError::Shape(format!(
                "H, U and Lambda must live in dimension {n}"
            )));
        }
        if let Some(j) = &j {
            if j.rows() != n || j.cols() != n {
                return Err(PoissonError::Shape(format!("j must be {n}x{n}")));
            }
        }
        if !h.is_supplementary(&u)? {
            return Err(PoissonError::NotSupplementary);
        }
        Ok(PseudoPoissonData {
            algebra,
            h,
            u,
            j,
            lambda,
        })
    }

    /// Data without `j`, with `H` the coordinate complement of `U`.
    pub fn without_j(
        algebra: LieAlgebra,
        u: Subspace,
        lambda: Bivector,
    ) -> Result<Self, PoissonError> {
        let h = u.complement();
        Self::new(algebra, h, u, None, lambda)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn u(&self) -> &Subspace {
        &self.u
    }

    pub fn j(&self) -> Option<&Matrix> {
        self.j.as_ref()
    }

    pub fn lambda(&self) -> &Bivector {
        &self.lambda
    }

    /// `[Λ, Λ]`.
    pub fn schouten_square(&self) -> Trivector {
        schouten(&self.algebra, &self.lambda, &self.lambda)
            .expect("dimensions checked at construction")
    }

    /// `[Λ, Λ]` modulo `U∧Λ²G`.
    pub fn residual(&self) -> Trivector {
        wedge_residual(&self.schouten_square(), &self.u)
            .expect("dimensions checked at construction")
    }
}

/// `"2*e1^e2^e3"`, `"0"` when zero.
pub fn format_trivector(names: &[String], t: &Trivector) -> String {
    let labels: Vec<String> = triples(t.dim())
        .into_iter()
        .map(|(i, j, k)| format!("{}^{}^{}", names[i], names[j], names[k]))
        .collect();
    format_combination(t.coords().iter().zip(&labels).map(|(c, s)| (c, s.as_str())))
}

pub fn format_bivector(names: &[String], b: &Bivector) -> String {
    let labels: Vec<String> = pairs(b.dim())
        .into_iter()
        .map(|(i, j)| format!("{}^{}", names[i], names[j]))
        .collect();
    format_combination(b.coords().iter().zip(&labels).map(|(c, s)| (c, s.as_str())))
}

fn first_triple(names: &[String], t: &Trivector) -> Vec<String> {
    triples(t.dim())
        .into_iter()
        .zip(t.coords().iter())
        .find(|(_, c)| !c.is_zero())
        .map(|((i, j, k), _)| vec![names[i].clone(), names[j].clone(), names[k].clone()])
        .unwrap_or_default()
}

/// `[Λ, Λ] ∈ U∧Λ²G`; a failure carries the residual trivector.
pub fn check_pseudo_poisson(d: &PseudoPoissonData) -> Report {
    let names = d.algebra.names();
    let residual = d.residual();
    let mut report = Report::new();
    report.push(CheckResult::from_witness(
        "poisson.pseudo_poisson",
        (!residual.is_zero()).then(|| {
            Witness::new(
                first_triple(names, &residual),
                format_trivector(names, &residual),
            )
        }),
    ));
    report
}

/// `(Λ²j)(Λ) = Λ`; skipped when the data carries no `j`.
pub fn check_j_invariance(d: &PseudoPoissonData) -> Report {
    let mut report = Report::new();
    let Some(j) = &d.j else {
        report.push(CheckResult::skipped("poisson.j_invariant", "no j given"));
        return report;
    };
    let names = d.algebra.names();
    let image = d.lambda.apply(&extend_map_2(j));
    let witness = pairs(d.algebra.dim()).into_iter().find_map(|(a, b)| {
        (image.get(a, b) != d.lambda.get(a, b)).then(|| {
            Witness::new(
                vec![names[a].clone(), names[b].clone()],
                format!(
                    "j(Lambda) = {}, Lambda = {}",
                    format_bivector(names, &image),
                    format_bivector(names, &d.lambda)
                ),
            )
        })
    });
    report.push(CheckResult::from_witness("poisson.j_invariant", witness));
    report
}

/// Algebra-level description of `π = r₊ − r₋` with its invariance verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoboundaryPi {
    pub r: Bivector,
    pub relation: &'static str,
    /// `[r, r]`.
    pub rr: Trivector,
    /// Per basis generator `x`: `ad x · [r, r] ∈ U∧Λ²G`.
    pub generator_verdicts: Vec<bool>,
    pub report: Report,
}

pub fn coboundary_pi(
    l: &LieAlgebra,
    r: &Bivector,
    u: &Subspace,
) -> Result<CoboundaryPi, PoissonError> {
    let rr = schouten(l, r, r)?;
    let names = l.names();
    let mut verdicts = Vec::with_capacity(l.dim());
    let mut witness = None;
    for x in 0..l.dim() {
        let moved = rr.apply(&extend_derivation_3(&l.ad_basis(x)));
        let ok = in_wedge_subspace(&moved, u)?;
        if !ok && witness.is_none() {
            let residual = wedge_residual(&moved, u)?;
            witness = Some(Witness::new(
                vec![names[x].clone()],
                format_trivector(names, &residual),
            ));
        }
        verdicts.push(ok);
    }
    let mut report = Report::new();
    report.push(CheckResult::from_witness(
        "poisson.coboundary_invariance",
        witness,
    ));
    Ok(CoboundaryPi {
        r: r.clone(),
        relation: "pi = right_invariant(r) - left_invariant(r)",
        rr,
        generator_verdicts: verdicts,
        report,
    })
}

/// `δ(x) = ad x · r`.
pub fn coboundary(l: &LieAlgebra, r: &Bivector) -> Vec<Bivector> {
    (0..l.dim())
        .map(|x| r.apply(&extend_derivation_2(&l.ad_basis(x))))
        .collect()
}

/// `δ([x,y]) = ad x · δ(y) − ad y · δ(x)` on all basis pairs, `δ` given on
/// the basis and extended linearly.
pub fn check_cocycle(l: &LieAlgebra, delta: &[Bivector]) -> Result<Report, PoissonError> {
    let n = l.dim();
    if delta.len() != n || delta.iter().any(|b| b.dim() != n) {
        return Err(PoissonError::Shape(format!(
            "delta must give {n} bivectors of dimension {n}"
        )));
    }
    let names = l.names();
    let ad2: Vec<Matrix> = (0..n)
        .map(|x| extend_derivation_2(&l.ad_basis(x)))
        .collect();
    let delta_of = |v: &Vector| {
        let mut out = Bivector::zero(n);
        for (m, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&delta[m].scale(c));
            }
        }
        out
    };
    let witness = pairs(n).into_iter().find_map(|(a, b)| {
        let lhs = delta_of(l.basis_bracket(a, b));
        let rhs = delta[b]
            .apply(&ad2[a])
            .add(&delta[a].apply(&ad2[b]).scale(&(-1).into()));
        let defect = lhs.add(&rhs.scale(&(-1).into()));
        (!defect.is_zero()).then(|| {
            Witness::new(
                vec![names[a].clone(), names[b].clone()],
                format_bivector(names, &defect),
            )
        })
    });
    let mut report = Report::new();
    report.push(CheckResult::from_witness("poisson.cocycle", witness));
    Ok(report)
}

/// Direct sum of two structures: algebras, `H`, `U`, `j` and `Λ` blockwise.
/// The result has `j` only when both factors do.
pub fn product_structure(d1: &PseudoPoissonData, d2: &PseudoPoissonData) -> PseudoPoissonData {
    let (n1, n2) = (d1.algebra.dim(), d2.algebra.dim());
    let n = n1 + n2;
    let j = match (&d1.j, &d2.j) {
        (Some(a), Some(b)) => Some(a.block_diag(b)),
        _ => None,
    };
    let lambda = d1.lambda.embed(n, 0).add(&d2.lambda.embed(n, n1));
    PseudoPoissonData {
        algebra: d1.algebra.direct_sum(&d2.algebra),
        h: d1.h.direct_sum(&d2.h),
        u: d1.u.direct_sum(&d2.u),
        j,
        lambda,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebras;
    use crate::linalg::Rational;
    use crate::report::Status;

    fn so3_data(u: Subspace, lambda: Bivector) -> PseudoPoissonData {
        let j = Matrix::from_int_rows(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let h = Subspace::coordinate(3, &[0, 1]);
        let h = if u.is_zero() { Subspace::full(3) } else { h };
        PseudoPoissonData::new(algebras::so3(), h, u, Some(j), lambda).unwrap()
    }

    #[test]
    fn so3_membership() {
        let d = so3_data(Subspace::coordinate(3, &[2]), Bivector::basis(3, 0, 1));
        assert!(check_pseudo_poisson(&d).all_pass());
        assert!(check_j_invariance(&d).all_pass());

        let d = so3_data(Subspace::zero(3), Bivector::basis(3, 0, 1));
        let r = check_pseudo_poisson(&d);
        let c = &r.checks[0];
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witnesses[0].value, "2*e1^e2^e3");
        assert_eq!(
            d.residual(),
            Trivector::from_entries(3, &[(0, 1, 2, 2.into())])
        );
    }

    #[test]
    fn abelian_always_pseudo_poisson() {
        let g = LieAlgebra::abelian(4);
        let lambda = Bivector::from_entries(4, &[(0, 1, 1.into()), (1, 3, Rational::new(-2, 3))]);
        let d = PseudoPoissonData::without_j(g, Subspace::zero(4), lambda).unwrap();
        assert!(check_pseudo_poisson(&d).all_pass());
        assert_eq!(check_j_invariance(&d).checks[0].status, Status::Skipped);
    }

    #[test]
    fn j_invariance_examples() {
        let u = Subspace::coordinate(3, &[2]);
        assert!(check_j_invariance(&so3_data(u.clone(), Bivector::zero(3))).all_pass());
        let d = so3_data(u, Bivector::basis(3, 0, 2));
        let r = check_j_invariance(&d);
        assert_eq!(r.checks[0].status, Status::Fail);
        assert_eq!(r.checks[0].witnesses[0].basis, vec!["e1", "e3"]);
    }

    #[test]
    fn sl2_rmatrix_invariance() {
        let g = algebras::sl2();
        let r = Bivector::basis(3, 0, 1);
        let pi = coboundary_pi(&g, &r, &Subspace::zero(3)).unwrap();
        assert_eq!(pi.rr, Trivector::from_entries(3, &[(0, 1, 2, 2.into())]));
        assert_eq!(pi.generator_verdicts, vec![true; 3]);
        assert!(pi.report.all_pass());
    }

    #[test]
    fn cocycle_examples() {
        let g = algebras::sl2();
        let r = Bivector::basis(3, 0, 1);
        assert!(check_cocycle(&g, &coboundary(&g, &r)).unwrap().all_pass());
        assert!(check_cocycle(&g, &vec![Bivector::zero(3); 3])
            .unwrap()
            .all_pass());

        let mut delta = vec![Bivector::zero(3); 3];
        delta[0] = Bivector::basis(3, 0, 2);
        let rep = check_cocycle(&g, &delta).unwrap();
        assert_eq!(rep.checks[0].status, Status::Fail);
        assert_eq!(rep.checks[0].witnesses[0].basis, vec!["e", "f"]);
    }

    #[test]
    fn product_of_so3_and_plane() {
        let d1 = so3_data(Subspace::coordinate(3, &[2]), Bivector::basis(3, 0, 1));
        let j2 = Matrix::from_int_rows(&[&[0, -1], &[1, 0]]);
        let d2 = PseudoPoissonData::new(
            LieAlgebra::abelian(2),
            Subspace::full(2),
            Subspace::zero(2),
            Some(j2),
            Bivector::basis(2, 0, 1),
        )
        .unwrap();
        let p = product_structure(&d1, &d2);
        assert_eq!(p.algebra().dim(), 5);
        assert!(p.h().is_supplementary(p.u()).unwrap());
        assert!(check_pseudo_poisson(&p).all_pass());
        assert!(check_j_invariance(&p).all_pass());
        assert_eq!(
            p.schouten_square(),
            Trivector::from_entries(5, &[(0, 1, 2, 2.into())])
        );
    }
}
