//! On a semisimple algebra `ω` is exact: `ω(x, y) = α([x, y])` for a linear
//! form `α`, which the Killing form represents as `K(X, ·) = α`. The radical
//! of `ω` is then the centralizer of `X`.

use super::{omega_radical, CrError, KahlerCrData};
use crate::linalg::{solve, Matrix, Subspace, Vector};
use crate::multivector::pairs;
use crate::report::{CheckResult, Report, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exactness {
    /// Coordinates of `α` in the dual basis.
    pub alpha: Vector,
    pub x: Vector,
    /// Centralizer of `X`.
    pub l: Subspace,
    pub report: Report,
}

pub fn semisimple_exactness(k: &KahlerCrData) -> Result<Exactness, CrError> {
    let g = k.algebra();
    if !g.is_semisimple() {
        return Err(CrError::NotSemisimple);
    }
    let n = g.dim();
    let cr = k.cr();
    let e = |i| Vector::basis(n, i);
    let mut report = Report::new();

    // One equation α([e_a, e_b]) = ω(e_a, e_b) per pair a < b. Keep a maximal
    // independent set of rows, solve it, then test every equation.
    let eqs: Vec<(usize, usize)> = pairs(n);
    let mut kept = Subspace::zero(n);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &(a, b) in &eqs {
        let row = g.basis_bracket(a, b);
        if !kept.contains(row)? {
            kept = kept.sum(&Subspace::span(n, std::slice::from_ref(row))?)?;
            rows.push(row.clone());
            rhs.push(k.omega(&e(a), &e(b)));
        }
    }
    let alpha = solve(&Matrix::from_row_vectors(&rows, n), &Vector::new(rhs))?
        .expect("independent rows are consistent");

    let residual = eqs.iter().find_map(|&(a, b)| {
        let r = k.omega(&e(a), &e(b)) - g.basis_bracket(a, b).dot(&alpha);
        (!r.is_zero()).then(|| Witness::new(vec![cr.name(a), cr.name(b)], r.to_string()))
    });
    report.push(CheckResult::from_witness(
        "exactness.alpha_consistent",
        residual,
    ));

    let killing = g.killing_form();
    let x = solve(&killing, &alpha)?.expect("Killing form of a semisimple algebra is invertible");

    let identity = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find_map(|(a, b)| {
            let r = killing.bilinear(&x, g.basis_bracket(a, b)) - k.omega(&e(a), &e(b));
            (!r.is_zero()).then(|| Witness::new(vec![cr.name(a), cr.name(b)], r.to_string()))
        });
    report.push(CheckResult::from_witness(
        "exactness.killing_identity",
        identity,
    ));

    let l = g.centralizer(&x)?;
    let radical = omega_radical(k).radical;
    let mismatch = l
        .basis()
        .iter()
        .find(|v| !radical.contains(v).unwrap())
        .map(|v| {
            Witness::new(
                vec![cr.label(v)],
                "in the centralizer of X, not in the radical",
            )
        })
        .or_else(|| {
            radical
                .basis()
                .iter()
                .find(|v| !l.contains(v).unwrap())
                .map(|v| {
                    Witness::new(
                        vec![cr.label(v)],
                        "in the radical, not in the centralizer of X",
                    )
                })
        });
    report.push(CheckResult::from_witness(
        "exactness.centralizer_is_radical",
        mismatch,
    ));

    let codim = k.h().codim();
    report.push(CheckResult::from_witness(
        "exactness.codimension",
        (l.dim() != codim).then(|| {
            Witness::new(
                Vec::new(),
                format!("dim L = {}, codim H = {codim}", l.dim()),
            )
        }),
    ));

    Ok(Exactness {
        alpha,
        x,
        l,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::structures;
    use crate::linalg::Rational;

    #[test]
    fn so3_values() {
        let k = structures::so3_kahler();
        let ex = semisimple_exactness(&k).unwrap();
        assert_eq!(ex.alpha, Vector::from_ints(&[0, 0, -1]));
        assert_eq!(
            ex.x,
            Vector::new(vec![0.into(), 0.into(), Rational::new(1, 2)])
        );
        assert_eq!(ex.l, Subspace::coordinate(3, &[2]));
        assert!(ex.report.all_pass());
    }

    #[test]
    fn scaling_scales_alpha_not_l() {
        let k = structures::so3_kahler().scaled(&2.into()).unwrap();
        let ex = semisimple_exactness(&k).unwrap();
        assert_eq!(ex.alpha, Vector::from_ints(&[0, 0, -2]));
        assert_eq!(ex.x, Vector::from_ints(&[0, 0, 1]));
        assert_eq!(ex.l, Subspace::coordinate(3, &[2]));
    }

    #[test]
    fn non_semisimple_rejected() {
        assert_eq!(
            semisimple_exactness(&structures::rn_flat_kahler()),
            Err(CrError::NotSemisimple)
        );
    }
}
