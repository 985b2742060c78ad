//! Subspaces attached to CR and Kähler-CR data: the `ω`-radical, the part of
//! the center meeting `H`, and the complex structure induced on `H` by a
//! supplementary ideal.

use super::{CrData, CrError, KahlerCrData};
use crate::lie::LieAlgebra;
use crate::linalg::{kernel, Matrix, Subspace, Vector};
use crate::report::{CheckResult, Report, Witness};

/// `L = {x : ω(x, G) = 0}` with verdicts on the two properties it must have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaRadical {
    pub radical: Subspace,
    pub report: Report,
}

impl OmegaRadical {
    pub fn is_subalgebra(&self) -> bool {
        self.report
            .get("radical.subalgebra")
            .is_some_and(CheckResult::passed)
    }

    pub fn is_orthogonal_to_h(&self) -> bool {
        self.report
            .get("radical.orthogonal_to_h")
            .is_some_and(CheckResult::passed)
    }
}

pub fn omega_radical(k: &KahlerCrData) -> OmegaRadical {
    let cr = k.cr();
    // ω(x, y) = xᵀ Ω y vanishes for all y iff Ωᵀ x = 0.
    let radical = kernel(&k.omega_matrix().transpose());
    let mut report = Report::new();

    let sub = k
        .algebra()
        .subalgebra_witness(&radical)
        .expect("radical lives in the algebra")
        .map(|(a, b, v)| {
            let b_ = radical.basis();
            Witness::new(vec![cr.label(&b_[a]), cr.label(&b_[b])], cr.label(&v))
        });
    report.push(CheckResult::from_witness("radical.subalgebra", sub));

    let orth = radical.basis().iter().find_map(|x| {
        k.h().basis().iter().find_map(|y| {
            let g = k.metric().bilinear(x, y);
            (!g.is_zero()).then(|| Witness::new(vec![cr.label(x), cr.label(y)], g.to_string()))
        })
    });
    report.push(CheckResult::from_witness("radical.orthogonal_to_h", orth));

    OmegaRadical { radical, report }
}

/// `U = (Z(G) ∩ H) + j(Z(G) ∩ H)` with the checks `[U, U] = 0` and
/// `[U, H] ⊆ H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterU {
    pub u: Subspace,
    pub report: Report,
}

pub fn center_u(d: &CrData) -> CenterU {
    let g = d.algebra();
    let zh = g
        .center()
        .intersect(d.h())
        .expect("center and H share the ambient space");
    let jz = zh.image(d.j()).expect("j is square of ambient size");
    let u = zh.sum(&jz).expect("same ambient space");
    let ub = u.basis();
    let mut report = Report::new();

    let comm = ub.iter().enumerate().find_map(|(a, x)| {
        ub[a + 1..].iter().find_map(|y| {
            let v = d.br(x, y);
            (!v.is_zero()).then(|| Witness::new(vec![d.label(x), d.label(y)], d.label(&v)))
        })
    });
    report.push(CheckResult::from_witness("center_u.commutative", comm));

    let stab = ub.iter().find_map(|z| {
        d.h().basis().iter().find_map(|x| {
            let v = d.br(z, x);
            (!d.h().contains(&v).unwrap())
                .then(|| Witness::new(vec![d.label(z), d.label(x)], d.label(&v)))
        })
    });
    report.push(CheckResult::from_witness("center_u.stabilizes_h", stab));

    CenterU { u, report }
}

/// `H` with the bracket `[x, y]_H = p([x, y])`, `p` the projection onto `H`
/// parallel to a supplementary ideal, and `j` restricted to `H`. Both are
/// expressed in the stored basis of `H`, whose elements name the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexQuotient {
    table: Vec<Vec<Vector>>,
    names: Vec<String>,
    j: Matrix,
    pub report: Report,
}

impl ComplexQuotient {
    /// The projected bracket as a Lie algebra; fails when it violates Jacobi.
    pub fn algebra(&self) -> Result<LieAlgebra, CrError> {
        Ok(LieAlgebra::new(self.names.clone(), self.table.clone())?)
    }

    /// `j|_H` in `H`-coordinates.
    pub fn j(&self) -> &Matrix {
        &self.j
    }
}

pub fn ideal_complement_complex(d: &CrData, ideal: &Subspace) -> Result<ComplexQuotient, CrError> {
    let g = d.algebra();
    if let Some((a, k, v)) = g.ideal_witness(ideal)? {
        return Err(CrError::NotAnIdeal(format!(
            "[{}, {}] = {}",
            d.label(&ideal.basis()[a]),
            d.name(k),
            d.label(&v)
        )));
    }
    let h = d.h();
    if !h.is_supplementary(ideal)? {
        return Err(CrError::NotSupplementary);
    }
    let hb = h.basis();
    let m = hb.len();
    let to_h = |v: &Vector| -> Vector {
        let (p, _) = h.decompose(ideal, v).expect("supplementary");
        h.coordinates(&p).unwrap().expect("projection lies in H")
    };
    let table: Vec<Vec<Vector>> = (0..m)
        .map(|s| (0..m).map(|t| to_h(&d.br(&hb[s], &hb[t]))).collect())
        .collect();
    let names: Vec<String> = hb.iter().map(|v| d.label(v)).collect();
    let mut report = Report::new();

    let induced = LieAlgebra::from_table_unchecked(names.clone(), table.clone())
        .expect("table built with the right shape");
    let mut jacobi = None;
    'jac: for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let v = induced.jacobiator(a, b, c);
                if !v.is_zero() {
                    jacobi = Some(Witness::new(
                        vec![names[a].clone(), names[b].clone(), names[c].clone()],
                        d.label(&h.combine(&v)),
                    ));
                    break 'jac;
                }
            }
        }
    }
    report.push(CheckResult::from_witness("complex.jacobi", jacobi));

    let jcols: Vec<Option<Vector>> = hb
        .iter()
        .map(|x| h.coordinates(&d.apply_j(x)).unwrap())
        .collect();
    let j = Matrix::from_columns(
        &jcols
            .iter()
            .map(|c| c.clone().unwrap_or_else(|| Vector::zeros(m)))
            .collect::<Vec<_>>(),
        m,
    );
    let linear = if let Some(s) = jcols.iter().position(Option::is_none) {
        Some(Witness::new(vec![names[s].clone()], "j leaves H"))
    } else {
        (0..m)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .find_map(|(a, b)| {
                let lhs = j.mul_vec(&table[a][b]);
                let rhs = induced.br(&j.column(a), &Vector::basis(m, b));
                let defect = &lhs - &rhs;
                (!defect.is_zero()).then(|| {
                    Witness::new(
                        vec![names[a].clone(), names[b].clone()],
                        d.label(&h.combine(&defect)),
                    )
                })
            })
    };
    report.push(CheckResult::from_witness(
        "complex.j_complex_linear",
        linear,
    ));

    Ok(ComplexQuotient {
        table,
        names,
        j,
        report,
    })
}

/// If `L = ker j` is an ideal and `H ≠ 0`, the algebra is not semisimple.
/// The check passes vacuously when the hypothesis fails.
pub fn check_radical_not_semisimple(k: &KahlerCrData, radical: &Subspace) -> Report {
    let g = k.algebra();
    let ker_j = kernel(k.j());
    let mut report = Report::new();
    let hypothesis = *radical == ker_j && !k.h().is_zero() && g.is_ideal(radical).unwrap();
    let result = if !hypothesis {
        CheckResult::pass("radical.not_semisimple").with_note("hypothesis not met")
    } else if g.is_semisimple() {
        CheckResult::fail(
            "radical.not_semisimple",
            Witness::new(
                Vec::new(),
                format!("Killing determinant {}", g.killing_form().det()),
            ),
        )
    } else {
        CheckResult::pass("radical.not_semisimple")
    };
    report.push(result);
    report
}
