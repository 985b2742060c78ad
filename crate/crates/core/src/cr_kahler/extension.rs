//! Extensions `G = H ⊕ V` of a Kähler Lie algebra `H` by a vector space `V`
//! with `[x, y] = [x, y]' + α(x, y)` on `H`.
//!
//! Brackets involving `V` are zero unless overridden through
//! [`ExtensionSpec::mixed`]. The metric is extended by the identity on `V`
//! with `H ⊥ V`, and `j` by zero on `V`.

use super::{CrData, CrError, KahlerCrData};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::report::{CheckResult, Report, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub v_dim: usize,
    /// `(a, b, α(h_a, h_b))` with `α` values in `V`-coordinates. Pairs not
    /// listed are zero; the opposite pair is filled by antisymmetry unless
    /// listed itself.
    pub alpha: Vec<(usize, usize, Vector)>,
    /// `(a, c, [h_a, v_c])` in coordinates of `H ⊕ V`.
    pub mixed: Vec<(usize, usize, Vector)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionOutcome {
    /// The assembled data; `None` when the bracket fails the Jacobi identity.
    pub kahler: Option<KahlerCrData>,
    pub report: Report,
}

fn alpha_table(spec: &ExtensionSpec, m: usize) -> Result<Vec<Vec<Vector>>, CrError> {
    let v = spec.v_dim;
    let mut table = vec![vec![Vector::zeros(v); m]; m];
    let mut listed = vec![vec![false; m]; m];
    for (a, b, val) in &spec.alpha {
        if *a >= m || *b >= m {
            return Err(CrError::InvalidAlpha(format!(
                "index ({}, {}) out of range for H of dimension {m}",
                a + 1,
                b + 1
            )));
        }
        if val.len() != v {
            return Err(CrError::InvalidAlpha(format!(
                "value at ({}, {}) has length {}, expected {v}",
                a + 1,
                b + 1,
                val.len()
            )));
        }
        table[*a][*b] = val.clone();
        listed[*a][*b] = true;
        if !listed[*b][*a] {
            table[*b][*a] = -val;
        }
    }
    for a in 0..m {
        for b in a..m {
            if table[a][b] != -&table[b][a] {
                return Err(CrError::InvalidAlpha(format!(
                    "alpha is not antisymmetric at ({}, {})",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    Ok(table)
}

fn alpha_apply(table: &[Vec<Vector>], v_dim: usize, x: &Vector, y: &Vector) -> Vector {
    let mut out = Vector::zeros(v_dim);
    for (a, row) in table.iter().enumerate() {
        if x[a].is_zero() {
            continue;
        }
        for (b, val) in row.iter().enumerate() {
            if !y[b].is_zero() {
                out.axpy(&(&x[a] * &y[b]), val);
            }
        }
    }
    out
}

pub fn build_extension(
    base: &KahlerCrData,
    spec: &ExtensionSpec,
) -> Result<ExtensionOutcome, CrError> {
    let h_alg = base.algebra();
    let m = h_alg.dim();
    if base.h().dim() != m {
        return Err(CrError::ExtensionBaseNotWhole);
    }
    let v = spec.v_dim;
    let n = m + v;
    let alpha = alpha_table(spec, m)?;

    let mut names: Vec<String> = h_alg.names().to_vec();
    for c in 1..=v {
        let mut name = format!("v{c}");
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
    }

    let mut table = vec![vec![Vector::zeros(n); n]; n];
    for a in 0..m {
        for b in 0..m {
            let mut br = h_alg.basis_bracket(a, b).embed(n, 0);
            br.axpy(&1.into(), &alpha[a][b].embed(n, m));
            table[a][b] = br;
        }
    }
    for (a, c, val) in &spec.mixed {
        if *a >= m || *c >= v || val.len() != n {
            return Err(CrError::Shape(format!(
                "mixed bracket ({}, {}) does not fit H of dimension {m} and V of dimension {v}",
                a + 1,
                c + 1
            )));
        }
        table[*a][m + c] = val.clone();
        table[m + c][*a] = -val;
    }
    let g = LieAlgebra::from_table_unchecked(names.clone(), table)?;
    let metric = base.metric().block_diag(&Matrix::identity(v));
    let j = base.j().block_diag(&Matrix::zeros(v, v));
    let omega = metric.mul(&j);
    let e = |i| Vector::basis(n, i);
    let mut report = Report::new();

    let mut jacobi = None;
    'jac: for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let jac = g.jacobiator(a, b, c);
                if !jac.is_zero() {
                    jacobi = Some(Witness::new(
                        vec![names[a].clone(), names[b].clone(), names[c].clone()],
                        g.format_vector(&jac),
                    ));
                    break 'jac;
                }
            }
        }
    }
    let jacobi_holds = jacobi.is_none();
    report.push(CheckResult::from_witness("extension.jacobi", jacobi));

    let v_names: Vec<String> = names[m..].to_vec();
    let format_v = |x: &Vector| {
        crate::lie::format_combination(x.iter().zip(&v_names).map(|(c, s)| (c, s.as_str())))
    };
    let hj = |a: usize| base.j().column(a);
    let invariant = (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .find_map(|(a, b)| {
            let lhs = alpha_apply(&alpha, v, &hj(a), &hj(b));
            let defect = &lhs - &alpha[a][b];
            (!defect.is_zero())
                .then(|| Witness::new(vec![names[a].clone(), names[b].clone()], format_v(&defect)))
        });
    report.push(CheckResult::from_witness(
        "extension.alpha_j_invariant",
        invariant,
    ));

    // ∮ α([x,y]', z) + [α(x,y), z] over the cyclic permutations of (x, y, z)
    let mut cyclic = None;
    'cyc: for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let mut sum = Vector::zeros(n);
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    let inner = h_alg.basis_bracket(x, y);
                    sum.axpy(
                        &1.into(),
                        &alpha_apply(&alpha, v, inner, &Vector::basis(m, z)).embed(n, m),
                    );
                    sum.axpy(&1.into(), &g.br(&alpha[x][y].embed(n, m), &e(z)));
                }
                if !sum.is_zero() {
                    cyclic = Some(Witness::new(
                        vec![names[a].clone(), names[b].clone(), names[c].clone()],
                        g.format_vector(&sum),
                    ));
                    break 'cyc;
                }
            }
        }
    }
    report.push(CheckResult::from_witness(
        "extension.cyclic_condition",
        cyclic,
    ));

    let mut closed = None;
    'closed: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let s = omega.bilinear(g.basis_bracket(a, b), &e(c))
                    + omega.bilinear(g.basis_bracket(c, a), &e(b))
                    + omega.bilinear(g.basis_bracket(b, c), &e(a));
                if !s.is_zero() {
                    closed = Some(Witness::new(
                        vec![names[a].clone(), names[b].clone(), names[c].clone()],
                        s.to_string(),
                    ));
                    break 'closed;
                }
            }
        }
    }
    report.push(CheckResult::from_witness("extension.omega_closed", closed));

    let kahler = if jacobi_holds {
        let h = Subspace::coordinate(n, &(0..m).collect::<Vec<_>>());
        let cr = CrData::new(g, h, j)?;
        Some(KahlerCrData::new(cr, metric)?)
    } else {
        None
    };
    Ok(ExtensionOutcome { kahler, report })
}
