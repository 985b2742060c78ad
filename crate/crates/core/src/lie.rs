//! Finite-dimensional Lie algebras given by rational structure constants.

use std::fmt;

use crate::linalg::{kernel, LinalgError, Matrix, Rational, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    /// `c_{ij}^k != -c_{ji}^k`; indices are 0-based, displayed 1-based.
    #[error("antisymmetry violated at ({}, {}, {})", .i + 1, .j + 1, .k + 1)]
    Antisymmetry { i: usize, j: usize, k: usize },
    /// The `m`-th component of the Jacobiator of `(e_i, e_j, e_k)` is nonzero.
    #[error("Jacobi identity violated at ({}, {}, {}) in component {}", .i + 1, .j + 1, .k + 1, .m + 1)]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        m: usize,
    },
    #[error("structure tensor has wrong shape: {0}")]
    Shape(String),
    #[error("subspace is not an ideal: [{}, e{}] leaves it", .ideal_vector + 1, .basis + 1)]
    NotAnIdeal { ideal_vector: usize, basis: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A Lie algebra on `ℚⁿ` with named basis vectors.
///
/// `table[i][j]` is the bracket `[e_i, e_j]` in coordinates. Values built
/// through [`LieAlgebra::new`] or [`LieAlgebra::from_brackets`] always satisfy
/// antisymmetry and the Jacobi identity.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    table: Vec<Vec<Vector>>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_map();
        for (i, j, v) in self.nonzero_brackets() {
            s.entry(&format!("[{}, {}]", self.names[i], self.names[j]), &v);
        }
        s.finish()
    }
}

impl LieAlgebra {
    /// Validates and wraps a full structure table.
    pub fn new(names: Vec<String>, table: Vec<Vec<Vector>>) -> Result<Self, LieError> {
        let alg = Self::from_table_unchecked(names, table)?;
        alg.validate()?;
        Ok(alg)
    }

    /// Shape checks only; antisymmetry and Jacobi are not verified.
    pub(crate) fn from_table_unchecked(
        names: Vec<String>,
        table: Vec<Vec<Vector>>,
    ) -> Result<Self, LieError> {
        let n = names.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(LieError::Shape(format!(
                "expected a {n}x{n} table of brackets"
            )));
        }
        if let Some(v) = table.iter().flatten().find(|v| v.len() != n) {
            return Err(LieError::Shape(format!(
                "bracket vector of length {} in dimension {n}",
                v.len()
            )));
        }
        Ok(LieAlgebra { names, table })
    }

    /// Builds from brackets `[e_i, e_j] = v` listed for `i < j`; the
    /// opposite brackets are filled by antisymmetry and unlisted pairs are zero.
    pub fn from_brackets(
        names: Vec<String>,
        brackets: &[(usize, usize, Vector)],
    ) -> Result<Self, LieError> {
        let n = names.len();
        let mut table = vec![vec![Vector::zeros(n); n]; n];
        for (i, j, v) in brackets {
            if *i >= n || *j >= n {
                return Err(LieError::Shape(format!(
                    "bracket index out of range in dimension {n}"
                )));
            }
            table[*i][*j] = v.clone();
            table[*j][*i] = -v;
        }
        Self::new(names, table)
    }

    pub fn abelian(n: usize) -> Self {
        Self::from_table_unchecked(default_names(n), vec![vec![Vector::zeros(n); n]; n])
            .expect("zero table has the right shape")
    }

    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if self.table[i][j][k] != -&self.table[j][i][k] {
                        return Err(LieError::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let jac = self.jacobiator(i, j, k);
                    if let Some(m) = jac.leading_index() {
                        return Err(LieError::Jacobi { i, j, k, m });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let e = |a| Vector::basis(self.dim(), a);
        let a = self.br(&e(i), &self.table[j][k]);
        let b = self.br(&e(j), &self.table[k][i]);
        let c = self.br(&e(k), &self.table[i][j]);
        &(&a + &b) + &c
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.table[i][j][k]
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    /// `(i, j, [e_i, e_j])` for `i < j` with a nonzero bracket.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, Vector)> + '_ {
        let n = self.dim();
        (0..n).flat_map(move |i| {
            (i + 1..n).filter_map(move |j| {
                let v = &self.table[i][j];
                (!v.is_zero()).then(|| (i, j, v.clone()))
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().flatten().all(Vector::is_zero)
    }

    fn check_len(&self, v: &Vector) -> Result<(), LieError> {
        if v.len() != self.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            }
            .into());
        }
        Ok(())
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.br(x, y))
    }

    /// Bracket without length checks; callers guarantee dimensions.
    pub(crate) fn br(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                out.axpy(&(&x[i] * &y[j]), &self.table[i][j]);
            }
        }
        out
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &Vector) -> Result<Matrix, LieError> {
        self.check_len(x)?;
        Ok(self.ad_unchecked(x))
    }

    pub(crate) fn ad_unchecked(&self, x: &Vector) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|c| self.br(x, &Vector::basis(n, c))).collect();
        Matrix::from_columns(&cols, n)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        Matrix::from_columns(&self.table[i], self.dim())
    }

    /// `K(x, y) = tr(ad x ∘ ad y)` in the given basis.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).trace();
                k.set(i, j, t.clone());
                k.set(j, i, t);
            }
        }
        k
    }

    /// Cartan's criterion: the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        self.dim() > 0 && !self.killing_form().det().is_zero()
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // x is central iff [e_i, x] = 0 for every i.
        let rows: Vec<Vector> = (0..n)
            .flat_map(|i| {
                let ad = self.ad_basis(i);
                (0..n).map(move |r| ad.row(r))
            })
            .collect();
        kernel(&Matrix::from_row_vectors(&rows, n))
    }

    /// `[G, G]`.
    pub fn derived_algebra(&self) -> Subspace {
        let vs: Vec<Vector> = self.nonzero_brackets().map(|(_, _, v)| v).collect();
        Subspace::span(self.dim(), &vs).expect("brackets have ambient length")
    }

    pub fn centralizer(&self, x: &Vector) -> Result<Subspace, LieError> {
        Ok(kernel(&self.ad(x)?))
    }

    fn check_subspace(&self, s: &Subspace) -> Result<(), LieError> {
        if s.ambient_dim() != self.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            }
            .into());
        }
        Ok(())
    }

    /// First pair `(a, b)` of basis indices of `s` with `[s_a, s_b] ∉ s`.
    pub fn subalgebra_witness(
        &self,
        s: &Subspace,
    ) -> Result<Option<(usize, usize, Vector)>, LieError> {
        self.check_subspace(s)?;
        let b = s.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let v = self.br(&b[i], &b[j]);
                if !s.contains(&v)? {
                    return Ok(Some((i, j, v)));
                }
            }
        }
        Ok(None)
    }

    /// First pair `(a, k)` with `[s_a, e_k] ∉ s`.
    pub fn ideal_witness(&self, s: &Subspace) -> Result<Option<(usize, usize, Vector)>, LieError> {
        self.check_subspace(s)?;
        let n = self.dim();
        for (a, v) in s.basis().iter().enumerate() {
            for k in 0..n {
                let w = self.br(v, &Vector::basis(n, k));
                if !s.contains(&w)? {
                    return Ok(Some((a, k, w)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool, LieError> {
        Ok(self.subalgebra_witness(s)?.is_none())
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool, LieError> {
        Ok(self.ideal_witness(s)?.is_none())
    }

    /// `G / I` realised on the coordinate complement of `I`: the bracket of
    /// two complement basis vectors is projected parallel to `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra, LieError> {
        if let Some((a, k, _)) = self.ideal_witness(ideal)? {
            return Err(LieError::NotAnIdeal {
                ideal_vector: a,
                basis: k,
            });
        }
        let keep: Vec<usize> = (0..self.dim())
            .filter(|i| !ideal.pivots().contains(i))
            .collect();
        let m = keep.len();
        let mut table = vec![vec![Vector::zeros(m); m]; m];
        for a in 0..m {
            for b in 0..m {
                let reduced = ideal.reduce(&self.table[keep[a]][keep[b]])?;
                table[a][b] = keep.iter().map(|&i| reduced[i].clone()).collect();
            }
        }
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        LieAlgebra::new(names, table)
    }

    /// `self ⊕ other` with `other`'s basis placed after `self`'s.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let total = n + m;
        let mut table = vec![vec![Vector::zeros(total); total]; total];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = self.table[i][j].embed(total, 0);
            }
        }
        for i in 0..m {
            for j in 0..m {
                table[n + i][n + j] = other.table[i][j].embed(total, n);
            }
        }
        let mut names = self.names.clone();
        for name in &other.names {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        LieAlgebra::new(names, table).expect("direct sum of Lie algebras is a Lie algebra")
    }

    /// Renders `v` as a combination of the named basis vectors.
    pub fn format_vector(&self, v: &Vector) -> String {
        format_combination(v.iter().zip(&self.names).map(|(c, n)| (c, n.as_str())))
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// `"2*e1 - e3"`, or `"0"` for the empty combination.
pub(crate) fn format_combination<'a>(
    terms: impl Iterator<Item = (&'a Rational, &'a str)>,
) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = !c.is_positive();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebras;

    fn e(n: usize, i: usize) -> Vector {
        Vector::basis(n, i)
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn so3_brackets() {
        let so3 = algebras::so3();
        assert_eq!(so3.bracket(&e(3, 0), &e(3, 1)).unwrap(), e(3, 2));
        let x = Vector::from_ints(&[1, -2, 5]);
        assert!(so3.bracket(&x, &x).unwrap().is_zero());
        assert!(so3.bracket(&x, &Vector::zeros(2)).is_err());
    }

    #[test]
    fn abelian_brackets_vanish() {
        let r4 = LieAlgebra::abelian(4);
        let b = r4
            .bracket(
                &Vector::from_ints(&[1, 2, 3, 4]),
                &Vector::from_ints(&[0, 1, 0, 7]),
            )
            .unwrap();
        assert!(b.is_zero());
        assert!(r4.ad(&Vector::from_ints(&[1, 1, 1, 1])).unwrap().is_zero());
    }

    #[test]
    fn ad_so3() {
        let so3 = algebras::so3();
        let ad = so3.ad(&e(3, 0)).unwrap();
        assert_eq!(ad.mul_vec(&e(3, 1)), e(3, 2));
        assert_eq!(ad.mul_vec(&e(3, 2)), -&e(3, 1));
        assert!(so3.ad(&Vector::zeros(3)).unwrap().is_zero());
    }

    // Oracle: K(x,y) = Σ_{a,b} c_{xa}^b c_{yb}^a, expanded directly from the
    // structure constants without building ad-matrices.
    fn killing_oracle(l: &LieAlgebra) -> Matrix {
        let n = l.dim();
        Matrix::from_fn(n, n, |x, y| {
            let mut s = Rational::zero();
            for a in 0..n {
                for b in 0..n {
                    s += l.structure_constant(x, a, b) * l.structure_constant(y, b, a);
                }
            }
            s
        })
    }

    #[test]
    fn killing_forms() {
        let so3 = algebras::so3();
        assert_eq!(so3.killing_form(), Matrix::identity(3).scale(&q(-2)));
        assert_eq!(killing_oracle(&so3), so3.killing_form());
        assert!(LieAlgebra::abelian(3).killing_form().is_zero());

        let sl2 = algebras::sl2();
        let k = sl2.killing_form();
        // basis (e, f, h)
        assert_eq!(
            k,
            Matrix::from_int_rows(&[&[0, 4, 0], &[4, 0, 0], &[0, 0, 8]])
        );
        assert_eq!(killing_oracle(&sl2), k);
    }

    #[test]
    fn semisimplicity() {
        assert_eq!(algebras::so3().killing_form().det(), q(-8));
        assert!(algebras::so3().is_semisimple());
        assert!(algebras::sl2().is_semisimple());
        assert!(!LieAlgebra::abelian(1).is_semisimple());
        assert!(!LieAlgebra::abelian(4).is_semisimple());
        assert!(!algebras::heisenberg().is_semisimple());
    }

    #[test]
    fn centers() {
        assert!(algebras::so3().center().is_zero());
        assert_eq!(LieAlgebra::abelian(3).center(), Subspace::full(3));
        assert_eq!(
            algebras::heisenberg().center(),
            Subspace::coordinate(3, &[2])
        );
    }

    #[test]
    fn subalgebras_and_ideals() {
        let so3 = algebras::so3();
        let line = Subspace::coordinate(3, &[2]);
        assert!(so3.is_subalgebra(&line).unwrap());
        assert!(!so3.is_ideal(&line).unwrap());
        assert!(so3.is_subalgebra(&Subspace::zero(3)).unwrap());
        assert!(so3.is_ideal(&Subspace::zero(3)).unwrap());
        let h3 = algebras::heisenberg();
        assert!(h3.is_subalgebra(&line).unwrap());
        assert!(h3.is_ideal(&line).unwrap());
        assert!(!so3
            .is_subalgebra(&Subspace::coordinate(3, &[0, 1]))
            .unwrap());
    }

    #[test]
    fn centralizers() {
        let so3 = algebras::so3();
        assert_eq!(
            so3.centralizer(&e(3, 2)).unwrap(),
            Subspace::coordinate(3, &[2])
        );
        assert_eq!(
            so3.centralizer(&Vector::zeros(3)).unwrap(),
            Subspace::full(3)
        );
        let sl2 = algebras::sl2();
        assert_eq!(
            sl2.centralizer(&e(3, 2)).unwrap(),
            Subspace::coordinate(3, &[2])
        );
    }

    #[test]
    fn quotients() {
        let h3 = algebras::heisenberg();
        let q1 = h3.quotient(&Subspace::coordinate(3, &[2])).unwrap();
        assert_eq!(q1.dim(), 2);
        assert!(q1.is_abelian());

        let so3 = algebras::so3();
        assert_eq!(so3.quotient(&Subspace::zero(3)).unwrap(), so3);

        let sum = so3.direct_sum(&LieAlgebra::abelian(1));
        let back = sum.quotient(&Subspace::coordinate(4, &[3])).unwrap();
        assert_eq!(back, so3);

        assert!(matches!(
            so3.quotient(&Subspace::coordinate(3, &[2])),
            Err(LieError::NotAnIdeal { .. })
        ));
    }

    #[test]
    fn rejects_broken_tables() {
        let n = 3;
        let so3 = algebras::so3();
        // raw single-entry mutations break antisymmetry
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut table = so3.table.clone();
                    let mut v = table[i][j].clone();
                    v.set(k, &v[k] + &q(1));
                    table[i][j] = v;
                    let err = LieAlgebra::new(so3.names.clone(), table).unwrap_err();
                    assert!(
                        matches!(err, LieError::Antisymmetry { .. }),
                        "{i}{j}{k}: {err}"
                    );
                }
            }
        }
        let wrong = vec![
            (0, 1, Vector::from_ints(&[1, 0, 1])),
            (0, 2, -&e(3, 1)),
            (1, 2, e(3, 0)),
        ];
        assert!(matches!(
            LieAlgebra::from_brackets(default_names(3), &wrong),
            Err(LieError::Jacobi { .. })
        ));
    }

    #[test]
    fn killing_form_is_invariant() {
        for l in [
            algebras::so3(),
            algebras::sl2(),
            algebras::heisenberg(),
            algebras::aff_aff(),
        ] {
            let n = l.dim();
            let k = l.killing_form();
            assert!(k.is_symmetric());
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let lhs = k.bilinear(l.basis_bracket(x, y), &e(n, z))
                            + k.bilinear(&e(n, y), l.basis_bracket(x, z));
                        assert!(lhs.is_zero());
                    }
                }
            }
            assert!(l.is_ideal(&l.center()).unwrap());
            for i in 0..n {
                assert!(l.is_subalgebra(&l.centralizer(&e(n, i)).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn formatting() {
        let so3 = algebras::so3();
        assert_eq!(
            so3.format_vector(&Vector::from_ints(&[2, 0, -1])),
            "2*e1 - e3"
        );
        assert_eq!(so3.format_vector(&Vector::zeros(3)), "0");
        assert_eq!(
            so3.format_vector(&Vector::new(vec![Rational::new(-1, 2), q(0), q(0)])),
            "-1/2*e1"
        );
    }
}
