use serde::Serialize;

use super::{kernel, LinalgError, Matrix, Rational, Vector};

/// A linear subspace of `ℚⁿ`, stored by its reduced row-echelon basis.
///
/// Two subspaces are equal exactly when their stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: (0..n).map(|i| Vector::basis(n, i)).collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn span(n: usize, vs: &[Vector]) -> Result<Self, LinalgError> {
        if let Some(v) = vs.iter().find(|v| v.len() != n) {
            return Err(LinalgError::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        if vs.is_empty() {
            return Ok(Self::zero(n));
        }
        let (red, pivots) = Matrix::from_row_vectors(vs, n).rref();
        let basis = (0..pivots.len()).map(|r| red.row(r)).collect();
        Ok(Subspace {
            ambient_dim: n,
            basis,
            pivots,
        })
    }

    /// Span of the standard basis vectors at the given indices.
    pub fn coordinate(n: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vector> = indices.iter().map(|&i| Vector::basis(n, i)).collect();
        Self::span(n, &vs).expect("coordinate vectors have ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    fn check_ambient(&self, n: usize) -> Result<(), LinalgError> {
        if n != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }

    /// Normal form of `v` modulo this subspace: the pivot entries are
    /// eliminated, so `v ∈ self` iff the result is zero.
    pub fn reduce(&self, v: &Vector) -> Result<Vector, LinalgError> {
        self.check_ambient(v.len())?;
        let mut out = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let f = out[p].clone();
            if !f.is_zero() {
                out.axpy(&-f, b);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Coordinates of `v` in the stored basis, or `None` when `v ∉ self`.
    pub fn coordinates(&self, v: &Vector) -> Result<Option<Vector>, LinalgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// The element with the given basis coordinates.
    pub fn combine(&self, coords: &Vector) -> Vector {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut v = Vector::zeros(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            v.axpy(c, b);
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        other.check_ambient(self.ambient_dim)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other.ambient_dim)?;
        let vs: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.ambient_dim, &vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other.ambient_dim)?;
        let n = self.ambient_dim;
        let (p, q) = (self.dim(), other.dim());
        // a·S - b·T = 0
        let system = Matrix::from_fn(n, p + q, |r, c| {
            if c < p {
                self.basis[c][r].clone()
            } else {
                -&other.basis[c - p][r]
            }
        });
        let solutions = kernel(&system);
        let vs: Vec<Vector> = solutions
            .basis()
            .iter()
            .map(|s| {
                let coords: Vector = s.iter().take(p).cloned().collect();
                self.combine(&coords)
            })
            .collect();
        Subspace::span(n, &vs)
    }

    /// Coordinate complement: standard basis vectors at the non-pivot positions.
    pub fn complement(&self) -> Subspace {
        let free: Vec<usize> = (0..self.ambient_dim)
            .filter(|i| !self.pivots.contains(i))
            .collect();
        Subspace::coordinate(self.ambient_dim, &free)
    }

    /// Whether `self ⊕ other` is the whole ambient space.
    pub fn is_supplementary(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other.ambient_dim)?;
        Ok(self.dim() + other.dim() == self.ambient_dim && self.intersect(other)?.is_zero())
    }

    /// Splits `v = a + b` with `a ∈ self`, `b ∈ other`. Requires the two
    /// subspaces to be supplementary.
    pub fn decompose(&self, other: &Subspace, v: &Vector) -> Result<(Vector, Vector), LinalgError> {
        if !self.is_supplementary(other)? {
            return Err(LinalgError::NotSupplementary);
        }
        self.check_ambient(v.len())?;
        let cols: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        let a = Matrix::from_columns(&cols, self.ambient_dim);
        let c = super::solve(&a, v)?.expect("supplementary subspaces span everything");
        let (left, right) = c.entries().split_at(self.dim());
        Ok((
            self.combine(&Vector::new(left.to_vec())),
            other.combine(&Vector::new(right.to_vec())),
        ))
    }

    /// Image under a linear map.
    pub fn image(&self, map: &Matrix) -> Result<Subspace, LinalgError> {
        self.check_ambient(map.cols())?;
        let vs: Vec<Vector> = self.basis.iter().map(|b| map.mul_vec(b)).collect();
        Subspace::span(map.rows(), &vs)
    }

    /// Direct sum embedding into `ℚ^{n+m}`: `self` in the first block,
    /// `other` in the second.
    pub fn direct_sum(&self, other: &Subspace) -> Subspace {
        let n = self.ambient_dim + other.ambient_dim;
        let vs: Vec<Vector> = self
            .basis
            .iter()
            .map(|b| b.embed(n, 0))
            .chain(other.basis.iter().map(|b| b.embed(n, self.ambient_dim)))
            .collect();
        Subspace::span(n, &vs).expect("embedded vectors have ambient length")
    }

    /// Orthogonal complement with respect to a symmetric bilinear form.
    pub fn orthogonal(&self, form: &Matrix) -> Result<Subspace, LinalgError> {
        self.check_ambient(form.rows())?;
        let rows: Vec<Vector> = self
            .basis
            .iter()
            .map(|b| form.transpose().mul_vec(b))
            .collect();
        Ok(kernel(&Matrix::from_row_vectors(&rows, self.ambient_dim)))
    }

    /// Basis vectors rendered as rational strings.
    pub fn basis_strings(&self) -> Vec<Vec<String>> {
        self.basis
            .iter()
            .map(|b| b.iter().map(Rational::to_string).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(n: usize, i: usize) -> Vector {
        Vector::basis(n, i)
    }

    #[test]
    fn membership() {
        let s = Subspace::span(3, &[e(3, 0)]).unwrap();
        assert!(!s.contains(&e(3, 1)).unwrap());
        assert!(s.contains(&e(3, 0).scale(&Rational::from_int(5))).unwrap());
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, &[e(3, 0), e(3, 1)]).unwrap();
        let b = Subspace::span(3, &[e(3, 1), e(3, 2)]).unwrap();
        assert_eq!(
            a.intersect(&b).unwrap(),
            Subspace::span(3, &[e(3, 1)]).unwrap()
        );
    }

    #[test]
    fn complement_uses_non_pivots() {
        let s = Subspace::span(3, &[e(3, 0)]).unwrap();
        assert_eq!(
            s.complement(),
            Subspace::span(3, &[e(3, 1), e(3, 2)]).unwrap()
        );
    }

    #[test]
    fn dimension_mismatch_reported() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(
            a.intersect(&b),
            Err(LinalgError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
        assert!(a.contains(&Vector::zeros(3)).is_err());
        assert!(Subspace::span(2, &[Vector::zeros(3)]).is_err());
    }

    #[test]
    fn decompose_parallel() {
        let h = Subspace::span(2, &[e(2, 0)]).unwrap();
        let i = Subspace::span(2, &[Vector::from_ints(&[1, 1])]).unwrap();
        let (a, b) = h.decompose(&i, &Vector::from_ints(&[3, 2])).unwrap();
        assert_eq!(a, Vector::from_ints(&[1, 0]));
        assert_eq!(b, Vector::from_ints(&[2, 2]));
        assert_eq!(
            h.decompose(&h, &e(2, 0)),
            Err(LinalgError::NotSupplementary)
        );
    }

    fn small_vectors(n: usize, k: usize) -> impl Strategy<Value = Vec<Vector>> {
        prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=k)
            .prop_map(|rows| rows.iter().map(|r| Vector::from_ints(r)).collect())
    }

    proptest! {
        #[test]
        fn grassmann_formula(a in small_vectors(4, 4), b in small_vectors(4, 4)) {
            let s = Subspace::span(4, &a).unwrap();
            let t = Subspace::span(4, &b).unwrap();
            let i = s.intersect(&t).unwrap();
            let u = s.sum(&t).unwrap();
            prop_assert_eq!(s.dim() + t.dim(), i.dim() + u.dim());
            prop_assert!(i.is_subspace_of(&s).unwrap() && i.is_subspace_of(&t).unwrap());
        }

        #[test]
        fn span_idempotent(a in small_vectors(4, 5)) {
            let s = Subspace::span(4, &a).unwrap();
            prop_assert_eq!(Subspace::span(4, s.basis()).unwrap(), s.clone());
            for v in &a {
                prop_assert!(s.contains(v).unwrap());
            }
        }

        #[test]
        fn kernel_annihilates(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..4)) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let a = Matrix::from_int_rows(&refs);
            let k = kernel(&a);
            prop_assert_eq!(k.dim() + a.rank(), 4);
            for v in k.basis() {
                prop_assert!(a.mul_vec(v).is_zero());
            }
        }

        #[test]
        fn complement_is_supplementary(a in small_vectors(4, 4)) {
            let s = Subspace::span(4, &a).unwrap();
            prop_assert!(s.is_supplementary(&s.complement()).unwrap());
        }
    }
}
