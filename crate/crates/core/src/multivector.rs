//! Second and third exterior powers of a Lie algebra and the algebraic
//! Schouten bracket of bivectors.
//!
//! Coordinates on `Λ²` are indexed by pairs `i < j` in lexicographic order,
//! coordinates on `Λ³` by triples `i < j < k`. The bracket follows the
//! convention
//!
//! ```text
//! [a∧b, c∧d] = [a,c]∧b∧d − [a,d]∧b∧c − [b,c]∧a∧d + [b,d]∧a∧c
//! ```
//!
//! extended bilinearly. Membership verdicts downstream only depend on the
//! line spanned by `[Λ, Λ]`, so the overall normalisation is immaterial.

use serde::{Deserialize, Serialize};

use crate::lie::LieAlgebra;
use crate::linalg::{LinalgError, Matrix, Rational, Subspace, Vector};

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
        .collect()
}

/// Position of `(i, j)`, `i < j`, in [`pairs`].
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Position of `(i, j, k)`, `i < j < k`, in [`triples`].
pub fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k < n);
    let before_i: usize = (0..i).map(|a| (n - a - 1) * (n - a - 2) / 2).sum();
    before_i + pair_index(n - i - 1, j - i - 1, k - i - 1)
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn binom3(n: usize) -> usize {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// Sorts three distinct indices, returning the permutation sign; `None` if
/// two coincide.
fn sort3(a: usize, b: usize, c: usize) -> Option<(usize, usize, usize, bool)> {
    if a == b || b == c || a == c {
        return None;
    }
    let mut v = [a, b, c];
    let mut negative = false;
    for i in 0..3 {
        for j in 0..2 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                negative = !negative;
            }
        }
    }
    Some((v[0], v[1], v[2], negative))
}

/// A single `{i, j, coeff}` record, indices 0-based in memory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub i: usize,
    pub j: usize,
    pub coeff: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Rational,
}

/// `Σ_{i<j} c_{ij} e_i∧e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bivector {
    dim: usize,
    coeffs: Vector,
}

/// `Σ_{i<j<k} c_{ijk} e_i∧e_j∧e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trivector {
    dim: usize,
    coeffs: Vector,
}

impl Bivector {
    pub fn zero(dim: usize) -> Self {
        Bivector {
            dim,
            coeffs: Vector::zeros(binom2(dim)),
        }
    }

    pub fn from_coords(dim: usize, coeffs: Vector) -> Self {
        assert_eq!(coeffs.len(), binom2(dim), "Λ² coordinate length");
        Bivector { dim, coeffs }
    }

    /// Sums `coeff · e_i∧e_j` over the entries; `i > j` contributes with the
    /// opposite sign and `i == j` contributes nothing.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, Rational)]) -> Self {
        let mut b = Self::zero(dim);
        for (i, j, c) in entries {
            assert!(*i < dim && *j < dim, "bivector index out of range");
            if i == j {
                continue;
            }
            let (lo, hi, s) = if i < j {
                (*i, *j, c.clone())
            } else {
                (*j, *i, -c)
            };
            let idx = pair_index(dim, lo, hi);
            b.coeffs.set(idx, &b.coeffs[idx] + &s);
        }
        b
    }

    pub fn basis(dim: usize, i: usize, j: usize) -> Self {
        Self::from_entries(dim, &[(i, j, Rational::one())])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &Vector {
        &self.coeffs
    }

    /// Signed coefficient of `e_i∧e_j` for any ordering of the indices.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.coeffs[pair_index(self.dim, j, i)],
            std::cmp::Ordering::Equal => Rational::zero(),
        }
    }

    pub fn entries(&self) -> Vec<PairEntry> {
        pairs(self.dim)
            .into_iter()
            .zip(self.coeffs.iter())
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j), c)| PairEntry {
                i,
                j,
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn add(&self, other: &Bivector) -> Bivector {
        assert_eq!(self.dim, other.dim);
        Bivector::from_coords(self.dim, &self.coeffs + &other.coeffs)
    }

    pub fn scale(&self, s: &Rational) -> Bivector {
        Bivector::from_coords(self.dim, self.coeffs.scale(s))
    }

    /// Full antisymmetric `n × n` coefficient matrix `P^{ab}`.
    pub fn to_antisymmetric(&self) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |a, b| self.get(a, b))
    }

    /// Applies an operator on `Λ²` given in pair coordinates.
    pub fn apply(&self, op: &Matrix) -> Bivector {
        Bivector::from_coords(self.dim, op.mul_vec(&self.coeffs))
    }

    /// Places the bivector in a larger space starting at `offset`.
    pub fn embed(&self, dim: usize, offset: usize) -> Bivector {
        let entries: Vec<_> = self
            .entries()
            .into_iter()
            .map(|e| (e.i + offset, e.j + offset, e.coeff))
            .collect();
        Bivector::from_entries(dim, &entries)
    }
}

impl Trivector {
    pub fn zero(dim: usize) -> Self {
        Trivector {
            dim,
            coeffs: Vector::zeros(binom3(dim)),
        }
    }

    pub fn from_coords(dim: usize, coeffs: Vector) -> Self {
        assert_eq!(coeffs.len(), binom3(dim), "Λ³ coordinate length");
        Trivector { dim, coeffs }
    }

    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Self {
        let mut t = Self::zero(dim);
        for (i, j, k, c) in entries {
            t.add_term(*i, *j, *k, c);
        }
        t
    }

    /// `self += c · e_i∧e_j∧e_k` for arbitrary index order.
    fn add_term(&mut self, i: usize, j: usize, k: usize, c: &Rational) {
        if let Some((a, b, d, negative)) = sort3(i, j, k) {
            let idx = triple_index(self.dim, a, b, d);
            let v = if negative {
                &self.coeffs[idx] - c
            } else {
                &self.coeffs[idx] + c
            };
            self.coeffs.set(idx, v);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &Vector {
        &self.coeffs
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        match sort3(i, j, k) {
            Some((a, b, d, negative)) => {
                let c = &self.coeffs[triple_index(self.dim, a, b, d)];
                if negative {
                    -c
                } else {
                    c.clone()
                }
            }
            None => Rational::zero(),
        }
    }

    pub fn entries(&self) -> Vec<TripleEntry> {
        triples(self.dim)
            .into_iter()
            .zip(self.coeffs.iter())
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j, k), c)| TripleEntry {
                i,
                j,
                k,
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn add(&self, other: &Trivector) -> Trivector {
        assert_eq!(self.dim, other.dim);
        Trivector::from_coords(self.dim, &self.coeffs + &other.coeffs)
    }

    pub fn sub(&self, other: &Trivector) -> Trivector {
        assert_eq!(self.dim, other.dim);
        Trivector::from_coords(self.dim, &self.coeffs - &other.coeffs)
    }

    pub fn scale(&self, s: &Rational) -> Trivector {
        Trivector::from_coords(self.dim, self.coeffs.scale(s))
    }

    pub fn apply(&self, op: &Matrix) -> Trivector {
        Trivector::from_coords(self.dim, op.mul_vec(&self.coeffs))
    }
}

fn same_len(expected: usize, found: usize) -> Result<(), LinalgError> {
    if expected == found {
        Ok(())
    } else {
        Err(LinalgError::DimensionMismatch { expected, found })
    }
}

pub fn wedge(x: &Vector, y: &Vector) -> Result<Bivector, LinalgError> {
    same_len(x.len(), y.len())?;
    let n = x.len();
    let coeffs = pairs(n)
        .into_iter()
        .map(|(i, j)| &x[i] * &y[j] - &x[j] * &y[i])
        .collect();
    Ok(Bivector::from_coords(n, coeffs))
}

pub fn wedge3(x: &Vector, y: &Vector, z: &Vector) -> Result<Trivector, LinalgError> {
    same_len(x.len(), y.len())?;
    same_len(x.len(), z.len())?;
    let n = x.len();
    let coeffs = triples(n)
        .into_iter()
        .map(|(i, j, k)| {
            Matrix::from_fn(3, 3, |r, c| {
                let v = [x, y, z][r];
                v[[i, j, k][c]].clone()
            })
            .det()
        })
        .collect();
    Ok(Trivector::from_coords(n, coeffs))
}

/// `Λ²A`: `x∧y ↦ Ax∧Ay`, in pair coordinates.
pub fn extend_map_2(a: &Matrix) -> Matrix {
    assert!(a.is_square(), "extend_map_2 needs a square matrix");
    let n = a.rows();
    let cols: Vec<Vector> = pairs(n)
        .into_iter()
        .map(|(i, j)| wedge(&a.column(i), &a.column(j)).unwrap().coeffs)
        .collect();
    Matrix::from_columns(&cols, binom2(n))
}

/// `Λ³A`: `x∧y∧z ↦ Ax∧Ay∧Az`, in triple coordinates.
pub fn extend_map_3(a: &Matrix) -> Matrix {
    assert!(a.is_square(), "extend_map_3 needs a square matrix");
    let n = a.rows();
    let cols: Vec<Vector> = triples(n)
        .into_iter()
        .map(|(i, j, k)| {
            wedge3(&a.column(i), &a.column(j), &a.column(k))
                .unwrap()
                .coeffs
        })
        .collect();
    Matrix::from_columns(&cols, binom3(n))
}

/// Leibniz extension `x∧y ↦ Dx∧y + x∧Dy` to `Λ²`.
pub fn extend_derivation_2(d: &Matrix) -> Matrix {
    assert!(d.is_square(), "extend_derivation_2 needs a square matrix");
    let n = d.rows();
    let e = |i| Vector::basis(n, i);
    let cols: Vec<Vector> = pairs(n)
        .into_iter()
        .map(|(i, j)| {
            let a = wedge(&d.column(i), &e(j)).unwrap();
            let b = wedge(&e(i), &d.column(j)).unwrap();
            a.add(&b).coeffs
        })
        .collect();
    Matrix::from_columns(&cols, binom2(n))
}

/// Leibniz extension to `Λ³`.
pub fn extend_derivation_3(d: &Matrix) -> Matrix {
    assert!(d.is_square(), "extend_derivation_3 needs a square matrix");
    let n = d.rows();
    let e = |i| Vector::basis(n, i);
    let cols: Vec<Vector> = triples(n)
        .into_iter()
        .map(|(i, j, k)| {
            let a = wedge3(&d.column(i), &e(j), &e(k)).unwrap();
            let b = wedge3(&e(i), &d.column(j), &e(k)).unwrap();
            let c = wedge3(&e(i), &e(j), &d.column(k)).unwrap();
            a.add(&b).add(&c).coeffs
        })
        .collect();
    Matrix::from_columns(&cols, binom3(n))
}

/// Schouten bracket `[P, Q]` of two bivectors.
///
/// With `P^{ab}`, `Q^{cd}` the full antisymmetric coefficient arrays the four
/// terms of the decomposable formula collapse to one contraction,
/// `[P,Q] = Σ P^{ab} Q^{cd} c_{ac}^m e_m∧e_b∧e_d`, summed over all indices.
pub fn schouten(l: &LieAlgebra, p: &Bivector, q: &Bivector) -> Result<Trivector, LinalgError> {
    let n = l.dim();
    same_len(n, p.dim)?;
    same_len(n, q.dim)?;
    let pm = p.to_antisymmetric();
    let qm = q.to_antisymmetric();
    let mut out = Trivector::zero(n);
    for a in 0..n {
        for b in 0..n {
            let pab = pm.get(a, b);
            if pab.is_zero() {
                continue;
            }
            for c in 0..n {
                let bracket = l.basis_bracket(a, c);
                if bracket.is_zero() {
                    continue;
                }
                for d in 0..n {
                    let qcd = qm.get(c, d);
                    if qcd.is_zero() || b == d {
                        continue;
                    }
                    let w = pab * qcd;
                    for m in 0..n {
                        if !bracket[m].is_zero() {
                            out.add_term(m, b, d, &(&w * &bracket[m]));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `U∧Λ²G ⊂ Λ³G`: span of `u∧e_a∧e_b` over a basis of `U`.
pub fn wedge_subspace(u: &Subspace) -> Subspace {
    let n = u.ambient_dim();
    let mut gens = Vec::new();
    for v in u.basis() {
        for (a, b) in pairs(n) {
            let t = wedge3(v, &Vector::basis(n, a), &Vector::basis(n, b)).unwrap();
            if !t.is_zero() {
                gens.push(t.coeffs);
            }
        }
    }
    Subspace::span(binom3(n), &gens).expect("trivector coordinates have fixed length")
}

/// Whether `t ∈ U∧Λ²G`.
pub fn in_wedge_subspace(t: &Trivector, u: &Subspace) -> Result<bool, LinalgError> {
    Ok(wedge_residual(t, u)?.is_zero())
}

/// Normal form of `t` modulo `U∧Λ²G`; zero exactly when `t` lies in it.
pub fn wedge_residual(t: &Trivector, u: &Subspace) -> Result<Trivector, LinalgError> {
    same_len(u.ambient_dim(), t.dim)?;
    let w = wedge_subspace(u);
    Ok(Trivector::from_coords(t.dim, w.reduce(&t.coeffs)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebras;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn e(n: usize, i: usize) -> Vector {
        Vector::basis(n, i)
    }

    #[test]
    fn index_maps_are_consistent() {
        for n in 0..7 {
            for (idx, (i, j)) in pairs(n).into_iter().enumerate() {
                assert_eq!(pair_index(n, i, j), idx);
            }
            for (idx, (i, j, k)) in triples(n).into_iter().enumerate() {
                assert_eq!(triple_index(n, i, j, k), idx);
            }
        }
    }

    #[test]
    fn wedge_examples() {
        let b = wedge(&e(3, 0), &e(3, 1)).unwrap();
        assert_eq!(
            b.entries(),
            vec![PairEntry {
                i: 0,
                j: 1,
                coeff: q(1)
            }]
        );
        let x = Vector::from_ints(&[1, 2, 3]);
        assert!(wedge(&x, &x).unwrap().is_zero());
        let t = wedge3(&e(3, 2), &e(3, 1), &e(3, 0)).unwrap();
        assert_eq!(t.get(0, 1, 2), q(-1));
        assert!(wedge(&x, &Vector::zeros(2)).is_err());
    }

    #[test]
    fn extensions_of_maps() {
        assert_eq!(extend_map_2(&Matrix::identity(4)), Matrix::identity(6));
        // j e1 = e2, j e2 = -e1, j e3 = 0
        let j = Matrix::from_int_rows(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let lj = extend_map_2(&j);
        let l = Bivector::basis(3, 0, 1);
        assert_eq!(l.apply(&lj), l);
        let sl2 = algebras::sl2();
        let d = extend_derivation_3(&sl2.ad_basis(2));
        let efh = Trivector::from_entries(3, &[(0, 1, 2, q(1))]);
        assert!(efh.apply(&d).is_zero());
    }

    /// Independent route: expand every pair of decomposable terms with the
    /// four-term formula and `wedge3`.
    fn schouten_oracle(l: &LieAlgebra, p: &Bivector, q: &Bivector) -> Trivector {
        let n = l.dim();
        let mut acc = Trivector::zero(n);
        for pe in p.entries() {
            for qe in q.entries() {
                let (a, b, c, d) = (e(n, pe.i), e(n, pe.j), e(n, qe.i), e(n, qe.j));
                let br = |x: &Vector, y: &Vector| l.bracket(x, y).unwrap();
                let t1 = wedge3(&br(&a, &c), &b, &d).unwrap();
                let t2 = wedge3(&br(&a, &d), &b, &c).unwrap();
                let t3 = wedge3(&br(&b, &c), &a, &d).unwrap();
                let t4 = wedge3(&br(&b, &d), &a, &c).unwrap();
                let term = t1.sub(&t2).sub(&t3).add(&t4);
                acc = acc.add(&term.scale(&(&pe.coeff * &qe.coeff)));
            }
        }
        acc
    }

    #[test]
    fn schouten_examples() {
        let r3 = LieAlgebra::abelian(3);
        let p = Bivector::from_entries(3, &[(0, 1, q(2)), (1, 2, q(-1))]);
        assert!(schouten(&r3, &p, &p).unwrap().is_zero());

        let so3 = algebras::so3();
        let l = Bivector::basis(3, 0, 1);
        let t = schouten(&so3, &l, &l).unwrap();
        assert_eq!(t, Trivector::from_entries(3, &[(0, 1, 2, q(2))]));
        assert_eq!(schouten_oracle(&so3, &l, &l), t);

        let sl2 = algebras::sl2();
        let r = Bivector::basis(3, 0, 1);
        assert_eq!(
            schouten(&sl2, &r, &r).unwrap(),
            Trivector::from_entries(3, &[(0, 1, 2, q(2))])
        );
        assert!(schouten(&so3, &Bivector::zero(4), &l).is_err());
    }

    #[test]
    fn wedge_membership() {
        let t = Trivector::from_entries(3, &[(0, 1, 2, q(2))]);
        assert!(in_wedge_subspace(&t, &Subspace::full(3)).unwrap());
        assert!(in_wedge_subspace(&t, &Subspace::coordinate(3, &[2])).unwrap());
        assert!(!in_wedge_subspace(&t, &Subspace::zero(3)).unwrap());
        assert_eq!(wedge_residual(&t, &Subspace::zero(3)).unwrap(), t);
        // in dim 4, e1∧e2∧e3 is not in e4∧Λ²
        let t4 = Trivector::from_entries(4, &[(0, 1, 2, q(1))]);
        assert!(!in_wedge_subspace(&t4, &Subspace::coordinate(4, &[3])).unwrap());
        assert!(in_wedge_subspace(&t4, &Subspace::coordinate(4, &[1])).unwrap());
    }

    fn algebra() -> impl Strategy<Value = LieAlgebra> {
        prop_oneof![
            Just(algebras::so3()),
            Just(algebras::sl2()),
            Just(algebras::heisenberg()),
            Just(algebras::aff_aff()),
            Just(algebras::so3().direct_sum(&LieAlgebra::abelian(1))),
        ]
    }

    fn bivector(n: usize) -> impl Strategy<Value = Bivector> {
        prop::collection::vec(-3i64..=3, binom2(n))
            .prop_map(move |c| Bivector::from_coords(n, Vector::from_ints(&c)))
    }

    fn with_bivectors() -> impl Strategy<Value = (LieAlgebra, Bivector, Bivector, Vector)> {
        algebra().prop_flat_map(|l| {
            let n = l.dim();
            (
                Just(l),
                bivector(n),
                bivector(n),
                prop::collection::vec(-2i64..=2, n).prop_map(|v| Vector::from_ints(&v)),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn schouten_symmetric_and_bilinear((l, p, p2, _) in with_bivectors(), s in -3i64..=3) {
            let a = schouten(&l, &p, &p2).unwrap();
            prop_assert_eq!(&a, &schouten(&l, &p2, &p).unwrap());
            prop_assert_eq!(&a, &schouten_oracle(&l, &p, &p2));
            let sum = p.add(&p2.scale(&q(s)));
            let lhs = schouten(&l, &sum, &p).unwrap();
            let rhs = schouten(&l, &p, &p).unwrap().add(&schouten(&l, &p2, &p).unwrap().scale(&q(s)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ad_acts_by_derivations((l, p, _, x) in with_bivectors()) {
            let ad = l.ad(&x).unwrap();
            let lhs = schouten(&l, &p, &p).unwrap().apply(&extend_derivation_3(&ad));
            let dp = p.apply(&extend_derivation_2(&ad));
            let rhs = schouten(&l, &dp, &p).unwrap().scale(&q(2));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn exterior_square_is_functorial(
            a in prop::collection::vec(-2i64..=2, 16),
            b in prop::collection::vec(-2i64..=2, 16),
        ) {
            let m = |v: &[i64]| Matrix::from_fn(4, 4, |r, c| q(v[4 * r + c]));
            let (ma, mb) = (m(&a), m(&b));
            prop_assert_eq!(
                extend_map_2(&ma.mul(&mb)),
                extend_map_2(&ma).mul(&extend_map_2(&mb))
            );
        }

        #[test]
        fn membership_invariant_under_scaling(
            coords in prop::collection::vec(-2i64..=2, 4),
            u in prop::collection::vec(prop::collection::vec(-1i64..=1, 4), 0..3),
            s in prop::sample::select(vec![-3i64, -1, 2, 5]),
        ) {
            let t = Trivector::from_coords(4, Vector::from_ints(&coords));
            let vs: Vec<Vector> = u.iter().map(|v| Vector::from_ints(v)).collect();
            let u = Subspace::span(4, &vs).unwrap();
            prop_assert_eq!(
                in_wedge_subspace(&t, &u).unwrap(),
                in_wedge_subspace(&t.scale(&q(s)), &u).unwrap()
            );
        }
    }
}
