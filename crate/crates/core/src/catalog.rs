//! Built-in example structures with their expected check verdicts.

use crate::checks::run_all;
use crate::cr_kahler::{CrData, ExtensionSpec, KahlerCrData};
use crate::document::Document;
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Rational, Subspace, Vector};
use crate::multivector::Bivector;
use crate::poisson::{product_structure, PseudoPoissonData};
use crate::report::Status;

/// Algebras used across the catalog.
pub mod algebras {
    use super::*;

    fn names(ns: &[&str]) -> Vec<String> {
        ns.iter().map(|s| s.to_string()).collect()
    }

    /// `[e1,e2] = e3`, `[e1,e3] = −e2`, `[e2,e3] = e1`.
    pub fn so3() -> LieAlgebra {
        LieAlgebra::from_brackets(
            names(&["e1", "e2", "e3"]),
            &[
                (0, 1, Vector::from_ints(&[0, 0, 1])),
                (0, 2, Vector::from_ints(&[0, -1, 0])),
                (1, 2, Vector::from_ints(&[1, 0, 0])),
            ],
        )
        .unwrap()
    }

    /// Basis `(e, f, h)`: `[e,f] = h`, `[e,h] = −2e`, `[f,h] = 2f`.
    pub fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            names(&["e", "f", "h"]),
            &[
                (0, 1, Vector::from_ints(&[0, 0, 1])),
                (0, 2, Vector::from_ints(&[-2, 0, 0])),
                (1, 2, Vector::from_ints(&[0, 2, 0])),
            ],
        )
        .unwrap()
    }

    /// `[e1,e2] = e3`.
    pub fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_brackets(
            names(&["e1", "e2", "e3"]),
            &[(0, 1, Vector::from_ints(&[0, 0, 1]))],
        )
        .unwrap()
    }

    /// `aff(ℝ) × aff(ℝ)`: `[e1,e2] = e2`, `[e3,e4] = e4`.
    pub fn aff_aff() -> LieAlgebra {
        LieAlgebra::from_brackets(
            names(&["e1", "e2", "e3", "e4"]),
            &[
                (0, 1, Vector::from_ints(&[0, 1, 0, 0])),
                (2, 3, Vector::from_ints(&[0, 0, 0, 1])),
            ],
        )
        .unwrap()
    }

    /// `so(3) ⊕ ℝ`, the last basis vector central.
    pub fn so3_plus_r() -> LieAlgebra {
        so3().direct_sum(&LieAlgebra::from_brackets(vec!["e4".into()], &[]).unwrap())
    }
}

/// Structures on the catalog algebras.
pub mod structures {
    use super::*;

    /// `j` with `j e_a = e_b`, `j e_b = −e_a` for each listed pair.
    pub fn pairing_j(n: usize, pairs: &[(usize, usize)]) -> Matrix {
        let mut j = Matrix::zeros(n, n);
        for &(a, b) in pairs {
            j.set(b, a, Rational::one());
            j.set(a, b, -Rational::one());
        }
        j
    }

    /// `H = span{e1, e2}`, `j e1 = e2`, `j e2 = −e1`, `j e3 = 0`, flat metric.
    pub fn so3_kahler() -> KahlerCrData {
        let cr = CrData::new(
            algebras::so3(),
            Subspace::coordinate(3, &[0, 1]),
            pairing_j(3, &[(0, 1)]),
        )
        .unwrap();
        KahlerCrData::new(cr, Matrix::identity(3)).unwrap()
    }

    /// The same CR data with `⟨,⟩ = diag(1, 2, 1)`.
    pub fn so3_bad_metric() -> KahlerCrData {
        let cr = so3_kahler().cr().clone();
        let metric = Matrix::from_int_rows(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]);
        KahlerCrData::new(cr, metric).unwrap()
    }

    /// `ℝ⁴` with `V = span{e1, e2}`, `j e1 = e2`, flat metric.
    pub fn rn_flat_kahler() -> KahlerCrData {
        let cr = CrData::new(
            LieAlgebra::abelian(4),
            Subspace::coordinate(4, &[0, 1]),
            pairing_j(4, &[(0, 1)]),
        )
        .unwrap();
        KahlerCrData::new(cr, Matrix::identity(4)).unwrap()
    }

    /// Codimension-one Kähler-CR structure on `sl(2)`: `H = span{h, e + f}`,
    /// `j h = e + f`, `j(e + f) = −h`, `j(e − f) = 0`,
    /// `⟨,⟩ = diag(1/2, 1/2, 1)`.
    pub fn sl2_kahler() -> KahlerCrData {
        let half = Rational::new(1, 2);
        let h = Subspace::span(
            3,
            &[Vector::from_ints(&[0, 0, 1]), Vector::from_ints(&[1, 1, 0])],
        )
        .unwrap();
        let j = Matrix::from_columns(
            &[
                Vector::new(vec![0.into(), 0.into(), -&half]),
                Vector::new(vec![0.into(), 0.into(), -&half]),
                Vector::from_ints(&[1, 1, 0]),
            ],
            3,
        );
        let cr = CrData::new(algebras::sl2(), h, j).unwrap();
        let mut metric = Matrix::identity(3);
        metric.set(0, 0, half.clone());
        metric.set(1, 1, half);
        KahlerCrData::new(cr, metric).unwrap()
    }

    /// `aff(ℝ) × aff(ℝ)` with `H` the whole algebra, `j e1 = e2`, `j e3 = e4`,
    /// flat metric.
    pub fn aff_aff_kahler() -> KahlerCrData {
        let cr = CrData::new(
            algebras::aff_aff(),
            Subspace::full(4),
            pairing_j(4, &[(0, 1), (2, 3)]),
        )
        .unwrap();
        KahlerCrData::new(cr, Matrix::identity(4)).unwrap()
    }

    /// `aff(ℝ) × aff(ℝ)` with `j e1 = e3`, `j e2 = e4` pairing the factors;
    /// fails the integrability condition.
    pub fn aff_aff_bad_j() -> CrData {
        CrData::new(
            algebras::aff_aff(),
            Subspace::full(4),
            pairing_j(4, &[(0, 2), (1, 3)]),
        )
        .unwrap()
    }

    /// `ℝ²` with its standard complex structure, as a Kähler Lie algebra.
    pub fn plane_kahler() -> KahlerCrData {
        let cr = CrData::new(
            LieAlgebra::abelian(2),
            Subspace::full(2),
            pairing_j(2, &[(0, 1)]),
        )
        .unwrap();
        KahlerCrData::new(cr, Matrix::identity(2)).unwrap()
    }

    /// `Λ = e1∧e2` on the `so(3)` example with `U = span{e3}`.
    pub fn so3_poisson() -> PseudoPoissonData {
        let k = so3_kahler();
        PseudoPoissonData::new(
            k.algebra().clone(),
            k.h().clone(),
            Subspace::coordinate(3, &[2]),
            Some(k.j().clone()),
            Bivector::basis(3, 0, 1),
        )
        .unwrap()
    }

    /// `Λ = e1∧e2` on `ℝ²`, `U = {0}`.
    pub fn plane_poisson() -> PseudoPoissonData {
        let k = plane_kahler();
        PseudoPoissonData::new(
            k.algebra().clone(),
            k.h().clone(),
            Subspace::zero(2),
            Some(k.j().clone()),
            Bivector::basis(2, 0, 1),
        )
        .unwrap()
    }
}

/// Catalog entry: a document plus the verdict of every check run on it.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub document: Document,
    pub expected: Vec<(String, Status)>,
    /// For negative fixtures: the failing check, its witness basis and value.
    pub frozen_witness: Option<FrozenWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrozenWitness {
    pub check_id: &'static str,
    pub basis: Vec<&'static str>,
    pub value: &'static str,
}

impl CatalogEntry {
    /// Whether running the checks reproduces the stored verdicts and witness.
    pub fn self_test(&self) -> Result<(), String> {
        let report = run_all(&self.document);
        let got: Vec<(String, Status)> = report
            .checks
            .iter()
            .map(|c| (c.check_id.clone(), c.status))
            .collect();
        if got != self.expected {
            return Err(format!(
                "{}: verdicts differ\n got: {got:?}\n expected: {:?}",
                self.id, self.expected
            ));
        }
        if let Some(w) = &self.frozen_witness {
            let c = report
                .get(w.check_id)
                .ok_or_else(|| format!("{}: {} missing", self.id, w.check_id))?;
            let found = c
                .witnesses
                .first()
                .ok_or_else(|| format!("{}: no witness", self.id))?;
            if found.basis != w.basis || found.value != w.value {
                return Err(format!("{}: witness {found:?} differs from {w:?}", self.id));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown catalog id {0:?}")]
pub struct UnknownId(pub String);

struct Spec {
    id: &'static str,
    description: &'static str,
    build: fn() -> Document,
    expected: &'static [(&'static str, Status)],
    witness: Option<(&'static str, &'static [&'static str], &'static str)>,
}

fn kahler_doc(k: &KahlerCrData) -> Document {
    Document::new(k.algebra().clone())
        .with_cr(k.h().clone(), k.j().clone())
        .unwrap()
        .with_metric(k.metric().clone())
        .unwrap()
}

fn rn_flat() -> Document {
    kahler_doc(&structures::rn_flat_kahler())
        .with_poisson(Subspace::coordinate(4, &[2, 3]), Bivector::basis(4, 0, 1))
        .unwrap()
        .with_ideal(Subspace::coordinate(4, &[2, 3]))
        .unwrap()
}

fn so3_cr() -> Document {
    kahler_doc(&structures::so3_kahler())
        .with_poisson(Subspace::coordinate(3, &[2]), Bivector::basis(3, 0, 1))
        .unwrap()
}

fn sl2() -> Document {
    let u = Subspace::span(3, &[Vector::from_ints(&[1, -1, 0])]).unwrap();
    // Λ = h∧(e + f)
    let lambda = Bivector::from_entries(3, &[(2, 0, 1.into()), (2, 1, 1.into())]);
    kahler_doc(&structures::sl2_kahler())
        .with_poisson(u, lambda)
        .unwrap()
}

fn sl2_rmatrix() -> Document {
    Document::new(algebras::sl2())
        .with_poisson(Subspace::coordinate(3, &[2]), Bivector::basis(3, 0, 1))
        .unwrap()
}

fn heisenberg() -> Document {
    kahler_doc(&structures::plane_kahler())
        .with_extension(ExtensionSpec {
            v_dim: 1,
            alpha: vec![(0, 1, Vector::from_ints(&[1]))],
            mixed: Vec::new(),
        })
        .unwrap()
}

fn aff_aff() -> Document {
    kahler_doc(&structures::aff_aff_kahler())
}

/// Product of the `so(3)` Poisson structure with `ℝ²`.
pub fn so3_x_r2_poisson() -> PseudoPoissonData {
    product_structure(&structures::so3_poisson(), &structures::plane_poisson())
}

fn so3_x_r2() -> Document {
    let p = so3_x_r2_poisson();
    Document::new(p.algebra().clone())
        .with_cr(p.h().clone(), p.j().unwrap().clone())
        .unwrap()
        .with_metric(Matrix::identity(5))
        .unwrap()
        .with_poisson(p.u().clone(), p.lambda().clone())
        .unwrap()
}

fn heisenberg_x_r2() -> Document {
    let g = algebras::heisenberg().direct_sum(&LieAlgebra::abelian(2));
    Document::new(g)
        .with_cr(
            Subspace::coordinate(5, &[3, 4]),
            structures::pairing_j(5, &[(3, 4)]),
        )
        .unwrap()
        .with_metric(Matrix::identity(5))
        .unwrap()
        .with_ideal(Subspace::coordinate(5, &[0, 1, 2]))
        .unwrap()
}

fn so3_bad_metric() -> Document {
    kahler_doc(&structures::so3_bad_metric())
}

fn aff_aff_bad_j() -> Document {
    let d = structures::aff_aff_bad_j();
    Document::new(d.algebra().clone())
        .with_cr(d.h().clone(), d.j().clone())
        .unwrap()
}

fn so3_bad_ideal() -> Document {
    kahler_doc(&structures::so3_kahler())
        .with_ideal(Subspace::coordinate(3, &[2]))
        .unwrap()
}

fn ext_not_j_invariant() -> Document {
    let cr = CrData::new(
        LieAlgebra::abelian(4),
        Subspace::full(4),
        structures::pairing_j(4, &[(0, 1), (2, 3)]),
    )
    .unwrap();
    let k = KahlerCrData::new(cr, Matrix::identity(4)).unwrap();
    kahler_doc(&k)
        .with_extension(ExtensionSpec {
            v_dim: 1,
            alpha: vec![(0, 2, Vector::from_ints(&[1]))],
            mixed: Vec::new(),
        })
        .unwrap()
}

fn so3_not_pseudo_poisson() -> Document {
    Document::new(algebras::so3())
        .with_poisson(Subspace::zero(3), Bivector::basis(3, 0, 1))
        .unwrap()
}

/// `U = span{e1}`, `r = e1∧e2 + e1∧e4`: the first hit of the brute-force
/// search in the test suite, frozen here.
pub const COBOUNDARY_FIXTURE_U: usize = 0;
pub const COBOUNDARY_FIXTURE_R: [i64; 6] = [1, 0, 1, 0, 0, 0];

fn so3_r_coboundary() -> Document {
    let g = algebras::so3_plus_r();
    let r = Bivector::from_coords(4, Vector::from_ints(&COBOUNDARY_FIXTURE_R));
    Document::new(g)
        .with_poisson(Subspace::coordinate(4, &[COBOUNDARY_FIXTURE_U]), r)
        .unwrap()
}

use Status::{Fail as F, Pass as P, Skipped as S};

const SPECS: &[Spec] = &[
    Spec {
        id: "rn_flat",
        description: "commutative R^4 with V = span{e1, e2}, j e1 = e2, flat metric",
        build: rn_flat,
        expected: &[
            ("cr.j_preserves_h", P),
            ("cr.j_squared", P),
            ("cr.bracket_defect_in_h", P),
            ("cr.integrable", P),
            ("kahler.omega_antisymmetric", P),
            ("kahler.omega_closed", P),
            ("kahler.omega_nondegenerate_on_h", P),
            ("lsa.commutator_is_bracket", P),
            ("lsa.bracket_jacobi", P),
            ("lsa.left_symmetry", P),
            ("radical.subalgebra", P),
            ("radical.orthogonal_to_h", P),
            ("center_u.commutative", P),
            ("center_u.stabilizes_h", P),
            ("radical.not_semisimple", P),
            ("exactness.alpha_consistent", S),
            ("exactness.killing_identity", S),
            ("exactness.centralizer_is_radical", S),
            ("exactness.codimension", S),
            ("complex.ideal_supplementary", P),
            ("complex.jacobi", P),
            ("complex.j_complex_linear", P),
            ("poisson.pseudo_poisson", P),
            ("poisson.j_invariant", P),
            ("poisson.coboundary_invariance", P),
            ("poisson.cocycle", P),
        ],
        witness: None,
    },
    Spec {
        id: "so3_cr",
        description: "so(3) with H = span{e1, e2}, j e1 = e2, j e2 = -e1, flat metric",
        build: so3_cr,
        expected: &[
            ("cr.j_preserves_h", P),
            ("cr.j_squared", P),
            ("cr.bracket_defect_in_h", P),
            ("cr.integrable", P),
            ("kahler.omega_antisymmetric", P),
            ("kahler.omega_closed", P),
            ("kahler.omega_nondegenerate_on_h", P),
            ("lsa.commutator_is_bracket", P),
            ("lsa.bracket_jacobi", P),
            ("lsa.left_symmetry", P),
            ("radical.subalgebra", P),
            ("radical.orthogonal_to_h", P),
            ("center_u.commutative", P),
            ("center_u.stabilizes_h", P),
            ("radical.not_semisimple", P),
            ("exactness.alpha_consistent", P),
            ("exactness.killing_identity", P),
            ("exactness.centralizer_is_radical", P),
            ("exactness.codimension", P),
            ("poisson.pseudo_poisson", P),
            ("poisson.j_invariant", P),
            ("poisson.coboundary_invariance", P),
            ("poisson.cocycle", P),
        ],
        witness: None,
    },
    Spec {
        id: "sl2",
        description: "sl(2) with H = span{h, e + f}, j h = e + f, metric diag(1/2, 1/2, 1)",
        build: sl2,
        expected: &[
            ("cr.j_preserves_h", P),
            ("cr.j_squared", P),
            ("cr.bracket_defect_in_h", P),
            ("cr.integrable", P),
            ("kahler.omega_antisymmetric", P),
            ("kahler.omega_closed", P),
            ("kahler.omega_nondegenerate_on_h", P),
            ("lsa.commutator_is_bracket", P),
            ("lsa.bracket_jacobi", P),
            ("lsa.left_symmetry", P),
            ("radical.subalgebra", P),
            ("radical.orthogonal_to_h", P),
            ("center_u.commutative", P),
            ("center_u.stabilizes_h", P),
            ("radical.not_semisimple", P),
            ("exactness.alpha_consistent", P),
            ("exactness.killing_identity", P),
            ("exactness.centralizer_is_radical", P),
            ("exactness.codimension", P),
            ("poisson.pseudo_poisson", P),
            ("poisson.j_invariant", P),
            ("poisson.coboundary_invariance", P),
            ("poisson.cocycle", P),
        ],
        witness: None,
    },
    Spec {
        id: "sl2_rmatrix",
        description: "sl(2) with r = e^f and U = span{h}",
        build: sl2_rmatrix,
        expected: &[
            ("poisson.pseudo_poisson", P),
            ("poisson.j_invariant", S),
            ("poisson.coboundary_invariance", P),
            ("poisson.cocycle", P),
        ],
        witness: None,
    },
    Spec {
        id: "heisenberg",
        description: "Heisenberg algebra as the extension of R^2 by alpha(e1, e2) = v1",
        build: heisenberg,
        expected: &[
            ("cr.j_preserves_h", P),
            ("cr.j_squared", P),
            ("cr.bracket_defect_in_h", P),
            ("cr.integrable", P),
            ("kahler.omega_antisymmetric", P),
            ("kahler.omega_closed", P),
            ("kahler.omega_nondegenerate_on_h", P),
            ("lsa.commutator_is_bracket", P),
            ("lsa.bracket_jacobi", P),
            ("lsa.left_symmetry", P),
            ("radical.subalgebra", P),
            ("radical.orthogonal_to_h", P),
            ("center_u.commutative", P),
            ("center_u.stabilizes_h", P),
            ("radical.not_semisimple", P),
            ("exactness.alpha_consistent", S),
            ("exactness.killing_identity", S),
            ("exactness.centralizer_is_radical", S),
            ("exactness.codimension", S),
            ("extension.jacobi", P),
            ("extension.alpha_j_invariant", P),
            ("extension.cyclic_condition", P),
            ("extension.omega_closed", P),
            ("extension.cr.j_preserves_h", P),
            ("extension.cr.j_squared", P),
            ("extension.cr.bracket_defect_in_h", P),
            ("extension.cr.integrable", P),
            ("extension.kahler.omega_antisymmetric", P),
            ("extension.kahler.omega_closed", P),
            ("extension.kahler.omega_nondegenerate_on_h", P),
            ("extension.lsa.commutator_is_bracket", P),
            ("extension.lsa.bracket_jacobi", P),
            ("extension.lsa.left_symmetry", P),
            ("extension.radical.subalgebra", P),
            ("extension.radical.orthogonal_to_h", P),
            ("extension.center_u.commutative", P),
            ("extension.center_u.stabilizes_h", P),
            ("extension.radical.not_semisimple", P),
            ("extension.exactness.alpha_consistent", S),
            ("extension.exactness.killing_identity", S),
            ("extension.exactness.centralizer_is_radical", S),
            ("extension.exactness.codimension", S),
        ],
        witness: None,
    },
    Spec {
        id: "aff_aff",
        description: "aff(R) x aff(R) with j e1 = e2, j e3 = e4, flat metric",
        build: aff_aff,
        expected: &[
            ("cr.j_preserves_h", P),
            ("cr.j_squared", P),
            ("cr.bracket_defect_in_h", P),
            ("cr.integrable", P),
            ("kahler.omega_antisymmetric", P),
            ("kahler.omega_closed", P),
            ("kahler.omega_nondegenerate_on_h", P),
            ("lsa.commutator_is_bracket", P),
            ("lsa.bracket_jacobi", P),
            ("lsa.left_symmetry", P),
            ("radical.subalgebra", P),
            ("radical.orthogonal_to_h", P),
            ("center_u.commutative", P),
            ("center_u.stabilizes_h", P),
            ("radical.not_semisimple", P),
            ("exactness.alpha_consistent", S),
            ("exactness.killing_identity", S),
            ("exactness.centralizer_is_radical", S),
            ("exactness.codimension", S),
        ],
        witness: None,
    },
    Spec {
        id: "so3_x_r2",
        description: "product of the so(3) example with R^2",
        build: so3_x_r2,
        expected: &[
            ("cr.j_preserves_h", P),
            ("cr.j_squared", P),
            ("cr.bracket_defect_in_h", P),
            ("cr.integrable", P),
            ("kahler.omega_antisymmetric", P),
            ("kahler.omega_closed", P),
            ("kahler.omega_nondegenerate_on_h", P),
            ("lsa.commutator_is_bracket", P),
            ("lsa.bracket_jacobi", P),
            ("lsa.left_symmetry", P),
            ("radical.subalgebra", P),
            ("radical.orthogonal_to_h", P),
            ("center_u.commutative", P),
            ("center_u.stabilizes_h", P),
            ("radical.not_semisimple", P),
            ("exactness.alpha_consistent", S),
            ("exactness.killing_identity", S),
            ("exactness.centralizer_is_radical", S),
            ("exactness.codimension", S),
            ("poisson.pseudo_poisson", P),
            ("poisson.j_invariant", P),
            ("poisson.coboundary_invariance", P),
            ("poisson.cocycle", P),
        ],
        witness: None,
    },
    Spec {
        id: "heisenberg_x_r2",
        description: "Heisenberg plus R^2 with H the R^2 factor and the Heisenberg ideal",
        build: heisenberg_x_r2,
        expected: &[
            ("cr.j_preserves_h", P),
            ("cr.j_squared", P),
            ("cr.bracket_defect_in_h", P),
            ("cr.integrable", P),
            ("kahler.omega_antisymmetric", P),
            ("kahler.omega_closed", P),
            ("kahler.omega_nondegenerate_on_h", P),
            ("lsa.commutator_is_bracket", P),
            ("lsa.bracket_jacobi", P),
            ("lsa.left_symmetry", P),
            ("radical.subalgebra", P),
            ("radical.orthogonal_to_h", P),
            ("center_u.commutative", P),
            ("center_u.stabilizes_h", P),
            ("radical.not_semisimple", P),
            ("exactness.alpha_consistent", S),
            ("exactness.killing_identity", S),
            ("exactness.centralizer_is_radical", S),
            ("exactness.codimension", S),
            ("complex.ideal_supplementary", P),
            ("complex.jacobi", P),
            ("complex.j_complex_linear", P),
        ],
        witness: None,
    },
    Spec {
        id: "so3_bad_metric",
        description: "so(3) example with metric diag(1, 2, 1)",
        build: so3_bad_metric,
        expected: &[
            ("cr.j_preserves_h", P),
            ("cr.j_squared", P),
            ("cr.bracket_defect_in_h", P),
            ("cr.integrable", P),
            ("kahler.omega_antisymmetric", F),
            ("kahler.omega_closed", P),
            ("kahler.omega_nondegenerate_on_h", P),
            ("lsa.commutator_is_bracket", S),
            ("lsa.bracket_jacobi", S),
            ("lsa.left_symmetry", S),
            ("radical.subalgebra", S),
            ("radical.orthogonal_to_h", S),
            ("center_u.commutative", S),
            ("center_u.stabilizes_h", S),
            ("radical.not_semisimple", S),
            ("exactness.alpha_consistent", S),
            ("exactness.killing_identity", S),
            ("exactness.centralizer_is_radical", S),
            ("exactness.codimension", S),
        ],
        witness: Some((
            "kahler.omega_antisymmetric",
            &["e1", "e2"],
            "omega(e1,e2) = -1, omega(e2,e1) = 2",
        )),
    },
    Spec {
        id: "aff_aff_bad_j",
        description: "aff(R) x aff(R) with j e1 = e3, j e2 = e4",
        build: aff_aff_bad_j,
        expected: &[
            ("cr.j_preserves_h", P),
            ("cr.j_squared", P),
            ("cr.bracket_defect_in_h", P),
            ("cr.integrable", F),
        ],
        witness: Some(("cr.integrable", &["e1", "e2"], "-e2 + e4")),
    },
    Spec {
        id: "so3_bad_ideal",
        description: "so(3) example with the non-ideal span{e3}",
        build: so3_bad_ideal,
        expected: &[
            ("cr.j_preserves_h", P),
            ("cr.j_squared", P),
            ("cr.bracket_defect_in_h", P),
            ("cr.integrable", P),
            ("kahler.omega_antisymmetric", P),
            ("kahler.omega_closed", P),
            ("kahler.omega_nondegenerate_on_h", P),
            ("lsa.commutator_is_bracket", P),
            ("lsa.bracket_jacobi", P),
            ("lsa.left_symmetry", P),
            ("radical.subalgebra", P),
            ("radical.orthogonal_to_h", P),
            ("center_u.commutative", P),
            ("center_u.stabilizes_h", P),
            ("radical.not_semisimple", P),
            ("exactness.alpha_consistent", P),
            ("exactness.killing_identity", P),
            ("exactness.centralizer_is_radical", P),
            ("exactness.codimension", P),
            ("complex.ideal_supplementary", F),
            ("complex.jacobi", S),
            ("complex.j_complex_linear", S),
        ],
        witness: Some(("complex.ideal_supplementary", &["e3", "e1"], "e2")),
    },
    Spec {
        id: "ext_not_j_invariant",
        description: "R^4 extended by alpha(e1, e3) = v1, which j does not preserve",
        build: ext_not_j_invariant,
        expected: &[
            ("cr.j_preserves_h", P),
            ("cr.j_squared", P),
            ("cr.bracket_defect_in_h", P),
            ("cr.integrable", P),
            ("kahler.omega_antisymmetric", P),
            ("kahler.omega_closed", P),
            ("kahler.omega_nondegenerate_on_h", P),
            ("lsa.commutator_is_bracket", P),
            ("lsa.bracket_jacobi", P),
            ("lsa.left_symmetry", P),
            ("radical.subalgebra", P),
            ("radical.orthogonal_to_h", P),
            ("center_u.commutative", P),
            ("center_u.stabilizes_h", P),
            ("radical.not_semisimple", P),
            ("exactness.alpha_consistent", S),
            ("exactness.killing_identity", S),
            ("exactness.centralizer_is_radical", S),
            ("exactness.codimension", S),
            ("extension.jacobi", P),
            ("extension.alpha_j_invariant", F),
            ("extension.cyclic_condition", P),
            ("extension.omega_closed", P),
            ("extension.suite", S),
        ],
        witness: Some(("extension.alpha_j_invariant", &["e1", "e3"], "-v1")),
    },
    Spec {
        id: "so3_not_pseudo_poisson",
        description: "so(3) with Lambda = e1^e2 and U = {0}",
        build: so3_not_pseudo_poisson,
        expected: &[
            ("poisson.pseudo_poisson", F),
            ("poisson.j_invariant", S),
            ("poisson.coboundary_invariance", P),
            ("poisson.cocycle", P),
        ],
        witness: Some(("poisson.pseudo_poisson", &["e1", "e2", "e3"], "2*e1^e2^e3")),
    },
    Spec {
        id: "so3_r_coboundary",
        description: "so(3) + R with an r-matrix mixing the factors whose [r, r] is not invariant",
        build: so3_r_coboundary,
        expected: &[
            ("poisson.pseudo_poisson", P),
            ("poisson.j_invariant", S),
            ("poisson.coboundary_invariance", F),
            ("poisson.cocycle", P),
        ],
        witness: Some(("poisson.coboundary_invariance", &["e3"], "-2*e2^e3^e4")),
    },
];

pub fn list() -> Vec<(&'static str, &'static str)> {
    SPECS.iter().map(|s| (s.id, s.description)).collect()
}

pub fn get(id: &str) -> Result<CatalogEntry, UnknownId> {
    let spec = SPECS
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| UnknownId(id.to_string()))?;
    Ok(CatalogEntry {
        id: spec.id,
        description: spec.description,
        document: (spec.build)().with_description(spec.description),
        expected: spec
            .expected
            .iter()
            .map(|(c, s)| (c.to_string(), *s))
            .collect(),
        frozen_witness: spec.witness.map(|(check_id, basis, value)| FrozenWitness {
            check_id,
            basis: basis.to_vec(),
            value,
        }),
    })
}
