//! Seeded random families built from the catalog.

use crlie_core::catalog::{self, algebras, structures};
use crlie_core::checks::kahler_suite;
use crlie_core::cr_kahler::{omega_radical, CrData, KahlerCrData};
use crlie_core::linalg::solve;
use crlie_core::poisson::{check_cocycle, coboundary};
use crlie_core::{Bivector, LieAlgebra, Matrix, Rational, Status, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_unipotent(rng: &mut ChaCha8Rng, n: usize, upper: bool) -> Matrix {
    Matrix::from_fn(n, n, |r, c| match (r == c, (r < c) == upper) {
        (true, _) => Rational::one(),
        (false, true) => Rational::from_int(rng.gen_range(-2..=2)),
        (false, false) => Rational::zero(),
    })
}

fn inverse(p: &Matrix) -> Matrix {
    let n = p.rows();
    let cols: Vec<Vector> = (0..n)
        .map(|i| solve(p, &Vector::basis(n, i)).unwrap().expect("invertible"))
        .collect();
    Matrix::from_columns(&cols, n)
}

/// Positive definite `2×2` block `[[a, b], [b, c]]` with `ac > b²`.
fn random_block(rng: &mut ChaCha8Rng) -> Matrix {
    let b = rng.gen_range(-3..=3);
    let a = rng.gen_range(1..=4);
    let c = (b * b) / a + rng.gen_range(1..=4);
    Matrix::from_int_rows(&[&[a, b], &[b, c]])
}

/// The flat entry transported by a random change of basis, with the metric
/// rescaled on `H` and replaced by a random block on its orthogonal.
fn perturbed_flat(rng: &mut ChaCha8Rng) -> KahlerCrData {
    let flat = structures::rn_flat_kahler();
    let s = Rational::new(rng.gen_range(1..=5), rng.gen_range(1..=5));
    let metric = Matrix::identity(2).scale(&s).block_diag(&random_block(rng));
    let p = random_unipotent(rng, 4, true).mul(&random_unipotent(rng, 4, false));
    let q = inverse(&p);
    let h = flat.h().image(&p).unwrap();
    let j = p.mul(flat.j()).mul(&q);
    let metric = q.transpose().mul(&metric).mul(&q);
    let cr = CrData::new(LieAlgebra::abelian(4), h, j).unwrap();
    KahlerCrData::new(cr, metric).unwrap()
}

#[test]
fn radical_on_perturbed_flat_entries() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..100 {
        let k = perturbed_flat(&mut rng);
        let suite = kahler_suite(&k);
        assert!(suite.passed(), "round {round}:\n{}", suite.to_text());
        assert_eq!(suite.status("exactness.codimension"), Some(Status::Skipped));
        let r = omega_radical(&k);
        assert!(r.is_subalgebra() && r.is_orthogonal_to_h(), "round {round}");
        assert_eq!(r.radical.dim(), 2);
    }
}

fn random_bivector(rng: &mut ChaCha8Rng, n: usize) -> Bivector {
    let m = n * (n - 1) / 2;
    let coeffs: Vec<Rational> = (0..m)
        .map(|_| Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=3)))
        .collect();
    Bivector::from_coords(n, Vector::new(coeffs))
}

#[test]
fn random_coboundaries_are_cocycles() {
    let algs = [
        algebras::so3(),
        algebras::sl2(),
        algebras::heisenberg(),
        algebras::aff_aff(),
        algebras::so3_plus_r(),
        catalog::so3_x_r2_poisson().algebra().clone(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for round in 0..50 {
        let l = &algs[round % algs.len()];
        let r = random_bivector(&mut rng, l.dim());
        let report = check_cocycle(l, &coboundary(l, &r)).unwrap();
        assert!(report.all_pass(), "round {round}: {}", report.to_text());
    }
}

#[test]
fn random_non_coboundary_is_caught() {
    // δ(e1) = e2∧e3 and zero elsewhere is not a cocycle on so(3)
    let l = algebras::so3();
    let mut delta = vec![Bivector::zero(3); 3];
    delta[0] = Bivector::basis(3, 1, 2);
    let report = check_cocycle(&l, &delta).unwrap();
    assert!(!report.all_pass());
}
