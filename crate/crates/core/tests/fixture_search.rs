//! Brute-force searches that select the negative fixtures stored in the
//! catalog. Each search runs in a fixed enumeration order and the first hit
//! must equal the frozen fixture.

use crlie_core::catalog::{self, algebras, structures};
use crlie_core::cr_kahler::{check_cr, CrData};
use crlie_core::poisson::{check_pseudo_poisson, coboundary_pi, PseudoPoissonData};
use crlie_core::{Bivector, Matrix, Rational, Status, Subspace, Vector};

/// `j e_a = s e_b`, `j e_b = −s e_a` for each `(a, b, s)`.
fn signed_pairing(n: usize, pairs: &[(usize, usize, i64)]) -> Matrix {
    let mut j = Matrix::zeros(n, n);
    for &(a, b, s) in pairs {
        j.set(b, a, Rational::from_int(s));
        j.set(a, b, Rational::from_int(-s));
    }
    j
}

#[test]
fn integrability_fixture_is_first_failing_pairing() {
    let pairings = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    let mut failing = Vec::new();
    for p in pairings {
        for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let j = signed_pairing(4, &[(p[0].0, p[0].1, s1), (p[1].0, p[1].1, s2)]);
            let d = CrData::new(algebras::aff_aff(), Subspace::full(4), j.clone()).unwrap();
            let r = check_cr(&d);
            let only_c3 = r
                .checks
                .iter()
                .all(|c| (c.check_id == "cr.integrable") == (c.status == Status::Fail));
            if only_c3 {
                failing.push(j);
            }
        }
    }
    // factor-preserving pairings are integrable, the eight mixing ones are not
    assert_eq!(failing.len(), 8);
    assert_eq!(&failing[0], structures::aff_aff_bad_j().j());
}

/// Every `j` on a coordinate plane of `so(3)` with `j² = −1` satisfies both
/// integrability conditions, so no negative fixture exists there.
#[test]
fn so3_planes_admit_no_integrability_failure() {
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        for s in [1, -1] {
            let j = signed_pairing(3, &[(a, b, s)]);
            let d = CrData::new(algebras::so3(), Subspace::coordinate(3, &[a, b]), j).unwrap();
            assert!(check_cr(&d).all_pass(), "plane ({a}, {b}), sign {s}");
        }
    }
}

/// Coefficient vectors in `{0, 1, −1}⁶`, ordered by support size, then by
/// the base-3 code with digits `0, 1, −1`.
fn small_bivectors() -> Vec<[i64; 6]> {
    let mut all: Vec<(usize, i64, [i64; 6])> = (0..729i64)
        .map(|code| {
            let mut c = code;
            let mut r = [0i64; 6];
            for slot in &mut r {
                *slot = [0, 1, -1][(c % 3) as usize];
                c /= 3;
            }
            (r.iter().filter(|x| **x != 0).count(), code, r)
        })
        .collect();
    all.sort();
    all.into_iter().map(|(_, _, r)| r).collect()
}

#[test]
fn coboundary_fixture_is_first_hit() {
    let g = algebras::so3_plus_r();
    let mut hit = None;
    'search: for r in small_bivectors() {
        for u in 0..4 {
            let us = Subspace::coordinate(4, &[u]);
            let b = Bivector::from_coords(4, Vector::from_ints(&r));
            let d = PseudoPoissonData::without_j(g.clone(), us.clone(), b.clone()).unwrap();
            if !check_pseudo_poisson(&d).all_pass() {
                continue;
            }
            if !coboundary_pi(&g, &b, &us).unwrap().report.all_pass() {
                hit = Some((u, r));
                break 'search;
            }
        }
    }
    assert_eq!(
        hit,
        Some((catalog::COBOUNDARY_FIXTURE_U, catalog::COBOUNDARY_FIXTURE_R))
    );
}

#[test]
fn so3_has_no_coboundary_failure() {
    // e1∧e2∧e3 spans Λ³ and is ad-invariant, so so(3) alone yields nothing
    let g = algebras::so3();
    for code in 0..27i64 {
        let r: Vec<i64> = (0..3).map(|k| (code / 3i64.pow(k)) % 3 - 1).collect();
        let b = Bivector::from_coords(3, Vector::from_ints(&r));
        assert!(coboundary_pi(&g, &b, &Subspace::zero(3))
            .unwrap()
            .report
            .all_pass());
    }
}
