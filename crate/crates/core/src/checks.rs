//! Runs every check enabled by the blocks of a document.
//!
//! Checks are emitted in this fixed order:
//!
//! 1. `cr.*` when a `cr` block is present;
//! 2. `kahler.*` when a `metric` is present, followed by `lsa.*`,
//!    `radical.*`, `center_u.*` and `exactness.*`, which are
//!    skipped unless every `cr.*` and `kahler.*` check passed (`exactness.*`
//!    is also skipped on algebras that are not semisimple);
//! 3. `complex.*` when an `ideal` is present;
//! 4. `poisson.*` when a `poisson` block is present;
//! 5. `extension.*` when an `extension` block is present, ending with the
//!    suite of step 1–2 run on the extended algebra under the `extension.`
//!    prefix.

use crate::cr_kahler::{
    build_extension, center_u, check_cr, check_kahler, check_left_symmetric,
    check_radical_not_semisimple, ideal_complement_complex, left_symmetric_product, omega_radical,
    semisimple_exactness, CrData, CrError, KahlerCrData,
};
use crate::document::Document;
use crate::poisson::{
    check_cocycle, check_j_invariance, check_pseudo_poisson, coboundary, coboundary_pi,
};
use crate::report::{CheckResult, Report, Witness};

const DEPENDENT: [&str; 12] = [
    "lsa.commutator_is_bracket",
    "lsa.bracket_jacobi",
    "lsa.left_symmetry",
    "radical.subalgebra",
    "radical.orthogonal_to_h",
    "center_u.commutative",
    "center_u.stabilizes_h",
    "radical.not_semisimple",
    "exactness.alpha_consistent",
    "exactness.killing_identity",
    "exactness.centralizer_is_radical",
    "exactness.codimension",
];

const EXACTNESS: [&str; 4] = [
    "exactness.alpha_consistent",
    "exactness.killing_identity",
    "exactness.centralizer_is_radical",
    "exactness.codimension",
];

/// `cr.*`, `kahler.*` and the derived checks for Kähler-CR data.
pub fn kahler_suite(k: &KahlerCrData) -> Report {
    let mut report = check_cr(k.cr());
    report.extend(check_kahler(k));
    if !report.all_pass() {
        for id in DEPENDENT {
            report.push(CheckResult::skipped(id, "hypotheses not met"));
        }
        return report;
    }
    let product = left_symmetric_product(k).expect("omega is nondegenerate on H");
    report.extend(check_left_symmetric(k, &product));
    let radical = omega_radical(k);
    report.extend(radical.report.clone());
    report.extend(center_u(k.cr()).report);
    report.extend(check_radical_not_semisimple(k, &radical.radical));
    match semisimple_exactness(k) {
        Ok(ex) => report.extend(ex.report),
        Err(_) => {
            for id in EXACTNESS {
                report.push(CheckResult::skipped(id, "algebra is not semisimple"));
            }
        }
    }
    report
}

fn complex_suite(cr: &CrData, ideal: &crate::linalg::Subspace) -> Report {
    let mut report = Report::new();
    match ideal_complement_complex(cr, ideal) {
        Ok(q) => {
            report.push(CheckResult::pass("complex.ideal_supplementary"));
            report.extend(q.report);
        }
        Err(e) => {
            let witness = match &e {
                CrError::NotAnIdeal(s) => match cr.algebra().ideal_witness(ideal) {
                    Ok(Some((a, k, v))) => {
                        Witness::new(vec![cr.label(&ideal.basis()[a]), cr.name(k)], cr.label(&v))
                    }
                    _ => Witness::new(Vec::new(), s.clone()),
                },
                other => {
                    let meet = cr.h().intersect(ideal).map(|s| s.dim()).unwrap_or(0);
                    Witness::new(
                        Vec::new(),
                        format!(
                            "{other}: dim H = {}, dim I = {}, dim(H meet I) = {meet}",
                            cr.h().dim(),
                            ideal.dim()
                        ),
                    )
                }
            };
            report.push(CheckResult::fail("complex.ideal_supplementary", witness));
            for id in ["complex.jacobi", "complex.j_complex_linear"] {
                report.push(CheckResult::skipped(id, "no supplementary ideal"));
            }
        }
    }
    report
}

pub fn run_all(doc: &Document) -> Report {
    let mut report = Report::new();
    match (doc.cr(), doc.kahler()) {
        (_, Some(k)) => report.extend(kahler_suite(k)),
        (Some(cr), None) => report.extend(check_cr(cr)),
        (None, None) => {}
    }
    if let (Some(cr), Some(ideal)) = (doc.cr(), doc.ideal()) {
        report.extend(complex_suite(cr, ideal));
    }
    if let Some(p) = doc.poisson() {
        report.extend(check_pseudo_poisson(p));
        report.extend(check_j_invariance(p));
        let pi = coboundary_pi(p.algebra(), p.lambda(), p.u())
            .expect("dimensions checked at parse time");
        report.extend(pi.report);
        let delta = coboundary(p.algebra(), p.lambda());
        report.extend(check_cocycle(p.algebra(), &delta).expect("coboundary has the right shape"));
    }
    if let (Some(k), Some(spec)) = (doc.kahler(), doc.extension()) {
        let out = build_extension(k, spec).expect("extension validated at parse time");
        let built = out.report.all_pass();
        report.extend(out.report);
        match out.kahler {
            Some(ext) if built => report.extend_prefixed("extension", kahler_suite(&ext)),
            _ => report.push(CheckResult::skipped(
                "extension.suite",
                "extension checks failed",
            )),
        }
    }
    report
}
