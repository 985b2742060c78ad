use crlie_core::catalog::{self, algebras};
use crlie_core::multivector::schouten;
use crlie_core::{Bivector, Document, LieAlgebra, Rational, Vector};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
}

fn bivector(n: usize) -> impl Strategy<Value = Bivector> {
    proptest::collection::vec(small_rational(), n * (n - 1) / 2)
        .prop_map(move |c| Bivector::from_coords(n, Vector::new(c)))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(small_rational(), n).prop_map(Vector::new)
}

proptest! {
    #[test]
    fn schouten_is_symmetric_on_bivectors(p in bivector(4), q in bivector(4)) {
        let l = algebras::so3_plus_r();
        prop_assert_eq!(schouten(&l, &p, &q).unwrap(), schouten(&l, &q, &p).unwrap());
    }

    #[test]
    fn schouten_is_bilinear(p in bivector(4), q in bivector(4), r in bivector(4), s in small_rational()) {
        let l = algebras::aff_aff();
        let lhs = schouten(&l, &p.add(&q.scale(&s)), &r).unwrap();
        let rhs = schouten(&l, &p, &r).unwrap().add(&schouten(&l, &q, &r).unwrap().scale(&s));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_antisymmetric(x in vector(3), y in vector(3)) {
        let l: LieAlgebra = algebras::sl2();
        let xy = l.bracket(&x, &y).unwrap();
        let yx = l.bracket(&y, &x).unwrap();
        prop_assert_eq!(xy, -&yx);
    }

    #[test]
    fn omega_is_antisymmetric_on_catalog(x in vector(3), y in vector(3)) {
        for k in [catalog::structures::so3_kahler(), catalog::structures::sl2_kahler()] {
            prop_assert_eq!(k.omega(&x, &y), -k.omega(&y, &x));
        }
    }

    #[test]
    fn scaled_metric_survives_round_trip(num in 1i64..50, den in 1i64..50) {
        let k = catalog::structures::so3_kahler().scaled(&Rational::new(num, den)).unwrap();
        let doc = Document::new(k.algebra().clone())
            .with_cr(k.h().clone(), k.j().clone()).unwrap()
            .with_metric(k.metric().clone()).unwrap();
        let back = Document::parse(&doc.to_json()).unwrap();
        prop_assert_eq!(back.kahler(), doc.kahler());
    }
}
