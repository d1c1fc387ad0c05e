use num_bigint::BigInt;
use proptest::prelude::*;

use invrig::algebra::{InverseSemiring, ZerolessInverseSemiring};
use invrig::finite::builtins;
use invrig::free::{
    eval, eval_horner, from_reflections, idem_reflection, initial_hom, ring_reflection, z0,
    ExponentSets, FreePolys, IntegerPolys, MultiPoly, Z0,
};
use invrig::instances::adjoin::Adjoined;
use invrig::instances::tropical::{MinPlus, Tropical};

fn arb_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..4, nvars), -4i64..=4), 0..=3).prop_map(
        move |terms| {
            MultiPoly::from_terms(
                nvars,
                terms
                    .into_iter()
                    .map(|(e, c)| (e, Adjoined::Elem(BigInt::from(c))))
                    .collect::<Vec<_>>(),
            )
            .unwrap()
        },
    )
}

fn arb_z0() -> impl Strategy<Value = Z0> {
    prop_oneof![
        Just(Adjoined::Zero),
        (-5i64..=5).prop_map(|n| Adjoined::Elem(BigInt::from(n))),
    ]
}

proptest! {
    #[test]
    fn eval_into_z0_is_a_homomorphism(p in arb_poly(2), q in arb_poly(2), a in arb_z0(), b in arb_z0()) {
        let r = z0();
        let fp = FreePolys::new(2);
        let at = [a, b];
        let ep = eval(&p, &r, &at).unwrap();
        let eq = eval(&q, &r, &at).unwrap();
        prop_assert_eq!(eval(&fp.add(&p, &q), &r, &at).unwrap(), r.add(&ep, &eq));
        prop_assert_eq!(eval(&fp.mul(&p, &q), &r, &at).unwrap(), r.mul(&ep, &eq));
        prop_assert_eq!(eval(&fp.neg(&p), &r, &at).unwrap(), r.neg(&ep));
        prop_assert_eq!(eval_horner(&p, &r, &at).unwrap(), ep);
    }

    #[test]
    fn eval_into_b1_is_a_homomorphism(p in arb_poly(2), q in arb_poly(2), a in 0usize..6, b in 0usize..6) {
        let r = builtins::b1();
        let fp = FreePolys::new(2);
        let at = [a, b];
        let ep = eval(&p, &r, &at).unwrap();
        let eq = eval(&q, &r, &at).unwrap();
        prop_assert_eq!(eval(&fp.add(&p, &q), &r, &at).unwrap(), r.add(&ep, &eq));
        prop_assert_eq!(eval(&fp.mul(&p, &q), &r, &at).unwrap(), r.mul(&ep, &eq));
        prop_assert_eq!(eval_horner(&p, &r, &at).unwrap(), ep);
    }

    #[test]
    fn eval_into_if0_matches_horner(p in arb_poly(1), a in 0usize..4) {
        let r = builtins::if0();
        prop_assert_eq!(eval(&p, &r, &[a]).unwrap(), eval_horner(&p, &r, &[a]).unwrap());
    }

    #[test]
    fn eval_into_tropical(p in arb_poly(1), q in arb_poly(1), a in -5i64..5) {
        let r = MinPlus::<BigInt>::new();
        let fp = FreePolys::new(1);
        let at = [Tropical::Finite(BigInt::from(a))];
        let ep = eval(&p, &r, &at).unwrap();
        let eq = eval(&q, &r, &at).unwrap();
        prop_assert_eq!(eval(&fp.mul(&p, &q), &r, &at).unwrap(), r.mul(&ep, &eq));
        prop_assert_eq!(eval_horner(&p, &r, &at).unwrap(), ep);
    }

    #[test]
    fn reflections_are_homomorphisms(p in arb_poly(2), q in arb_poly(2)) {
        let fp = FreePolys::new(2);
        let ip = IntegerPolys { nvars: 2 };
        let es = ExponentSets { nvars: 2 };
        prop_assert_eq!(ring_reflection(&fp.mul(&p, &q)), ip.mul(&ring_reflection(&p), &ring_reflection(&q)));
        prop_assert_eq!(idem_reflection(&fp.add(&p, &q)), es.add(&idem_reflection(&p), &idem_reflection(&q)));
        prop_assert_eq!(ring_reflection(&fp.idem(&p)), ip.zero());
        prop_assert_eq!(idem_reflection(&p), idem_reflection(&fp.idem(&p)));
    }

    /// The pair of reflections determines the polynomial, so together they
    /// embed the free semiring into a ring times an idempotent semiring.
    #[test]
    fn reflections_are_jointly_injective(p in arb_poly(2)) {
        prop_assert_eq!(from_reflections(&ring_reflection(&p), &idem_reflection(&p)).unwrap(), p);
    }

    #[test]
    fn free_polys_are_e_unitary(p in arb_poly(1), q in arb_poly(1)) {
        let fp = FreePolys::new(1);
        let z = fp.idem(&q);
        if fp.is_idempotent(&fp.add(&p, &z)) {
            prop_assert!(fp.is_idempotent(&p));
        }
    }

    #[test]
    fn lift_then_reflect_is_identity(p in arb_poly(2)) {
        let r = ring_reflection(&p);
        prop_assert_eq!(ring_reflection(&r.lift()), r);
    }

    #[test]
    fn display_parses_back(p in arb_poly(2)) {
        prop_assert_eq!(MultiPoly::parse_with(&p.to_string(), 2).unwrap(), p);
    }

    #[test]
    fn unit_law(p in arb_poly(2)) {
        let fp = FreePolys::new(2);
        prop_assert_eq!(fp.mul(&p, &fp.one()), p);
    }

    #[test]
    fn initial_hom_is_additive(a in arb_z0(), b in arb_z0()) {
        let r = builtins::end_z2_0();
        let z = z0();
        prop_assert_eq!(initial_hom(&r, &z.add(&a, &b)), r.add(&initial_hom(&r, &a), &initial_hom(&r, &b)));
        prop_assert_eq!(initial_hom(&r, &z.mul(&a, &b)), r.mul(&initial_hom(&r, &a), &initial_hom(&r, &b)));
    }
}

#[test]
fn tropical_example() {
    let r = MinPlus::<BigInt>::new();
    assert_eq!(
        initial_hom(&r, &Adjoined::Elem(BigInt::from(3))),
        Tropical::Finite(BigInt::from(0))
    );
}
