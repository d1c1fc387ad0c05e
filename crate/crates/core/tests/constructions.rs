use std::collections::BTreeSet;

use proptest::prelude::*;

use invrig::algebra::{classify, ClassTag, ZerolessInverseSemiring};
use invrig::finite::{
    builtins, congruence_from_submodule, generated_by, idempotents, is_e_unitary, isomorphisms,
    FiniteInverseSemiring, FiniteModule, Side, Subset, DEFAULT_BUDGET,
};
use invrig::instances::bimodule::{cyclic_bimodule, cyclic_ideal_inclusion};
use invrig::instances::heart::heart;

fn constructions() -> Vec<(String, FiniteInverseSemiring)> {
    let mut out = Vec::new();
    for n in 2..=4u64 {
        for k in 0..n {
            out.push((
                format!("cyclic({n},{k})"),
                cyclic_bimodule(n, k).unwrap().construct().unwrap(),
            ));
        }
        for d in (1..=n).filter(|d| n % d == 0) {
            out.push((
                format!("ideal({n},{d})"),
                cyclic_ideal_inclusion(n, d).unwrap().construct().unwrap(),
            ));
        }
    }
    out
}

#[test]
fn constructions_have_two_idempotents_and_match_their_heart() {
    for (name, r) in constructions() {
        let (e, _) = idempotents(&r).unwrap();
        assert_eq!(e.len(), 2, "{name}");
        assert_eq!(e.format(r.names()), "{0_A, 0_S}", "{name}");
        let h = heart(&r).unwrap();
        assert!(h.injective, "{name}");
        assert!(
            !isomorphisms(&h.semiring, &r, DEFAULT_BUDGET)
                .unwrap()
                .is_empty(),
            "{name}"
        );
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn e_unitary_iff_the_map_is_injective() {
    // v_A + 0_S is idempotent exactly when f(v) = 0
    for n in 2..=5u64 {
        for k in 0..n {
            let r = cyclic_bimodule(n, k).unwrap().construct().unwrap();
            assert_eq!(is_e_unitary(&r), gcd(n, k) == 1, "n={n} k={k}");
        }
    }
    for (name, r) in constructions()
        .into_iter()
        .filter(|(n, _)| n.starts_with("ideal"))
    {
        assert!(is_e_unitary(&r), "{name}");
    }
}

#[test]
fn constructions_are_neither_rings_nor_idempotent() {
    for (name, r) in constructions() {
        assert_eq!(classify(&r).tag, ClassTag::Neither, "{name}");
    }
}

#[test]
fn heart_of_a_three_idempotent_structure_is_a_proper_part() {
    let r = builtins::z2_0();
    let h = heart(&r).unwrap();
    assert!(h.injective);
    assert!(h.semiring.size() <= r.size());
    let image: BTreeSet<usize> = h.embedding.iter().copied().collect();
    assert!(image.contains(&r.one_index()));
}

fn arb_structure() -> impl Strategy<Value = FiniteInverseSemiring> {
    let names: Vec<&'static str> = builtins::BUILTIN_NAMES.to_vec();
    prop::sample::select(names).prop_map(|n| builtins::builtin(n).unwrap())
}

proptest! {
    /// The closed-form congruence of a submodule agrees with union-find
    /// closure of `s ∼ 0`.
    #[test]
    fn congruence_forms_agree(r in arb_structure(), mask in any::<u64>(), side in prop::sample::select(vec![Side::Left, Side::Right, Side::Two])) {
        let m = FiniteModule::regular(&r, side);
        let gens = Subset::from_mask(m.size(), mask);
        let s = m.submodule_generate(&gens);
        let c = congruence_from_submodule(&m, &s).unwrap();
        let pairs: Vec<(usize, usize)> = s.iter().map(|x| (x, m.zero())).collect();
        prop_assert_eq!(c, generated_by(&m, &pairs));
    }

    #[test]
    fn generation_is_a_closure(r in arb_structure(), mask in any::<u64>()) {
        let m = FiniteModule::regular(&r, Side::Two);
        let gens = Subset::from_mask(m.size(), mask);
        let s = m.submodule_generate(&gens);
        prop_assert!(gens.is_subset(&s));
        prop_assert!(m.is_submodule(&s));
        prop_assert_eq!(m.submodule_generate(&s), s.clone());
        let t = m.subtractive_closure(&gens).unwrap();
        prop_assert!(m.is_subtractive(&t) && m.is_submodule(&t) && s.is_subset(&t));
    }

    #[test]
    fn order_closures(r in arb_structure(), mask in any::<u64>()) {
        let m = FiniteModule::regular(&r, Side::Two);
        let s = Subset::from_mask(m.size(), mask);
        let d = m.down_closure(&s);
        let u = m.up_closure(&s);
        prop_assert!(s.is_subset(&d) && s.is_subset(&u));
        prop_assert!(m.is_down_closed(&d) && m.is_upward_closed(&u));
    }

    #[test]
    fn leq_is_a_preorder_compatible_with_addition(r in arb_structure(), x in 0usize..12, y in 0usize..12, z in 0usize..12) {
        let n = r.size();
        let (x, y, z) = (x % n, y % n, z % n);
        prop_assert!(r.leq(&x, &x));
        if r.leq(&x, &y) && r.leq(&y, &z) {
            prop_assert!(r.leq(&x, &z));
        }
        if r.leq(&x, &y) {
            prop_assert!(r.leq(&r.add(&x, &z), &r.add(&y, &z)));
        }
    }
}
