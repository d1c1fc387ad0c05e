//! Named finite structures shipped with the engine.

use crate::finite::endo::{endomorphism_semiring, natural_module, FiniteInverseMonoid};
use crate::finite::hom::DEFAULT_BUDGET;
use crate::finite::{FiniteInverseSemiring, FiniteModule};
use crate::instances::adjoin::{adjoin_zero, Adjoined};
use crate::instances::bimodule::{cyclic_bimodule, cyclic_ideal_inclusion};
use crate::instances::rings::IntegersMod;

pub const BUILTIN_NAMES: [&str; 9] = [
    "B1", "Z2", "Bool", "If0", "End_Z2_0", "Z2_0", "Z3_0", "Iid_Z2", "I_Z4",
];

pub fn builtin(name: &str) -> Option<FiniteInverseSemiring> {
    let key = BUILTIN_NAMES
        .iter()
        .find(|n| n.eq_ignore_ascii_case(name))?;
    Some(match *key {
        "B1" => b1(),
        "Z2" => z2(),
        "Bool" => boolean(),
        "If0" => if0(),
        "End_Z2_0" => end_z2_0(),
        "Z2_0" => z2_0(),
        "Z3_0" => z3_0(),
        "Iid_Z2" => cyclic_bimodule(2, 1)
            .and_then(|b| b.construct())
            .expect("valid builtin"),
        "I_Z4" => cyclic_ideal_inclusion(4, 2)
            .and_then(|b| b.construct())
            .expect("valid builtin"),
        _ => unreachable!(),
    })
}

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

/// The six-element semiring `{1, j, a, b, m, 0}` whose addition is the join
/// of `1 > j > a > 0`, `j > b > m > 0`.
pub fn b1() -> FiniteInverseSemiring {
    // order: 1 j a b m 0
    let add = vec![
        vec![0, 0, 0, 0, 0, 0],
        vec![0, 1, 1, 1, 1, 1],
        vec![0, 1, 2, 1, 1, 2],
        vec![0, 1, 1, 3, 3, 3],
        vec![0, 1, 1, 3, 4, 4],
        vec![0, 1, 2, 3, 4, 5],
    ];
    let mul = vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 2, 2, 5, 5, 5],
        vec![2, 2, 2, 5, 5, 5],
        vec![3, 5, 5, 5, 5, 5],
        vec![4, 5, 5, 5, 5, 5],
        vec![5, 5, 5, 5, 5, 5],
    ];
    FiniteInverseSemiring::validate(names(&["1", "j", "a", "b", "m", "0"]), add, mul, 5, 0)
        .expect("B1 tables are valid")
}

pub fn z2() -> FiniteInverseSemiring {
    FiniteInverseSemiring::cyclic(2).expect("Z/2 is valid")
}

/// `{0, 1}` with `1 + 1 = 1`.
pub fn boolean() -> FiniteInverseSemiring {
    FiniteInverseSemiring::validate(
        names(&["0", "1"]),
        vec![vec![0, 1], vec![1, 1]],
        vec![vec![0, 0], vec![0, 1]],
        0,
        1,
    )
    .expect("Boolean semiring is valid")
}

/// `Z/2 ⊔ Z/2` glued by the zero map: four elements, not E-unitary.
pub fn if0() -> FiniteInverseSemiring {
    cyclic_bimodule(2, 0)
        .and_then(|b| b.construct())
        .expect("zero-map construction is valid")
}

fn adjoined_cyclic(n: u64) -> FiniteInverseSemiring {
    let r = adjoin_zero(IntegersMod::new(n));
    let carrier: Vec<Adjoined<u64>> = std::iter::once(Adjoined::Zero)
        .chain((0..n).map(Adjoined::Elem))
        .collect();
    let names = std::iter::once("0".to_string())
        .chain(std::iter::once("0^".to_string()))
        .chain((1..n).map(|i| i.to_string()))
        .collect();
    FiniteInverseSemiring::from_structure(&r, &carrier, names).expect("adjoined zero is valid")
}

/// `(Z/2)_0 = {0, 0^, 1}`.
pub fn z2_0() -> FiniteInverseSemiring {
    adjoined_cyclic(2)
}

pub fn z3_0() -> FiniteInverseSemiring {
    adjoined_cyclic(3)
}

/// `End((Z/2)_0)`, three maps.
pub fn end_z2_0() -> FiniteInverseSemiring {
    let x = FiniteInverseMonoid::from_semiring(&z2_0());
    endomorphism_semiring(&x, DEFAULT_BUDGET)
        .expect("small enumeration")
        .0
}

/// `(Z/2)_0` as a left module over its endomorphism semiring.
pub fn end_z2_0_natural_module() -> FiniteModule {
    let x = FiniteInverseMonoid::from_semiring(&z2_0());
    let (end, maps) = endomorphism_semiring(&x, DEFAULT_BUDGET).expect("small enumeration");
    natural_module(&x, &end, &maps).expect("natural module is valid")
}
