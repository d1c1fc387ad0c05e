//! `Z_0`, the integers with a fresh zero adjoined, and its unique map into
//! any inverse semiring.

use num_bigint::{BigInt, Sign};
use num_traits::Zero;

use crate::algebra::{InverseSemiring, ZerolessInverseSemiring};
use crate::error::{Error, Result};
use crate::finite::hom::Presentation;
use crate::instances::adjoin::{adjoin_zero, AdjoinZero, Adjoined};
use crate::instances::rings::Integers;

pub type Z0 = Adjoined<BigInt>;

pub fn z0() -> AdjoinZero<Integers> {
    adjoin_zero(Integers)
}

/// The integer `n` (not the adjoined zero; `int(0)` is `0^`).
pub fn int(n: i64) -> Z0 {
    Adjoined::Elem(BigInt::from(n))
}

/// `0^`
pub fn hat_zero() -> Z0 {
    Adjoined::Elem(BigInt::zero())
}

pub fn parse_z0(s: &str) -> Result<Z0> {
    match s.trim() {
        "0" => Ok(Adjoined::Zero),
        "0^" => Ok(hat_zero()),
        t => t
            .parse::<BigInt>()
            .map(Adjoined::Elem)
            .map_err(|_| Error::Parse(format!("bad Z0 element {t:?}"))),
    }
}

fn multiple<R: InverseSemiring>(r: &R, x: &R::Elem, k: &BigInt) -> R::Elem {
    let mut acc = r.zero();
    let mut base = x.clone();
    for i in 0..k.bits() {
        if k.bit(i) {
            acc = r.add(&acc, &base);
        }
        base = r.add(&base, &base);
    }
    acc
}

/// `n ↦ 1 + … + 1` for `n > 0`, `(-1) + … + (-1)` for `n < 0`, `0^ ↦ 0_1`
/// and `0 ↦ 0`.
pub fn initial_hom<R: InverseSemiring>(r: &R, n: &Z0) -> R::Elem {
    match n {
        Adjoined::Zero => r.zero(),
        Adjoined::Elem(k) => match k.sign() {
            Sign::NoSign => r.idem(&r.one()),
            Sign::Plus => multiple(r, &r.one(), k),
            Sign::Minus => multiple(r, &r.neg(&r.one()), &-k),
        },
    }
}

/// `[-w, w] ∪ {0^, 0}` with the operations whose results stay inside.
/// Element order: `0`, `0^`, `1, -1, 2, -2, …`.
pub fn z0_window(w: u32) -> (Vec<Z0>, Presentation) {
    let mut elems = vec![Adjoined::Zero, hat_zero()];
    for k in 1..=i64::from(w) {
        elems.push(int(k));
        elems.push(int(-k));
    }
    let r = z0();
    let pos = |x: &Z0| elems.iter().position(|e| e == x);
    let table = |f: &dyn Fn(&Z0, &Z0) -> Z0| -> Vec<Vec<Option<usize>>> {
        elems
            .iter()
            .map(|x| elems.iter().map(|y| pos(&f(x, y))).collect())
            .collect()
    };
    let add = table(&|x, y| r.add(x, y));
    let mul = table(&|x, y| r.mul(x, y));
    let neg = elems.iter().map(|x| pos(&r.neg(x))).collect();
    let names = elems.iter().map(ToString::to_string).collect();
    let p = Presentation {
        names,
        add,
        mul,
        neg,
        zero: 0,
        one: 2,
    };
    (elems, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::builtins;
    use crate::finite::hom::{hom_check_presentation, hom_enumerate_presentation, DEFAULT_BUDGET};
    use crate::instances::rings::IntegersMod;
    use crate::instances::tropical::{MinPlus, Tropical};

    #[test]
    fn case_formula() {
        let z2 = IntegersMod::new(2);
        assert_eq!(initial_hom(&z2, &int(3)), 1);
        assert_eq!(initial_hom(&z2, &int(-4)), 0);
        let trop = MinPlus::<BigInt>::new();
        assert_eq!(
            initial_hom(&trop, &int(3)),
            Tropical::Finite(BigInt::zero())
        );
        assert_eq!(initial_hom(&trop, &Adjoined::Zero), Tropical::Infinity);
        let b1 = builtins::b1();
        assert_eq!(initial_hom(&b1, &hat_zero()), b1.idem(&b1.one()));
    }

    #[test]
    fn identity_on_z0() {
        let r = z0();
        for x in [Adjoined::Zero, hat_zero(), int(5), int(-7)] {
            assert_eq!(initial_hom(&r, &x), x);
        }
    }

    #[test]
    fn unique_into_builtins() {
        let (elems, p) = z0_window(8);
        for name in builtins::BUILTIN_NAMES {
            let s = builtins::builtin(name).unwrap();
            let f: Vec<usize> = elems.iter().map(|x| initial_hom(&s, x)).collect();
            assert!(hom_check_presentation(&f, &p, &s), "{name}");
            let all = hom_enumerate_presentation(&p, &s, DEFAULT_BUDGET).unwrap();
            assert_eq!(all, vec![f], "{name}");
        }
    }

    #[test]
    fn parse_elements() {
        assert_eq!(parse_z0("0").unwrap(), Adjoined::Zero);
        assert_eq!(parse_z0("0^").unwrap(), hat_zero());
        assert_eq!(parse_z0("-3").unwrap(), int(-3));
        assert!(parse_z0("x").is_err());
        assert_eq!(hat_zero().to_string(), "0^");
    }
}
