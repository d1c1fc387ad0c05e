//! Exact rings used as building blocks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{InverseSemiring, ZerolessInverseSemiring};

#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl ZerolessInverseSemiring for Integers {
    type Elem = BigInt;
    fn add(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x + y
    }
    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x * y
    }
    fn neg(&self, x: &BigInt) -> BigInt {
        -x
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn neutral(&self) -> Option<BigInt> {
        Some(BigInt::zero())
    }
}

impl InverseSemiring for Integers {
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl ZerolessInverseSemiring for Rationals {
    type Elem = BigRational;
    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }
    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }
    fn neg(&self, x: &BigRational) -> BigRational {
        -x
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn neutral(&self) -> Option<BigRational> {
        Some(BigRational::zero())
    }
}

impl InverseSemiring for Rationals {
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
}

/// `Z/nZ` on representatives `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegersMod {
    modulus: u64,
}

impl IntegersMod {
    /// Panics if `modulus` is zero.
    pub fn new(modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        IntegersMod { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> Vec<u64> {
        (0..self.modulus).collect()
    }
}

impl ZerolessInverseSemiring for IntegersMod {
    type Elem = u64;
    fn add(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 + *y as u128) % self.modulus as u128) as u64
    }
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 * *y as u128) % self.modulus as u128) as u64
    }
    fn neg(&self, x: &u64) -> u64 {
        (self.modulus - x % self.modulus) % self.modulus
    }
    fn one(&self) -> u64 {
        1 % self.modulus
    }
    fn neutral(&self) -> Option<u64> {
        Some(0)
    }
}

impl InverseSemiring for IntegersMod {
    fn zero(&self) -> u64 {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{classify, law_report, ClassTag};

    #[test]
    fn rings_classify_as_rings() {
        assert_eq!(classify(&Integers).tag, ClassTag::Ring);
        assert_eq!(classify(&Rationals).tag, ClassTag::Ring);
        assert_eq!(classify(&IntegersMod::new(5)).tag, ClassTag::Ring);
    }

    #[test]
    fn modular_law_suite() {
        let r = IntegersMod::new(4);
        assert!(law_report(&r, &r.elements()).unwrap().passed());
        // the trivial ring is both a ring and an idempotent semiring
        let t = IntegersMod::new(1);
        let c = classify(&t);
        assert!(c.is_ring && c.is_idempotent);
    }

    #[test]
    fn integer_window_law_suite() {
        let sample: Vec<BigInt> = (-3..=3).map(BigInt::from).collect();
        assert!(law_report(&Integers, &sample).unwrap().passed());
    }
}
