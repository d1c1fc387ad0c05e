//! Adjoining a fresh absorbing zero, and adjoining an absorbing infinity.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{classify, InverseSemiring, ZerolessInverseSemiring};
use crate::error::{Error, Result};

/// Element of `R_0`: the adjoined zero, or an element of `R`.
///
/// The zero of `R` itself (written `0^` in text) stays distinct from the
/// adjoined [`Adjoined::Zero`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Adjoined<T> {
    Zero,
    Elem(T),
}

impl<T: fmt::Display + Zero> fmt::Display for Adjoined<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Adjoined::Zero => f.write_str("0"),
            Adjoined::Elem(x) if x.is_zero() => f.write_str("0^"),
            Adjoined::Elem(x) => x.fmt(f),
        }
    }
}

/// `R_0 = R ⊔ {0}`; the new zero is an additive identity and absorbs
/// multiplication, everything else delegates to `R`.
#[derive(Clone, Debug, Default)]
pub struct AdjoinZero<R> {
    inner: R,
}

pub fn adjoin_zero<R: ZerolessInverseSemiring>(inner: R) -> AdjoinZero<R> {
    AdjoinZero { inner }
}

impl<R> AdjoinZero<R> {
    pub fn inner(&self) -> &R {
        &self.inner
    }
}

impl<R: ZerolessInverseSemiring> ZerolessInverseSemiring for AdjoinZero<R> {
    type Elem = Adjoined<R::Elem>;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        match (x, y) {
            (Adjoined::Zero, v) | (v, Adjoined::Zero) => v.clone(),
            (Adjoined::Elem(a), Adjoined::Elem(b)) => Adjoined::Elem(self.inner.add(a, b)),
        }
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        match (x, y) {
            (Adjoined::Elem(a), Adjoined::Elem(b)) => Adjoined::Elem(self.inner.mul(a, b)),
            _ => Adjoined::Zero,
        }
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        match x {
            Adjoined::Zero => Adjoined::Zero,
            Adjoined::Elem(a) => Adjoined::Elem(self.inner.neg(a)),
        }
    }

    fn one(&self) -> Self::Elem {
        Adjoined::Elem(self.inner.one())
    }

    fn equal(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        match (x, y) {
            (Adjoined::Zero, Adjoined::Zero) => true,
            (Adjoined::Elem(a), Adjoined::Elem(b)) => self.inner.equal(a, b),
            _ => false,
        }
    }

    fn neutral(&self) -> Option<Self::Elem> {
        Some(Adjoined::Zero)
    }
}

impl<R: ZerolessInverseSemiring> InverseSemiring for AdjoinZero<R> {
    fn zero(&self) -> Self::Elem {
        Adjoined::Zero
    }
}

/// Element of `R_∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WithInfinity<T> {
    Finite(T),
    Infinity,
}

impl<T: fmt::Display> fmt::Display for WithInfinity<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WithInfinity::Finite(x) => x.fmt(f),
            WithInfinity::Infinity => f.write_str("inf"),
        }
    }
}

/// `R_∞` for a ring `R`: `x + ∞ = ∞` and `x·∞ = ∞ = ∞·x` for every `x`.
///
/// A zeroless inverse semiring. The ring zero is still an additive identity
/// but does not absorb (`0·∞ = ∞`).
#[derive(Clone, Debug)]
pub struct AdjoinInfinity<R> {
    ring: R,
}

/// Fails with [`Error::NotARing`] unless `0_1 = 0` in `ring`.
pub fn adjoin_infinity<R: InverseSemiring>(ring: R) -> Result<AdjoinInfinity<R>> {
    if !classify(&ring).is_ring {
        return Err(Error::NotARing);
    }
    Ok(AdjoinInfinity { ring })
}

impl<R> AdjoinInfinity<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }
}

impl<R: InverseSemiring> ZerolessInverseSemiring for AdjoinInfinity<R> {
    type Elem = WithInfinity<R::Elem>;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        match (x, y) {
            (WithInfinity::Finite(a), WithInfinity::Finite(b)) => {
                WithInfinity::Finite(self.ring.add(a, b))
            }
            _ => WithInfinity::Infinity,
        }
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        match (x, y) {
            (WithInfinity::Finite(a), WithInfinity::Finite(b)) => {
                WithInfinity::Finite(self.ring.mul(a, b))
            }
            _ => WithInfinity::Infinity,
        }
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        match x {
            WithInfinity::Finite(a) => WithInfinity::Finite(self.ring.neg(a)),
            WithInfinity::Infinity => WithInfinity::Infinity,
        }
    }

    fn one(&self) -> Self::Elem {
        WithInfinity::Finite(self.ring.one())
    }

    fn equal(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        match (x, y) {
            (WithInfinity::Finite(a), WithInfinity::Finite(b)) => self.ring.equal(a, b),
            (WithInfinity::Infinity, WithInfinity::Infinity) => true,
            _ => false,
        }
    }

    fn neutral(&self) -> Option<Self::Elem> {
        Some(WithInfinity::Finite(self.ring.zero()))
    }
}
