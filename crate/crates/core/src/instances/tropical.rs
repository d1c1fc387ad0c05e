//! The min-plus (tropical) semiring over an ordered additive group.

use std::fmt;
use std::marker::PhantomData;
use std::ops::Add;

use num_traits::Zero;

use crate::algebra::{InverseSemiring, ZerolessInverseSemiring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tropical<T> {
    Finite(T),
    Infinity,
}

impl<T: fmt::Display> fmt::Display for Tropical<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::Finite(x) => x.fmt(f),
            Tropical::Infinity => f.write_str("inf"),
        }
    }
}

/// `(T ∪ {∞}, min, ∞, +, 0)`. Addition is `min`, multiplication is `+`.
///
/// Every element is additively idempotent, so negation is the identity.
#[derive(Debug)]
pub struct MinPlus<T>(PhantomData<T>);

impl<T> MinPlus<T> {
    pub fn new() -> Self {
        MinPlus(PhantomData)
    }
}

impl<T> Default for MinPlus<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for MinPlus<T> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<T> ZerolessInverseSemiring for MinPlus<T>
where
    T: Clone + Ord + Zero + Add<Output = T> + fmt::Debug,
{
    type Elem = Tropical<T>;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        match (x, y) {
            (Tropical::Infinity, v) | (v, Tropical::Infinity) => v.clone(),
            (Tropical::Finite(a), Tropical::Finite(b)) => Tropical::Finite(a.min(b).clone()),
        }
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        match (x, y) {
            (Tropical::Finite(a), Tropical::Finite(b)) => Tropical::Finite(a.clone() + b.clone()),
            _ => Tropical::Infinity,
        }
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        x.clone()
    }

    fn one(&self) -> Self::Elem {
        Tropical::Finite(T::zero())
    }

    fn neutral(&self) -> Option<Self::Elem> {
        Some(Tropical::Infinity)
    }
}

impl<T> InverseSemiring for MinPlus<T>
where
    T: Clone + Ord + Zero + Add<Output = T> + fmt::Debug,
{
    fn zero(&self) -> Self::Elem {
        Tropical::Infinity
    }
}
