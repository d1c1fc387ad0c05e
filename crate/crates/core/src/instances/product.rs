use crate::algebra::{InverseSemiring, ZerolessInverseSemiring};

/// Componentwise product of two structures.
#[derive(Clone, Debug, Default)]
pub struct Product<R, S> {
    pub left: R,
    pub right: S,
}

pub fn product<R, S>(left: R, right: S) -> Product<R, S> {
    Product { left, right }
}

impl<R: ZerolessInverseSemiring, S: ZerolessInverseSemiring> ZerolessInverseSemiring
    for Product<R, S>
{
    type Elem = (R::Elem, S::Elem);

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        (self.left.add(&x.0, &y.0), self.right.add(&x.1, &y.1))
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        (self.left.mul(&x.0, &y.0), self.right.mul(&x.1, &y.1))
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        (self.left.neg(&x.0), self.right.neg(&x.1))
    }

    fn one(&self) -> Self::Elem {
        (self.left.one(), self.right.one())
    }

    fn equal(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.left.equal(&x.0, &y.0) && self.right.equal(&x.1, &y.1)
    }

    fn neutral(&self) -> Option<Self::Elem> {
        Some((self.left.neutral()?, self.right.neutral()?))
    }
}

impl<R: InverseSemiring, S: InverseSemiring> InverseSemiring for Product<R, S> {
    fn zero(&self) -> Self::Elem {
        (self.left.zero(), self.right.zero())
    }
}
