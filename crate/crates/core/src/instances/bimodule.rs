//! The inverse semiring `I(f)` on `S ⊔ A` built from a ring `S`, an
//! `S`-`S`-bimodule `A` and a bimodule map `f: A → S` with
//! `f(x)·y = x·f(y)`.
//!
//! Sums across components go through `f`; products of two vectors act by
//! `f` on the left. The only additive idempotents are `0_A` (the zero) and
//! `0_S` (which is `0_1`).

use std::fmt::{self, Debug, Display};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{classify, InverseSemiring, ZerolessInverseSemiring};
use crate::error::{Error, Result};
use crate::finite::{FiniteInverseSemiring, Table};
use crate::instances::rings::Integers;

pub type Scalar<D> = <<D as BimoduleData>::Ring as ZerolessInverseSemiring>::Elem;

pub trait BimoduleData {
    type Ring: InverseSemiring;
    type Vector: Clone + PartialEq + Debug;

    fn ring(&self) -> &Self::Ring;
    fn vadd(&self, a: &Self::Vector, b: &Self::Vector) -> Self::Vector;
    fn vneg(&self, a: &Self::Vector) -> Self::Vector;
    fn vzero(&self) -> Self::Vector;
    /// `s · a`
    fn act_left(&self, s: &Scalar<Self>, a: &Self::Vector) -> Self::Vector;
    /// `a · s`
    fn act_right(&self, a: &Self::Vector, s: &Scalar<Self>) -> Self::Vector;
    fn map(&self, a: &Self::Vector) -> Scalar<Self>;

    /// Checks the construction's hypotheses on the given elements; exhaustive
    /// when they are the whole of `S` and `A`.
    fn check_hypotheses(&self, scalars: &[Scalar<Self>], vectors: &[Self::Vector]) -> Result<()> {
        let s_ring = self.ring();
        if !classify(s_ring).is_ring {
            return Err(violation("scalars form a ring", "0_1 != 0"));
        }
        let vz = self.vzero();
        for a in vectors {
            if self.vadd(&vz, a) != *a {
                return Err(violation("vector zero is an identity", a));
            }
            if self.vadd(a, &self.vneg(a)) != vz {
                return Err(violation("vectors form a group", a));
            }
            if !s_ring.equal(&self.map(&vz), &s_ring.zero()) {
                return Err(violation("f preserves zero", "f(0)"));
            }
            for b in vectors {
                if self.vadd(a, b) != self.vadd(b, a) {
                    return Err(violation("vector addition commutes", (a, b)));
                }
                let fab = self.map(&self.vadd(a, b));
                if !s_ring.equal(&fab, &s_ring.add(&self.map(a), &self.map(b))) {
                    return Err(violation("f additive", (a, b)));
                }
                if self.act_left(&self.map(a), b) != self.act_right(a, &self.map(b)) {
                    return Err(violation("f(x)·y = x·f(y)", (a, b)));
                }
                for c in vectors {
                    if self.vadd(&self.vadd(a, b), c) != self.vadd(a, &self.vadd(b, c)) {
                        return Err(violation("vector addition associative", (a, b, c)));
                    }
                }
            }
        }
        let one = s_ring.one();
        let szero = s_ring.zero();
        for a in vectors {
            if self.act_left(&one, a) != *a || self.act_right(a, &one) != *a {
                return Err(violation("unit acts trivially", a));
            }
            if self.act_left(&szero, a) != vz || self.act_right(a, &szero) != vz {
                return Err(violation("zero scalar annihilates", a));
            }
            for s in scalars {
                if !s_ring.equal(
                    &self.map(&self.act_left(s, a)),
                    &s_ring.mul(s, &self.map(a)),
                ) {
                    return Err(violation("f left-linear", (s, a)));
                }
                if !s_ring.equal(
                    &self.map(&self.act_right(a, s)),
                    &s_ring.mul(&self.map(a), s),
                ) {
                    return Err(violation("f right-linear", (a, s)));
                }
                for b in vectors {
                    let sab = self.act_left(s, &self.vadd(a, b));
                    if sab != self.vadd(&self.act_left(s, a), &self.act_left(s, b)) {
                        return Err(violation("left action additive in vectors", (s, a, b)));
                    }
                    let abs = self.act_right(&self.vadd(a, b), s);
                    if abs != self.vadd(&self.act_right(a, s), &self.act_right(b, s)) {
                        return Err(violation("right action additive in vectors", (a, b, s)));
                    }
                }
                for t in scalars {
                    let st = s_ring.add(s, t);
                    if self.act_left(&st, a)
                        != self.vadd(&self.act_left(s, a), &self.act_left(t, a))
                    {
                        return Err(violation("left action additive in scalars", (s, t, a)));
                    }
                    if self.act_right(a, &st)
                        != self.vadd(&self.act_right(a, s), &self.act_right(a, t))
                    {
                        return Err(violation("right action additive in scalars", (a, s, t)));
                    }
                    let prod = s_ring.mul(s, t);
                    if self.act_left(&prod, a) != self.act_left(s, &self.act_left(t, a)) {
                        return Err(violation("left action associative", (s, t, a)));
                    }
                    if self.act_right(a, &prod) != self.act_right(&self.act_right(a, s), t) {
                        return Err(violation("right action associative", (a, s, t)));
                    }
                    if self.act_right(&self.act_left(s, a), t)
                        != self.act_left(s, &self.act_right(a, t))
                    {
                        return Err(violation("actions commute", (s, a, t)));
                    }
                }
            }
        }
        Ok(())
    }
}

fn violation(law: &'static str, witness: impl Debug) -> Error {
    Error::BimoduleHypothesis {
        law,
        witness: format!("{witness:?}"),
    }
}

/// An element of `S ⊔ A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Component<S, A> {
    Vector(A),
    Scalar(S),
}

impl<S: Display, A: Display> Display for Component<S, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Vector(a) => write!(f, "{a}_A"),
            Component::Scalar(s) => write!(f, "{s}_S"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BimoduleSemiring<D> {
    data: D,
}

/// Validates the hypotheses on the supplied elements and builds `I(f)`.
///
/// For infinite data pass a window of elements; the check is then partial.
pub fn bimodule_construct<D: BimoduleData>(
    data: D,
    scalars: &[Scalar<D>],
    vectors: &[D::Vector],
) -> Result<BimoduleSemiring<D>> {
    data.check_hypotheses(scalars, vectors)?;
    Ok(BimoduleSemiring { data })
}

impl<D> BimoduleSemiring<D> {
    pub fn data(&self) -> &D {
        &self.data
    }
}

impl<D: BimoduleData> ZerolessInverseSemiring for BimoduleSemiring<D> {
    type Elem = Component<Scalar<D>, D::Vector>;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let d = &self.data;
        match (x, y) {
            (Component::Scalar(s), Component::Scalar(t)) => Component::Scalar(d.ring().add(s, t)),
            (Component::Vector(a), Component::Vector(b)) => Component::Vector(d.vadd(a, b)),
            (Component::Vector(a), Component::Scalar(s))
            | (Component::Scalar(s), Component::Vector(a)) => {
                Component::Scalar(d.ring().add(&d.map(a), s))
            }
        }
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let d = &self.data;
        match (x, y) {
            (Component::Scalar(s), Component::Scalar(t)) => Component::Scalar(d.ring().mul(s, t)),
            (Component::Vector(a), Component::Vector(b)) => {
                Component::Vector(d.act_left(&d.map(a), b))
            }
            (Component::Vector(a), Component::Scalar(s)) => Component::Vector(d.act_right(a, s)),
            (Component::Scalar(s), Component::Vector(a)) => Component::Vector(d.act_left(s, a)),
        }
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        match x {
            Component::Scalar(s) => Component::Scalar(self.data.ring().neg(s)),
            Component::Vector(a) => Component::Vector(self.data.vneg(a)),
        }
    }

    fn one(&self) -> Self::Elem {
        Component::Scalar(self.data.ring().one())
    }

    fn equal(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        match (x, y) {
            (Component::Scalar(s), Component::Scalar(t)) => self.data.ring().equal(s, t),
            (Component::Vector(a), Component::Vector(b)) => a == b,
            _ => false,
        }
    }

    fn neutral(&self) -> Option<Self::Elem> {
        Some(self.zero())
    }
}

impl<D: BimoduleData> InverseSemiring for BimoduleSemiring<D> {
    fn zero(&self) -> Self::Elem {
        Component::Vector(self.data.vzero())
    }
}

/// `S = Z`, `A = kZ` with multiplication as the actions and `f` the inclusion.
#[derive(Clone, Debug)]
pub struct IdealInclusion {
    generator: BigInt,
}

impl IdealInclusion {
    pub fn new(generator: impl Into<BigInt>) -> Self {
        IdealInclusion {
            generator: generator.into(),
        }
    }

    /// Scalars `-w..=w` and vectors `k·(-w..=w)`.
    pub fn window(&self, w: i64) -> (Vec<BigInt>, Vec<BigInt>) {
        let scalars: Vec<BigInt> = (-w..=w).map(BigInt::from).collect();
        let vectors = scalars.iter().map(|s| s * &self.generator).collect();
        (scalars, vectors)
    }
}

impl BimoduleData for IdealInclusion {
    type Ring = Integers;
    type Vector = BigInt;

    fn ring(&self) -> &Integers {
        &Integers
    }
    fn vadd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn vneg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn vzero(&self) -> BigInt {
        BigInt::zero()
    }
    fn act_left(&self, s: &BigInt, a: &BigInt) -> BigInt {
        s * a
    }
    fn act_right(&self, a: &BigInt, s: &BigInt) -> BigInt {
        a * s
    }
    fn map(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
}

/// The trivial bimodule `A = 0` over a ring; `I(f)` is the ring with a zero adjoined.
#[derive(Clone, Debug)]
pub struct TrivialBimodule<R> {
    ring: R,
}

impl<R> TrivialBimodule<R> {
    pub fn new(ring: R) -> Self {
        TrivialBimodule { ring }
    }
}

impl<R: InverseSemiring> BimoduleData for TrivialBimodule<R> {
    type Ring = R;
    type Vector = ();

    fn ring(&self) -> &R {
        &self.ring
    }
    fn vadd(&self, _: &(), _: &()) {}
    fn vneg(&self, _: &()) {}
    fn vzero(&self) {}
    fn act_left(&self, _: &R::Elem, _: &()) {}
    fn act_right(&self, _: &(), _: &R::Elem) {}
    fn map(&self, _: &()) -> R::Elem {
        self.ring.zero()
    }
}

/// Bimodule data given by tables over a finite ring.
#[derive(Clone, Debug)]
pub struct FiniteBimodule {
    ring: FiniteInverseSemiring,
    vector_names: Vec<String>,
    vadd: Table,
    vzero: usize,
    vneg: Vec<usize>,
    /// `left[s][a] = s·a`
    left: Table,
    /// `right[a][s] = a·s`
    right: Table,
    map: Vec<usize>,
}

impl FiniteBimodule {
    pub fn new(
        ring: FiniteInverseSemiring,
        vector_names: Vec<String>,
        vadd: Table,
        vzero: usize,
        left: Table,
        right: Table,
        map: Vec<usize>,
    ) -> Result<Self> {
        let m = vector_names.len();
        let n = ring.size();
        let square = |t: &Table, rows: usize, cols: usize, bound: usize| {
            t.len() == rows
                && t.iter()
                    .all(|r| r.len() == cols && r.iter().all(|&v| v < bound))
        };
        if m == 0
            || vzero >= m
            || !square(&vadd, m, m, m)
            || !square(&left, n, m, m)
            || !square(&right, m, n, m)
            || map.len() != m
            || map.iter().any(|&v| v >= n)
        {
            return Err(Error::MalformedTable(
                "bimodule tables have the wrong shape".into(),
            ));
        }
        let mut vneg = Vec::with_capacity(m);
        for a in 0..m {
            match (0..m).find(|&b| vadd[a][b] == vzero) {
                Some(b) => vneg.push(b),
                None => return Err(violation("vectors form a group", &vector_names[a])),
            }
        }
        Ok(FiniteBimodule {
            ring,
            vector_names,
            vadd,
            vzero,
            vneg,
            left,
            right,
            map,
        })
    }

    /// Checks the hypotheses exhaustively and materialises `I(f)` as tables.
    ///
    /// Vectors come first (named `a_A`), then scalars (named `s_S`).
    pub fn construct(self) -> Result<FiniteInverseSemiring> {
        let scalars: Vec<usize> = self.ring.elements().collect();
        let vectors: Vec<usize> = (0..self.vector_names.len()).collect();
        let names: Vec<String> = vectors
            .iter()
            .map(|&a| format!("{}_A", self.vector_names[a]))
            .chain(scalars.iter().map(|&s| format!("{}_S", self.ring.name(s))))
            .collect();
        let carrier: Vec<_> = vectors
            .iter()
            .map(|&a| Component::Vector(a))
            .chain(scalars.iter().map(|&s| Component::Scalar(s)))
            .collect();
        let built = bimodule_construct(self, &scalars, &vectors)?;
        FiniteInverseSemiring::from_structure(&built, &carrier, names)
    }
}

impl BimoduleData for FiniteBimodule {
    type Ring = FiniteInverseSemiring;
    type Vector = usize;

    fn ring(&self) -> &FiniteInverseSemiring {
        &self.ring
    }
    fn vadd(&self, a: &usize, b: &usize) -> usize {
        self.vadd[*a][*b]
    }
    fn vneg(&self, a: &usize) -> usize {
        self.vneg[*a]
    }
    fn vzero(&self) -> usize {
        self.vzero
    }
    fn act_left(&self, s: &usize, a: &usize) -> usize {
        self.left[*s][*a]
    }
    fn act_right(&self, a: &usize, s: &usize) -> usize {
        self.right[*a][*s]
    }
    fn map(&self, a: &usize) -> usize {
        self.map[*a]
    }
}

/// `Z/n` as a bimodule over itself with `f(a) = k·a`; `k = 0` gives the zero
/// map, `k = 1` the identity.
pub fn cyclic_bimodule(n: u64, k: u64) -> Result<FiniteBimodule> {
    let ring = FiniteInverseSemiring::cyclic(n)?;
    let n = n as usize;
    let k = k as usize;
    let vadd: Table = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let act: Table = (0..n)
        .map(|a| (0..n).map(|b| (a * b) % n).collect())
        .collect();
    let names = (0..n).map(|i| i.to_string()).collect();
    let map = (0..n).map(|a| (a * k) % n).collect();
    FiniteBimodule::new(ring, names, vadd, 0, act.clone(), act, map)
}

/// `Z/n` over itself with the ideal generated by `d` (a divisor of `n`) as
/// vectors and the inclusion as `f`.
pub fn cyclic_ideal_inclusion(n: u64, d: u64) -> Result<FiniteBimodule> {
    let ring = FiniteInverseSemiring::cyclic(n)?;
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::MalformedTable(format!("{d} does not divide {n}")));
    }
    let n = n as usize;
    let d = d as usize;
    let members: Vec<usize> = (0..n).step_by(d).collect();
    let pos = |v: usize| members.iter().position(|&x| x == v % n).unwrap();
    let vadd = members
        .iter()
        .map(|&a| members.iter().map(|&b| pos(a + b)).collect())
        .collect();
    let left = (0..n)
        .map(|s| members.iter().map(|&a| pos(s * a)).collect())
        .collect();
    let right = members
        .iter()
        .map(|&a| (0..n).map(|s| pos(a * s)).collect())
        .collect();
    let names = members.iter().map(|a| a.to_string()).collect();
    FiniteBimodule::new(ring, names, vadd, 0, left, right, members.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::law_report;
    use crate::instances::adjoin::{adjoin_zero, Adjoined};

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn ideal_inclusion_rules() {
        let data = IdealInclusion::new(2);
        let (s, a) = data.window(8);
        let r = bimodule_construct(data, &s, &a).unwrap();
        let sum = r.add(&Component::Vector(z(2)), &Component::Scalar(z(3)));
        assert_eq!(sum, Component::Scalar(z(5)));
        let prod = r.mul(&Component::Vector(z(2)), &Component::Vector(z(4)));
        assert_eq!(prod, Component::Vector(z(8)));
    }

    #[test]
    fn ideal_inclusion_window_laws() {
        let data = IdealInclusion::new(2);
        let (s, a) = data.window(2);
        let r = bimodule_construct(data, &s, &a).unwrap();
        let sample: Vec<_> = a
            .into_iter()
            .map(Component::Vector)
            .chain(s.into_iter().map(Component::Scalar))
            .collect();
        let rep = law_report(&r, &sample).unwrap();
        assert!(rep.passed(), "{rep}");
        let idempotents: Vec<_> = sample.iter().filter(|x| r.is_idempotent(x)).collect();
        assert_eq!(
            idempotents,
            vec![&Component::Vector(z(0)), &Component::Scalar(z(0))]
        );
    }

    #[test]
    fn trivial_module_recovers_adjoined_zero() {
        let data = TrivialBimodule::new(Integers);
        let scalars: Vec<BigInt> = (-3..=3).map(z).collect();
        let r = bimodule_construct(data, &scalars, &[()]).unwrap();
        let z0 = adjoin_zero(Integers);
        let to = |x: &Adjoined<BigInt>| match x {
            Adjoined::Zero => Component::Vector(()),
            Adjoined::Elem(n) => Component::Scalar(n.clone()),
        };
        let mut window: Vec<_> = scalars.iter().cloned().map(Adjoined::Elem).collect();
        window.push(Adjoined::Zero);
        for x in &window {
            assert_eq!(to(&z0.neg(x)), r.neg(&to(x)));
            for y in &window {
                assert_eq!(to(&z0.add(x, y)), r.add(&to(x), &to(y)));
                assert_eq!(to(&z0.mul(x, y)), r.mul(&to(x), &to(y)));
            }
        }
    }

    #[test]
    fn cyclic_zero_map_is_not_e_unitary() {
        let r = cyclic_bimodule(2, 0).unwrap().construct().unwrap();
        assert_eq!(r.size(), 4);
        let one_a = r.index_of("1_A").unwrap();
        let zero_s = r.index_of("0_S").unwrap();
        assert!(r.is_idempotent(&r.add(&one_a, &zero_s)));
        assert!(!r.is_idempotent(&one_a));
    }

    #[test]
    fn violated_hypothesis_is_reported() {
        // f = 1 from Z/2 to Z/2 but with left action twisted to zero
        let ring = FiniteInverseSemiring::cyclic(2).unwrap();
        let vadd = vec![vec![0, 1], vec![1, 0]];
        let zero_act = vec![vec![0, 0], vec![0, 0]];
        let act = vec![vec![0, 0], vec![0, 1]];
        let data = FiniteBimodule::new(
            ring,
            vec!["0".into(), "1".into()],
            vadd,
            0,
            zero_act,
            act,
            vec![0, 1],
        )
        .unwrap();
        let err = data.construct().unwrap_err();
        assert!(
            err.to_string().starts_with("bimodule hypothesis violated"),
            "{err}"
        );
    }
}
