//! The abstract inverse-semiring interface, its derived operations and the
//! equational law suites every instance is checked against.
//!
//! A structure is a value that knows how to combine elements; elements are
//! plain data. This keeps runtime-parametrised carriers (finite tables,
//! constructions over other structures) on the same footing as the
//! statically known ones.

use std::fmt::{self, Debug};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Deterministic generator handed to sample builders.
pub type SampleRng = ChaCha8Rng;

/// A semiring whose addition is a commutative inverse semigroup.
///
/// Zero-absorption is not required, and an additive identity need not exist.
pub trait ZerolessInverseSemiring {
    type Elem: Clone + PartialEq + Debug;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// The unique `y` with `x + y + x = x` and `y + x + y = y`.
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    fn equal(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        x == y
    }

    /// An additive identity, if the carrier has one.
    fn neutral(&self) -> Option<Self::Elem> {
        None
    }

    /// The additive idempotent `x + (-x)` associated to `x`.
    fn idem(&self, x: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(x))
    }

    fn is_idempotent(&self, x: &Self::Elem) -> bool {
        self.equal(&self.add(x, x), x)
    }

    /// Canonical preorder: `x <= y` iff `x + 0_y = y`.
    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.equal(&self.add(x, &self.idem(y)), y)
    }

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }
}

/// An inverse semiring: additive inverse monoid with an absorbing zero.
pub trait InverseSemiring: ZerolessInverseSemiring {
    fn zero(&self) -> Self::Elem;
}

/// `n * x` by double-and-add; `0 * x` is the additive identity.
pub fn scalar_multiple<R: InverseSemiring>(r: &R, x: &R::Elem, mut n: u64) -> R::Elem {
    let mut acc = r.zero();
    let mut base = x.clone();
    while n > 0 {
        if n & 1 == 1 {
            acc = r.add(&acc, &base);
        }
        base = r.add(&base, &base);
        n >>= 1;
    }
    acc
}

pub fn power<R: ZerolessInverseSemiring>(r: &R, x: &R::Elem, mut e: u64) -> R::Elem {
    let mut acc = r.one();
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = r.mul(&acc, &base);
        }
        base = r.mul(&base, &base);
        e >>= 1;
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassTag {
    Ring,
    IdempotentSemiring,
    Neither,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassTag::Ring => "ring",
            ClassTag::IdempotentSemiring => "idempotent-semiring",
            ClassTag::Neither => "neither",
        })
    }
}

/// Where an inverse semiring sits relative to rings and idempotent
/// semirings, decided by the idempotent `0_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification<E> {
    pub tag: ClassTag,
    pub zero_one: E,
    pub is_ring: bool,
    pub is_idempotent: bool,
}

/// `0_1 = 0` exactly for rings, `0_1 = 1` exactly for idempotent semirings.
/// The one-element structure is both and is tagged a ring.
pub fn classify<R: InverseSemiring>(r: &R) -> Classification<R::Elem> {
    let zero_one = r.idem(&r.one());
    let is_ring = r.equal(&zero_one, &r.zero());
    let is_idempotent = r.equal(&zero_one, &r.one());
    let tag = if is_ring {
        ClassTag::Ring
    } else if is_idempotent {
        ClassTag::IdempotentSemiring
    } else {
        ClassTag::Neither
    };
    Classification {
        tag,
        zero_one,
        is_ring,
        is_idempotent,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LawEntry<E> {
    pub law: &'static str,
    pub status: LawStatus,
    /// Present exactly when `status` is `Fail`.
    pub witness: Option<Vec<E>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LawReport<E> {
    pub entries: Vec<LawEntry<E>>,
    pub sample_size: usize,
    /// Seed of the generator that produced the sample, for sampled reports.
    pub seed: Option<u64>,
}

impl<E> LawReport<E> {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == LawStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawEntry<E>> {
        self.entries.iter().filter(|e| e.status == LawStatus::Fail)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.failures().next().map(|e| e.law)
    }

    pub fn entry(&self, law: &str) -> Option<&LawEntry<E>> {
        self.entries.iter().find(|e| e.law == law)
    }

    pub fn map_witness<F, T>(&self, mut f: F) -> LawReport<T>
    where
        F: FnMut(&E) -> T,
    {
        LawReport {
            entries: self
                .entries
                .iter()
                .map(|e| LawEntry {
                    law: e.law,
                    status: e.status,
                    witness: e.witness.as_ref().map(|w| w.iter().map(&mut f).collect()),
                })
                .collect(),
            sample_size: self.sample_size,
            seed: self.seed,
        }
    }
}

impl<E: Debug> fmt::Display for LawReport<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match (&e.status, &e.witness) {
                (LawStatus::Pass, _) => writeln!(f, "{}: pass", e.law)?,
                (LawStatus::Fail, Some(w)) => writeln!(f, "{}: FAIL witness {:?}", e.law, w)?,
                (LawStatus::Fail, None) => writeln!(f, "{}: FAIL", e.law)?,
            }
        }
        Ok(())
    }
}

struct Suite<'a, R: ZerolessInverseSemiring> {
    r: &'a R,
    s: &'a [R::Elem],
    entries: Vec<LawEntry<R::Elem>>,
}

impl<'a, R: ZerolessInverseSemiring> Suite<'a, R> {
    fn record(&mut self, law: &'static str, witness: Option<Vec<R::Elem>>) {
        let status = if witness.is_some() {
            LawStatus::Fail
        } else {
            LawStatus::Pass
        };
        self.entries.push(LawEntry {
            law,
            status,
            witness,
        });
    }

    fn law1(&mut self, law: &'static str, f: impl Fn(&R, &R::Elem) -> bool) {
        let w = self
            .s
            .iter()
            .find(|x| !f(self.r, x))
            .map(|x| vec![x.clone()]);
        self.record(law, w);
    }

    fn law2(&mut self, law: &'static str, f: impl Fn(&R, &R::Elem, &R::Elem) -> bool) {
        let mut w = None;
        'outer: for x in self.s {
            for y in self.s {
                if !f(self.r, x, y) {
                    w = Some(vec![x.clone(), y.clone()]);
                    break 'outer;
                }
            }
        }
        self.record(law, w);
    }

    fn law3(&mut self, law: &'static str, f: impl Fn(&R, &R::Elem, &R::Elem, &R::Elem) -> bool) {
        let mut w = None;
        'outer: for x in self.s {
            for y in self.s {
                for z in self.s {
                    if !f(self.r, x, y, z) {
                        w = Some(vec![x.clone(), y.clone(), z.clone()]);
                        break 'outer;
                    }
                }
            }
        }
        self.record(law, w);
    }

    /// Laws shared by the full and the zeroless suites.
    fn common(&mut self) {
        self.law3("add-associative", |r, x, y, z| {
            r.equal(&r.add(&r.add(x, y), z), &r.add(x, &r.add(y, z)))
        });
        self.law2("add-commutative", |r, x, y| {
            r.equal(&r.add(x, y), &r.add(y, x))
        });
        self.law3("mul-associative", |r, x, y, z| {
            r.equal(&r.mul(&r.mul(x, y), z), &r.mul(x, &r.mul(y, z)))
        });
        self.law1("mul-identity", |r, x| {
            let one = r.one();
            r.equal(&r.mul(&one, x), x) && r.equal(&r.mul(x, &one), x)
        });
        self.law3("left-distributive", |r, x, y, z| {
            r.equal(&r.mul(x, &r.add(y, z)), &r.add(&r.mul(x, y), &r.mul(x, z)))
        });
        self.law3("right-distributive", |r, x, y, z| {
            r.equal(&r.mul(&r.add(x, y), z), &r.add(&r.mul(x, z), &r.mul(y, z)))
        });
        self.law1("inverse", |r, x| {
            let n = r.neg(x);
            r.equal(&r.add(&r.add(x, &n), x), x)
        });
        self.law1("inverse-of-inverse", |r, x| {
            let n = r.neg(x);
            r.equal(&r.add(&r.add(&n, x), &n), &n)
        });
        self.law1("neg-involution", |r, x| r.equal(&r.neg(&r.neg(x)), x));

        self.law1("idem-idempotent", |r, x| {
            let i = r.idem(x);
            r.is_idempotent(&i) && r.equal(&r.idem(&i), &i)
        });
        self.law2("idem-absorbing", |r, x, y| {
            r.equal(&r.mul(&r.idem(x), y), &r.idem(&r.mul(x, y)))
                && r.equal(&r.mul(y, &r.idem(x)), &r.idem(&r.mul(y, x)))
        });
        self.law2("idem-product", |r, x, y| {
            r.equal(&r.mul(&r.idem(x), &r.idem(y)), &r.idem(&r.mul(x, y)))
        });
        self.law2("idem-sum", |r, x, y| {
            r.equal(&r.idem(&r.add(x, y)), &r.add(&r.idem(x), &r.idem(y)))
        });
        self.law1("neg-one", |r, x| {
            let m = r.neg(&r.one());
            let n = r.neg(x);
            r.equal(&r.mul(&m, x), &n) && r.equal(&r.mul(x, &m), &n)
        });
        self.law1("order-reflexive", |r, x| r.leq(x, x));
        self.law3("order-transitive", |r, x, y, z| {
            !(r.leq(x, y) && r.leq(y, z)) || r.leq(x, z)
        });
        self.monotone();
        self.law2("idempotent-order-antisymmetric", |r, x, y| {
            if !(r.is_idempotent(x) && r.is_idempotent(y)) {
                return true;
            }
            !(r.leq(x, y) && r.leq(y, x)) || r.equal(x, y)
        });
        self.law3("idempotent-join", |r, x, y, z| {
            if !(r.is_idempotent(x) && r.is_idempotent(y) && r.is_idempotent(z)) {
                return true;
            }
            let j = r.add(x, y);
            let upper = r.leq(x, &j) && r.leq(y, &j);
            let least = !(r.leq(x, z) && r.leq(y, z)) || r.leq(&j, z);
            upper && least
        });
    }

    fn monotone(&mut self) {
        let pairs: Vec<(&R::Elem, &R::Elem)> = self
            .s
            .iter()
            .flat_map(|x| self.s.iter().map(move |y| (x, y)))
            .filter(|(x, y)| self.r.leq(x, y))
            .collect();
        let mut w = None;
        'outer: for (x, y) in &pairs {
            for (u, v) in &pairs {
                let r = self.r;
                if !r.leq(&r.mul(x, u), &r.mul(y, v)) {
                    w = Some(vec![(*x).clone(), (*y).clone(), (*u).clone(), (*v).clone()]);
                    break 'outer;
                }
            }
        }
        self.record("order-monotone", w);
    }
}

/// Full law suite: axioms plus derived propositions, evaluated on `sample`.
///
/// Over a finite carrier the check is exhaustive and a pass is a proof.
pub fn law_report<R: InverseSemiring>(r: &R, sample: &[R::Elem]) -> Result<LawReport<R::Elem>> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut suite = Suite {
        r,
        s: sample,
        entries: Vec::new(),
    };
    suite.law1("add-identity", |r, x| {
        let z = r.zero();
        r.equal(&r.add(&z, x), x) && r.equal(&r.add(x, &z), x)
    });
    suite.law1("zero-absorbing", |r, x| {
        let z = r.zero();
        r.equal(&r.mul(&z, x), &z) && r.equal(&r.mul(x, &z), &z)
    });
    suite.common();
    suite.law1("order-zero", |r, x| {
        let z = r.zero();
        r.leq(x, &z) == r.equal(x, &z) && r.leq(&z, x) == r.is_idempotent(x)
    });
    let class = classify(r);
    suite.law1("classification", |r, x| {
        (!class.is_ring || r.equal(&r.idem(x), &r.zero()))
            && (!class.is_idempotent || r.is_idempotent(x))
    });
    Ok(LawReport {
        entries: suite.entries,
        sample_size: sample.len(),
        seed: None,
    })
}

/// Law suite for zeroless carriers: everything except zero-absorption.
/// The additive-identity law is checked only if the carrier reports one.
pub fn zeroless_law_report<R: ZerolessInverseSemiring>(
    r: &R,
    sample: &[R::Elem],
) -> Result<LawReport<R::Elem>> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut suite = Suite {
        r,
        s: sample,
        entries: Vec::new(),
    };
    if let Some(n) = r.neutral() {
        suite.law1("add-identity", move |r, x| {
            r.equal(&r.add(&n, x), x) && r.equal(&r.add(x, &n), x)
        });
    }
    suite.common();
    Ok(LawReport {
        entries: suite.entries,
        sample_size: sample.len(),
        seed: None,
    })
}

/// Pairs `(z, x)` from the sample where the reported additive identity `z`
/// fails to absorb `x` under multiplication.
pub fn absorption_failures<R: ZerolessInverseSemiring>(
    r: &R,
    sample: &[R::Elem],
) -> Vec<(R::Elem, R::Elem)> {
    let Some(z) = r.neutral() else {
        return Vec::new();
    };
    sample
        .iter()
        .filter(|x| !(r.equal(&r.mul(&z, x), &z) && r.equal(&r.mul(x, &z), &z)))
        .map(|x| (z.clone(), x.clone()))
        .collect()
}

pub fn seeded_sample<E>(
    seed: u64,
    count: usize,
    mut generate: impl FnMut(&mut SampleRng) -> E,
) -> Vec<E> {
    let mut rng = SampleRng::seed_from_u64(seed);
    (0..count).map(|_| generate(&mut rng)).collect()
}

/// Full law suite over `count` generated elements; the seed is kept in the report.
pub fn law_report_seeded<R: InverseSemiring>(
    r: &R,
    seed: u64,
    count: usize,
    generate: impl FnMut(&mut SampleRng) -> R::Elem,
) -> Result<LawReport<R::Elem>> {
    let sample = seeded_sample(seed, count, generate);
    let mut report = law_report(r, &sample)?;
    report.seed = Some(seed);
    Ok(report)
}

pub fn zeroless_law_report_seeded<R: ZerolessInverseSemiring>(
    r: &R,
    seed: u64,
    count: usize,
    generate: impl FnMut(&mut SampleRng) -> R::Elem,
) -> Result<LawReport<R::Elem>> {
    let sample = seeded_sample(seed, count, generate);
    let mut report = zeroless_law_report(r, &sample)?;
    report.seed = Some(seed);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Integers modulo 6 with the usual operations; a ring.
    struct Mod6;

    impl ZerolessInverseSemiring for Mod6 {
        type Elem = u8;
        fn add(&self, x: &u8, y: &u8) -> u8 {
            (x + y) % 6
        }
        fn mul(&self, x: &u8, y: &u8) -> u8 {
            (x * y) % 6
        }
        fn neg(&self, x: &u8) -> u8 {
            (6 - x) % 6
        }
        fn one(&self) -> u8 {
            1
        }
    }

    impl InverseSemiring for Mod6 {
        fn zero(&self) -> u8 {
            0
        }
    }

    /// Max-plus on small naturals with -inf: idempotent semiring.
    struct MaxPlus;

    impl ZerolessInverseSemiring for MaxPlus {
        type Elem = Option<u8>;
        fn add(&self, x: &Option<u8>, y: &Option<u8>) -> Option<u8> {
            (*x).max(*y)
        }
        fn mul(&self, x: &Option<u8>, y: &Option<u8>) -> Option<u8> {
            Some(x.as_ref()? + y.as_ref()?)
        }
        fn neg(&self, x: &Option<u8>) -> Option<u8> {
            *x
        }
        fn one(&self) -> Option<u8> {
            Some(0)
        }
    }

    impl InverseSemiring for MaxPlus {
        fn zero(&self) -> Option<u8> {
            None
        }
    }

    #[test]
    fn ring_passes_and_classifies() {
        let sample: Vec<u8> = (0..6).collect();
        let rep = law_report(&Mod6, &sample).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(classify(&Mod6).tag, ClassTag::Ring);
        assert_eq!(Mod6.idem(&0), 0);
    }

    #[test]
    fn idempotent_semiring_classifies() {
        let sample = vec![None, Some(0), Some(1), Some(3)];
        assert!(law_report(&MaxPlus, &sample).unwrap().passed());
        let c = classify(&MaxPlus);
        assert_eq!(c.tag, ClassTag::IdempotentSemiring);
        assert_eq!(c.zero_one, Some(0));
        for x in &sample {
            assert_eq!(MaxPlus.idem(x), *x);
        }
    }

    #[test]
    fn leq_against_zero() {
        let sample = vec![None, Some(0), Some(2)];
        for x in &sample {
            // zero is below every idempotent, and only zero is below zero
            assert_eq!(MaxPlus.leq(&None, x), MaxPlus.is_idempotent(x));
            assert_eq!(MaxPlus.leq(x, &None), x.is_none());
        }
        assert!(!Mod6.leq(&0, &3));
        assert!(Mod6.leq(&0, &0));
    }

    #[test]
    fn empty_sample_is_an_error() {
        let err = law_report(&Mod6, &[]).unwrap_err();
        assert_eq!(err.to_string(), "empty sample");
    }

    #[test]
    fn broken_structure_reports_witness() {
        // Saturating addition is not an inverse monoid.
        struct Sat;
        impl ZerolessInverseSemiring for Sat {
            type Elem = u8;
            fn add(&self, x: &u8, y: &u8) -> u8 {
                (x + y).min(2)
            }
            fn mul(&self, x: &u8, y: &u8) -> u8 {
                (x * y).min(2)
            }
            fn neg(&self, x: &u8) -> u8 {
                *x
            }
            fn one(&self) -> u8 {
                1
            }
        }
        impl InverseSemiring for Sat {
            fn zero(&self) -> u8 {
                0
            }
        }
        let rep = law_report(&Sat, &[0, 1, 2]).unwrap();
        assert!(!rep.passed());
        let inv = rep.entry("inverse").unwrap();
        assert_eq!(inv.status, LawStatus::Fail);
        assert_eq!(inv.witness.as_deref(), Some(&[1u8][..]));
        for e in rep.failures() {
            assert!(e.witness.is_some());
        }
    }

    #[test]
    fn seeded_reports_are_reproducible() {
        use rand::Rng;
        let a = law_report_seeded(&Mod6, 11, 5, |g| g.random_range(0..6u8)).unwrap();
        let b = law_report_seeded(&Mod6, 11, 5, |g| g.random_range(0..6u8)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.seed, Some(11));
    }

    #[test]
    fn scalar_multiple_and_power() {
        assert_eq!(scalar_multiple(&Mod6, &1, 5), 5);
        assert_eq!(scalar_multiple(&Mod6, &4, 0), 0);
        assert_eq!(power(&Mod6, &2, 3), 2);
        assert_eq!(power(&MaxPlus, &Some(2), 3), Some(6));
    }
}
