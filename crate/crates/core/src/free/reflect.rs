//! The two reflections of `Z_0[x]`: onto `Z[x]` (both zeros identified) and
//! onto finite sets of exponent vectors (the support), plus the univariate
//! quotient onto bounded polynomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{InverseSemiring, ZerolessInverseSemiring};
use crate::error::{Error, Result};
use crate::free::multipoly::MultiPoly;
use crate::free::z0::Z0;
use crate::instances::adjoin::Adjoined;
use crate::instances::bounded::{BoundedPoly, DegreeBound};
use crate::polytext::{self, Term};

/// Polynomial in `Z[x_1, …, x_n]`; no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl RingPoly {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    fn normalised(nvars: usize, terms: BTreeMap<Vec<u32>, BigInt>) -> Self {
        RingPoly {
            nvars,
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// The same integer polynomial inside `Z_0[x]`, with no `0^` terms.
    pub fn lift(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), Adjoined::Elem(c.clone()))),
        )
        .expect("exponent vectors have the right length")
    }

    /// Dense ascending coefficients of a univariate polynomial.
    pub fn dense(&self) -> Result<Vec<BigInt>> {
        if self.nvars != 1 {
            return Err(Error::VariableMismatch(self.nvars, 1));
        }
        let len = self
            .terms
            .keys()
            .map(|e| e[0] as usize + 1)
            .max()
            .unwrap_or(0);
        let mut v = vec![BigInt::zero(); len];
        for (e, c) in &self.terms {
            v[e[0] as usize] = c.clone();
        }
        Ok(v)
    }
}

impl fmt::Display for RingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // reuse the free polynomial layout: same terms, no 0^ present
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
            let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
            (db, b).cmp(&(da, a))
        });
        let terms: Vec<Term> = keys
            .into_iter()
            .map(|e| {
                let c = &self.terms[e];
                let constant = e.iter().all(|&k| k == 0);
                Term {
                    negative: c.is_negative(),
                    magnitude: (!c.abs().is_one() || constant).then(|| c.abs().to_string()),
                    exps: e.clone(),
                }
            })
            .collect();
        polytext::write_terms(f, &terms, self.nvars)
    }
}

/// `Z[x_1, …, x_n]` as an inverse semiring (a ring).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegerPolys {
    pub nvars: usize,
}

impl ZerolessInverseSemiring for IntegerPolys {
    type Elem = RingPoly;

    fn add(&self, x: &RingPoly, y: &RingPoly) -> RingPoly {
        let mut terms = x.terms.clone();
        for (e, c) in &y.terms {
            *terms.entry(e.clone()).or_insert_with(BigInt::zero) += c;
        }
        RingPoly::normalised(self.nvars, terms)
    }

    fn mul(&self, x: &RingPoly, y: &RingPoly) -> RingPoly {
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &x.terms {
            for (e2, c2) in &y.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        RingPoly::normalised(self.nvars, terms)
    }

    fn neg(&self, x: &RingPoly) -> RingPoly {
        RingPoly::normalised(
            self.nvars,
            x.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        )
    }

    fn one(&self) -> RingPoly {
        RingPoly::normalised(
            self.nvars,
            BTreeMap::from([(vec![0; self.nvars], BigInt::one())]),
        )
    }

    fn neutral(&self) -> Option<RingPoly> {
        Some(self.zero())
    }
}

impl InverseSemiring for IntegerPolys {
    fn zero(&self) -> RingPoly {
        RingPoly::normalised(self.nvars, BTreeMap::new())
    }
}

/// A finite set of exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentSet {
    nvars: usize,
    members: BTreeSet<Vec<u32>>,
}

impl ExponentSet {
    pub fn new(nvars: usize, members: impl IntoIterator<Item = Vec<u32>>) -> Self {
        ExponentSet {
            nvars,
            members: members.into_iter().collect(),
        }
    }

    pub fn members(&self) -> &BTreeSet<Vec<u32>> {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Largest single exponent in a univariate set.
    pub fn max_degree(&self) -> DegreeBound {
        self.members
            .iter()
            .map(|e| e[0])
            .max()
            .map_or(DegreeBound::NEG_INF, DegreeBound::finite)
    }
}

/// Sorted list: `[1, 2]` for one variable, `[(0,1), (2,0)]` otherwise.
impl fmt::Display for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .members
            .iter()
            .map(|e| {
                if self.nvars == 1 {
                    e[0].to_string()
                } else {
                    let parts: Vec<String> = e.iter().map(u32::to_string).collect();
                    format!("({})", parts.join(","))
                }
            })
            .collect();
        write!(f, "[{}]", items.join(", "))
    }
}

/// `P_fin(N^n)`: union as addition, pointwise vector sums as
/// multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentSets {
    pub nvars: usize,
}

impl ZerolessInverseSemiring for ExponentSets {
    type Elem = ExponentSet;

    fn add(&self, x: &ExponentSet, y: &ExponentSet) -> ExponentSet {
        ExponentSet::new(self.nvars, x.members.union(&y.members).cloned())
    }

    fn mul(&self, x: &ExponentSet, y: &ExponentSet) -> ExponentSet {
        ExponentSet::new(
            self.nvars,
            x.members.iter().flat_map(|a| {
                y.members
                    .iter()
                    .map(move |b| a.iter().zip(b).map(|(s, t)| s + t).collect())
            }),
        )
    }

    fn neg(&self, x: &ExponentSet) -> ExponentSet {
        x.clone()
    }

    fn one(&self) -> ExponentSet {
        ExponentSet::new(self.nvars, [vec![0; self.nvars]])
    }

    fn neutral(&self) -> Option<ExponentSet> {
        Some(self.zero())
    }
}

impl InverseSemiring for ExponentSets {
    fn zero(&self) -> ExponentSet {
        ExponentSet::new(self.nvars, [])
    }
}

/// Identifies `0^` with the adjoined zero in every coefficient.
pub fn ring_reflection(p: &MultiPoly) -> RingPoly {
    RingPoly::normalised(
        p.nvars(),
        p.terms().map(|(e, c)| (e.clone(), c.clone())).collect(),
    )
}

/// The exponents whose coefficient is not the adjoined zero, i.e. the
/// support of `idem(p)`.
pub fn idem_reflection(p: &MultiPoly) -> ExponentSet {
    ExponentSet::new(p.nvars(), p.terms().map(|(e, _)| e.clone()))
}

/// `(ring_reflection(p), largest exponent in the support)`, for one variable.
pub fn to_bounded(p: &MultiPoly) -> Result<BoundedPoly<BigInt>> {
    let ring = ring_reflection(p).dense()?;
    BoundedPoly::new(ring, idem_reflection(p).max_degree())
}

/// Rebuilds `p` from its two reflections: the ring part gives the nonzero
/// coefficients, the support says where a `0^` sits.
pub fn from_reflections(ring: &RingPoly, support: &ExponentSet) -> Result<MultiPoly> {
    if ring.nvars != support.nvars {
        return Err(Error::VariableMismatch(ring.nvars, support.nvars));
    }
    if ring.terms.keys().any(|e| !support.members.contains(e)) {
        return Err(Error::Invariant(
            "ring part is not supported by the exponent set".into(),
        ));
    }
    MultiPoly::from_terms(
        ring.nvars,
        support.members.iter().map(|e| {
            let c: Z0 = Adjoined::Elem(ring.terms.get(e).cloned().unwrap_or_else(BigInt::zero));
            (e.clone(), c)
        }),
    )
}
