//! `Z_0[x_1, …, x_n]`, the free commutative inverse semiring on `n`
//! generators.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{power, InverseSemiring, ZerolessInverseSemiring};
use crate::error::{Error, Result};
use crate::free::z0::{initial_hom, Z0};
use crate::instances::adjoin::Adjoined;
use crate::polytext::{self, Term};

/// Sparse polynomial over `Z_0`. An absent exponent has the adjoined zero as
/// coefficient; a stored `0` is the computed zero `0^` and is kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    /// `x_i` (zero-based).
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn monomial(exps: Vec<u32>, coeff: BigInt) -> Self {
        let nvars = exps.len();
        MultiPoly {
            nvars,
            terms: BTreeMap::from([(exps, coeff)]),
        }
    }

    /// Builds from `(exponents, coefficient)` pairs, dropping adjoined zeros
    /// and adding repeated exponents.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Z0)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableMismatch(e.len(), nvars));
            }
            if let Adjoined::Elem(c) = c {
                *p.terms.entry(e).or_insert_with(BigInt::zero) += c;
            }
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Stored terms, ascending by exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Z0 {
        match self.terms.get(exps) {
            Some(c) => Adjoined::Elem(c.clone()),
            None => Adjoined::Zero,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_insert_with(BigInt::zero) += c;
        }
        Ok(MultiPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        Ok(MultiPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn negate(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// `p + (-p)`: every stored coefficient becomes `0^`.
    pub fn idem(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .keys()
                .map(|e| (e.clone(), BigInt::zero()))
                .collect(),
        }
    }

    /// Same polynomial viewed with `nvars` variables (`nvars >= self.nvars()`).
    pub fn widen(&self, nvars: usize) -> Result<Self> {
        if nvars < self.nvars {
            return Err(Error::VariableMismatch(self.nvars, nvars));
        }
        Ok(MultiPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(nvars, 0);
                    (e, c.clone())
                })
                .collect(),
        })
    }

    /// Parses e.g. `"3x^2 + 0^x + 1"` or `"x1*x2 - 2x3"`. The variable count
    /// is the highest variable used (at least one).
    pub fn parse(src: &str) -> Result<Self> {
        let terms = polytext::parse_terms(src)?;
        let nvars = polytext::max_var(&terms).map_or(1, |v| v + 1);
        Self::build(&terms, nvars)
    }

    pub fn parse_with(src: &str, nvars: usize) -> Result<Self> {
        let terms = polytext::parse_terms(src)?;
        if let Some(v) = polytext::max_var(&terms) {
            if v >= nvars {
                return Err(Error::VariableMismatch(v + 1, nvars));
            }
        }
        Self::build(&terms, nvars)
    }

    fn build(terms: &[polytext::ParsedTerm], nvars: usize) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for t in terms {
            let c: Z0 = match t.coeff.as_deref() {
                None => Adjoined::Elem(BigInt::one()),
                Some("0^") => Adjoined::Elem(BigInt::zero()),
                Some(text) if text.contains('/') => {
                    return Err(Error::Parse(format!(
                        "free polynomials have integer coefficients: {text}"
                    )))
                }
                Some(text) => {
                    let n: BigInt = text
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient {text:?}")))?;
                    // a literal 0 is the adjoined zero: the term is absent
                    if n.is_zero() {
                        Adjoined::Zero
                    } else {
                        Adjoined::Elem(n)
                    }
                }
            };
            let c = match c {
                Adjoined::Elem(n) if t.negative => Adjoined::Elem(-n),
                c => c,
            };
            let term = Self::from_terms(nvars, [(t.exponents(nvars), c)])?;
            p = p.try_add(&term)?;
        }
        Ok(p)
    }
}

/// Highest total degree first, ties broken by descending exponent vector.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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
                let magnitude = if c.is_zero() {
                    Some("0^".to_string())
                } else if c.abs().is_one() && !constant {
                    None
                } else {
                    Some(c.abs().to_string())
                };
                Term {
                    negative: c.is_negative(),
                    magnitude,
                    exps: e.clone(),
                }
            })
            .collect();
        polytext::write_terms(f, &terms, self.nvars)
    }
}

/// The semiring structure on [`MultiPoly`] with a fixed variable count.
/// Operations panic on polynomials with a different count; use the `try_`
/// methods to get an error instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreePolys {
    pub nvars: usize,
}

impl FreePolys {
    pub fn new(nvars: usize) -> Self {
        FreePolys { nvars }
    }

    pub fn var(&self, i: usize) -> MultiPoly {
        MultiPoly::var(i, self.nvars)
    }
}

impl ZerolessInverseSemiring for FreePolys {
    type Elem = MultiPoly;

    fn add(&self, x: &MultiPoly, y: &MultiPoly) -> MultiPoly {
        x.try_add(y).expect("operands share the variable count")
    }

    fn mul(&self, x: &MultiPoly, y: &MultiPoly) -> MultiPoly {
        x.try_mul(y).expect("operands share the variable count")
    }

    fn neg(&self, x: &MultiPoly) -> MultiPoly {
        x.negate()
    }

    fn one(&self) -> MultiPoly {
        MultiPoly::one(self.nvars)
    }

    fn neutral(&self) -> Option<MultiPoly> {
        Some(MultiPoly::zero(self.nvars))
    }
}

impl InverseSemiring for FreePolys {
    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.nvars)
    }
}

fn check_assignment<E>(p: &MultiPoly, a: &[E]) -> Result<()> {
    if a.len() != p.nvars {
        return Err(Error::VariableMismatch(a.len(), p.nvars));
    }
    Ok(())
}

/// The homomorphism `Z_0[x] → R` sending `x_i` to `assignment[i]`, term by
/// term.
pub fn eval<R: InverseSemiring>(p: &MultiPoly, r: &R, assignment: &[R::Elem]) -> Result<R::Elem> {
    check_assignment(p, assignment)?;
    let mut acc = r.zero();
    for (e, c) in p.terms() {
        let mut t = initial_hom(r, &Adjoined::Elem(c.clone()));
        for (x, &k) in assignment.iter().zip(e) {
            t = r.mul(&t, &power(r, x, u64::from(k)));
        }
        acc = r.add(&acc, &t);
    }
    Ok(acc)
}

/// Same map, by nested Horner schemes in `x_1` then the remaining variables.
pub fn eval_horner<R: InverseSemiring>(
    p: &MultiPoly,
    r: &R,
    assignment: &[R::Elem],
) -> Result<R::Elem> {
    check_assignment(p, assignment)?;
    let terms: Vec<(&[u32], &BigInt)> = p.terms().map(|(e, c)| (e.as_slice(), c)).collect();
    Ok(horner(r, &terms, assignment))
}

fn horner<R: InverseSemiring>(r: &R, terms: &[(&[u32], &BigInt)], a: &[R::Elem]) -> R::Elem {
    if a.is_empty() {
        return terms.iter().fold(r.zero(), |acc, (_, c)| {
            r.add(&acc, &initial_hom(r, &Adjoined::Elem((*c).clone())))
        });
    }
    // group by the exponent of the first variable, highest first
    let mut groups: BTreeMap<u32, Vec<(&[u32], &BigInt)>> = BTreeMap::new();
    for &(e, c) in terms {
        groups.entry(e[0]).or_default().push((&e[1..], c));
    }
    let mut acc = r.zero();
    let mut prev: Option<u32> = None;
    for (&k, group) in groups.iter().rev() {
        if let Some(p) = prev {
            acc = r.mul(&acc, &power(r, &a[0], u64::from(p - k)));
        }
        acc = r.add(&acc, &horner(r, group, &a[1..]));
        prev = Some(k);
    }
    if let Some(p) = prev {
        acc = r.mul(&acc, &power(r, &a[0], u64::from(p)));
    }
    acc
}
