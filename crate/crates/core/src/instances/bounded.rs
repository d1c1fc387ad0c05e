//! Polynomials paired with a degree bound that arithmetic can only grow.
//!
//! A pair `(p, n)` with `deg p <= n` models a coefficient array of length
//! `n + 1`: sums take the larger bound and products add bounds, even when
//! leading coefficients cancel. Exact rational coefficients are the
//! law-tested build; `BoundedPoly<f64>` exists for numeric use only.

use std::fmt::{self, Debug, Display};
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{InverseSemiring, ZerolessInverseSemiring};
use crate::error::{Error, Result};
use crate::polytext::{self, Term};

pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + Debug + Zero + One + Neg<Output = T> + Add<Output = T> + Mul<Output = T>
{
}

/// A natural number or `-inf`; ordered with `-inf` at the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeBound(Option<u32>);

impl DegreeBound {
    pub const NEG_INF: DegreeBound = DegreeBound(None);

    pub fn finite(n: u32) -> Self {
        DegreeBound(Some(n))
    }

    pub fn value(self) -> Option<u32> {
        self.0
    }

    /// Bound of a product: `-inf` absorbs.
    pub fn plus(self, other: DegreeBound) -> DegreeBound {
        match (self.0, other.0) {
            (Some(a), Some(b)) => DegreeBound(Some(a + b)),
            _ => DegreeBound::NEG_INF,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-inf" {
            return Ok(DegreeBound::NEG_INF);
        }
        s.parse()
            .map(DegreeBound::finite)
            .map_err(|_| Error::Parse(format!("bad degree bound {s:?}")))
    }
}

impl Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(n) => write!(f, "{n}"),
            None => f.write_str("-inf"),
        }
    }
}

/// The idempotent semiring `(N ∪ {-inf}, max, -inf, +, 0)` of degree bounds.
#[derive(Clone, Copy, Debug, Default)]
pub struct DegreeBounds;

impl ZerolessInverseSemiring for DegreeBounds {
    type Elem = DegreeBound;
    fn add(&self, x: &DegreeBound, y: &DegreeBound) -> DegreeBound {
        *x.max(y)
    }
    fn mul(&self, x: &DegreeBound, y: &DegreeBound) -> DegreeBound {
        x.plus(*y)
    }
    fn neg(&self, x: &DegreeBound) -> DegreeBound {
        *x
    }
    fn one(&self) -> DegreeBound {
        DegreeBound::finite(0)
    }
    fn neutral(&self) -> Option<DegreeBound> {
        Some(DegreeBound::NEG_INF)
    }
}

impl InverseSemiring for DegreeBounds {
    fn zero(&self) -> DegreeBound {
        DegreeBound::NEG_INF
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundedPoly<C> {
    /// Ascending by exponent, no trailing zeros.
    coeffs: Vec<C>,
    bound: DegreeBound,
}

fn trim<C: Coefficient>(mut v: Vec<C>) -> Vec<C> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn degree_of<C>(coeffs: &[C]) -> DegreeBound {
    match coeffs.len() {
        0 => DegreeBound::NEG_INF,
        n => DegreeBound::finite((n - 1) as u32),
    }
}

impl<C: Coefficient> BoundedPoly<C> {
    /// Fails with "bound violated" if the trimmed degree exceeds `bound`.
    pub fn new(coeffs: Vec<C>, bound: DegreeBound) -> Result<Self> {
        let coeffs = trim(coeffs);
        if degree_of(&coeffs) > bound {
            return Err(Error::BoundViolated {
                degree: coeffs.len() - 1,
                bound: bound.to_string(),
            });
        }
        Ok(BoundedPoly { coeffs, bound })
    }

    /// The polynomial with its own degree as bound.
    pub fn tight(coeffs: Vec<C>) -> Self {
        let coeffs = trim(coeffs);
        let bound = degree_of(&coeffs);
        BoundedPoly { coeffs, bound }
    }

    pub fn zero() -> Self {
        BoundedPoly {
            coeffs: Vec::new(),
            bound: DegreeBound::NEG_INF,
        }
    }

    pub fn one() -> Self {
        BoundedPoly {
            coeffs: vec![C::one()],
            bound: DegreeBound::finite(0),
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn bound(&self) -> DegreeBound {
        self.bound
    }

    pub fn degree(&self) -> DegreeBound {
        degree_of(&self.coeffs)
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    fn sum(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        BoundedPoly {
            coeffs: trim(coeffs),
            bound: self.bound.max(other.bound),
        }
    }

    fn product(&self, other: &Self) -> Self {
        let bound = self.bound.plus(other.bound);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return BoundedPoly {
                coeffs: Vec::new(),
                bound,
            };
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        BoundedPoly {
            coeffs: trim(coeffs),
            bound,
        }
    }

    fn negated(&self) -> Self {
        BoundedPoly {
            coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect(),
            bound: self.bound,
        }
    }
}

impl BoundedPoly<BigRational> {
    /// Parses `expr` (e.g. `"x^2 + 3/2x"`) with the bound text (`"2"`, `"-inf"`).
    pub fn parse(expr: &str, bound: &str) -> Result<Self> {
        let bound = DegreeBound::parse(bound)?;
        let terms = polytext::parse_terms(expr)?;
        if polytext::max_var(&terms).is_some_and(|v| v > 0) {
            return Err(Error::Parse(format!(
                "bounded polynomials are univariate: {expr:?}"
            )));
        }
        let mut coeffs: Vec<BigRational> = Vec::new();
        for t in &terms {
            let c = match t.coeff.as_deref() {
                None => BigRational::one(),
                Some("0^") => {
                    return Err(Error::Parse(
                        "'0^' coefficients belong to free polynomials".into(),
                    ))
                }
                Some(text) => parse_rational(text)?,
            };
            let c = if t.negative { -c } else { c };
            let k = t.exponents(1)[0] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigRational::zero());
            }
            coeffs[k] = &coeffs[k] + c;
        }
        BoundedPoly::new(coeffs, bound)
    }
}

pub(crate) fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

/// Writes the polynomial part only, highest power first.
pub(crate) fn fmt_univariate<C>(f: &mut fmt::Formatter<'_>, coeffs: &[C]) -> fmt::Result
where
    C: Coefficient + Signed + Display,
{
    let terms: Vec<Term> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let mag = c.abs();
            Term {
                negative: c.is_negative(),
                magnitude: (!mag.is_one()).then(|| mag.to_string()),
                exps: vec![k as u32],
            }
        })
        .collect();
    polytext::write_terms(f, &terms, 1)
}

/// Displays as `(x^2 + x, bound 2)`.
impl<C: Coefficient + Signed + Display> Display for BoundedPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        fmt_univariate(f, &self.coeffs)?;
        write!(f, ", bound {})", self.bound)
    }
}

/// The inverse semiring of bounded polynomials over `C`.
#[derive(Debug)]
pub struct BoundedPolys<C>(PhantomData<C>);

impl<C> BoundedPolys<C> {
    pub fn new() -> Self {
        BoundedPolys(PhantomData)
    }
}

impl<C> Default for BoundedPolys<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C> Clone for BoundedPolys<C> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<C: Coefficient> ZerolessInverseSemiring for BoundedPolys<C> {
    type Elem = BoundedPoly<C>;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        x.sum(y)
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        x.product(y)
    }
    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        x.negated()
    }
    fn one(&self) -> Self::Elem {
        BoundedPoly::one()
    }
    fn neutral(&self) -> Option<Self::Elem> {
        Some(BoundedPoly::zero())
    }
}

impl<C: Coefficient> InverseSemiring for BoundedPolys<C> {
    fn zero(&self) -> Self::Elem {
        BoundedPoly::zero()
    }
}

/// Bounded polynomials without `(0, -inf)`; `(0, 0)` is a non-absorbing
/// additive identity (`(0,0)·(q,m) = (0,m)`).
#[derive(Debug)]
pub struct ZerolessBoundedPolys<C>(PhantomData<C>);

impl<C> ZerolessBoundedPolys<C> {
    pub fn new() -> Self {
        ZerolessBoundedPolys(PhantomData)
    }
}

impl<C> Default for ZerolessBoundedPolys<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coefficient> ZerolessBoundedPolys<C> {
    pub fn contains(&self, p: &BoundedPoly<C>) -> bool {
        p.bound() != DegreeBound::NEG_INF
    }
}

impl<C: Coefficient> ZerolessInverseSemiring for ZerolessBoundedPolys<C> {
    type Elem = BoundedPoly<C>;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        x.sum(y)
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        x.product(y)
    }
    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        x.negated()
    }
    fn one(&self) -> Self::Elem {
        BoundedPoly::one()
    }
    fn neutral(&self) -> Option<Self::Elem> {
        Some(BoundedPoly {
            coeffs: Vec::new(),
            bound: DegreeBound::finite(0),
        })
    }
}
