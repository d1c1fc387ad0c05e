use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of `0..n`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(FixedBitSet);

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset(FixedBitSet::with_capacity(n))
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        s.0.insert_range(..);
        s
    }

    pub fn from_indices(n: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for i in idx {
            s.0.insert(i);
        }
        s
    }

    /// Subset of `0..2^k`-style enumeration: bit `i` of `mask` selects `i`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1))
    }

    /// Parses a comma-separated list of element names, with optional braces.
    pub fn parse(names: &[String], src: &str) -> Result<Self> {
        let body = src.trim().trim_start_matches('{').trim_end_matches('}');
        let mut s = Self::empty(names.len());
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i = names
                .iter()
                .position(|n| n == tok)
                .ok_or_else(|| Error::Parse(format!("unknown element {tok:?}")))?;
            s.insert(i);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, i: usize) -> bool {
        !self.0.put(i)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.0.union_with(&other.0);
        s
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.0.intersect_with(&other.0);
        s
    }

    /// Least member, used to order and name classes.
    pub fn least(&self) -> Option<usize> {
        self.0.minimum()
    }

    pub fn format(&self, names: &[String]) -> String {
        let items: Vec<&str> = self.iter().map(|i| names[i].as_str()).collect();
        format!("{{{}}}", items.join(", "))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
