use std::collections::HashMap;

use crate::algebra::{
    law_report, InverseSemiring, LawEntry, LawReport, LawStatus, ZerolessInverseSemiring,
};
use crate::error::{Error, Result};
use crate::finite::{Subset, Table};
use crate::instances::rings::IntegersMod;

/// An inverse semiring on `0..n` given by its addition and multiplication
/// tables. Only obtainable through validation, so every value satisfies the
/// laws exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteInverseSemiring {
    names: Vec<String>,
    add: Table,
    mul: Table,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
}

pub(crate) fn check_names(names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(Error::MalformedTable("empty carrier".into()));
    }
    let mut seen = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if let Some(j) = seen.insert(n.as_str(), i) {
            return Err(Error::MalformedTable(format!(
                "duplicate element name {n:?} at positions {j} and {i}"
            )));
        }
    }
    Ok(())
}

pub(crate) fn check_table(
    what: &str,
    t: &Table,
    rows: usize,
    cols: usize,
    bound: usize,
) -> Result<()> {
    if t.len() != rows || t.iter().any(|r| r.len() != cols) {
        return Err(Error::MalformedTable(format!(
            "{what} table must be {rows}x{cols}"
        )));
    }
    if t.iter().flatten().any(|&v| v >= bound) {
        return Err(Error::MalformedTable(format!(
            "{what} table has an out-of-range entry"
        )));
    }
    Ok(())
}

pub(crate) fn single_failure(law: &'static str, witness: Vec<String>) -> Error {
    Error::LawsViolated(LawReport {
        entries: vec![LawEntry {
            law,
            status: LawStatus::Fail,
            witness: Some(witness),
        }],
        sample_size: 0,
        seed: None,
    })
}

/// Inverse of `x` in a commutative monoid table: the `y` with
/// `x + y + x = x` and `y + x + y = y`. Fails unless it exists and is unique.
pub(crate) fn derive_negation(names: &[String], add: &Table) -> Result<Vec<usize>> {
    let n = names.len();
    let mut neg = Vec::with_capacity(n);
    for x in 0..n {
        let mut found = (0..n).filter(|&y| add[add[x][y]][x] == x && add[add[y][x]][y] == y);
        match (found.next(), found.next()) {
            (Some(y), None) => neg.push(y),
            (None, _) => return Err(single_failure("inverse", vec![names[x].clone()])),
            (Some(y), Some(y2)) => {
                return Err(single_failure(
                    "inverse-unique",
                    vec![names[x].clone(), names[y].clone(), names[y2].clone()],
                ))
            }
        }
    }
    Ok(neg)
}

impl FiniteInverseSemiring {
    /// Checks shape, derives negation, then runs the full law suite over the
    /// whole carrier. Any violation is returned with its witness.
    pub fn validate(
        names: Vec<String>,
        add: Table,
        mul: Table,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        check_names(&names)?;
        let n = names.len();
        check_table("add", &add, n, n, n)?;
        check_table("mul", &mul, n, n, n)?;
        if zero >= n || one >= n {
            return Err(Error::MalformedTable("zero/one out of range".into()));
        }
        // Associativity and identity first: inverse search assumes a monoid.
        for x in 0..n {
            if add[zero][x] != x || add[x][zero] != x {
                return Err(single_failure("add-identity", vec![names[x].clone()]));
            }
        }
        let neg = derive_negation(&names, &add)?;
        let r = FiniteInverseSemiring {
            names,
            add,
            mul,
            neg,
            zero,
            one,
        };
        let report = r.law_report();
        if !report.passed() {
            return Err(Error::LawsViolated(
                report.map_witness(|&i| r.names[i].clone()),
            ));
        }
        Ok(r)
    }

    /// Tabulates `r` on a carrier closed under its operations.
    pub fn from_structure<R: InverseSemiring>(
        r: &R,
        carrier: &[R::Elem],
        names: Vec<String>,
    ) -> Result<Self> {
        if names.len() != carrier.len() {
            return Err(Error::MalformedTable(
                "one name per element required".into(),
            ));
        }
        let index = |x: &R::Elem| -> Result<usize> {
            carrier
                .iter()
                .position(|c| r.equal(c, x))
                .ok_or_else(|| Error::MalformedTable(format!("carrier not closed: {x:?}")))
        };
        let mut add = Vec::with_capacity(carrier.len());
        let mut mul = Vec::with_capacity(carrier.len());
        for x in carrier {
            add.push(
                carrier
                    .iter()
                    .map(|y| index(&r.add(x, y)))
                    .collect::<Result<Vec<_>>>()?,
            );
            mul.push(
                carrier
                    .iter()
                    .map(|y| index(&r.mul(x, y)))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Self::validate(names, add, mul, index(&r.zero())?, index(&r.one())?)
    }

    /// `Z/n` with elements named `0..n`.
    pub fn cyclic(n: u64) -> Result<Self> {
        let r = IntegersMod::new(n);
        let names = r.elements().iter().map(u64::to_string).collect();
        Self::from_structure(&r, &r.elements(), names)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn add_table(&self) -> &Table {
        &self.add
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn neg_table(&self) -> &[usize] {
        &self.neg
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn one_index(&self) -> usize {
        self.one
    }

    /// `0_1`
    pub fn zero_one(&self) -> usize {
        self.idem(&self.one)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.size() {
            return Err(Error::MalformedTable(
                "one name per element required".into(),
            ));
        }
        check_names(&names)?;
        self.names = names;
        Ok(self)
    }

    /// Exhaustive law report over the whole carrier.
    pub fn law_report(&self) -> LawReport<usize> {
        let all: Vec<usize> = self.elements().collect();
        law_report(self, &all).expect("carrier is non-empty")
    }

    pub fn format_subset(&self, s: &Subset) -> String {
        s.format(&self.names)
    }

    /// The structure on `subset` with the given zero and one, which must be
    /// closed under both operations.
    pub fn restrict(&self, subset: &Subset, zero: usize, one: usize) -> Result<Self> {
        let members: Vec<usize> = subset.iter().collect();
        let pos = |v: usize| {
            members.iter().position(|&m| m == v).ok_or_else(|| {
                Error::MalformedTable(format!("{} escapes the subset", self.names[v]))
            })
        };
        let table = |t: &Table| -> Result<Table> {
            members
                .iter()
                .map(|&x| members.iter().map(|&y| pos(t[x][y])).collect())
                .collect()
        };
        let names = members.iter().map(|&m| self.names[m].clone()).collect();
        Self::validate(
            names,
            table(&self.add)?,
            table(&self.mul)?,
            pos(zero)?,
            pos(one)?,
        )
    }

    /// Componentwise product; element `(i, j)` has index `i * |other| + j`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let m = other.size();
        let idx = |i: usize, j: usize| i * m + j;
        let mut names = Vec::new();
        let mut add = Vec::new();
        let mut mul = Vec::new();
        for i in self.elements() {
            for j in other.elements() {
                names.push(format!("({},{})", self.names[i], other.names[j]));
                let mut arow = Vec::new();
                let mut mrow = Vec::new();
                for k in self.elements() {
                    for l in other.elements() {
                        arow.push(idx(self.add[i][k], other.add[j][l]));
                        mrow.push(idx(self.mul[i][k], other.mul[j][l]));
                    }
                }
                add.push(arow);
                mul.push(mrow);
            }
        }
        Self::validate(
            names,
            add,
            mul,
            idx(self.zero, other.zero),
            idx(self.one, other.one),
        )
    }
}

impl ZerolessInverseSemiring for FiniteInverseSemiring {
    type Elem = usize;

    fn add(&self, x: &usize, y: &usize) -> usize {
        self.add[*x][*y]
    }

    fn mul(&self, x: &usize, y: &usize) -> usize {
        self.mul[*x][*y]
    }

    fn neg(&self, x: &usize) -> usize {
        self.neg[*x]
    }

    fn one(&self) -> usize {
        self.one
    }

    fn neutral(&self) -> Option<usize> {
        Some(self.zero)
    }
}

impl InverseSemiring for FiniteInverseSemiring {
    fn zero(&self) -> usize {
        self.zero
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{classify, ClassTag};
    use crate::finite::builtins;

    #[test]
    fn z2_is_a_ring() {
        let z2 = FiniteInverseSemiring::cyclic(2).unwrap();
        assert_eq!(classify(&z2).tag, ClassTag::Ring);
        assert_eq!(z2.neg_table(), &[0, 1]);
    }

    #[test]
    fn corrupted_b1_addition_is_rejected() {
        let b1 = builtins::b1();
        let (a, b, m) = (
            b1.index_of("a").unwrap(),
            b1.index_of("b").unwrap(),
            b1.index_of("m").unwrap(),
        );
        let mut add = b1.add_table().clone();
        add[a][b] = m;
        add[b][a] = m;
        let err = FiniteInverseSemiring::validate(
            b1.names().to_vec(),
            add,
            b1.mul_table().clone(),
            b1.zero_index(),
            b1.one_index(),
        )
        .unwrap_err();
        match err {
            Error::LawsViolated(rep) => {
                assert!(rep.failures().all(|e| e.witness.is_some()));
                assert!(rep.entry("add-associative").unwrap().status == LawStatus::Fail);
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn corrupted_b1_multiplication_breaks_distributivity() {
        let b1 = builtins::b1();
        let (j, a, b) = (
            b1.index_of("j").unwrap(),
            b1.index_of("a").unwrap(),
            b1.index_of("b").unwrap(),
        );
        let mut mul = b1.mul_table().clone();
        mul[j][a] = b;
        let err = FiniteInverseSemiring::validate(
            b1.names().to_vec(),
            b1.add_table().clone(),
            mul,
            b1.zero_index(),
            b1.one_index(),
        )
        .unwrap_err();
        let Error::LawsViolated(rep) = err else {
            panic!("expected law violation")
        };
        let dist = rep
            .entries
            .iter()
            .filter(|e| e.law.ends_with("distributive"))
            .find(|e| e.status == LawStatus::Fail)
            .expect("distributivity must fail");
        assert_eq!(dist.witness.as_ref().unwrap().len(), 3);
    }

    #[test]
    fn malformed_tables() {
        let names = vec!["0".to_string(), "1".to_string()];
        let ok = vec![vec![0, 1], vec![1, 0]];
        assert!(matches!(
            FiniteInverseSemiring::validate(names.clone(), vec![vec![0]], ok.clone(), 0, 1),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(
            FiniteInverseSemiring::validate(
                names.clone(),
                ok.clone(),
                vec![vec![0, 5], vec![0, 1]],
                0,
                1
            ),
            Err(Error::MalformedTable(_))
        ));
        let dup = vec!["0".to_string(), "0".to_string()];
        assert!(FiniteInverseSemiring::validate(dup, ok.clone(), ok, 0, 1).is_err());
    }

    #[test]
    fn product_indexing() {
        let z2 = FiniteInverseSemiring::cyclic(2).unwrap();
        let b1 = builtins::b1();
        let p = z2.product(&b1).unwrap();
        assert_eq!(p.size(), 12);
        assert_eq!(p.zero_one(), b1.one_index());
        assert_eq!(classify(&p).tag, ClassTag::Neither);
        assert_eq!(p.name(7), "(1,j)");
    }
}
