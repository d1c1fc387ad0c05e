use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::finite::{FiniteInverseSemiring, FiniteModule, Subset, Table};

/// A partition of a module carrier compatible with its operations. Classes
/// are ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: Vec<Subset>,
}

impl Congruence {
    fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Subset> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let members = Subset::from_indices(n, (x..n).filter(|&y| labels[y] == labels[x]));
            for y in members.iter() {
                class_of[y] = c;
            }
            classes.push(members);
        }
        Congruence { class_of, classes }
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Least member of class `c`.
    pub fn representative(&self, c: usize) -> usize {
        self.classes[c].least().expect("classes are non-empty")
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn is_compatible(&self, m: &FiniteModule) -> bool {
        m.elements().all(|x| {
            let r = self.representative(self.class_of(x));
            m.elements().all(|z| self.related(m.add(x, z), m.add(r, z)))
                && m.actions(x)
                    .zip(m.actions(r))
                    .all(|(a, b)| self.related(a, b))
        })
    }
}

/// The congruence generated by `pairs`: union-find, then close under
/// addition and the actions until stable.
pub fn generated_by(m: &FiniteModule, pairs: &[(usize, usize)]) -> Congruence {
    let n = m.size();
    let mut uf = UnionFind::<usize>::new(n);
    for &(x, y) in pairs {
        uf.union(x, y);
    }
    loop {
        let mut changed = false;
        for x in m.elements() {
            let r = uf.find(x);
            if r == x {
                continue;
            }
            for z in m.elements() {
                changed |= uf.union(m.add(x, z), m.add(r, z));
            }
            let images: Vec<(usize, usize)> = m.actions(x).zip(m.actions(r)).collect();
            for (a, b) in images {
                changed |= uf.union(a, b);
            }
        }
        if !changed {
            break;
        }
    }
    Congruence::from_labels(&uf.into_labeling())
}

/// `x ∼ y` iff `x + s = y + s'` for some `s, s' ∈ S`, computed directly and
/// checked against the generated congruence.
pub fn congruence_from_submodule(m: &FiniteModule, s: &Subset) -> Result<Congruence> {
    if !m.is_submodule(s) {
        return Err(Error::NotSubmodule);
    }
    let n = m.size();
    let shifts: Vec<Subset> = m
        .elements()
        .map(|x| Subset::from_indices(n, s.iter().map(|v| m.add(x, v))))
        .collect();
    let related = |x: usize, y: usize| !shifts[x].intersection(&shifts[y]).is_empty();
    let mut labels = vec![0; n];
    for x in m.elements() {
        labels[x] = (0..=x).find(|&y| related(x, y)).unwrap();
    }
    let direct = Congruence::from_labels(&labels);
    for x in m.elements() {
        for y in m.elements() {
            if related(x, y) != direct.related(x, y) {
                return Err(Error::Invariant(format!(
                    "relation is not transitive at ({}, {})",
                    m.name(x),
                    m.name(y)
                )));
            }
        }
    }
    if !direct.is_compatible(m) {
        return Err(Error::Invariant("relation is not a congruence".into()));
    }
    let pairs: Vec<(usize, usize)> = s.iter().map(|v| (v, m.zero())).collect();
    if generated_by(m, &pairs) != direct {
        return Err(Error::Invariant(
            "closed-form congruence differs from the generated one".into(),
        ));
    }
    Ok(direct)
}

/// The class of zero.
pub fn kernel(m: &FiniteModule, c: &Congruence) -> Subset {
    c.classes()[c.class_of(m.zero())].clone()
}

fn class_name(names: &[String], c: &Congruence, k: usize) -> String {
    format!("[{}]", names[c.representative(k)])
}

fn quotient_table(
    c: &Congruence,
    rows: usize,
    cols: usize,
    f: impl Fn(usize, usize) -> usize,
) -> Table {
    (0..rows)
        .map(|i| (0..cols).map(|j| c.class_of(f(i, j))).collect())
        .collect()
}

pub fn quotient_by_congruence(m: &FiniteModule, c: &Congruence) -> Result<FiniteModule> {
    let k = c.len();
    let n = m.base().size();
    let rep = |i: usize| c.representative(i);
    let names = (0..k).map(|i| class_name(m.names(), c, i)).collect();
    let madd = quotient_table(c, k, k, |i, j| m.add(rep(i), rep(j)));
    let left = m
        .left_table()
        .map(|t| quotient_table(c, n, k, |r, i| t[r][rep(i)]));
    let right = m
        .right_table()
        .map(|t| quotient_table(c, k, n, |i, r| t[rep(i)][r]));
    FiniteModule::validate(
        m.base().clone(),
        names,
        madd,
        c.class_of(m.zero()),
        left,
        right,
    )
}

/// `M/S` together with the congruence it was built from.
pub fn quotient(m: &FiniteModule, s: &Subset) -> Result<(Congruence, FiniteModule)> {
    let c = congruence_from_submodule(m, s)?;
    let q = quotient_by_congruence(m, &c)?;
    Ok((c, q))
}

/// Quotient of a semiring by a congruence of its regular two-sided module.
pub fn semiring_quotient_by_congruence(
    r: &FiniteInverseSemiring,
    c: &Congruence,
) -> Result<FiniteInverseSemiring> {
    let k = c.len();
    let rep = |i: usize| c.representative(i);
    let names = (0..k).map(|i| class_name(r.names(), c, i)).collect();
    let add = quotient_table(c, k, k, |i, j| r.add_table()[rep(i)][rep(j)]);
    let mul = quotient_table(c, k, k, |i, j| r.mul_table()[rep(i)][rep(j)]);
    FiniteInverseSemiring::validate(
        names,
        add,
        mul,
        c.class_of(r.zero_index()),
        c.class_of(r.one_index()),
    )
}

/// `R/I` for a two-sided ideal `I`.
pub fn quotient_semiring(
    r: &FiniteInverseSemiring,
    ideal: &Subset,
) -> Result<(Congruence, FiniteInverseSemiring)> {
    let m = FiniteModule::regular(r, crate::finite::Side::Two);
    let c = congruence_from_submodule(&m, ideal)?;
    let q = semiring_quotient_by_congruence(r, &c)?;
    Ok((c, q))
}
