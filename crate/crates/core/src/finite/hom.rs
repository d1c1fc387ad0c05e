//! Homomorphism search between finite (or partially tabulated) structures.

use crate::error::{Error, Result};
use crate::finite::{FiniteInverseSemiring, FiniteModule, Table};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

pub type PartialTable = Vec<Vec<Option<usize>>>;

/// A finite window of a possibly infinite semiring: operations are recorded
/// only where the result stays inside the window.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub names: Vec<String>,
    pub add: PartialTable,
    pub mul: PartialTable,
    pub neg: Vec<Option<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl Presentation {
    pub fn from_semiring(r: &FiniteInverseSemiring) -> Self {
        let full = |t: &Table| {
            t.iter()
                .map(|row| row.iter().map(|&v| Some(v)).collect())
                .collect()
        };
        Presentation {
            names: r.names().to_vec(),
            add: full(r.add_table()),
            mul: full(r.mul_table()),
            neg: r.neg_table().iter().map(|&v| Some(v)).collect(),
            zero: r.zero_index(),
            one: r.one_index(),
        }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }
}

/// Constraints a map `dom → cod` has to satisfy.
struct Signature {
    dom: usize,
    cod: usize,
    binary: Vec<(PartialTable, Table)>,
    unary: Vec<(Vec<Option<usize>>, Vec<usize>)>,
    constants: Vec<(usize, usize)>,
}

impl Signature {
    fn assign(&self, f: &mut [Option<usize>], x: usize, v: usize) -> bool {
        let mut work = vec![(x, v)];
        while let Some((x, v)) = work.pop() {
            match f[x] {
                Some(w) if w == v => continue,
                Some(_) => return false,
                None => f[x] = Some(v),
            }
            for (dom, cod) in &self.binary {
                for y in 0..self.dom {
                    let Some(fy) = f[y] else { continue };
                    if let Some(z) = dom[x][y] {
                        work.push((z, cod[v][fy]));
                    }
                    if let Some(z) = dom[y][x] {
                        work.push((z, cod[fy][v]));
                    }
                }
            }
            for (dom, cod) in &self.unary {
                if let Some(z) = dom[x] {
                    work.push((z, cod[v]));
                }
            }
        }
        true
    }

    fn search(&self, node_budget: u64) -> Result<Vec<Vec<usize>>> {
        let mut f = vec![None; self.dom];
        for &(x, v) in &self.constants {
            if !self.assign(&mut f, x, v) {
                return Ok(Vec::new());
            }
        }
        let mut out = Vec::new();
        let mut nodes = 0u64;
        let mut stack = vec![f];
        while let Some(f) = stack.pop() {
            nodes += 1;
            if nodes > node_budget {
                return Err(Error::SearchBudget {
                    needed: format!("more than {node_budget} search nodes"),
                    budget: node_budget,
                });
            }
            match f.iter().position(Option::is_none) {
                None => out.push(f.into_iter().map(Option::unwrap).collect()),
                Some(x) => {
                    // reversed so the smallest value is explored first
                    for v in (0..self.cod).rev() {
                        let mut g = f.clone();
                        if self.assign(&mut g, x, v) {
                            stack.push(g);
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

fn check_candidates(dom: usize, cod: usize, budget: u64) -> Result<()> {
    let count = (cod as u128).checked_pow(dom as u32).unwrap_or(u128::MAX);
    if count > budget as u128 {
        return Err(Error::SearchBudget {
            needed: format!("{cod}^{dom}"),
            budget,
        });
    }
    Ok(())
}

fn full(t: &Table) -> PartialTable {
    t.iter()
        .map(|row| row.iter().map(|&v| Some(v)).collect())
        .collect()
}

/// Whether `f` preserves `+`, `·`, `0` and `1`.
pub fn hom_check(f: &[usize], r: &FiniteInverseSemiring, s: &FiniteInverseSemiring) -> bool {
    hom_check_presentation(f, &Presentation::from_semiring(r), s)
}

pub fn hom_check_presentation(f: &[usize], p: &Presentation, s: &FiniteInverseSemiring) -> bool {
    if f.len() != p.size() || f.iter().any(|&v| v >= s.size()) {
        return false;
    }
    if f[p.zero] != s.zero_index() || f[p.one] != s.one_index() {
        return false;
    }
    let (sa, sm) = (s.add_table(), s.mul_table());
    (0..p.size()).all(|x| {
        (0..p.size()).all(|y| {
            p.add[x][y].is_none_or(|z| f[z] == sa[f[x]][f[y]])
                && p.mul[x][y].is_none_or(|z| f[z] == sm[f[x]][f[y]])
        })
    })
}

/// All homomorphisms `R → S`, lexicographically ordered. Refuses when the
/// naive candidate count `|S|^|R|` exceeds `budget`.
pub fn hom_enumerate(
    r: &FiniteInverseSemiring,
    s: &FiniteInverseSemiring,
    budget: u64,
) -> Result<Vec<Vec<usize>>> {
    check_candidates(r.size(), s.size(), budget)?;
    hom_enumerate_presentation(&Presentation::from_semiring(r), s, budget)
}

/// Maps from a window that respect every operation defined inside it.
/// `budget` bounds the number of search nodes.
pub fn hom_enumerate_presentation(
    p: &Presentation,
    s: &FiniteInverseSemiring,
    budget: u64,
) -> Result<Vec<Vec<usize>>> {
    let sig = Signature {
        dom: p.size(),
        cod: s.size(),
        binary: vec![
            (p.add.clone(), s.add_table().clone()),
            (p.mul.clone(), s.mul_table().clone()),
        ],
        unary: vec![(p.neg.clone(), s.neg_table().to_vec())],
        constants: vec![(p.zero, s.zero_index()), (p.one, s.one_index())],
    };
    sig.search(budget)
}

/// Bijective homomorphisms.
pub fn isomorphisms(
    r: &FiniteInverseSemiring,
    s: &FiniteInverseSemiring,
    budget: u64,
) -> Result<Vec<Vec<usize>>> {
    if r.size() != s.size() {
        return Ok(Vec::new());
    }
    let homs = hom_enumerate(r, s, budget)?;
    Ok(homs
        .into_iter()
        .filter(|f| {
            let mut seen = vec![false; s.size()];
            f.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        })
        .collect())
}

/// Maps preserving an addition table and its zero.
pub(crate) fn additive_maps(
    add: &Table,
    zero: usize,
    target_add: &Table,
    target_zero: usize,
    budget: u64,
) -> Result<Vec<Vec<usize>>> {
    check_candidates(add.len(), target_add.len(), budget)?;
    Signature {
        dom: add.len(),
        cod: target_add.len(),
        binary: vec![(full(add), target_add.clone())],
        unary: Vec::new(),
        constants: vec![(zero, target_zero)],
    }
    .search(budget)
}

/// Module homomorphisms `M → N` over the same semiring and side.
pub fn module_hom_enumerate(
    m: &FiniteModule,
    n: &FiniteModule,
    budget: u64,
) -> Result<Vec<Vec<usize>>> {
    if m.base() != n.base() || m.side() != n.side() {
        return Err(Error::MalformedTable(
            "modules over different semirings or sides".into(),
        ));
    }
    check_candidates(m.size(), n.size(), budget)?;
    let mut unary = Vec::new();
    for r in m.base().elements() {
        if let (Some(a), Some(b)) = (m.left_table(), n.left_table()) {
            unary.push((a[r].iter().map(|&v| Some(v)).collect(), b[r].clone()));
        }
        if let (Some(a), Some(b)) = (m.right_table(), n.right_table()) {
            unary.push((
                a.iter().map(|row| Some(row[r])).collect(),
                b.iter().map(|row| row[r]).collect(),
            ));
        }
    }
    Signature {
        dom: m.size(),
        cod: n.size(),
        binary: vec![(full(m.add_table()), n.add_table().clone())],
        unary,
        constants: vec![(m.zero(), n.zero())],
    }
    .search(budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ZerolessInverseSemiring;
    use crate::finite::builtins;

    #[test]
    fn z2_to_z2_is_identity_only() {
        let z2 = builtins::z2();
        assert_eq!(
            hom_enumerate(&z2, &z2, DEFAULT_BUDGET).unwrap(),
            vec![vec![0, 1]]
        );
    }

    #[test]
    fn b1_to_boolean_maps_are_monotone() {
        let b1 = builtins::b1();
        let bool_ = builtins::boolean();
        let homs = hom_enumerate(&b1, &bool_, DEFAULT_BUDGET).unwrap();
        assert!(!homs.is_empty());
        for f in &homs {
            assert!(hom_check(f, &b1, &bool_));
            assert_eq!(f[b1.zero_index()], bool_.zero_index());
            assert_eq!(f[b1.one_index()], bool_.one_index());
            for x in b1.elements() {
                for y in b1.elements() {
                    if b1.leq(&x, &y) {
                        assert!(bool_.leq(&f[x], &f[y]));
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let names = ["Z2", "Bool", "Z2_0", "If0", "B1"];
        for a in names {
            for b in names {
                let r = builtins::builtin(a).unwrap();
                let s = builtins::builtin(b).unwrap();
                let n = r.size() as u32;
                let brute: Vec<Vec<usize>> = (0..(s.size() as u64).pow(n))
                    .map(|mut code| {
                        (0..r.size())
                            .map(|_| {
                                let d = (code % s.size() as u64) as usize;
                                code /= s.size() as u64;
                                d
                            })
                            .collect::<Vec<_>>()
                    })
                    .filter(|f| hom_check(f, &r, &s))
                    .collect::<std::collections::BTreeSet<_>>()
                    .into_iter()
                    .collect();
                assert_eq!(
                    hom_enumerate(&r, &s, DEFAULT_BUDGET).unwrap(),
                    brute,
                    "{a} -> {b}"
                );
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let b1 = builtins::b1();
        let err = hom_enumerate(&b1, &b1, 1000).unwrap_err();
        assert!(err.to_string().starts_with("search budget"), "{err}");
    }

    #[test]
    fn isomorphisms_of_b1() {
        let b1 = builtins::b1();
        let isos = isomorphisms(&b1, &b1, DEFAULT_BUDGET).unwrap();
        assert!(isos.contains(&b1.elements().collect()));
    }
}
