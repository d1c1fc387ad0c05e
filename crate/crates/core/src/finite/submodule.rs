//! Subsets of a module: order closures, submodule generation and the
//! subtractive predicates.

use std::collections::BTreeSet;

use crate::algebra::{classify, ZerolessInverseSemiring};
use crate::error::{Error, Result};
use crate::finite::{FiniteInverseSemiring, FiniteModule, Side, Subset};

impl FiniteModule {
    pub fn down_closure(&self, s: &Subset) -> Subset {
        Subset::from_indices(
            self.size(),
            self.elements()
                .filter(|&x| s.iter().any(|y| self.leq(x, y))),
        )
    }

    pub fn up_closure(&self, s: &Subset) -> Subset {
        Subset::from_indices(
            self.size(),
            self.elements()
                .filter(|&x| s.iter().any(|y| self.leq(y, x))),
        )
    }

    pub fn is_down_closed(&self, s: &Subset) -> bool {
        self.down_closure(s) == *s
    }

    pub fn is_upward_closed(&self, s: &Subset) -> bool {
        self.up_closure(s) == *s
    }

    pub fn is_submodule(&self, s: &Subset) -> bool {
        s.contains(self.zero())
            && s.iter().all(|x| {
                s.iter().all(|y| s.contains(self.add(x, y)))
                    && self.actions(x).all(|v| s.contains(v))
            })
    }

    /// Least submodule containing `gens`.
    pub fn submodule_generate(&self, gens: &Subset) -> Subset {
        let mut s = gens.clone();
        s.insert(self.zero());
        let mut frontier: Vec<usize> = s.iter().collect();
        while let Some(x) = frontier.pop() {
            let images: Vec<usize> = s
                .iter()
                .map(|y| self.add(x, y))
                .chain(self.actions(x))
                .collect();
            for v in images {
                if s.insert(v) {
                    frontier.push(v);
                }
            }
        }
        s
    }

    /// `x ∈ S` and `x + y ∈ S` imply `y ∈ S`.
    pub fn is_subtractive(&self, s: &Subset) -> bool {
        s.iter().all(|x| {
            self.elements()
                .all(|y| !s.contains(self.add(x, y)) || s.contains(y))
        })
    }

    /// Least subtractive submodule containing `s`, computed as the downset of
    /// the generated submodule and cross-checked against the fixpoint of the
    /// definition.
    pub fn subtractive_closure(&self, s: &Subset) -> Result<Subset> {
        let via_downset = self.down_closure(&self.submodule_generate(s));
        let mut t = self.submodule_generate(s);
        loop {
            let mut grown = t.clone();
            for x in t.iter() {
                for y in self.elements() {
                    if t.contains(self.add(x, y)) {
                        grown.insert(y);
                    }
                }
            }
            let grown = self.submodule_generate(&grown);
            if grown == t {
                break;
            }
            t = grown;
        }
        if t != via_downset {
            return Err(Error::Invariant(format!(
                "subtractive closure {} differs from downset {}",
                t.format(self.names()),
                via_downset.format(self.names())
            )));
        }
        Ok(t)
    }

    /// `E(M)`, the additive idempotents.
    pub fn idempotents(&self) -> Subset {
        Subset::from_indices(
            self.size(),
            self.elements().filter(|&x| self.is_idempotent(x)),
        )
    }

    /// All submodules, ordered by bitset. Every submodule is a sum of cyclic
    /// ones, so closing the cyclic submodules under sums reaches all of them.
    pub fn all_submodules(&self) -> Vec<Subset> {
        let n = self.size();
        let mut found: BTreeSet<Subset> = BTreeSet::new();
        found.insert(self.submodule_generate(&Subset::empty(n)));
        let cyclic: Vec<Subset> = self
            .elements()
            .map(|x| self.submodule_generate(&Subset::from_indices(n, [x])))
            .collect();
        let mut frontier: Vec<Subset> = found.iter().cloned().collect();
        while let Some(s) = frontier.pop() {
            for c in &cyclic {
                if c.is_subset(&s) {
                    continue;
                }
                let t = self.submodule_generate(&s.union(c));
                if found.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
        found.into_iter().collect()
    }

    pub fn all_subtractive_submodules(&self) -> Vec<Subset> {
        self.all_submodules()
            .into_iter()
            .filter(|s| self.is_subtractive(s))
            .collect()
    }
}

/// `E(R)` as a subset, and as an idempotent semiring whose unit is `0_1`.
pub fn idempotents(r: &FiniteInverseSemiring) -> Result<(Subset, FiniteInverseSemiring)> {
    let e = FiniteModule::regular(r, Side::Two).idempotents();
    let er = r.restrict(&e, r.zero_index(), r.zero_one())?;
    Ok((e, er))
}

/// `G(z) = {s : 0_s = z}` for an additive idempotent `z`.
#[derive(Clone, Debug)]
pub struct GroupAt {
    pub idempotent: usize,
    pub members: Subset,
    /// `z = 0`: the members form a two-sided ideal.
    pub is_ideal: bool,
    /// `z = 0_1`: the members form a ring, given here.
    pub ring: Option<FiniteInverseSemiring>,
}

pub fn group_at(r: &FiniteInverseSemiring, z: usize) -> Result<GroupAt> {
    if !r.is_idempotent(&z) {
        return Err(Error::NotIdempotent(r.name(z).to_string()));
    }
    let n = r.size();
    let members = Subset::from_indices(n, r.elements().filter(|x| r.idem(x) == z));
    let bad = |what: &str| Err(Error::Invariant(format!("G({}) {what}", r.name(z))));
    for x in members.iter() {
        if r.add(&z, &x) != x || !members.contains(r.neg(&x)) || r.add(&x, &r.neg(&x)) != z {
            return bad("is not a group with identity z");
        }
        if members.iter().any(|y| !members.contains(r.add(&x, &y))) {
            return bad("is not closed under addition");
        }
    }
    let scalars: Vec<usize> = r.elements().filter(|s| r.idem(s) == r.zero_one()).collect();
    for s in &scalars {
        for x in members.iter() {
            if !members.contains(r.mul(s, &x)) || !members.contains(r.mul(&x, s)) {
                return bad("is not closed under the scalar actions");
            }
        }
    }
    let is_ideal = z == r.zero_index();
    if is_ideal && !FiniteModule::regular(r, Side::Two).is_submodule(&members) {
        return bad("is not a two-sided ideal");
    }
    let ring = if z == r.zero_one() {
        let g = r.restrict(&members, z, r.one_index())?;
        if !classify(&g).is_ring {
            return bad("is not a ring");
        }
        Some(g)
    } else {
        None
    };
    Ok(GroupAt {
        idempotent: z,
        members,
        is_ideal,
        ring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::builtins;

    fn set(m: &FiniteModule, names: &[&str]) -> Subset {
        Subset::from_indices(m.size(), names.iter().map(|n| m.index_of(n).unwrap()))
    }

    fn all_modules() -> Vec<FiniteModule> {
        let mut out = Vec::new();
        for name in builtins::BUILTIN_NAMES {
            let r = builtins::builtin(name).unwrap();
            for side in [Side::Left, Side::Right, Side::Two] {
                out.push(FiniteModule::regular(&r, side));
            }
        }
        out.push(builtins::end_z2_0_natural_module());
        out
    }

    #[test]
    fn b1_closures() {
        let m = FiniteModule::regular(&builtins::b1(), Side::Two);
        assert_eq!(m.down_closure(&set(&m, &["b"])), set(&m, &["0", "m", "b"]));
        assert_eq!(m.down_closure(&Subset::empty(6)), Subset::empty(6));
        assert_eq!(m.submodule_generate(&set(&m, &["a"])), set(&m, &["0", "a"]));
        assert_eq!(
            m.submodule_generate(&set(&m, &["j"])),
            set(&m, &["0", "a", "j"])
        );
        assert_eq!(
            m.subtractive_closure(&set(&m, &["b"])).unwrap(),
            set(&m, &["0", "m", "b"])
        );
    }

    #[test]
    fn up_closure_of_zero_contains_idempotents() {
        for m in all_modules() {
            let up = m.up_closure(&Subset::from_indices(m.size(), [m.zero()]));
            assert!(m.idempotents().is_subset(&up));
        }
    }

    #[test]
    fn subtractive_iff_down_closed() {
        for m in all_modules() {
            for s in m.all_submodules() {
                assert_eq!(m.is_subtractive(&s), m.is_down_closed(&s), "{:?}", s);
            }
        }
    }

    #[test]
    fn lattice_closure_finds_every_submodule() {
        for m in all_modules() {
            let n = m.size();
            if n > 16 {
                continue;
            }
            let brute: Vec<Subset> = (0..1u64 << n)
                .map(|mask| Subset::from_mask(n, mask))
                .filter(|s| m.is_submodule(s))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            assert_eq!(m.all_submodules(), brute);
        }
    }

    #[test]
    fn b1_subtractive_ideals_are_principal_downsets() {
        let m = FiniteModule::regular(&builtins::b1(), Side::Two);
        let mut downsets: Vec<Subset> = m
            .elements()
            .map(|x| m.down_closure(&Subset::from_indices(6, [x])))
            .collect();
        downsets.sort();
        assert_eq!(m.all_subtractive_submodules(), downsets);
    }

    #[test]
    fn idempotent_sets() {
        let (e, er) = idempotents(&builtins::b1()).unwrap();
        assert_eq!(e.len(), 6);
        assert_eq!(er.size(), 6);
        let (e, _) = idempotents(&builtins::z2()).unwrap();
        assert_eq!(e, Subset::from_indices(2, [0]));
        let r = builtins::if0();
        let (e, er) = idempotents(&r).unwrap();
        assert_eq!(e.format(r.names()), "{0_A, 0_S}");
        assert_eq!(er.name(er.one_index()), "0_S");
    }

    #[test]
    fn idempotents_form_an_ideal_not_a_subsemiring() {
        for name in builtins::BUILTIN_NAMES {
            let r = builtins::builtin(name).unwrap();
            let (e, _) = idempotents(&r).unwrap();
            assert!(FiniteModule::regular(&r, Side::Two).is_submodule(&e));
            let unital = e.contains(r.one_index());
            assert_eq!(unital, r.zero_one() == r.one_index(), "{name}");
        }
    }

    #[test]
    fn groups() {
        let b1 = builtins::b1();
        let j = b1.index_of("j").unwrap();
        assert_eq!(
            group_at(&b1, j).unwrap().members,
            Subset::from_indices(6, [j])
        );
        let z2 = builtins::z2();
        let g = group_at(&z2, 0).unwrap();
        assert_eq!(g.members.len(), 2);
        assert!(g.is_ideal && g.ring.is_some());
        let r = builtins::if0();
        let g = group_at(&r, r.index_of("0_S").unwrap()).unwrap();
        assert_eq!(g.members.format(r.names()), "{0_S, 1_S}");
        assert_eq!(g.ring.unwrap().size(), 2);
        assert!(matches!(
            group_at(&r, r.index_of("1_A").unwrap()),
            Err(Error::NotIdempotent(_))
        ));
    }
}
