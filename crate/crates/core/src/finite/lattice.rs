use crate::error::{Error, Result};
use crate::finite::{FiniteModule, Subset};

/// `S1 + S2`, the submodule generated by the union.
pub fn sum(m: &FiniteModule, s1: &Subset, s2: &Subset) -> Subset {
    m.submodule_generate(&s1.union(s2))
}

pub fn intersect(s1: &Subset, s2: &Subset) -> Subset {
    s1.intersection(s2)
}

/// Join in the lattice of subtractive submodules.
pub fn subtractive_sum(m: &FiniteModule, s1: &Subset, s2: &Subset) -> Result<Subset> {
    m.subtractive_closure(&s1.union(s2))
}

/// Whether `(S1 + X) ∩ S2 = S1 + (X ∩ S2)`. Requires `S1 ⊆ S2`.
pub fn restricted_modular_check(
    m: &FiniteModule,
    s1: &Subset,
    x: &Subset,
    s2: &Subset,
) -> Result<bool> {
    if ![s1, x, s2].iter().all(|s| m.is_submodule(s)) {
        return Err(Error::NotSubmodule);
    }
    if !s1.is_subset(s2) {
        return Err(Error::NotContained);
    }
    let lhs = sum(m, s1, x).intersection(s2);
    let rhs = sum(m, s1, &x.intersection(s2));
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularTriple {
    pub s1: Subset,
    pub x: Subset,
    pub s2: Subset,
    /// `(s1 ∨ x) ∧ s2`
    pub lhs: Subset,
    /// `s1 ∨ (x ∧ s2)`
    pub rhs: Subset,
}

impl ModularTriple {
    pub fn describe(&self, names: &[String]) -> String {
        format!(
            "s1 = {}, x = {}, s2 = {}: {} != {}",
            self.s1.format(names),
            self.x.format(names),
            self.s2.format(names),
            self.lhs.format(names),
            self.rhs.format(names)
        )
    }
}

/// All triples `s1 ⊆ s2`, `x` at which the modular law fails, in the lattice
/// of submodules or, with `subtractive_only`, of subtractive submodules
/// (joins taken by subtractive closure).
pub fn find_modularity_counterexamples(
    m: &FiniteModule,
    subtractive_only: bool,
) -> Result<Vec<ModularTriple>> {
    let lattice = if subtractive_only {
        m.all_subtractive_submodules()
    } else {
        m.all_submodules()
    };
    let join = |a: &Subset, b: &Subset| -> Result<Subset> {
        if subtractive_only {
            subtractive_sum(m, a, b)
        } else {
            Ok(sum(m, a, b))
        }
    };
    let mut out = Vec::new();
    for s1 in &lattice {
        for s2 in lattice.iter().filter(|s2| s1.is_subset(s2)) {
            for x in &lattice {
                let lhs = join(s1, x)?.intersection(s2);
                let rhs = join(s1, &x.intersection(s2))?;
                if lhs != rhs {
                    out.push(ModularTriple {
                        s1: s1.clone(),
                        x: x.clone(),
                        s2: s2.clone(),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Triples with `s1 ⊆ s2` and `s2` subtractive where the modular law fails
/// for ordinary sums. Always empty for a correct engine.
pub fn restricted_law_violations(m: &FiniteModule) -> Vec<ModularTriple> {
    let all = m.all_submodules();
    let mut out = Vec::new();
    for s2 in all.iter().filter(|s| m.is_subtractive(s)) {
        for s1 in all.iter().filter(|s| s.is_subset(s2)) {
            for x in &all {
                let lhs = sum(m, s1, x).intersection(s2);
                let rhs = sum(m, s1, &x.intersection(s2));
                if lhs != rhs {
                    out.push(ModularTriple {
                        s1: s1.clone(),
                        x: x.clone(),
                        s2: s2.clone(),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    out
}
