use crate::algebra::{classify, ZerolessInverseSemiring};
use crate::error::{Error, Result};
use crate::finite::congruence::{
    congruence_from_submodule, generated_by, semiring_quotient_by_congruence,
};
use crate::finite::hom::{hom_check, isomorphisms};
use crate::finite::submodule::idempotents;
use crate::finite::{Congruence, FiniteInverseSemiring, FiniteModule, Side, Subset};

/// The ring and idempotent reflections of a finite inverse semiring.
#[derive(Clone, Debug)]
pub struct Reflections {
    /// `R` modulo the congruence generated by `0_1 ∼ 0`.
    pub ring: FiniteInverseSemiring,
    pub ring_congruence: Congruence,
    /// `R` modulo the congruence generated by `0_1 ∼ 1`.
    pub idempotent_quotient: FiniteInverseSemiring,
    pub idempotent_congruence: Congruence,
    pub idempotents: Subset,
    /// `E(R)` with unit `0_1`.
    pub idempotent: FiniteInverseSemiring,
    /// `x ↦ 0_x`, as indices into `idempotent`.
    pub idempotent_map: Vec<usize>,
    /// An isomorphism from the quotient onto `E(R)`.
    pub isomorphism: Vec<usize>,
}

pub fn reflections(r: &FiniteInverseSemiring, budget: u64) -> Result<Reflections> {
    let m = FiniteModule::regular(r, Side::Two);
    let ring_congruence = generated_by(&m, &[(r.zero_one(), r.zero_index())]);
    let ring = semiring_quotient_by_congruence(r, &ring_congruence)?;
    if !classify(&ring).is_ring {
        return Err(Error::Invariant("ring reflection is not a ring".into()));
    }
    let (e, er) = idempotents(r)?;
    if congruence_from_submodule(&m, &e)? != ring_congruence {
        return Err(Error::Invariant(
            "quotient by E(R) differs from the 0_1 ~ 0 congruence".into(),
        ));
    }
    let idempotent_congruence = generated_by(&m, &[(r.zero_one(), r.one_index())]);
    let idempotent_quotient = semiring_quotient_by_congruence(r, &idempotent_congruence)?;
    let members: Vec<usize> = e.iter().collect();
    let idempotent_map: Vec<usize> = r
        .elements()
        .map(|x| {
            members
                .iter()
                .position(|&v| v == r.idem(&x))
                .expect("0_x is idempotent")
        })
        .collect();
    if !hom_check(&idempotent_map, r, &er) {
        return Err(Error::Invariant("x -> 0_x is not a homomorphism".into()));
    }
    let surjective = er.elements().all(|k| idempotent_map.contains(&k));
    let injective_on_idempotents = members
        .iter()
        .enumerate()
        .all(|(k, &x)| idempotent_map[x] == k);
    if !surjective || !injective_on_idempotents {
        return Err(Error::Invariant(
            "x -> 0_x is not a retraction onto the idempotents".into(),
        ));
    }
    let isomorphism = isomorphisms(&idempotent_quotient, &er, budget)?
        .into_iter()
        .next()
        .ok_or_else(|| {
            Error::Invariant("idempotent reflection is not isomorphic to E(R)".into())
        })?;
    Ok(Reflections {
        ring,
        ring_congruence,
        idempotent_quotient,
        idempotent_congruence,
        idempotents: e,
        idempotent: er,
        idempotent_map,
        isomorphism,
    })
}
