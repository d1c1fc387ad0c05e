//! The heart of a finite inverse semiring: `I(z)` built from the ideal
//! `G(0)`, the ring `G(0_1)` and `z(x) = x + 0_1`.

use crate::algebra::{classify, ZerolessInverseSemiring};
use crate::error::{Error, Result};
use crate::finite::{group_at, hom_check, FiniteInverseSemiring, Subset};
use crate::instances::bimodule::FiniteBimodule;

#[derive(Clone, Debug)]
pub struct Heart {
    /// Vectors (`x_A`, from `G(0)`) first, then scalars (`x_S`, from `G(0_1)`).
    pub semiring: FiniteInverseSemiring,
    /// Index in `R` of each heart element.
    pub embedding: Vec<usize>,
    pub injective: bool,
    pub ideal: Subset,
    pub scalars: Subset,
}

pub fn heart(r: &FiniteInverseSemiring) -> Result<Heart> {
    let ideal = group_at(r, r.zero_index())?.members;
    let scalars_group = group_at(r, r.zero_one())?;
    let scalars = scalars_group.members;
    let ring = scalars_group.ring.expect("G(0_1) is a ring");
    let vecs: Vec<usize> = ideal.iter().collect();
    let scal: Vec<usize> = scalars.iter().collect();
    let vpos = |x: usize| vecs.iter().position(|&v| v == x).expect("G(0) is an ideal");
    let spos = |x: usize| {
        scal.iter()
            .position(|&v| v == x)
            .expect("z lands in G(0_1)")
    };
    let vadd = vecs
        .iter()
        .map(|&a| vecs.iter().map(|&b| vpos(r.add(&a, &b))).collect())
        .collect();
    let left = scal
        .iter()
        .map(|&s| vecs.iter().map(|&a| vpos(r.mul(&s, &a))).collect())
        .collect();
    let right = vecs
        .iter()
        .map(|&a| scal.iter().map(|&s| vpos(r.mul(&a, &s))).collect())
        .collect();
    let z1 = r.zero_one();
    let map = vecs.iter().map(|&a| spos(r.add(&a, &z1))).collect();
    let names = vecs.iter().map(|&a| r.name(a).to_string()).collect();
    let data = FiniteBimodule::new(ring, names, vadd, vpos(r.zero_index()), left, right, map)?;
    let semiring = data.construct()?;
    let embedding: Vec<usize> = vecs.iter().chain(scal.iter()).copied().collect();
    if !hom_check(&embedding, &semiring, r) {
        return Err(Error::Invariant(
            "heart embedding is not a homomorphism".into(),
        ));
    }
    let mut seen = vec![false; r.size()];
    let injective = embedding
        .iter()
        .all(|&v| !std::mem::replace(&mut seen[v], true));
    if !classify(r).is_ring && !injective {
        return Err(Error::Invariant(
            "heart embedding of a non-ring is not injective".into(),
        ));
    }
    Ok(Heart {
        semiring,
        embedding,
        injective,
        ideal,
        scalars,
    })
}
