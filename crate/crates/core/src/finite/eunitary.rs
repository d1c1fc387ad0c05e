use crate::algebra::ZerolessInverseSemiring;
use crate::error::{Error, Result};
use crate::finite::congruence::quotient_semiring;
use crate::finite::hom::hom_check;
use crate::finite::submodule::idempotents;
use crate::finite::FiniteInverseSemiring;

/// A pair `(x, z)` with `z` and `x + z` idempotent but `x` not, if any.
pub fn e_unitary_witness(r: &FiniteInverseSemiring) -> Option<(usize, usize)> {
    let idem: Vec<usize> = r.elements().filter(|x| r.is_idempotent(x)).collect();
    r.elements().filter(|x| !r.is_idempotent(x)).find_map(|x| {
        idem.iter()
            .find(|z| r.is_idempotent(&r.add(&x, z)))
            .map(|&z| (x, z))
    })
}

pub fn is_e_unitary(r: &FiniteInverseSemiring) -> bool {
    e_unitary_witness(r).is_none()
}

/// `x ↦ ([x], 0_x)` into `R/E(R) × E(R)`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub ring_part: FiniteInverseSemiring,
    pub idempotent_part: FiniteInverseSemiring,
    pub target: FiniteInverseSemiring,
    pub map: Vec<usize>,
    pub homomorphism: bool,
    pub injective: bool,
    pub witness: Option<(usize, usize)>,
}

impl Embedding {
    /// Two elements with the same image, if the map is not injective.
    pub fn collision(&self) -> Option<(usize, usize)> {
        let n = self.map.len();
        (0..n).find_map(|x| {
            ((x + 1)..n)
                .find(|&y| self.map[x] == self.map[y])
                .map(|y| (x, y))
        })
    }
}

pub fn embed_eunitary(r: &FiniteInverseSemiring) -> Result<Embedding> {
    let (e, er) = idempotents(r)?;
    let (c, q) = quotient_semiring(r, &e)?;
    let target = q.product(&er)?;
    let epos: Vec<usize> = e.iter().collect();
    let map: Vec<usize> = r
        .elements()
        .map(|x| {
            let z = epos
                .iter()
                .position(|&v| v == r.idem(&x))
                .expect("0_x is idempotent");
            c.class_of(x) * er.size() + z
        })
        .collect();
    let homomorphism = hom_check(&map, r, &target);
    let mut seen = vec![false; target.size()];
    let injective = map.iter().all(|&v| !std::mem::replace(&mut seen[v], true));
    let witness = e_unitary_witness(r);
    if !homomorphism {
        return Err(Error::Invariant(
            "x -> ([x], 0_x) is not a homomorphism".into(),
        ));
    }
    if injective != witness.is_none() {
        return Err(Error::Invariant(format!(
            "embedding injective = {injective} but E-unitary = {}",
            witness.is_none()
        )));
    }
    Ok(Embedding {
        ring_part: q,
        idempotent_part: er,
        target,
        map,
        homomorphism,
        injective,
        witness,
    })
}
