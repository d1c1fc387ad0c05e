//! Table-based finite inverse semirings and modules, with exhaustive
//! machinery for ideals, congruences, quotients and homomorphisms.

pub mod builtins;
pub mod congruence;
pub mod endo;
pub mod eunitary;
pub mod format;
pub mod hom;
pub mod lattice;
mod module;
pub mod reflect;
mod semiring;
pub mod submodule;
mod subset;
pub mod upward;

pub use congruence::{
    congruence_from_submodule, generated_by, kernel, quotient, quotient_by_congruence,
    quotient_semiring, semiring_quotient_by_congruence, Congruence,
};
pub use endo::{endomorphism_semiring, FiniteInverseMonoid};
pub use eunitary::{e_unitary_witness, embed_eunitary, is_e_unitary, Embedding};
pub use hom::{hom_check, hom_enumerate, isomorphisms, module_hom_enumerate, DEFAULT_BUDGET};
pub use module::{FiniteModule, Side};
pub use reflect::{reflections, Reflections};
pub use semiring::FiniteInverseSemiring;
pub use submodule::{group_at, idempotents, GroupAt};
pub use subset::Subset;
pub use upward::{upward_equivalences, UpwardReport};

/// `t[x][y]` holds the index of the result.
pub type Table = Vec<Vec<usize>>;
