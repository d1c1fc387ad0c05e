//! The initial inverse semiring `Z_0` and the free commutative inverse
//! semirings `Z_0[x_1, …, x_n]`.

pub mod multipoly;
pub mod reflect;
pub mod z0;

pub use multipoly::{eval, eval_horner, FreePolys, MultiPoly};
pub use reflect::{
    from_reflections, idem_reflection, ring_reflection, to_bounded, ExponentSet, ExponentSets,
    IntegerPolys, RingPoly,
};
pub use z0::{hat_zero, initial_hom, int, parse_z0, z0, z0_window, Z0};
