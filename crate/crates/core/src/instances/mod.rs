//! Concrete inverse semirings and constructions.

pub mod adjoin;
pub mod bimodule;
pub mod bounded;
pub mod heart;
pub mod product;
pub mod rings;
pub mod tropical;

pub use adjoin::{
    adjoin_infinity, adjoin_zero, AdjoinInfinity, AdjoinZero, Adjoined, WithInfinity,
};
pub use bimodule::{bimodule_construct, BimoduleData, BimoduleSemiring, Component, FiniteBimodule};
pub use bounded::{BoundedPoly, BoundedPolys, DegreeBound, DegreeBounds, ZerolessBoundedPolys};
pub use heart::{heart, Heart};
pub use product::{product, Product};
pub use rings::{Integers, IntegersMod, Rationals};
pub use tropical::{MinPlus, Tropical};
