//! Inverse semirings: semirings whose additive monoid is a commutative
//! inverse monoid. Generic traits and law checking, concrete instances, free
//! polynomial semirings over the adjoined-zero integers, and a finite
//! table-based engine.

pub mod algebra;
pub mod error;
pub mod finite;
pub mod free;
pub mod instances;
mod polytext;

pub use algebra::{classify, ClassTag, InverseSemiring, LawReport, ZerolessInverseSemiring};
pub use error::{Error, Result};
