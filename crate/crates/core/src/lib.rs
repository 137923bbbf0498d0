//! Sequence similarity measures, a fast edit-distance algorithm, and the
//! alignment-gadget reductions from Orthogonal Vectors.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line front end and the verification harness live in the `seqhard` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod edit_fast;
pub mod error;
pub mod gadget;
pub mod instantiations;
pub mod measures;
pub mod num;
pub mod ov;
pub mod variants;

pub use error::{Error, Result};
pub use num::Rational;
