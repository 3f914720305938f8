//! Exact algebra in the positive Homfly skein of the annulus, modelled as
//! symmetric functions over `Q(v, s)`.
//!
//! The coefficient ring lives in [`ring`], partition combinatorics in
//! [`partitions`], the symmetric-function bases in [`symfunc`], the skein
//! bases and operators in [`skein`], and torus-pattern decorations in
//! [`cabling`]. [`verify`] bundles named suites of identities.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod cabling;
pub mod error;
pub mod partitions;
pub mod ring;
pub mod skein;
pub mod symfunc;
pub mod verify;

pub use error::Error;
