//! Counterdiabatic population transfer in three-level Λ systems: pulse
//! shapes, driving Hamiltonians, superadiabatic iterations and a
//! Schrödinger/Lindblad dynamics engine. `no_std` with `alloc`.

#![no_std]
// `!(x > y)` rejects NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod driving;
pub mod dynamics;
pub mod error;
pub mod hybrid;
pub mod linalg;
pub mod pulse;
pub mod superadiabatic;

pub use error::{Error, Result};
