//! Exact search for sums of norms over imaginary quadratic fields.
//!
//! For a field `Q(sqrt(-d))` of class number 1, 2 or 3 this crate decides
//! which unary Hermitian lattices `U v` with `h(v) = r/k` are represented by
//! the orthonormal lattice `I_m`, computes the minimum such `m`, produces
//! independently checkable certificates, and compares everything against the
//! published tables of exceptional `r` values and `g_d(1)`.
//!
//! Everything runs on integers: `r/k = sum N(gamma_i / k)` is rewritten as
//! `r * k = sum N(gamma_i)` with every `gamma_i` obeying the congruence
//! conditions of its ideal class.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod bitset;
pub mod certcheck;
pub mod classdata;
mod error;
pub mod quadfield;
pub mod repsearch;
pub mod universality;
pub mod verify;

pub use error::Error;
pub use quadfield::{make_field, FieldParams, OmegaBranch, Ratio, RingElement};
