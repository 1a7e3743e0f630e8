//! Finite fields of characteristic 2 and polynomials over them.

// Addition in characteristic 2 is XOR.
#![allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]

pub mod binpoly;
mod field;
mod gf4;
mod poly;

pub use field::{Fe, FieldContext, SubfieldCoordinates, DEFAULT_MODULI, MAX_DEGREE};
pub use gf4::{from_symbols, to_symbols, weight, Gf4};
pub use poly::{poly_eea, Poly};
