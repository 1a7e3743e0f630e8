//! Binary sum-rank-metric codes with 2x2 matrix blocks.
//!
//! A codeword is a length-ℓ vector of 2x2 binary matrices. Each block is
//! stored as the linearized polynomial `a0·x + a1·x²` over GF(4), so a word is
//! a pair of GF(4) vectors. The code `SR(C1, C2)` puts `C1` in the `x²` slot
//! and `C2` in the `x` slot; its sum-rank weight follows the closed form
//! `2·wt(a1) + 2·wt(a2) − 3·|supp(a1) ∩ supp(a2)|`.
//!
//! Module map:
//! - [`gf2m`]: GF(2^m) arithmetic, GF(4), polynomials.
//! - [`codes`]: cyclotomic cosets, BCH, Goppa and additive component codes.
//! - [`hamdec`]: bounded-distance Hamming decoders behind one trait.
//! - [`sumrank`]: blocks, weights, the `SR(C1, C2)` construction and bounds.
//! - [`srdec`]: the three-branch reduction decoder, oracle and channel.
//! - [`formats`]: text formats for codes and words.
//! - [`tables`]: recomputation of the reference dimension tables.

pub mod codes;
pub mod error;
pub mod formats;
pub mod gf2m;
pub mod hamdec;
pub mod srdec;
pub mod sumrank;
pub mod tables;

pub use error::{Error, Result};
pub use gf2m::{Fe, FieldContext, Gf4, Poly};
