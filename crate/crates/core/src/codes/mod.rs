//! Hamming-metric component codes.

mod additive;
pub mod bch;
mod cyclotomic;
mod distance;
pub mod goppa;
pub mod linalg;
mod linear;
mod packed;

pub use additive::{additive_build, AdditiveBuild, AdditiveCode};
pub use bch::{bch_build, bch_dim_lower_bound, best_defining_set, BchCode, BchSpec};
pub use cyclotomic::{all_cosets, cyclotomic_coset, DefiningSet};
pub use distance::{all_codewords, min_distance_bruteforce, DistanceCertificate, F2Span, DEFAULT_BUDGET};
pub use goppa::{default_locators, first_irreducible, goppa_build, GoppaCode};
pub use linear::{BaseField, DistanceBound, DistanceTag, LinearCode};
pub use packed::{for_each_in_span, PackedWord};

use crate::error::Result;
use crate::gf2m::Gf4;

/// The code v·C; see [`LinearCode::scale`].
pub fn scale_code(v: Gf4, code: &LinearCode) -> Result<LinearCode> {
    code.scale(v)
}
