//! Bounded-distance Hamming-metric decoders.
//!
//! Every decoder re-checks its output against the parity-check matrix, so a
//! reported success is always a codeword within the decoding radius.

mod bch;
mod external;
mod goppa;
mod oracle;
mod table;
mod wrappers;

pub use bch::BchDecoder;
pub use external::{external_decoder_from_code, external_decoder_load};
pub use goppa::GoppaDecoder;
pub use oracle::{oracle_decode, OracleDecoder};
pub use table::SyndromeTableDecoder;
pub use wrappers::{CountingDecoder, LiftedDecoder};

use std::fmt;

use crate::codes::LinearCode;
use crate::error::Result;
use crate::gf2m::{weight, Gf4};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecoderMethod {
    Bch,
    Goppa,
    Oracle,
    External,
}

impl fmt::Display for DecoderMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecoderMethod::Bch => "bch",
            DecoderMethod::Goppa => "goppa",
            DecoderMethod::Oracle => "oracle",
            DecoderMethod::External => "external",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HammingStatus {
    Success,
    /// No codeword within the radius was found (includes oracle ties).
    DecodeFailure,
    /// The algebraic decoder produced a vector that failed the parity check.
    GuardTripped,
}

/// Outcome of one decode. On failure `codeword` is the received word and
/// `error` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HammingDecodeResult {
    pub codeword: Vec<Gf4>,
    pub error: Vec<Gf4>,
    pub status: HammingStatus,
    /// Set by the oracle when two codewords are equally close.
    pub tie: bool,
}

impl HammingDecodeResult {
    pub fn is_success(&self) -> bool {
        self.status == HammingStatus::Success
    }

    pub(crate) fn failure(received: &[Gf4], status: HammingStatus) -> HammingDecodeResult {
        HammingDecodeResult { codeword: received.to_vec(), error: vec![Gf4::ZERO; received.len()], status, tie: false }
    }

    /// Accepts `received − error` only if it is a codeword and `error` is within `radius`.
    pub(crate) fn checked(code: &LinearCode, received: &[Gf4], error: Vec<Gf4>, radius: usize) -> HammingDecodeResult {
        if weight(&error) > radius {
            return HammingDecodeResult::failure(received, HammingStatus::DecodeFailure);
        }
        let codeword: Vec<Gf4> = received.iter().zip(&error).map(|(&r, &e)| r - e).collect();
        if !code.contains(&codeword) {
            return HammingDecodeResult::failure(received, HammingStatus::GuardTripped);
        }
        HammingDecodeResult { codeword, error, status: HammingStatus::Success, tie: false }
    }
}

/// A decoder that returns the unique codeword within `radius()` of the
/// received word whenever one exists, and a failure status otherwise.
pub trait BoundedDistanceDecoder: Send + Sync {
    fn code(&self) -> &LinearCode;
    fn radius(&self) -> usize;
    fn method(&self) -> DecoderMethod;
    /// Errors only on a length mismatch; decoding failures are reported in the result.
    fn decode(&self, received: &[Gf4]) -> Result<HammingDecodeResult>;
}
