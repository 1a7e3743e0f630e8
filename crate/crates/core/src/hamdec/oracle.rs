use super::{BoundedDistanceDecoder, DecoderMethod, HammingDecodeResult, HammingStatus};
use crate::codes::{all_codewords, F2Span, LinearCode, PackedWord};
use crate::error::{check_len, Result};
use crate::gf2m::Gf4;

/// Nearest codeword by exhaustive search. Returns `None` distance data on a tie.
fn nearest(words: &[PackedWord], received: &PackedWord) -> (usize, usize, bool) {
    let mut best = (usize::MAX, 0usize, false);
    for (i, w) in words.iter().enumerate() {
        let d = w.distance(received);
        if d < best.0 {
            best = (d, i, false);
        } else if d == best.0 {
            best.2 = true;
        }
    }
    best
}

fn result_from(received: &[Gf4], codeword: Vec<Gf4>) -> HammingDecodeResult {
    let error = received.iter().zip(&codeword).map(|(&r, &c)| r - c).collect();
    HammingDecodeResult { codeword, error, status: HammingStatus::Success, tie: false }
}

fn tie(received: &[Gf4]) -> HammingDecodeResult {
    let mut out = HammingDecodeResult::failure(received, HammingStatus::DecodeFailure);
    out.tie = true;
    out
}

/// Exhaustive nearest-codeword decoding with no radius limit. Ties between
/// equally close codewords are reported as a failure with `tie` set.
pub fn oracle_decode<C: F2Span + ?Sized>(code: &C, received: &[Gf4], budget: u64) -> Result<HammingDecodeResult> {
    let n = code.length();
    check_len(n, received.len())?;
    let words: Vec<PackedWord> = all_codewords(code, budget)?.into_iter().map(|(_, w)| w).collect();
    let (_, idx, is_tie) = nearest(&words, &PackedWord::from_symbols(received));
    if is_tie {
        return Ok(tie(received));
    }
    Ok(result_from(received, words[idx].to_symbols(n)))
}

/// [`oracle_decode`] with a precomputed codeword list and a decoding radius.
#[derive(Clone, Debug)]
pub struct OracleDecoder {
    code: LinearCode,
    radius: usize,
    words: Vec<PackedWord>,
}

impl OracleDecoder {
    pub fn new(code: LinearCode, radius: usize, budget: u64) -> Result<OracleDecoder> {
        let words = all_codewords(&code, budget)?.into_iter().map(|(_, w)| w).collect();
        Ok(OracleDecoder { code, radius, words })
    }
}

impl BoundedDistanceDecoder for OracleDecoder {
    fn code(&self) -> &LinearCode {
        &self.code
    }

    fn radius(&self) -> usize {
        self.radius
    }

    fn method(&self) -> DecoderMethod {
        DecoderMethod::Oracle
    }

    fn decode(&self, received: &[Gf4]) -> Result<HammingDecodeResult> {
        let n = self.code.length();
        check_len(n, received.len())?;
        let (d, idx, is_tie) = nearest(&self.words, &PackedWord::from_symbols(received));
        if d > self.radius {
            return Ok(HammingDecodeResult::failure(received, HammingStatus::DecodeFailure));
        }
        if is_tie {
            return Ok(tie(received));
        }
        Ok(result_from(received, self.words[idx].to_symbols(n)))
    }
}
