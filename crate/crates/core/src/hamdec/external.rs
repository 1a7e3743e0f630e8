use std::path::Path;

use super::{BoundedDistanceDecoder, DecoderMethod, HammingDecodeResult, OracleDecoder, SyndromeTableDecoder};
use crate::codes::{F2Span, LinearCode};
use crate::error::{Error, Result};
use crate::formats::CodeFile;
use crate::gf2m::Gf4;
use crate::sumrank::Component;

/// An oracle decoder presented under the `external` method tag.
struct External(OracleDecoder);

impl BoundedDistanceDecoder for External {
    fn code(&self) -> &LinearCode {
        self.0.code()
    }

    fn radius(&self) -> usize {
        self.0.radius()
    }

    fn method(&self) -> DecoderMethod {
        DecoderMethod::External
    }

    fn decode(&self, received: &[Gf4]) -> Result<HammingDecodeResult> {
        self.0.decode(received)
    }
}

/// Wraps a code with a declared distance d in a decoder of radius `radius`
/// ≤ ⌊(d − 1)/2⌋: exhaustive search when the code has at most `budget`
/// codewords, otherwise a syndrome table when that fits the budget.
pub fn external_decoder_from_code(
    code: LinearCode,
    radius: usize,
    budget: u64,
) -> Result<Box<dyn BoundedDistanceDecoder>> {
    let declared = code
        .exact_distance()
        .or(code.designed_distance().map(|b| b.value))
        .ok_or_else(|| Error::Config("the code declares no minimum distance".into()))?;
    if 2 * radius + 1 > declared {
        return Err(Error::Config(format!(
            "radius {radius} exceeds ⌊(d − 1)/2⌋ = {} for declared distance {declared}",
            declared.saturating_sub(1) / 2
        )));
    }
    if code.f2_dimension() < 64 && (1u64 << code.f2_dimension()) <= budget {
        return Ok(Box::new(External(OracleDecoder::new(code, radius, budget)?)));
    }
    Ok(Box::new(SyndromeTableDecoder::new(code, radius, budget)?))
}

/// Loads a linear code file and wraps it with [`external_decoder_from_code`].
pub fn external_decoder_load(path: &Path, radius: usize, budget: u64) -> Result<Box<dyn BoundedDistanceDecoder>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", path.display()) })?;
    match CodeFile::parse(&text)?.component {
        Component::Linear(code) => external_decoder_from_code(code, radius, budget),
        Component::Additive(_) => Err(Error::Config("external decoders require a linear code".into())),
    }
}
