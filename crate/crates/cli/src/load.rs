//! Loading code files and building component decoders for them.

use std::path::Path;
use std::sync::Arc;

use srcodes::codes::BaseField;
use srcodes::formats::{CodeFile, Structured};
use srcodes::hamdec::{external_decoder_from_code, BchDecoder, BoundedDistanceDecoder, GoppaDecoder, LiftedDecoder};
use srcodes::sumrank::{Component, SumRankCode};
use srcodes::{Error, Result};

pub fn load_pair(c1: &Path, c2: &Path) -> Result<(CodeFile, CodeFile, SumRankCode)> {
    let (f1, f2) = (CodeFile::load(c1)?, CodeFile::load(c2)?);
    let code = SumRankCode::new(f1.component.clone(), f2.component.clone())?;
    Ok((f1, f2, code))
}

fn lift_if_binary(dec: Arc<dyn BoundedDistanceDecoder>) -> Result<Arc<dyn BoundedDistanceDecoder>> {
    if dec.code().base() == BaseField::Gf2 {
        Ok(Arc::new(LiftedDecoder::new(dec)?))
    } else {
        Ok(dec)
    }
}

/// The best decoder available for a stored component: the algebraic decoder
/// when the file records its construction, otherwise a generic one with the
/// given radius. Binary codes are decoded over their GF(4)-span.
pub fn component_decoder(file: &CodeFile, radius: usize, budget: u64) -> Result<Arc<dyn BoundedDistanceDecoder>> {
    let dec: Arc<dyn BoundedDistanceDecoder> = match file.structured()? {
        Structured::Bch(b) => Arc::new(BchDecoder::new(b)),
        Structured::Goppa(g) => Arc::new(GoppaDecoder::new(g)?),
        Structured::Plain(Component::Linear(c)) => Arc::from(external_decoder_from_code(c, radius, budget)?),
        Structured::Plain(Component::Additive(_)) => {
            return Err(Error::Config("additive components can only be decoded with --oracle".into()))
        }
    };
    lift_if_binary(dec)
}

/// Radii the two component decoders need for a target d_sr.
pub fn required_radii(d_sr: usize) -> (usize, usize) {
    ((d_sr - 1) / 2, ((2 * d_sr).div_ceil(3) - 1) / 2)
}
