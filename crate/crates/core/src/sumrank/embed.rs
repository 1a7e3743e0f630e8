use super::word::Mat2;
use crate::codes::{BaseField, LinearCode};
use crate::error::{check_len, Error, Result};
use crate::gf2m::Gf4;

/// How a quaternary Hamming code is turned into a sum-rank code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbedMode {
    /// Each symbol becomes the first row of its own block; the second row is zero.
    Pad,
    /// Symbols 2i and 2i + 1 become the two rows of block i.
    Group,
}

/// A GF(4) linear code viewed as a sum-rank code through [`EmbedMode`].
#[derive(Clone, Debug)]
pub struct HammingEmbedding {
    code: LinearCode,
    mode: EmbedMode,
}

pub fn hamming_embed(code: LinearCode, mode: EmbedMode) -> Result<HammingEmbedding> {
    if code.base() != BaseField::Gf4 {
        return Err(Error::Range("embedding expects a code over GF(4)".into()));
    }
    if mode == EmbedMode::Group && !code.length().is_multiple_of(2) {
        return Err(Error::Range(format!("group mode needs even length, got {}", code.length())));
    }
    Ok(HammingEmbedding { code, mode })
}

impl HammingEmbedding {
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn mode(&self) -> EmbedMode {
        self.mode
    }

    /// Number of 2x2 blocks.
    pub fn block_length(&self) -> usize {
        match self.mode {
            EmbedMode::Pad => self.code.length(),
            EmbedMode::Group => self.code.length() / 2,
        }
    }

    pub fn f2_dimension(&self) -> usize {
        2 * self.code.dimension()
    }

    /// GF(2) dimension over the 4·blocks ambient bits.
    pub fn rate(&self) -> f64 {
        self.f2_dimension() as f64 / (4 * self.block_length()) as f64
    }

    /// d_H for padding, ⌈d_H/2⌉ for grouping.
    pub fn distance_lower_bound(&self) -> Option<usize> {
        let d = self.code.distance_lower_bound()?;
        Some(match self.mode {
            EmbedMode::Pad => d,
            EmbedMode::Group => d.div_ceil(2),
        })
    }

    pub fn embed(&self, codeword: &[Gf4]) -> Result<Vec<Mat2>> {
        check_len(self.code.length(), codeword.len())?;
        let row = |x: Gf4| {
            let (a, b) = x.coords();
            [a, b]
        };
        Ok(match self.mode {
            EmbedMode::Pad => codeword.iter().map(|&x| Mat2::from_rows([row(x), [0, 0]])).collect(),
            EmbedMode::Group => codeword.chunks(2).map(|p| Mat2::from_rows([row(p[0]), row(p[1])])).collect(),
        })
    }

    pub fn weight(&self, codeword: &[Gf4]) -> Result<usize> {
        Ok(self.embed(codeword)?.iter().map(|m| m.rank()).sum())
    }
}
