use std::collections::HashMap;

use super::{BoundedDistanceDecoder, DecoderMethod, HammingDecodeResult, HammingStatus};
use crate::codes::{BaseField, LinearCode};
use crate::error::{check_len, Error, Result};
use crate::gf2m::Gf4;

/// Coset-leader decoding from a table of all error patterns of weight ≤ radius.
#[derive(Clone, Debug)]
pub struct SyndromeTableDecoder {
    code: LinearCode,
    radius: usize,
    table: HashMap<Vec<Gf4>, Vec<(usize, Gf4)>>,
}

fn pattern_count(n: usize, t: usize, q1: u128) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    let mut pow = 1u128;
    for i in 0..=t.min(n) {
        total = total.saturating_add(binom.saturating_mul(pow));
        binom = binom.saturating_mul((n - i) as u128) / (i as u128 + 1);
        pow = pow.saturating_mul(q1);
    }
    total
}

impl SyndromeTableDecoder {
    /// Fails with [`Error::Budget`] when the table would exceed `budget`
    /// entries, and with [`Error::Config`] when two correctable patterns share
    /// a syndrome (the radius is too large for the code).
    pub fn new(code: LinearCode, radius: usize, budget: u64) -> Result<SyndromeTableDecoder> {
        let n = code.length();
        let values: &[Gf4] = match code.base() {
            BaseField::Gf2 => &Gf4::NONZERO[..1],
            BaseField::Gf4 => &Gf4::NONZERO,
        };
        let count = pattern_count(n, radius, values.len() as u128);
        if count > budget as u128 {
            return Err(Error::Budget { log2_size: (128 - count.leading_zeros()) as usize, budget });
        }
        let mut table = HashMap::with_capacity(count as usize);
        let mut pattern: Vec<(usize, Gf4)> = Vec::new();
        fn walk(
            code: &LinearCode,
            values: &[Gf4],
            radius: usize,
            start: usize,
            pattern: &mut Vec<(usize, Gf4)>,
            table: &mut HashMap<Vec<Gf4>, Vec<(usize, Gf4)>>,
        ) -> Result<()> {
            let mut e = vec![Gf4::ZERO; code.length()];
            for &(i, v) in pattern.iter() {
                e[i] = v;
            }
            if table.insert(code.syndrome(&e), pattern.clone()).is_some() {
                return Err(Error::Config(format!("radius {radius} exceeds the unique-decoding radius of the code")));
            }
            if pattern.len() == radius {
                return Ok(());
            }
            for i in start..code.length() {
                for &v in values {
                    pattern.push((i, v));
                    walk(code, values, radius, i + 1, pattern, table)?;
                    pattern.pop();
                }
            }
            Ok(())
        }
        walk(&code, values, radius, 0, &mut pattern, &mut table)?;
        debug_assert_eq!(table.len() as u128, count);
        Ok(SyndromeTableDecoder { code, radius, table })
    }
}

impl BoundedDistanceDecoder for SyndromeTableDecoder {
    fn code(&self) -> &LinearCode {
        &self.code
    }

    fn radius(&self) -> usize {
        self.radius
    }

    fn method(&self) -> DecoderMethod {
        DecoderMethod::External
    }

    fn decode(&self, received: &[Gf4]) -> Result<HammingDecodeResult> {
        let n = self.code.length();
        check_len(n, received.len())?;
        match self.table.get(&self.code.syndrome(received)) {
            Some(pattern) => {
                let mut e = vec![Gf4::ZERO; n];
                for &(i, v) in pattern {
                    e[i] = v;
                }
                Ok(HammingDecodeResult::checked(&self.code, received, e, self.radius))
            }
            None => Ok(HammingDecodeResult::failure(received, HammingStatus::DecodeFailure)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_counts() {
        // [15] quaternary, t = 2: 1 + 45 + 105·9
        assert_eq!(pattern_count(15, 2, 3), 1 + 45 + 945);
        assert_eq!(pattern_count(3, 5, 1), 8);
    }
}
