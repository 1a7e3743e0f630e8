use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::{BoundedDistanceDecoder, DecoderMethod, HammingDecodeResult, HammingStatus};
use crate::codes::{BaseField, LinearCode};
use crate::error::{check_len, Error, Result};
use crate::gf2m::Gf4;

/// Forwards to another decoder and counts the calls.
pub struct CountingDecoder {
    inner: Arc<dyn BoundedDistanceDecoder>,
    calls: AtomicU64,
}

impl CountingDecoder {
    pub fn new(inner: Arc<dyn BoundedDistanceDecoder>) -> CountingDecoder {
        CountingDecoder { inner, calls: AtomicU64::new(0) }
    }

    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }

    pub fn reset(&self) {
        self.calls.store(0, Ordering::Relaxed);
    }
}

impl BoundedDistanceDecoder for CountingDecoder {
    fn code(&self) -> &LinearCode {
        self.inner.code()
    }

    fn radius(&self) -> usize {
        self.inner.radius()
    }

    fn method(&self) -> DecoderMethod {
        self.inner.method()
    }

    fn decode(&self, received: &[Gf4]) -> Result<HammingDecodeResult> {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.inner.decode(received)
    }
}

/// Decodes the GF(4)-span of a binary code by running a binary decoder on
/// the two coordinate planes of the received word. Each plane's error is no
/// heavier than the full error, so the radius carries over.
pub struct LiftedDecoder {
    inner: Arc<dyn BoundedDistanceDecoder>,
    lifted: LinearCode,
}

impl LiftedDecoder {
    pub fn new(inner: Arc<dyn BoundedDistanceDecoder>) -> Result<LiftedDecoder> {
        if inner.code().base() != BaseField::Gf2 {
            return Err(Error::Config("only binary decoders can be lifted".into()));
        }
        let lifted = inner.code().lift();
        Ok(LiftedDecoder { inner, lifted })
    }
}

impl BoundedDistanceDecoder for LiftedDecoder {
    fn code(&self) -> &LinearCode {
        &self.lifted
    }

    fn radius(&self) -> usize {
        self.inner.radius()
    }

    fn method(&self) -> DecoderMethod {
        self.inner.method()
    }

    fn decode(&self, received: &[Gf4]) -> Result<HammingDecodeResult> {
        check_len(self.lifted.length(), received.len())?;
        let plane =
            |bit: u8| -> Vec<Gf4> { received.iter().map(|x| Gf4::from_bits((x.symbol() >> bit) & 1)).collect() };
        let lo = self.inner.decode(&plane(0))?;
        let hi = self.inner.decode(&plane(1))?;
        if !lo.is_success() || !hi.is_success() {
            return Ok(HammingDecodeResult::failure(received, HammingStatus::DecodeFailure));
        }
        let error = lo.error.iter().zip(&hi.error).map(|(&a, &b)| a + Gf4::OMEGA * b).collect();
        Ok(HammingDecodeResult::checked(&self.lifted, received, error, self.radius()))
    }
}
