use std::sync::Arc;

use super::{BoundedDistanceDecoder, DecoderMethod, HammingDecodeResult, HammingStatus};
use crate::codes::{BchCode, LinearCode};
use crate::error::{check_len, Result};
use crate::gf2m::{Fe, FieldContext, Gf4, Poly};

/// Syndrome decoder for quaternary BCH codes: Berlekamp–Massey for the
/// error locator, a full Chien scan for positions and Forney's formula for values.
#[derive(Clone, Debug)]
pub struct BchDecoder {
    bch: Arc<BchCode>,
    radius: usize,
    // log of α to the primitive element of the locator field
    step: usize,
    gf4_logs: [usize; 4],
}

impl BchDecoder {
    /// Decodes up to ⌊(δ − 1)/2⌋ errors, δ − 1 being the longest consecutive run of zeros.
    pub fn new(bch: impl Into<Arc<BchCode>>) -> BchDecoder {
        let bch = bch.into();
        let f = bch.field();
        let img = f.gf4_image().expect("locator field has even degree");
        let gf4_logs = img.map(|x| f.log(x).unwrap_or(usize::MAX));
        let step = f.log(bch.alpha()).expect("alpha is nonzero");
        let radius = bch.run().1 / 2;
        BchDecoder { bch, radius, step, gf4_logs }
    }

    pub fn bch(&self) -> &BchCode {
        &self.bch
    }

    fn syndromes(&self, received: &[Gf4]) -> Vec<Fe> {
        let f = self.bch.field();
        let n = received.len();
        let order = f.order();
        let (b, len) = self.bch.run();
        (0..len)
            .map(|j| {
                let e = (b + j) % n;
                received.iter().enumerate().fold(Fe::ZERO, |acc, (i, &r)| {
                    if r.is_zero() {
                        acc
                    } else {
                        let l = self.gf4_logs[r.symbol() as usize] + self.step * (e * i % n);
                        acc + f.exp(l % order)
                    }
                })
            })
            .collect()
    }
}

/// Shortest LFSR generating `s`; returns the connection polynomial Λ(x) with Λ(0) = 1.
fn berlekamp_massey(f: &FieldContext, s: &[Fe]) -> (Poly, usize) {
    let mut c = vec![Fe::ONE];
    let mut prev = vec![Fe::ONE];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last_d = Fe::ONE;
    for n in 0..s.len() {
        let mut d = s[n];
        for i in 1..=l.min(c.len() - 1) {
            d += f.mul(c[i], s[n - i]);
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = f.div(d, last_d).expect("last discrepancy is nonzero");
        let mut next = c.clone();
        if next.len() < prev.len() + m {
            next.resize(prev.len() + m, Fe::ZERO);
        }
        for (i, &p) in prev.iter().enumerate() {
            next[i + m] += f.mul(coef, p);
        }
        if 2 * l <= n {
            l = n + 1 - l;
            prev = c;
            last_d = d;
            m = 1;
        } else {
            m += 1;
        }
        c = next;
    }
    (Poly::from_coeffs(c), l)
}

impl BoundedDistanceDecoder for BchDecoder {
    fn code(&self) -> &LinearCode {
        self.bch.code()
    }

    fn radius(&self) -> usize {
        self.radius
    }

    fn method(&self) -> DecoderMethod {
        DecoderMethod::Bch
    }

    fn decode(&self, received: &[Gf4]) -> Result<HammingDecodeResult> {
        let code = self.bch.code();
        let n = code.length();
        check_len(n, received.len())?;
        let f = self.bch.field();
        let order = f.order();
        let syn = self.syndromes(received);
        if syn.iter().all(|s| s.is_zero()) {
            return Ok(HammingDecodeResult::checked(code, received, vec![Gf4::ZERO; n], self.radius));
        }
        let fail = || Ok(HammingDecodeResult::failure(received, HammingStatus::DecodeFailure));
        let (lambda, l) = berlekamp_massey(f, &syn);
        if l > self.radius || lambda.degree() != Some(l) {
            return fail();
        }
        // Chien search over every position: X_i = α^i is a locator iff Λ(α^(−i)) = 0.
        let mut positions = Vec::new();
        for i in 0..n {
            let x_inv = f.exp((order - self.step * i % order) % order);
            if lambda.eval(f, x_inv).is_zero() {
                positions.push(i);
            }
        }
        if positions.len() != l {
            return fail();
        }
        let omega = Poly::from_coeffs(syn.clone()).mul(f, &lambda).truncate(syn.len());
        let dlambda = lambda.derivative();
        let b = self.bch.run().0 as i64;
        let mut error = vec![Gf4::ZERO; n];
        for &i in &positions {
            let x = f.exp(self.step * i % order);
            let x_inv = f.inv(x)?;
            let den = dlambda.eval(f, x_inv);
            if den.is_zero() {
                return fail();
            }
            let num = f.mul(omega.eval(f, x_inv), f.pow(x, 1 - b)?);
            let y = f.div(num, den)?;
            match f.subfield_project(y)? {
                Some(v) if !v.is_zero() => error[i] = v,
                _ => return fail(),
            }
        }
        Ok(HammingDecodeResult::checked(code, received, error, self.radius))
    }
}
