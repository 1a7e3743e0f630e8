use std::sync::Arc;

use super::{BoundedDistanceDecoder, DecoderMethod, HammingDecodeResult, HammingStatus};
use crate::codes::goppa::inverse_linear_mod;
use crate::codes::{BaseField, GoppaCode, LinearCode};
use crate::error::{check_len, Result};
use crate::gf2m::{poly_eea, Fe, Gf4, Poly};

/// Extended-Euclid (Sugiyama) decoder for Goppa codes.
///
/// Binary codes with a squarefree Goppa polynomial G decode with modulus G²
/// up to deg G errors; all other codes use G and radius ⌊deg G / 2⌋.
#[derive(Clone, Debug)]
pub struct GoppaDecoder {
    goppa: Arc<GoppaCode>,
    modulus: Poly,
    radius: usize,
    inverses: Vec<Poly>,
    embed: [Fe; 4],
}

impl GoppaDecoder {
    pub fn new(goppa: impl Into<Arc<GoppaCode>>) -> Result<GoppaDecoder> {
        let goppa = goppa.into();
        let f = goppa.field();
        let g = goppa.goppa_poly();
        let r = g.degree().expect("Goppa polynomial is nonzero");
        let binary = goppa.code().base() == BaseField::Gf2;
        let (modulus, radius) = if binary && goppa.is_squarefree() { (g.mul(f, g), r) } else { (g.clone(), r / 2) };
        let inverses =
            goppa.locators().iter().map(|&a| inverse_linear_mod(f, &modulus, a)).collect::<Result<Vec<_>>>()?;
        let embed = if binary { [Fe::ZERO, Fe::ONE, Fe::ZERO, Fe::ZERO] } else { f.gf4_image()? };
        Ok(GoppaDecoder { goppa, modulus, radius, inverses, embed })
    }

    pub fn goppa(&self) -> &GoppaCode {
        &self.goppa
    }
}

impl BoundedDistanceDecoder for GoppaDecoder {
    fn code(&self) -> &LinearCode {
        self.goppa.code()
    }

    fn radius(&self) -> usize {
        self.radius
    }

    fn method(&self) -> DecoderMethod {
        DecoderMethod::Goppa
    }

    fn decode(&self, received: &[Gf4]) -> Result<HammingDecodeResult> {
        let code = self.goppa.code();
        let n = code.length();
        check_len(n, received.len())?;
        let fail = || Ok(HammingDecodeResult::failure(received, HammingStatus::DecodeFailure));
        if received.iter().any(|&x| !code.base().admits(x)) {
            return fail();
        }
        let f = self.goppa.field();
        let mut s = Poly::zero();
        for (&c, inv) in received.iter().zip(&self.inverses) {
            if !c.is_zero() {
                s = s.add(&inv.scale(f, self.embed[c.symbol() as usize]));
            }
        }
        if s.is_zero() {
            return Ok(HammingDecodeResult::checked(code, received, vec![Gf4::ZERO; n], self.radius));
        }
        let (omega, _, sigma) = poly_eea(f, &self.modulus, &s, self.radius)?;
        let deg = match sigma.degree() {
            Some(d) if d >= 1 && d <= self.radius => d,
            _ => return fail(),
        };
        let dsigma = sigma.derivative();
        let mut error = vec![Gf4::ZERO; n];
        let mut found = 0;
        for (i, &a) in self.goppa.locators().iter().enumerate() {
            if !sigma.eval(f, a).is_zero() {
                continue;
            }
            found += 1;
            let den = dsigma.eval(f, a);
            if den.is_zero() {
                return fail();
            }
            let v = f.div(omega.eval(f, a), den)?;
            let sym = self
                .embed
                .iter()
                .position(|&e| e == v)
                .filter(|&p| p != 0 && (p == 1 || code.base() == BaseField::Gf4));
            match sym {
                Some(p) => error[i] = Gf4::from_bits(p as u8),
                None => return fail(),
            }
        }
        if found != deg {
            return fail();
        }
        Ok(HammingDecodeResult::checked(code, received, error, self.radius))
    }
}
