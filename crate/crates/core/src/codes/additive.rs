use super::distance::{min_distance_bruteforce, DistanceCertificate, F2Span};
use super::linalg;
use super::linear::{DistanceBound, LinearCode};
use crate::error::{check_len, Result};
use crate::gf2m::Gf4;

/// A GF(2)-linear subspace of GF(4)^ℓ (an additive quaternary code).
///
/// Its size is 2^f2_dimension = 4^(f2_dimension/2), so the quaternary
/// dimension may be a half-integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveCode {
    length: usize,
    basis: Vec<Vec<Gf4>>,
    designed: Option<DistanceBound>,
    exact: Option<usize>,
}

/// Result of [`additive_build`]: the code and the number of generators that
/// were dependent on earlier ones.
#[derive(Clone, Debug)]
pub struct AdditiveBuild {
    pub code: AdditiveCode,
    pub dropped: usize,
}

/// The additive span of `generators`, reduced to a GF(2)-basis.
pub fn additive_build(length: usize, generators: &[Vec<Gf4>]) -> Result<AdditiveBuild> {
    for g in generators {
        check_len(length, g.len())?;
    }
    let basis = linalg::f2_rref(generators, length);
    let dropped = generators.len() - basis.len();
    Ok(AdditiveBuild { code: AdditiveCode { length, basis, designed: None, exact: None }, dropped })
}

impl AdditiveCode {
    /// The additive code underlying a linear code: generators g and ω·g for each row g.
    pub fn from_linear(code: &LinearCode) -> AdditiveCode {
        let basis = linalg::f2_rref(&code.f2_basis(), code.length());
        AdditiveCode { length: code.length(), basis, designed: code.designed_distance(), exact: code.exact_distance() }
    }

    pub fn with_designed_distance(mut self, bound: DistanceBound) -> AdditiveCode {
        self.designed = Some(bound);
        self
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn f2_dimension(&self) -> usize {
        self.basis.len()
    }

    /// Dimension in the quaternary convention, f2_dimension / 2.
    pub fn quaternary_dimension(&self) -> f64 {
        self.basis.len() as f64 / 2.0
    }

    pub fn basis(&self) -> &[Vec<Gf4>] {
        &self.basis
    }

    pub fn is_zero_code(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn designed_distance(&self) -> Option<DistanceBound> {
        self.designed
    }

    pub fn exact_distance(&self) -> Option<usize> {
        self.exact
    }

    /// Same convention as [`LinearCode::distance_lower_bound`].
    pub fn distance_lower_bound(&self) -> Option<usize> {
        if self.is_zero_code() {
            return None;
        }
        Some(self.exact.or(self.designed.map(|b| b.value)).unwrap_or(1))
    }

    pub fn certify_distance(&mut self, budget: u64) -> Result<DistanceCertificate> {
        let cert = min_distance_bruteforce(self, budget)?;
        if let Some(b) = self.designed {
            assert!(cert.distance >= b.value, "certified distance below the recorded bound {b:?}");
        }
        self.exact = Some(cert.distance);
        Ok(cert)
    }

    /// Records an exact distance, checking it against a fresh enumeration.
    pub fn set_exact_distance(&mut self, d: usize, budget: u64) -> Result<()> {
        let cert = min_distance_bruteforce(self, budget)?;
        if cert.distance != d {
            return Err(crate::Error::Construction(format!(
                "declared exact distance {d}, enumeration gives {}",
                cert.distance
            )));
        }
        self.exact = Some(d);
        Ok(())
    }

    /// Σ bits[i]·basis[i].
    pub fn encode(&self, bits: &[bool]) -> Result<Vec<Gf4>> {
        check_len(self.basis.len(), bits.len())?;
        let mut out = vec![Gf4::ZERO; self.length];
        for (&b, row) in bits.iter().zip(&self.basis) {
            if b {
                for (o, &x) in out.iter_mut().zip(row) {
                    *o += x;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, word: &[Gf4]) -> bool {
        if word.len() != self.length {
            return false;
        }
        let mut ext = self.basis.clone();
        ext.push(word.to_vec());
        linalg::f2_rref(&ext, self.length).len() == self.basis.len()
    }
}

impl F2Span for AdditiveCode {
    fn length(&self) -> usize {
        self.length
    }

    fn f2_basis(&self) -> Vec<Vec<Gf4>> {
        self.basis.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::BaseField;
    use crate::gf2m::from_symbols;

    #[test]
    fn half_integral_dimension() {
        let gens: Vec<Vec<Gf4>> = ["10", "20", "01"].iter().map(|s| from_symbols(s).unwrap()).collect();
        let b = additive_build(2, &gens).unwrap();
        assert_eq!(b.code.f2_dimension(), 3);
        assert_eq!(b.code.quaternary_dimension(), 1.5);
        assert_eq!(b.dropped, 0);
        assert!(b.code.contains(&from_symbols("31").unwrap()));
        assert!(!b.code.contains(&from_symbols("02").unwrap()));
    }

    #[test]
    fn dependent_generators_are_counted() {
        let gens: Vec<Vec<Gf4>> = ["12", "21", "33"].iter().map(|s| from_symbols(s).unwrap()).collect();
        let b = additive_build(2, &gens).unwrap();
        assert_eq!((b.code.f2_dimension(), b.dropped), (2, 1));
        assert!(additive_build(3, &[]).unwrap().code.is_zero_code());
    }

    #[test]
    fn linear_codes_double_their_dimension() {
        let c = LinearCode::from_generator(BaseField::Gf4, 3, vec![from_symbols("111").unwrap()]).unwrap();
        let a = AdditiveCode::from_linear(&c);
        assert_eq!(a.f2_dimension(), 2);
        for x in Gf4::ALL {
            assert!(a.contains(&[x, x, x]));
        }
    }
}
