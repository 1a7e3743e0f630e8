use std::fmt;
use std::str::FromStr;

use super::distance::{min_distance_bruteforce, DistanceCertificate, F2Span};
use super::linalg;
use crate::error::{check_len, Error, Result};
use crate::gf2m::Gf4;

/// Alphabet of a component code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Gf2,
    Gf4,
}

impl BaseField {
    pub fn admits(self, x: Gf4) -> bool {
        self == BaseField::Gf4 || x.symbol() < 2
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BaseField::Gf2 => "gf2",
            BaseField::Gf4 => "gf4",
        }
    }

    /// Number of GF(2) coordinates of one symbol.
    pub fn f2_degree(self) -> usize {
        match self {
            BaseField::Gf2 => 1,
            BaseField::Gf4 => 2,
        }
    }
}

/// Where a minimum-distance lower bound comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistanceTag {
    BchBound,
    GoppaBound,
    SeparableGoppaBound,
    Declared,
    Exact,
}

impl DistanceTag {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceTag::BchBound => "bch-bound",
            DistanceTag::GoppaBound => "goppa-bound",
            DistanceTag::SeparableGoppaBound => "separable-goppa-bound",
            DistanceTag::Declared => "declared",
            DistanceTag::Exact => "exact",
        }
    }
}

impl FromStr for DistanceTag {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "bch-bound" => DistanceTag::BchBound,
            "goppa-bound" => DistanceTag::GoppaBound,
            "separable-goppa-bound" => DistanceTag::SeparableGoppaBound,
            "declared" => DistanceTag::Declared,
            "exact" => DistanceTag::Exact,
            other => return Err(format!("unknown distance tag '{other}'")),
        })
    }
}

impl fmt::Display for DistanceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DistanceBound {
    pub value: usize,
    pub tag: DistanceTag,
}

impl DistanceBound {
    pub fn new(value: usize, tag: DistanceTag) -> DistanceBound {
        DistanceBound { value, tag }
    }
}

/// A linear code over GF(2) or GF(4), kept with its generator matrix in
/// reduced row echelon form and a parity-check matrix.
///
/// Binary codes store their symbols as the GF(4) elements 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    base: BaseField,
    length: usize,
    generator: Vec<Vec<Gf4>>,
    parity: Vec<Vec<Gf4>>,
    designed: Option<DistanceBound>,
    exact: Option<usize>,
}

fn check_rows(base: BaseField, length: usize, rows: &[Vec<Gf4>]) -> Result<()> {
    for row in rows {
        check_len(length, row.len())?;
        if let Some(x) = row.iter().find(|&&x| !base.admits(x)) {
            return Err(Error::Range(format!("symbol {x} is not in {}", base.as_str())));
        }
    }
    Ok(())
}

impl LinearCode {
    /// The code spanned by `rows` (dependent rows are allowed).
    pub fn from_generator(base: BaseField, length: usize, rows: Vec<Vec<Gf4>>) -> Result<LinearCode> {
        check_rows(base, length, &rows)?;
        let mut generator = rows;
        linalg::rref(&mut generator);
        let mut parity = linalg::nullspace(&generator, length);
        linalg::rref(&mut parity);
        Ok(LinearCode { base, length, generator, parity, designed: None, exact: None })
    }

    /// The code {c : H·cᵀ = 0} over `base`.
    pub fn from_parity_check(base: BaseField, length: usize, rows: Vec<Vec<Gf4>>) -> Result<LinearCode> {
        check_rows(base, length, &rows)?;
        let generator = linalg::nullspace(&rows, length);
        LinearCode::from_generator(base, length, generator)
    }

    pub fn zero(base: BaseField, length: usize) -> LinearCode {
        LinearCode::from_generator(base, length, Vec::new()).expect("empty generator is valid")
    }

    pub fn with_designed_distance(mut self, bound: DistanceBound) -> LinearCode {
        self.designed = Some(bound);
        self
    }

    pub fn base(&self) -> BaseField {
        self.base
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn is_zero_code(&self) -> bool {
        self.generator.is_empty()
    }

    /// Generator rows in reduced row echelon form.
    pub fn generator(&self) -> &[Vec<Gf4>] {
        &self.generator
    }

    pub fn parity_check(&self) -> &[Vec<Gf4>] {
        &self.parity
    }

    pub fn designed_distance(&self) -> Option<DistanceBound> {
        self.designed
    }

    pub fn exact_distance(&self) -> Option<usize> {
        self.exact
    }

    /// Best known lower bound on the minimum distance; `None` for the zero code.
    /// A nonzero code with no recorded bound reports 1.
    pub fn distance_lower_bound(&self) -> Option<usize> {
        if self.is_zero_code() {
            return None;
        }
        Some(self.exact.or(self.designed.map(|b| b.value)).unwrap_or(1))
    }

    /// Computes the exact minimum distance by enumeration and records it.
    pub fn certify_distance(&mut self, budget: u64) -> Result<DistanceCertificate> {
        let cert = min_distance_bruteforce(self, budget)?;
        if let Some(b) = self.designed {
            assert!(cert.distance >= b.value, "certified distance below the recorded bound {b:?}");
        }
        self.exact = Some(cert.distance);
        Ok(cert)
    }

    /// Records an exact distance obtained elsewhere, checking it against a fresh enumeration.
    pub fn set_exact_distance(&mut self, d: usize, budget: u64) -> Result<()> {
        let cert = min_distance_bruteforce(self, budget)?;
        if cert.distance != d {
            return Err(Error::Construction(format!(
                "declared exact distance {d}, enumeration gives {}",
                cert.distance
            )));
        }
        self.exact = Some(d);
        Ok(())
    }

    /// message·G.
    pub fn encode(&self, message: &[Gf4]) -> Result<Vec<Gf4>> {
        check_len(self.dimension(), message.len())?;
        if let Some(x) = message.iter().find(|&&x| !self.base.admits(x)) {
            return Err(Error::Range(format!("message symbol {x} is not in {}", self.base.as_str())));
        }
        Ok(linalg::combine(message, &self.generator, self.length))
    }

    pub fn syndrome(&self, word: &[Gf4]) -> Vec<Gf4> {
        self.parity.iter().map(|h| linalg::dot(h, word)).collect()
    }

    pub fn contains(&self, word: &[Gf4]) -> bool {
        word.len() == self.length
            && word.iter().all(|&x| self.base.admits(x))
            && self.parity.iter().all(|h| linalg::dot(h, word).is_zero())
    }

    /// The code v·C for a nonzero constant v. Scaling a binary code by ω or ω²
    /// yields a quaternary code.
    pub fn scale(&self, v: Gf4) -> Result<LinearCode> {
        if v.is_zero() {
            return Err(Error::Range("scaling by zero".into()));
        }
        if v == Gf4::ONE {
            return Ok(self.clone());
        }
        let rows = self.generator.iter().map(|r| r.iter().map(|&x| v * x).collect()).collect();
        let mut out = LinearCode::from_generator(BaseField::Gf4, self.length, rows)?;
        out.designed = self.designed;
        out.exact = self.exact;
        Ok(out)
    }

    /// The GF(4)-span of a binary code; a quaternary code is returned unchanged.
    pub fn lift(&self) -> LinearCode {
        let mut out = self.clone();
        out.base = BaseField::Gf4;
        out
    }

    /// Same alphabet, length and span, ignoring distance metadata.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.base == other.base && self.length == other.length && self.generator == other.generator
    }
}

impl F2Span for LinearCode {
    fn length(&self) -> usize {
        self.length
    }

    fn f2_basis(&self) -> Vec<Vec<Gf4>> {
        match self.base {
            BaseField::Gf2 => self.generator.clone(),
            BaseField::Gf4 => {
                self.generator.iter().flat_map(|g| [g.clone(), g.iter().map(|&x| Gf4::OMEGA * x).collect()]).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::from_symbols;

    fn rows(r: &[&str]) -> Vec<Vec<Gf4>> {
        r.iter().map(|s| from_symbols(s).unwrap()).collect()
    }

    #[test]
    fn generator_and_parity_are_orthogonal() {
        let c = LinearCode::from_generator(BaseField::Gf4, 5, rows(&["12030", "01123", "11132"])).unwrap();
        for g in c.generator() {
            assert!(c.syndrome(g).iter().all(|x| x.is_zero()));
        }
        assert_eq!(c.dimension() + c.parity_check().len(), 5);
    }

    #[test]
    fn encode_is_systematic_on_pivots() {
        let c = LinearCode::from_generator(BaseField::Gf4, 3, rows(&["123"])).unwrap();
        assert_eq!(c.generator()[0], from_symbols("123").unwrap());
        assert_eq!(c.encode(&[Gf4::OMEGA]).unwrap(), from_symbols("231").unwrap());
        assert!(c.encode(&[]).is_err());
    }

    #[test]
    fn binary_codes_reject_quaternary_words() {
        let c = LinearCode::from_generator(BaseField::Gf2, 3, rows(&["111"])).unwrap();
        assert!(c.contains(&from_symbols("111").unwrap()));
        assert!(!c.contains(&from_symbols("222").unwrap()));
        assert!(c.lift().contains(&from_symbols("222").unwrap()));
        assert!(LinearCode::from_generator(BaseField::Gf2, 3, rows(&["121"])).is_err());
    }

    #[test]
    fn scaling_round_trip() {
        let c = LinearCode::from_generator(BaseField::Gf4, 4, rows(&["1231", "0112"])).unwrap();
        assert!(c.scale(Gf4::ONE).unwrap().same_code(&c));
        let back = c.scale(Gf4::OMEGA).unwrap().scale(Gf4::OMEGA2).unwrap();
        assert!(back.same_code(&c));
        assert!(c.scale(Gf4::ZERO).is_err());
    }
}
