use rayon::prelude::*;

use super::word::SrWord;
use crate::codes::{all_codewords, AdditiveCode, BaseField, F2Span, LinearCode, PackedWord};
use crate::error::{check_budget, check_len, Error, Result};
use crate::gf2m::Gf4;

/// A component code of SR(C1, C2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Linear(LinearCode),
    Additive(AdditiveCode),
}

impl From<LinearCode> for Component {
    fn from(c: LinearCode) -> Component {
        Component::Linear(c)
    }
}

impl From<AdditiveCode> for Component {
    fn from(c: AdditiveCode) -> Component {
        Component::Additive(c)
    }
}

impl Component {
    pub fn length(&self) -> usize {
        match self {
            Component::Linear(c) => c.length(),
            Component::Additive(c) => c.length(),
        }
    }

    pub fn f2_dimension(&self) -> usize {
        match self {
            Component::Linear(c) => c.f2_dimension(),
            Component::Additive(c) => c.f2_dimension(),
        }
    }

    pub fn is_zero_code(&self) -> bool {
        self.f2_dimension() == 0
    }

    /// `None` for the zero code, whose distance is treated as infinite.
    pub fn distance_lower_bound(&self) -> Option<usize> {
        match self {
            Component::Linear(c) => c.distance_lower_bound(),
            Component::Additive(c) => c.distance_lower_bound(),
        }
    }

    pub fn contains(&self, word: &[Gf4]) -> bool {
        match self {
            Component::Linear(c) => c.contains(word),
            Component::Additive(c) => c.contains(word),
        }
    }

    pub fn as_linear(&self) -> Option<&LinearCode> {
        match self {
            Component::Linear(c) => Some(c),
            Component::Additive(_) => None,
        }
    }
}

impl F2Span for Component {
    fn length(&self) -> usize {
        Component::length(self)
    }

    fn f2_basis(&self) -> Vec<Vec<Gf4>> {
        match self {
            Component::Linear(c) => c.f2_basis(),
            Component::Additive(c) => c.f2_basis(),
        }
    }
}

/// Which decoding preconditions a target distance d_sr satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Readiness {
    /// d1 ≥ d_sr and 3·d2 ≥ 2·d_sr.
    pub relaxed: bool,
    /// d1 = d_sr and 3·d2 ≥ 2·d_sr.
    pub strict: bool,
}

/// The binary sum-rank code SR(C1, C2) = {a2·x + a1·x² : a1 ∈ C1, a2 ∈ C2}.
///
/// Binary linear components are replaced by their GF(4)-span.
#[derive(Clone, Debug)]
pub struct SumRankCode {
    c1: Component,
    c2: Component,
    basis1: Vec<Vec<Gf4>>,
    basis2: Vec<Vec<Gf4>>,
    d_sr_lower: Option<usize>,
    d_sr_exact: Option<usize>,
}

const UNBOUNDED: usize = usize::MAX / 4;

fn lift(c: Component) -> Component {
    match c {
        Component::Linear(l) if l.base() == BaseField::Gf2 => Component::Linear(l.lift()),
        other => other,
    }
}

impl SumRankCode {
    pub fn new(c1: impl Into<Component>, c2: impl Into<Component>) -> Result<SumRankCode> {
        let (c1, c2) = (lift(c1.into()), lift(c2.into()));
        check_len(c1.length(), c2.length())?;
        let d1 = c1.distance_lower_bound().unwrap_or(UNBOUNDED);
        let d2 = c2.distance_lower_bound().unwrap_or(UNBOUNDED);
        let lower = (d1.min(2 * d2)).max(d2.min(2 * d1));
        let d_sr_lower = (lower < UNBOUNDED).then_some(lower);
        let (basis1, basis2) = (c1.f2_basis(), c2.f2_basis());
        Ok(SumRankCode { c1, c2, basis1, basis2, d_sr_lower, d_sr_exact: None })
    }

    /// The code in the x² slot.
    pub fn c1(&self) -> &Component {
        &self.c1
    }

    /// The code in the x slot.
    pub fn c2(&self) -> &Component {
        &self.c2
    }

    pub fn length(&self) -> usize {
        self.c1.length()
    }

    pub fn f2_dimension(&self) -> usize {
        self.basis1.len() + self.basis2.len()
    }

    /// max{min{d1, 2·d2}, min{d2, 2·d1}}, with the zero code counting as
    /// infinitely distant; `None` for the zero sum-rank code.
    pub fn d_sr_lower(&self) -> Option<usize> {
        self.d_sr_lower
    }

    pub fn d_sr_exact(&self) -> Option<usize> {
        self.d_sr_exact
    }

    /// Component distance bounds (d1, d2); `None` marks a zero component.
    pub fn component_distances(&self) -> (Option<usize>, Option<usize>) {
        (self.c1.distance_lower_bound(), self.c2.distance_lower_bound())
    }

    /// Checks d1 ≥ d_sr (or = d_sr) and d2 ≥ 2·d_sr/3 for a target d_sr.
    pub fn readiness(&self, d_sr: usize) -> Readiness {
        let d1 = self.c1.distance_lower_bound().unwrap_or(UNBOUNDED);
        let d2 = self.c2.distance_lower_bound().unwrap_or(UNBOUNDED);
        let d2_ok = 3 * d2 >= 2 * d_sr;
        Readiness { relaxed: d1 >= d_sr && d2_ok, strict: d1 == d_sr && d2_ok }
    }

    /// Whether the reduction decoder applies at the target d_sr_lower.
    pub fn decoder_ready(&self) -> bool {
        self.d_sr_lower.is_some_and(|d| self.readiness(d).relaxed)
    }

    /// The largest target d ≤ d_sr_lower meeting the decoder preconditions.
    pub fn decodable_distance(&self) -> Option<usize> {
        (1..=self.d_sr_lower?).rev().find(|&d| self.readiness(d).relaxed)
    }

    /// Computes the exact minimum sum-rank distance and records it.
    pub fn certify_distance(&mut self, budget: u64) -> Result<SrDistanceCertificate> {
        let cert = sr_min_distance_bruteforce(self, budget)?;
        if let Some(lower) = self.d_sr_lower {
            assert!(cert.distance >= lower, "certified distance below the lower bound");
        }
        self.d_sr_exact = Some(cert.distance);
        Ok(cert)
    }

    pub fn contains(&self, word: &SrWord) -> bool {
        word.len() == self.length() && self.c1.contains(word.coeff_x2()) && self.c2.contains(word.coeff_x())
    }

    pub(crate) fn bases(&self) -> (&[Vec<Gf4>], &[Vec<Gf4>]) {
        (&self.basis1, &self.basis2)
    }
}

fn combine(bits: &[bool], basis: &[Vec<Gf4>], n: usize) -> Vec<Gf4> {
    let mut out = vec![Gf4::ZERO; n];
    for (&b, row) in bits.iter().zip(basis) {
        if b {
            for (o, &x) in out.iter_mut().zip(row) {
                *o += x;
            }
        }
    }
    out
}

/// Encodes f2_dimension bits: the first f2_dim(C1) bits select the x²
/// coefficient, the rest the x coefficient. A quaternary message symbol
/// m = b0 + b1·ω of a linear component occupies two consecutive bits.
pub fn sr_encode(code: &SumRankCode, bits: &[bool]) -> Result<SrWord> {
    check_len(code.f2_dimension(), bits.len())?;
    let (b1, b2) = code.bases();
    let n = code.length();
    let (m1, m2) = bits.split_at(b1.len());
    SrWord::new(combine(m2, b2, n), combine(m1, b1, n))
}

/// An exact minimum sum-rank distance with a codeword attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrDistanceCertificate {
    pub distance: usize,
    pub witness: SrWord,
}

fn formula_weight(a1: &PackedWord, a2: &PackedWord) -> usize {
    a1.support()
        .zip(a2.support())
        .map(|(s1, s2)| (2 * s1.count_ones() + 2 * s2.count_ones() - 3 * (s1 & s2).count_ones()) as usize)
        .sum()
}

/// Exact minimum sum-rank weight over all nonzero codewords, using the closed
/// weight formula on packed supports. The witness is the first minimum in a
/// fixed enumeration order.
pub fn sr_min_distance_bruteforce(code: &SumRankCode, budget: u64) -> Result<SrDistanceCertificate> {
    if code.f2_dimension() == 0 {
        return Err(Error::Undefined("minimum distance of the zero code".into()));
    }
    check_budget(code.f2_dimension(), budget)?;
    let n = code.length();
    let w1: Vec<PackedWord> = all_codewords(&code.c1, budget)?.into_iter().map(|(_, w)| w).collect();
    let w2: Vec<PackedWord> = all_codewords(&code.c2, budget)?.into_iter().map(|(_, w)| w).collect();
    let (distance, i, j) = w1
        .par_iter()
        .enumerate()
        .filter_map(|(i, a1)| {
            w2.iter().enumerate().filter(|&(j, _)| i != 0 || j != 0).map(|(j, a2)| (formula_weight(a1, a2), i, j)).min()
        })
        .min()
        .expect("nonzero code has nonzero words");
    let witness = SrWord::new(w2[j].to_symbols(n), w1[i].to_symbols(n))?;
    Ok(SrDistanceCertificate { distance, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{DistanceBound, DistanceTag};
    use crate::gf2m::from_symbols;

    fn declared(rows: &[&str], d: usize) -> LinearCode {
        let rows: Vec<Vec<Gf4>> = rows.iter().map(|r| from_symbols(r).unwrap()).collect();
        LinearCode::from_generator(BaseField::Gf4, rows[0].len(), rows)
            .unwrap()
            .with_designed_distance(DistanceBound::new(d, DistanceTag::Declared))
    }

    #[test]
    fn decodable_distance_backs_off_until_ready() {
        // d1 = 8, d2 = 4: the lower bound is 8 but 3·d2 ≥ 2·d only up to d = 6.
        let c1 = declared(&["11111111"], 8);
        let c2 = declared(&["11110000", "00001111"], 4);
        let code = SumRankCode::new(c1, c2).unwrap();
        assert_eq!(code.d_sr_lower(), Some(8));
        assert!(!code.decoder_ready());
        assert_eq!(code.decodable_distance(), Some(6));
    }

    #[test]
    fn zero_components_count_as_unbounded() {
        let c2 = declared(&["11110000", "00001111"], 4);
        let code = SumRankCode::new(LinearCode::zero(BaseField::Gf4, 8), c2).unwrap();
        assert_eq!(code.d_sr_lower(), Some(8));
        let empty = SumRankCode::new(LinearCode::zero(BaseField::Gf4, 8), LinearCode::zero(BaseField::Gf4, 8)).unwrap();
        assert_eq!(empty.d_sr_lower(), None);
        assert_eq!(empty.decodable_distance(), None);
    }
}
