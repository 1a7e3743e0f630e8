//! Decoding SR(C1, C2): the reduction decoder, an exhaustive oracle, and a
//! sum-rank error channel.
//!
//! The reduction decodes the x² coefficient in C1, then decodes
//! `y0 + β·e1` in C2 for each β ∈ {1, ω, ω²}. Evaluating an error block
//! `e0·x + e1·x²` at β cancels it whenever β = e0/e1, so some β removes at
//! least a third of the blocks where both coefficients are nonzero.

mod channel;

pub use channel::{sample_error, sample_error_with, simulate, tally_csv, SimulationConfig, TallyRow};

use crate::codes::{all_codewords, PackedWord};
use crate::error::{check_budget, check_len, Error, Result};
use crate::gf2m::{weight, Gf4};
use crate::hamdec::BoundedDistanceDecoder;
use crate::sumrank::{sumrank_weight_formula, SrWord, SumRankCode};

/// Block counts of an error word by which coefficients are nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ErrorProfile {
    /// Blocks with only the x coefficient nonzero.
    pub i1: usize,
    /// Blocks with only the x² coefficient nonzero.
    pub i2: usize,
    /// Blocks with both coefficients nonzero.
    pub i3: usize,
}

impl ErrorProfile {
    pub fn of(e: &SrWord) -> ErrorProfile {
        let mut p = ErrorProfile { i1: 0, i2: 0, i3: 0 };
        for (a0, a1) in e.coeff_x().iter().zip(e.coeff_x2()) {
            match (a0.is_zero(), a1.is_zero()) {
                (false, true) => p.i1 += 1,
                (true, false) => p.i2 += 1,
                (false, false) => p.i3 += 1,
                (true, true) => {}
            }
        }
        p
    }

    /// 2·i1 + 2·i2 + i3.
    pub fn sumrank_weight(&self) -> usize {
        2 * self.i1 + 2 * self.i2 + self.i3
    }
}

/// Coordinatewise value of the word at β: `coeff_x·β + coeff_x2·β²`.
pub fn evaluate_word(word: &SrWord, beta: Gf4) -> Result<Vec<Gf4>> {
    if beta.is_zero() {
        return Err(Error::Range("evaluation point must be nonzero".into()));
    }
    let b2 = beta * beta;
    Ok(word.coeff_x().iter().zip(word.coeff_x2()).map(|(&a0, &a1)| a0 * beta + a1 * b2).collect())
}

/// The β minimizing wt(β·e0 + β²·e1), first in the order 1, ω, ω², and that weight.
pub fn best_branch(error: &SrWord) -> (Gf4, usize) {
    Gf4::NONZERO
        .iter()
        .map(|&b| (b, weight(&evaluate_word(error, b).expect("β is nonzero"))))
        .min_by_key(|&(_, w)| w)
        .expect("three branches")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SrStatus {
    Success,
    C1Failure,
    AllBranchesFailed,
    Ambiguous,
}

impl SrStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SrStatus::Success => "success",
            SrStatus::C1Failure => "c1_failure",
            SrStatus::AllBranchesFailed => "all_branches_failed",
            SrStatus::Ambiguous => "ambiguous",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchOutcome {
    /// The C2 decoder reported failure.
    DecoderFailed,
    /// A verified candidate with the given sum-rank error weight.
    Candidate { weight: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchReport {
    pub beta: Gf4,
    pub outcome: BranchOutcome,
}

/// Outcome of a sum-rank decode. Unless `status` is success, `codeword` is
/// the received word and `error` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrDecodeResult {
    pub codeword: SrWord,
    pub error: SrWord,
    pub succeeded_branch: Option<Gf4>,
    pub branches: Vec<BranchReport>,
    pub status: SrStatus,
}

impl SrDecodeResult {
    pub fn is_success(&self) -> bool {
        self.status == SrStatus::Success
    }

    fn failed(received: &SrWord, status: SrStatus, branches: Vec<BranchReport>) -> SrDecodeResult {
        SrDecodeResult {
            codeword: received.clone(),
            error: SrWord::zeros(received.len()),
            succeeded_branch: None,
            branches,
            status,
        }
    }
}

/// Verifies that `dec1`/`dec2` can decode SR(C1, C2) up to ⌊(d_sr − 1)/2⌋.
pub fn check_decoder_config(
    code: &SumRankCode,
    dec1: &dyn BoundedDistanceDecoder,
    dec2: &dyn BoundedDistanceDecoder,
    d_sr: usize,
) -> Result<()> {
    let (Some(c1), Some(c2)) = (code.c1().as_linear(), code.c2().as_linear()) else {
        return Err(Error::Config("reduction decoding needs linear components".into()));
    };
    if !dec1.code().same_code(c1) {
        return Err(Error::Config("the first decoder does not decode C1".into()));
    }
    if !dec2.code().same_code(c2) {
        return Err(Error::Config("the second decoder does not decode C2".into()));
    }
    if d_sr == 0 {
        return Err(Error::Config("d_sr must be positive".into()));
    }
    if !code.readiness(d_sr).relaxed {
        return Err(Error::Config(format!("components do not satisfy d1 ≥ {d_sr} and 3·d2 ≥ {}", 2 * d_sr)));
    }
    let t1 = (d_sr - 1) / 2;
    if dec1.radius() < t1 {
        return Err(Error::Config(format!("first decoder radius {} below {t1}", dec1.radius())));
    }
    let t2 = ((2 * d_sr).div_ceil(3) - 1) / 2;
    if dec2.radius() < t2 {
        return Err(Error::Config(format!("second decoder radius {} below {t2}", dec2.radius())));
    }
    Ok(())
}

/// Decodes `received` up to ⌊(d_sr − 1)/2⌋ sum-rank errors with one call to
/// `dec1` and three calls to `dec2`.
pub fn sr_decode(
    code: &SumRankCode,
    dec1: &dyn BoundedDistanceDecoder,
    dec2: &dyn BoundedDistanceDecoder,
    received: &SrWord,
    d_sr: usize,
) -> Result<SrDecodeResult> {
    check_decoder_config(code, dec1, dec2, d_sr)?;
    check_len(code.length(), received.len())?;
    let radius = (d_sr - 1) / 2;
    let first = dec1.decode(received.coeff_x2())?;
    if !first.is_success() {
        return Ok(SrDecodeResult::failed(received, SrStatus::C1Failure, Vec::new()));
    }
    let (c1, e1) = (first.codeword, first.error);
    let y0 = received.coeff_x();
    let c2_code = code.c2();

    let mut branches = Vec::with_capacity(3);
    let mut candidates: Vec<(usize, Gf4, Vec<Gf4>, Vec<Gf4>)> = Vec::new();
    for beta in Gf4::NONZERO {
        // β^(-1)·(value at β of y − c1·x²) = y0 + β·e1
        let input: Vec<Gf4> = y0.iter().zip(&e1).map(|(&a, &e)| a + beta * e).collect();
        let out = dec2.decode(&input)?;
        if !out.is_success() || !c2_code.contains(&out.codeword) {
            branches.push(BranchReport { beta, outcome: BranchOutcome::DecoderFailed });
            continue;
        }
        let c2 = out.codeword;
        let e0: Vec<Gf4> = y0.iter().zip(&c2).map(|(&a, &c)| a - c).collect();
        let w = sumrank_weight_formula(&e1, &e0)?;
        branches.push(BranchReport { beta, outcome: BranchOutcome::Candidate { weight: w } });
        candidates.push((w, beta, c2, e0));
    }
    let Some(best) = candidates.iter().map(|c| c.0).min() else {
        return Ok(SrDecodeResult::failed(received, SrStatus::AllBranchesFailed, branches));
    };
    let mut at_min = candidates.into_iter().filter(|c| c.0 == best);
    let (_, beta, c2, e0) = at_min.next().expect("minimum is attained");
    if at_min.any(|c| c.2 != c2) {
        return Ok(SrDecodeResult::failed(received, SrStatus::Ambiguous, branches));
    }
    if best > radius {
        return Ok(SrDecodeResult::failed(received, SrStatus::AllBranchesFailed, branches));
    }
    Ok(SrDecodeResult {
        codeword: SrWord::new(c2, c1)?,
        error: SrWord::new(e0, e1)?,
        succeeded_branch: Some(beta),
        branches,
        status: SrStatus::Success,
    })
}

fn formula_distance(d1: &PackedWord, d0: &PackedWord) -> usize {
    d1.support()
        .zip(d0.support())
        .map(|(s1, s0)| (2 * s1.count_ones() + 2 * s0.count_ones() - 3 * (s1 & s0).count_ones()) as usize)
        .sum()
}

/// Exhaustive nearest codeword in the sum-rank metric, with no radius limit.
/// Equally close distinct codewords give an ambiguous result.
pub fn sr_oracle_decode(code: &SumRankCode, received: &SrWord, budget: u64) -> Result<SrDecodeResult> {
    check_len(code.length(), received.len())?;
    check_budget(code.f2_dimension(), budget)?;
    let n = code.length();
    let y1 = PackedWord::from_symbols(received.coeff_x2());
    let y0 = PackedWord::from_symbols(received.coeff_x());
    let diffs = |c: &crate::sumrank::Component, y: &PackedWord| -> Result<Vec<PackedWord>> {
        Ok(all_codewords(c, budget)?
            .into_iter()
            .map(|(_, mut w)| {
                w.xor_assign(y);
                w
            })
            .collect())
    };
    let d1 = diffs(code.c1(), &y1)?;
    let d0 = diffs(code.c2(), &y0)?;
    let mut best = (usize::MAX, 0, 0);
    let mut tie = false;
    for (i, a) in d1.iter().enumerate() {
        for (j, b) in d0.iter().enumerate() {
            let w = formula_distance(a, b);
            if w < best.0 {
                best = (w, i, j);
                tie = false;
            } else if w == best.0 {
                tie = true;
            }
        }
    }
    if tie {
        return Ok(SrDecodeResult::failed(received, SrStatus::Ambiguous, Vec::new()));
    }
    let error = SrWord::new(d0[best.2].to_symbols(n), d1[best.1].to_symbols(n))?;
    let codeword = received.add(&error)?;
    Ok(SrDecodeResult { codeword, error, succeeded_branch: None, branches: Vec::new(), status: SrStatus::Success })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_examples() {
        let w = SrWord::new(vec![Gf4::OMEGA, Gf4::ONE], vec![Gf4::OMEGA, Gf4::ZERO]).unwrap();
        let at1 = evaluate_word(&w, Gf4::ONE).unwrap();
        assert_eq!(at1, vec![Gf4::ZERO, Gf4::ONE]);
        assert!(evaluate_word(&w, Gf4::ZERO).is_err());
        for b in Gf4::NONZERO {
            assert!(evaluate_word(&SrWord::zeros(3), b).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn profile_weight() {
        let e = SrWord::new(vec![Gf4::ONE, Gf4::ZERO, Gf4::OMEGA], vec![Gf4::ZERO, Gf4::OMEGA2, Gf4::ONE]).unwrap();
        let p = ErrorProfile::of(&e);
        assert_eq!((p.i1, p.i2, p.i3), (1, 1, 1));
        assert_eq!(p.sumrank_weight(), crate::sumrank::sumrank_weight(&e));
    }
}
