use super::packed::{for_each_in_span, PackedWord};
use crate::error::{check_budget, Error, Result};
use crate::gf2m::Gf4;

/// Default cap on the number of codewords an exhaustive search may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

/// A code viewed as a GF(2)-vector space of GF(4) words.
pub trait F2Span {
    fn length(&self) -> usize;
    /// A GF(2)-basis of the code; the first vectors select the codeword
    /// in encoding order.
    fn f2_basis(&self) -> Vec<Vec<Gf4>>;

    fn f2_dimension(&self) -> usize {
        self.f2_basis().len()
    }
}

/// An exact minimum distance together with a codeword attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceCertificate {
    pub distance: usize,
    pub witness: Vec<Gf4>,
}

/// Exact minimum Hamming weight over the nonzero codewords.
///
/// The enumeration order is fixed, so the witness is reproducible.
pub fn min_distance_bruteforce<C: F2Span + ?Sized>(code: &C, budget: u64) -> Result<DistanceCertificate> {
    let basis = code.f2_basis();
    if basis.is_empty() {
        return Err(Error::Undefined("minimum distance of the zero code".into()));
    }
    check_budget(basis.len(), budget)?;
    let n = code.length();
    let packed: Vec<PackedWord> = basis.iter().map(|b| PackedWord::from_symbols(b)).collect();
    let mut best: Option<(usize, PackedWord)> = None;
    for_each_in_span(&packed, n, |idx, w| {
        if idx == 0 {
            return;
        }
        let wt = w.weight();
        if best.as_ref().is_none_or(|(b, _)| wt < *b) {
            best = Some((wt, w.clone()));
        }
    });
    let (distance, w) = best.expect("nonzero span has nonzero words");
    Ok(DistanceCertificate { distance, witness: w.to_symbols(n) })
}

/// Every codeword, in enumeration order, with its GF(2) coefficient index.
pub fn all_codewords<C: F2Span + ?Sized>(code: &C, budget: u64) -> Result<Vec<(u64, PackedWord)>> {
    let basis = code.f2_basis();
    check_budget(basis.len(), budget)?;
    let packed: Vec<PackedWord> = basis.iter().map(|b| PackedWord::from_symbols(b)).collect();
    let mut out = Vec::with_capacity(1 << basis.len());
    for_each_in_span(&packed, code.length(), |idx, w| out.push((idx, w.clone())));
    Ok(out)
}
