use std::sync::Arc;

use super::cyclotomic::DefiningSet;
use super::linear::{BaseField, DistanceBound, DistanceTag, LinearCode};
use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldContext, Gf4, Poly};

/// Largest h for which GF(4^h) is available as a locator field.
pub const MAX_LOCATOR_DEGREE: u32 = 10;

/// How the zero set of a BCH code is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BchSpec {
    DefiningSet(DefiningSet),
    /// The union C_b ∪ … ∪ C_(b+δ−2).
    Designed {
        b: usize,
        delta: usize,
    },
}

/// A quaternary cyclic code of length n | 4^h − 1 with a known zero set.
#[derive(Clone, Debug)]
pub struct BchCode {
    code: LinearCode,
    defining_set: DefiningSet,
    field: Arc<FieldContext>,
    alpha: Fe,
    run: (usize, usize),
    generator_poly: Vec<Gf4>,
}

/// Smallest h ≤ 10 with n | 4^h − 1.
pub fn locator_degree(n: usize) -> Result<u32> {
    if n == 0 {
        return Err(Error::Range("code length must be positive".into()));
    }
    (1..=MAX_LOCATOR_DEGREE)
        .find(|&h| ((1u64 << (2 * h)) - 1).is_multiple_of(n as u64))
        .ok_or_else(|| Error::Range(format!("{n} divides no 4^h − 1 with h ≤ {MAX_LOCATOR_DEGREE}")))
}

pub fn bch_build(n: usize, spec: BchSpec) -> Result<BchCode> {
    let h = locator_degree(n)?;
    let defining_set = match spec {
        BchSpec::DefiningSet(t) => {
            if t.modulus() != n || t.base() != 4 {
                return Err(Error::Construction(format!(
                    "defining set is modulo {} in base {}, expected modulo {n} in base 4",
                    t.modulus(),
                    t.base()
                )));
            }
            t
        }
        BchSpec::Designed { b, delta } => DefiningSet::designed(4, n, b, delta)?,
    };
    if !defining_set.is_closed() {
        return Err(Error::Construction("defining set is not closed under multiplication by 4".into()));
    }
    let field = FieldContext::shared(2 * h)?;
    let alpha = field.exp(field.order() / n);
    let mut g = Poly::one();
    for j in defining_set.iter() {
        let root = field.exp(field.log(alpha).expect("alpha is nonzero") * j);
        g = g.mul(&field, &Poly::from_coeffs(vec![root, Fe::ONE]));
    }
    let generator_poly: Vec<Gf4> = g
        .coeffs()
        .iter()
        .map(|&c| {
            field
                .subfield_project(c)
                .expect("locator field has even degree")
                .expect("a closed defining set gives GF(4) coefficients")
        })
        .collect();
    let k = n - defining_set.len();
    let rows = (0..k)
        .map(|i| {
            let mut row = vec![Gf4::ZERO; n];
            row[i..i + generator_poly.len()].copy_from_slice(&generator_poly);
            row
        })
        .collect();
    let mut code = LinearCode::from_generator(BaseField::Gf4, n, rows)?;
    debug_assert_eq!(code.dimension(), k);
    let run = defining_set.longest_run();
    if k > 0 {
        code = code.with_designed_distance(DistanceBound::new(run.1 + 1, DistanceTag::BchBound));
    }
    Ok(BchCode { code, defining_set, field, alpha, run, generator_poly })
}

impl BchCode {
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn code_mut(&mut self) -> &mut LinearCode {
        &mut self.code
    }

    pub fn into_code(self) -> LinearCode {
        self.code
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn field(&self) -> &Arc<FieldContext> {
        &self.field
    }

    /// The primitive n-th root of unity α = g^((4^h − 1)/n).
    pub fn alpha(&self) -> Fe {
        self.alpha
    }

    /// The longest consecutive run `(b, length)` in the defining set.
    pub fn run(&self) -> (usize, usize) {
        self.run
    }

    /// Coefficients of g(x), lowest degree first.
    pub fn generator_poly(&self) -> &[Gf4] {
        &self.generator_poly
    }

    /// c(α^j) for a word c, evaluated in the locator field.
    pub fn evaluate(&self, word: &[Gf4], j: usize) -> Fe {
        let f = &self.field;
        let x = f.exp(f.log(self.alpha).expect("alpha is nonzero") * (j % self.code.length()));
        let emb = f.gf4_image().expect("locator field has even degree");
        word.iter().rev().fold(Fe::ZERO, |acc, &c| f.mul(acc, x) + emb[c.symbol() as usize])
    }
}

/// Lower bound on the GF(2) dimension of SR(C1, C2) for narrow-sense BCH
/// components of length 4^m − 1 with d2 = d1/2: 2·(2·4^m − 2 − m·(3·d1/2 − 2)).
pub fn bch_dim_lower_bound(m: u32, d1: usize) -> Result<i64> {
    if !d1.is_multiple_of(2) {
        return Err(Error::Range(format!("d1 = {d1} must be even")));
    }
    let q = 1i64 << (2 * m);
    Ok(2 * (2 * q - 2 - m as i64 * (3 * d1 as i64 / 2 - 2)))
}

/// A smallest defining set (so a largest dimension) whose BCH
/// bound is at least `d`: the closure of the cheapest window of d − 1
/// consecutive residues. Ties go to the smallest window start.
pub fn best_defining_set(n: usize, d: usize) -> Result<DefiningSet> {
    if d <= 1 {
        return DefiningSet::empty(4, n);
    }
    if d > n {
        return DefiningSet::from_exponents(4, n, 0..n);
    }
    let mut best: Option<DefiningSet> = None;
    for b in 0..n {
        let t = DefiningSet::designed(4, n, b, d)?;
        if best.as_ref().is_none_or(|s| t.len() < s.len()) {
            best = Some(t);
        }
    }
    Ok(best.expect("n > 0"))
}
