use std::collections::HashSet;
use std::sync::Arc;

use super::linear::{BaseField, DistanceBound, DistanceTag, LinearCode};
use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldContext, Poly, SubfieldCoordinates};

/// A Goppa code Γ(L, G) over GF(2) or GF(4) with locators in GF(2^m).
#[derive(Clone, Debug)]
pub struct GoppaCode {
    code: LinearCode,
    field: Arc<FieldContext>,
    locators: Vec<Fe>,
    goppa_poly: Poly,
    squarefree: bool,
}

/// (z − a)^(-1) mod G, for G(a) ≠ 0.
///
/// Synthetic division gives G(z) − G(a) = (z − a)·q(z), so the inverse is q(z)/G(a).
pub fn inverse_linear_mod(field: &FieldContext, g: &Poly, a: Fe) -> Result<Poly> {
    let r = g.degree().ok_or(Error::DivisionByZero)?;
    let ga = g.eval(field, a);
    let ga_inv = field.inv(ga)?;
    let mut q = vec![Fe::ZERO; r];
    let mut carry = Fe::ZERO;
    for k in (1..=r).rev() {
        carry = g.coeff(k) + field.mul(a, carry);
        q[k - 1] = carry;
    }
    Ok(Poly::from_coeffs(q).scale(field, ga_inv))
}

/// All field elements that are not roots of `g`, in increasing bitmask order.
pub fn default_locators(field: &FieldContext, g: &Poly) -> Vec<Fe> {
    field.elements().filter(|&a| !g.eval(field, a).is_zero()).collect()
}

/// The first monic irreducible polynomial of the given degree with nonzero
/// constant term, in lexicographic order of the coefficients c_0, c_1, ….
pub fn first_irreducible(field: &FieldContext, degree: usize) -> Result<Poly> {
    if degree == 0 {
        return Err(Error::Range("Goppa polynomial degree must be positive".into()));
    }
    let q = field.size() as u128;
    let total = q.checked_pow(degree as u32).unwrap_or(u128::MAX);
    for idx in 0..total {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut rest = idx;
        for _ in 0..degree {
            coeffs.push(Fe((rest % q) as u32));
            rest /= q;
        }
        if coeffs[0].is_zero() {
            continue;
        }
        coeffs.push(Fe::ONE);
        let p = Poly::from_coeffs(coeffs);
        if p.is_irreducible(field)? {
            return Ok(p);
        }
    }
    Err(Error::Construction(format!("no irreducible polynomial of degree {degree}")))
}

pub fn goppa_build(field: Arc<FieldContext>, locators: Vec<Fe>, g: Poly, base: BaseField) -> Result<GoppaCode> {
    let r = match g.degree() {
        Some(r) if r >= 1 => r,
        _ => return Err(Error::Construction("Goppa polynomial must have positive degree".into())),
    };
    if locators.is_empty() {
        return Err(Error::Construction("empty locator list".into()));
    }
    let mut seen = HashSet::new();
    for &a in &locators {
        field.element(a.0)?;
        if !seen.insert(a) {
            return Err(Error::Construction(format!("duplicate locator {a:?}")));
        }
        if g.eval(&field, a).is_zero() {
            return Err(Error::Construction(format!("locator {a:?} is a root of the Goppa polynomial")));
        }
    }
    let coords = SubfieldCoordinates::new(&field, base.f2_degree() as u32)?;
    let per = coords.count();
    let n = locators.len();
    let mut h = vec![vec![Default::default(); n]; r * per];
    for (i, &a) in locators.iter().enumerate() {
        let inv = inverse_linear_mod(&field, &g, a)?;
        for k in 0..r {
            for (t, c) in coords.coordinates(inv.coeff(k)).into_iter().enumerate() {
                h[k * per + t][i] = c;
            }
        }
    }
    let mut code = LinearCode::from_parity_check(base, n, h)?;
    let squarefree = g.is_squarefree(&field)?;
    if !code.is_zero_code() {
        let bound = if base == BaseField::Gf2 && squarefree {
            DistanceBound::new(2 * r + 1, DistanceTag::SeparableGoppaBound)
        } else {
            DistanceBound::new(r + 1, DistanceTag::GoppaBound)
        };
        code = code.with_designed_distance(bound);
    }
    Ok(GoppaCode { code, field, locators, goppa_poly: g, squarefree })
}

impl GoppaCode {
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn into_code(self) -> LinearCode {
        self.code
    }

    pub fn field(&self) -> &Arc<FieldContext> {
        &self.field
    }

    pub fn locators(&self) -> &[Fe] {
        &self.locators
    }

    pub fn goppa_poly(&self) -> &Poly {
        &self.goppa_poly
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    /// Σ c_i/(z − α_i) mod G(z), computed in the locator field.
    pub fn syndrome_poly(&self, word: &[crate::gf2m::Gf4]) -> Result<Poly> {
        let emb = match self.code.base() {
            BaseField::Gf2 => [Fe::ZERO, Fe::ONE, Fe::ZERO, Fe::ZERO],
            BaseField::Gf4 => self.field.gf4_image()?,
        };
        let mut s = Poly::zero();
        for (&c, &a) in word.iter().zip(&self.locators) {
            if !c.is_zero() {
                let inv = inverse_linear_mod(&self.field, &self.goppa_poly, a)?;
                s = s.add(&inv.scale(&self.field, emb[c.symbol() as usize]));
            }
        }
        Ok(s)
    }
}
