use super::field::{Fe, FieldContext};
use crate::error::{Error, Result};

/// A univariate polynomial over GF(2^m), lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Fe>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { coeffs: vec![Fe::ONE] }
    }

    pub fn constant(c: Fe) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// c·x^k.
    pub fn monomial(c: Fe, k: usize) -> Poly {
        let mut coeffs = vec![Fe::ZERO; k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` standing for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, f: &FieldContext, c: Fe) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &FieldContext, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += f.mul(a, b);
            }
        }
        Poly::from_coeffs(out)
    }

    /// Quotient and remainder of division by `d`.
    pub fn divrem(&self, f: &FieldContext, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(d.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k];
            if c.is_zero() {
                continue;
            }
            let q = f.mul(c, lead_inv);
            quot[k - dd] = q;
            for (j, &dj) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] += f.mul(q, dj);
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, f: &FieldContext, d: &Poly) -> Result<Poly> {
        Ok(self.divrem(f, d)?.1)
    }

    /// Horner evaluation.
    pub fn eval(&self, f: &FieldContext, x: Fe) -> Fe {
        self.coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| f.mul(acc, x) + c)
    }

    /// Formal derivative; in characteristic 2 only odd-degree terms survive.
    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| if i % 2 == 1 { c } else { Fe::ZERO }).collect(),
        )
    }

    pub fn monic(&self, f: &FieldContext) -> Result<Poly> {
        Ok(self.scale(f, f.inv(self.leading())?))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, f: &FieldContext, other: &Poly) -> Result<Poly> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic(f)
        }
    }

    /// Truncation modulo x^n.
    pub fn truncate(&self, n: usize) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().take(n).copied().collect())
    }

    pub fn is_squarefree(&self, f: &FieldContext) -> Result<bool> {
        if self.degree().unwrap_or(0) == 0 {
            return Ok(true);
        }
        Ok(self.gcd(f, &self.derivative())?.degree() == Some(0))
    }

    /// Irreducibility over the coefficient field GF(Q), Q = 2^m, by Rabin's test.
    pub fn is_irreducible(&self, f: &FieldContext) -> Result<bool> {
        let r = match self.degree() {
            None | Some(0) => return Ok(false),
            Some(1) => return Ok(true),
            Some(r) => r,
        };
        let modulus = self.monic(f)?;
        let x = Poly::monomial(Fe::ONE, 1);
        // frob^j(x) = x^(Q^j) mod self, for j = 0..=r
        let mut powers = vec![x.clone()];
        let mut cur = x.clone();
        for _ in 0..r {
            for _ in 0..f.degree() {
                cur = cur.mul(f, &cur).rem(f, &modulus)?;
            }
            powers.push(cur.clone());
        }
        if powers[r] != x {
            return Ok(false);
        }
        for p in super::binpoly::prime_factors(r as u64) {
            let g = powers[r / p as usize].add(&x).gcd(f, &modulus)?;
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Extended Euclid on the remainder sequence of `(f, g)`.
///
/// Starting from `r = g` (with `u = 0`, `v = 1`), returns the first remainder
/// `r = u·f + v·g` whose degree is below `stop_degree`; the zero polynomial
/// counts as having degree below everything.
pub fn poly_eea(field: &FieldContext, f: &Poly, g: &Poly, stop_degree: usize) -> Result<(Poly, Poly, Poly)> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (mut r0, mut u0, mut v0) = (f.clone(), Poly::one(), Poly::zero());
    let (mut r1, mut u1, mut v1) = (g.clone(), Poly::zero(), Poly::one());
    loop {
        if r1.degree().is_none_or(|d| d < stop_degree) {
            return Ok((r1, u1, v1));
        }
        let (q, r2) = r0.divrem(field, &r1)?;
        let u2 = u0.add(&q.mul(field, &u1));
        let v2 = v0.add(&q.mul(field, &v1));
        (r0, u0, v0) = (r1, u1, v1);
        (r1, u1, v1) = (r2, u2, v2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u32]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&x| Fe(x)).collect())
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn gcd_over_gf2() {
        let f = FieldContext::new(1, None).unwrap();
        // x² + x and x + 1
        assert_eq!(p(&[0, 1, 1]).gcd(&f, &p(&[1, 1])).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn eea_stops_immediately() {
        let f = FieldContext::new(4, None).unwrap();
        let a = p(&[3, 0, 5, 1]);
        let b = p(&[7, 2, 1]);
        let (r, u, v) = poly_eea(&f, &a, &b, 3).unwrap();
        assert_eq!((r, u, v), (b, Poly::zero(), Poly::one()));
        assert_eq!(poly_eea(&f, &a, &Poly::zero(), 1), Err(Error::DivisionByZero));
    }

    #[test]
    fn divrem_by_zero_fails() {
        let f = FieldContext::new(3, None).unwrap();
        assert_eq!(p(&[1, 1]).rem(&f, &Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn weight_one_key_equation() {
        // Goppa setting with deg G = 2 over GF(16): a single error at locator a
        // gives S(z) = (z − a)^(-1) mod G; the key equation yields σ of degree 1 with root a.
        let f = FieldContext::new(4, None).unwrap();
        let g = p(&[f.exp(3).0, 1, 1]);
        let a = f.exp(5);
        assert!(!g.eval(&f, a).is_zero());
        // (z − a)^(-1) mod G = −(z + a + 1)/G(a) for G = z² + z + c.
        let ga_inv = f.inv(g.eval(&f, a)).unwrap();
        let s = Poly::from_coeffs(vec![f.mul(a + Fe::ONE, ga_inv), ga_inv]);
        let lin = p(&[a.0, 1]);
        assert_eq!(s.mul(&f, &lin).rem(&f, &g).unwrap(), Poly::one());
        let (r, u, v) = poly_eea(&f, &g, &s, 1).unwrap();
        assert_eq!(v.degree(), Some(1));
        assert!(v.eval(&f, a).is_zero());
        assert_eq!(r, u.mul(&f, &g).add(&v.mul(&f, &s)));
    }

    #[test]
    fn irreducibility_matches_root_count_for_quadratics() {
        let f = FieldContext::new(2, None).unwrap();
        for c0 in 0..4 {
            for c1 in 0..4 {
                let q = p(&[c0, c1, 1]);
                let has_root = f.elements().any(|x| q.eval(&f, x).is_zero());
                assert_eq!(q.is_irreducible(&f).unwrap(), !has_root);
            }
        }
    }
}
