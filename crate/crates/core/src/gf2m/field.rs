use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use super::binpoly;
use super::gf4::Gf4;
use crate::error::{Error, Result};

/// Largest supported extension degree; keeps the exp/log tables within 8 MiB.
pub const MAX_DEGREE: u32 = 20;

/// Default irreducible modulus for each degree 1..=20 (index = degree).
pub const DEFAULT_MODULI: [u32; 21] = [
    0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
    0x20009, 0x40081, 0x80027, 0x100009,
];

/// An element of some GF(2^m), stored as its coefficient bitmask.
///
/// Elements carry no reference to their field; arithmetic beyond addition
/// goes through a [`FieldContext`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for Fe {
    type Output = Fe;
    fn add(self, rhs: Fe) -> Fe {
        Fe(self.0 ^ rhs.0)
    }
}

impl AddAssign for Fe {
    fn add_assign(&mut self, rhs: Fe) {
        self.0 ^= rhs.0;
    }
}

impl Sub for Fe {
    type Output = Fe;
    fn sub(self, rhs: Fe) -> Fe {
        Fe(self.0 ^ rhs.0)
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// A concrete GF(2^m) with a fixed modulus and primitive element.
pub struct FieldContext {
    degree: u32,
    modulus: u32,
    generator: Fe,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {:#x}", self.degree, self.modulus)
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.modulus == other.modulus && self.generator == other.generator
    }
}

impl Eq for FieldContext {}

impl FieldContext {
    /// Builds GF(2^m) over `modulus`, or over [`DEFAULT_MODULI`]`[m]` when absent.
    pub fn new(m: u32, modulus: Option<u32>) -> Result<FieldContext> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::Range(format!("field degree {m} outside 1..={MAX_DEGREE}")));
        }
        let modulus = modulus.unwrap_or(DEFAULT_MODULI[m as usize]);
        if binpoly::degree(modulus as u64) != Some(m) {
            return Err(Error::Range(format!("modulus {modulus:#x} does not have degree {m}")));
        }
        if !binpoly::is_irreducible(modulus as u64) {
            return Err(Error::Construction(format!("modulus {modulus:#x} is reducible")));
        }
        let order = (1u64 << m) - 1;
        let factors = binpoly::prime_factors(order);
        let m64 = modulus as u64;
        let pow = |base: u64, mut e: u64| {
            let (mut acc, mut b) = (1u64, base);
            while e > 0 {
                if e & 1 == 1 {
                    acc = binpoly::mulmod(acc, b, m64);
                }
                b = binpoly::mulmod(b, b, m64);
                e >>= 1;
            }
            acc
        };
        let generator = (1..=order)
            .find(|&a| factors.iter().all(|&p| pow(a, order / p) != 1))
            .expect("the multiplicative group of a finite field is cyclic");

        let size = 1usize << m;
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![u32::MAX; size];
        let mut cur = 1u64;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur as u32;
            log[cur as usize] = i as u32;
            cur = binpoly::mulmod(cur, generator, m64);
        }
        Ok(FieldContext { degree: m, modulus, generator: Fe(generator as u32), exp, log })
    }

    /// A process-wide shared instance of the default field of degree `m`.
    pub fn shared(m: u32) -> Result<Arc<FieldContext>> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldContext>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("field cache poisoned");
        if let Some(f) = guard.get(&m) {
            return Ok(Arc::clone(f));
        }
        let f = Arc::new(FieldContext::new(m, None)?);
        guard.insert(m, Arc::clone(&f));
        Ok(f)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn generator(&self) -> Fe {
        self.generator
    }

    /// Number of elements, 2^m.
    pub fn size(&self) -> usize {
        1 << self.degree
    }

    /// Order of the multiplicative group, 2^m − 1.
    pub fn order(&self) -> usize {
        self.exp.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.size() as u32).map(Fe)
    }

    pub fn element(&self, value: u32) -> Result<Fe> {
        if (value as usize) < self.size() {
            Ok(Fe(value))
        } else {
            Err(Error::Range(format!("{value:#x} is not an element of GF(2^{})", self.degree)))
        }
    }

    /// g^i for the primitive element g; `i` is reduced modulo the group order.
    pub fn exp(&self, i: usize) -> Fe {
        Fe(self.exp[i % self.exp.len()])
    }

    /// Discrete logarithm to base g, `None` for zero.
    pub fn log(&self, a: Fe) -> Option<usize> {
        (!a.is_zero()).then(|| self.log[a.0 as usize] as usize)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        a + b
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let n = self.exp.len();
        let mut s = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        if s >= n {
            s -= n;
        }
        Fe(self.exp[s])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.exp.len();
        Ok(Fe(self.exp[(n - self.log[a.0 as usize] as usize) % n]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e for any integer exponent; 0^0 = 1 and 0^e for e < 0 is an error.
    pub fn pow(&self, a: Fe, e: i64) -> Result<Fe> {
        if a.is_zero() {
            return match e {
                0 => Ok(Fe::ONE),
                e if e > 0 => Ok(Fe::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let n = self.exp.len() as i64;
        let l = self.log[a.0 as usize] as i64;
        Ok(Fe(self.exp[(l * e.rem_euclid(n)).rem_euclid(n) as usize]))
    }

    /// The Frobenius map a ↦ a².
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    /// Image of ω under GF(4) ↪ GF(2^m): g^((2^m − 1)/3). Requires even m.
    pub fn omega(&self) -> Result<Fe> {
        if !self.degree.is_multiple_of(2) {
            return Err(Error::Embed(format!("GF(4) is not a subfield of GF(2^{})", self.degree)));
        }
        Ok(self.exp(self.order() / 3))
    }

    /// The field homomorphism GF(4) → GF(2^m) fixing ω ↦ [`Self::omega`].
    pub fn subfield_embed(&self, a: Gf4) -> Result<Fe> {
        let w = self.omega()?;
        Ok(match a.symbol() {
            0 => Fe::ZERO,
            1 => Fe::ONE,
            2 => w,
            _ => self.mul(w, w),
        })
    }

    /// The embedded copy of GF(4), indexed by symbol.
    pub fn gf4_image(&self) -> Result<[Fe; 4]> {
        let w = self.omega()?;
        Ok([Fe::ZERO, Fe::ONE, w, self.mul(w, w)])
    }

    /// Inverse of [`Self::subfield_embed`]; `None` for elements outside GF(4).
    pub fn subfield_project(&self, a: Fe) -> Result<Option<Gf4>> {
        let img = self.gf4_image()?;
        Ok(img.iter().position(|&x| x == a).map(|i| Gf4::from_bits(i as u8)))
    }
}

/// Coordinates of GF(2^m) elements over a subfield GF(2) or GF(4).
///
/// Over GF(4) the basis is 1, g, …, g^(m/2 − 1) for the primitive element g,
/// and coordinates use the symbol encoding of [`Gf4`].
pub struct SubfieldCoordinates {
    sub_degree: u32,
    // Row k of the inverse change-of-basis matrix, as a bitmask over element bits.
    inverse_rows: Vec<u32>,
}

impl SubfieldCoordinates {
    pub fn new(field: &FieldContext, sub_degree: u32) -> Result<SubfieldCoordinates> {
        let m = field.degree();
        match sub_degree {
            1 => Ok(SubfieldCoordinates { sub_degree, inverse_rows: (0..m).map(|k| 1 << k).collect() }),
            2 => {
                let w = field.omega()?;
                let h = m / 2;
                // Column 2j + a holds the bits of ω^a g^j.
                let mut cols = Vec::with_capacity(m as usize);
                for j in 0..h as usize {
                    let gj = field.exp(j);
                    cols.push(gj.0);
                    cols.push(field.mul(w, gj).0);
                }
                let inverse_rows =
                    invert_binary(&cols, m as usize).expect("powers of a primitive element are independent over GF(4)");
                Ok(SubfieldCoordinates { sub_degree, inverse_rows })
            }
            _ => Err(Error::Range(format!("subfield degree {sub_degree} must be 1 or 2"))),
        }
    }

    /// Number of coordinates per element.
    pub fn count(&self) -> usize {
        self.inverse_rows.len() / self.sub_degree as usize
    }

    pub fn coordinates(&self, x: Fe) -> Vec<Gf4> {
        let bit = |k: usize| ((self.inverse_rows[k] & x.0).count_ones() & 1) as u8;
        match self.sub_degree {
            1 => (0..self.inverse_rows.len()).map(|k| Gf4::from_bits(bit(k))).collect(),
            _ => (0..self.count()).map(|j| Gf4::from_bits(bit(2 * j) | (bit(2 * j + 1) << 1))).collect(),
        }
    }
}

/// Inverts the m×m binary matrix with the given columns; returns its rows as bitmasks.
fn invert_binary(cols: &[u32], m: usize) -> Option<Vec<u32>> {
    // Row i of A: bit c set iff column c has bit i. Augment with identity in the high half.
    let mut rows: Vec<u64> = (0..m)
        .map(|i| {
            let a = cols.iter().enumerate().fold(0u64, |acc, (c, &col)| acc | ((((col >> i) & 1) as u64) << c));
            a | (1u64 << (m + i))
        })
        .collect();
    for c in 0..m {
        let p = (c..m).find(|&r| (rows[r] >> c) & 1 == 1)?;
        rows.swap(c, p);
        for r in 0..m {
            if r != c && (rows[r] >> c) & 1 == 1 {
                rows[r] ^= rows[c];
            }
        }
    }
    Some(rows.iter().map(|r| (r >> m) as u32).collect())
}
