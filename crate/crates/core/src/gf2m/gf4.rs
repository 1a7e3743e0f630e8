use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub};

/// An element of GF(4) = {0, 1, ω, ω²} with ω² = ω + 1.
///
/// The symbol encoding is 0 ↦ 0, 1 ↦ 1, ω ↦ 2, ω² ↦ 3, which is also the
/// bitmask of the element over the basis (1, ω).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const INV: [u8; 4] = [0, 1, 3, 2];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA2: Gf4 = Gf4(3);
    pub const ALL: [Gf4; 4] = [Gf4(0), Gf4(1), Gf4(2), Gf4(3)];
    /// Nonzero elements in the fixed order 1, ω, ω².
    pub const NONZERO: [Gf4; 3] = [Gf4(1), Gf4(2), Gf4(3)];

    pub fn from_symbol(s: u8) -> Option<Gf4> {
        (s < 4).then_some(Gf4(s))
    }

    /// Builds an element from its symbol, masking to the low two bits.
    pub const fn from_bits(s: u8) -> Gf4 {
        Gf4(s & 3)
    }

    pub const fn symbol(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> Option<Gf4> {
        (self.0 != 0).then(|| Gf4(INV[self.0 as usize]))
    }

    pub fn square(self) -> Gf4 {
        self * self
    }

    /// Coordinates over the basis (1, ω): `(bit for 1, bit for ω)`.
    pub const fn coords(self) -> (u8, u8) {
        (self.0 & 1, self.0 >> 1)
    }

    pub fn to_char(self) -> char {
        (b'0' + self.0) as char
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Sub for Gf4 {
    type Output = Gf4;
    fn sub(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for Gf4 {
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = ["0", "1", "ω", "ω²"][self.0 as usize];
        f.write_str(name)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Hamming weight of a GF(4) vector.
pub fn weight(v: &[Gf4]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Renders a vector as a string of symbol digits.
pub fn to_symbols(v: &[Gf4]) -> String {
    v.iter().map(|x| x.to_char()).collect()
}

/// Parses symbol digits, ignoring whitespace.
pub fn from_symbols(s: &str) -> Option<Vec<Gf4>> {
    s.chars().filter(|c| !c.is_whitespace()).map(|c| c.to_digit(10).and_then(|d| Gf4::from_symbol(d as u8))).collect()
}
