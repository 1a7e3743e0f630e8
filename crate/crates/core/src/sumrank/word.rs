use std::fmt;

use crate::error::{check_len, Result};
use crate::gf2m::{weight, Gf4};

/// A 2x2 binary matrix; entry (r, c) is bit 2r + c.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mat2(u8);

impl Mat2 {
    pub const ZERO: Mat2 = Mat2(0);
    pub const IDENTITY: Mat2 = Mat2(0b1001);

    pub fn from_bits(bits: u8) -> Mat2 {
        Mat2(bits & 0xF)
    }

    pub fn from_rows(rows: [[u8; 2]; 2]) -> Mat2 {
        let mut m = 0;
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                m |= (x & 1) << (2 * r + c);
            }
        }
        Mat2(m)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn entry(self, r: usize, c: usize) -> u8 {
        (self.0 >> (2 * r + c)) & 1
    }

    pub fn rows(self) -> [[u8; 2]; 2] {
        [[self.entry(0, 0), self.entry(0, 1)], [self.entry(1, 0), self.entry(1, 1)]]
    }

    pub fn rank(self) -> usize {
        if self.0 == 0 {
            0
        } else if (self.entry(0, 0) & self.entry(1, 1)) ^ (self.entry(0, 1) & self.entry(1, 0)) == 1 {
            2
        } else {
            1
        }
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.rows();
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Matrix of x ↦ a0·x + a1·x² on GF(4) in the basis (1, ω); column c holds
/// the coordinates of the image of the c-th basis vector.
pub fn lin_to_matrix(a0: Gf4, a1: Gf4) -> Mat2 {
    let f1 = a0 + a1;
    let fw = a0 * Gf4::OMEGA + a1 * Gf4::OMEGA2;
    let (y0, y1) = f1.coords();
    let (z0, z1) = fw.coords();
    Mat2::from_rows([[y0, z0], [y1, z1]])
}

/// Inverse of [`lin_to_matrix`].
pub fn matrix_to_lin(m: Mat2) -> (Gf4, Gf4) {
    let y = Gf4::from_bits(m.entry(0, 0) | (m.entry(1, 0) << 1));
    let z = Gf4::from_bits(m.entry(0, 1) | (m.entry(1, 1) << 1));
    let a1 = z + y * Gf4::OMEGA;
    (y + a1, a1)
}

/// A length-ℓ word of 2x2 blocks; block i is `coeff_x[i]·x + coeff_x2[i]·x²`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SrWord {
    coeff_x: Vec<Gf4>,
    coeff_x2: Vec<Gf4>,
}

impl SrWord {
    pub fn new(coeff_x: Vec<Gf4>, coeff_x2: Vec<Gf4>) -> Result<SrWord> {
        check_len(coeff_x.len(), coeff_x2.len())?;
        Ok(SrWord { coeff_x, coeff_x2 })
    }

    pub fn zeros(len: usize) -> SrWord {
        SrWord { coeff_x: vec![Gf4::ZERO; len], coeff_x2: vec![Gf4::ZERO; len] }
    }

    pub fn len(&self) -> usize {
        self.coeff_x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeff_x.is_empty()
    }

    /// Coefficients of x (the C2 slot).
    pub fn coeff_x(&self) -> &[Gf4] {
        &self.coeff_x
    }

    /// Coefficients of x² (the C1 slot).
    pub fn coeff_x2(&self) -> &[Gf4] {
        &self.coeff_x2
    }

    pub fn into_parts(self) -> (Vec<Gf4>, Vec<Gf4>) {
        (self.coeff_x, self.coeff_x2)
    }

    pub fn block(&self, i: usize) -> (Gf4, Gf4) {
        (self.coeff_x[i], self.coeff_x2[i])
    }

    pub fn set_block(&mut self, i: usize, a0: Gf4, a1: Gf4) {
        self.coeff_x[i] = a0;
        self.coeff_x2[i] = a1;
    }

    pub fn is_zero(&self) -> bool {
        self.coeff_x.iter().chain(&self.coeff_x2).all(|x| x.is_zero())
    }

    /// Blockwise sum (which is also the difference).
    pub fn add(&self, other: &SrWord) -> Result<SrWord> {
        check_len(self.len(), other.len())?;
        let zip = |a: &[Gf4], b: &[Gf4]| a.iter().zip(b).map(|(&x, &y)| x + y).collect();
        Ok(SrWord { coeff_x: zip(&self.coeff_x, &other.coeff_x), coeff_x2: zip(&self.coeff_x2, &other.coeff_x2) })
    }

    pub fn to_matrices(&self) -> Vec<Mat2> {
        self.coeff_x.iter().zip(&self.coeff_x2).map(|(&a0, &a1)| lin_to_matrix(a0, a1)).collect()
    }

    pub fn from_matrices(blocks: &[Mat2]) -> SrWord {
        let (coeff_x, coeff_x2) = blocks.iter().map(|&m| matrix_to_lin(m)).unzip();
        SrWord { coeff_x, coeff_x2 }
    }
}

impl fmt::Debug for SrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SrWord {{ x: {}, x2: {} }}",
            crate::gf2m::to_symbols(&self.coeff_x),
            crate::gf2m::to_symbols(&self.coeff_x2)
        )
    }
}

/// Sum of the block ranks.
pub fn sumrank_weight(word: &SrWord) -> usize {
    word.to_matrices().iter().map(|m| m.rank()).sum()
}

/// 2·wt(a1) + 2·wt(a2) − 3·|supp(a1) ∩ supp(a2)| for the word a2·x + a1·x².
pub fn sumrank_weight_formula(a1: &[Gf4], a2: &[Gf4]) -> Result<usize> {
    check_len(a1.len(), a2.len())?;
    let both = a1.iter().zip(a2).filter(|(x, y)| !x.is_zero() && !y.is_zero()).count();
    Ok(2 * weight(a1) + 2 * weight(a2) - 3 * both)
}

/// Sum-rank distance wt(x − y).
pub fn sr_distance(x: &SrWord, y: &SrWord) -> Result<usize> {
    Ok(sumrank_weight(&x.add(y)?))
}
