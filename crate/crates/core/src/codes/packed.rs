use crate::gf2m::Gf4;

/// A GF(4) vector stored as two bit planes (1-coordinates and ω-coordinates).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PackedWord {
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl PackedWord {
    pub fn zeros(n: usize) -> PackedWord {
        let w = n.div_ceil(64);
        PackedWord { lo: vec![0; w], hi: vec![0; w] }
    }

    pub fn from_symbols(v: &[Gf4]) -> PackedWord {
        let mut p = PackedWord::zeros(v.len());
        for (j, x) in v.iter().enumerate() {
            let (b0, b1) = x.coords();
            p.lo[j / 64] |= (b0 as u64) << (j % 64);
            p.hi[j / 64] |= (b1 as u64) << (j % 64);
        }
        p
    }

    pub fn to_symbols(&self, n: usize) -> Vec<Gf4> {
        (0..n)
            .map(|j| {
                let b0 = (self.lo[j / 64] >> (j % 64)) & 1;
                let b1 = (self.hi[j / 64] >> (j % 64)) & 1;
                Gf4::from_bits((b0 | (b1 << 1)) as u8)
            })
            .collect()
    }

    pub fn xor_assign(&mut self, other: &PackedWord) {
        for (a, b) in self.lo.iter_mut().zip(&other.lo) {
            *a ^= b;
        }
        for (a, b) in self.hi.iter_mut().zip(&other.hi) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.lo.iter().chain(&self.hi).all(|&w| w == 0)
    }

    /// Support bitmask, one bit per coordinate.
    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.lo.iter().zip(&self.hi).map(|(a, b)| a | b)
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.support().map(|s| s.count_ones() as usize).sum()
    }

    /// Hamming distance to another packed word of the same length.
    pub fn distance(&self, other: &PackedWord) -> usize {
        self.lo
            .iter()
            .zip(&self.hi)
            .zip(other.lo.iter().zip(&other.hi))
            .map(|((a0, a1), (b0, b1))| ((a0 ^ b0) | (a1 ^ b1)).count_ones() as usize)
            .sum()
    }
}

/// Visits every vector of the GF(2)-span of `basis` exactly once, in Gray-code
/// order starting from zero. The callback receives the span index (the Gray
/// code, whose bit i selects `basis[i]`) and the vector.
pub fn for_each_in_span(basis: &[PackedWord], n: usize, mut f: impl FnMut(u64, &PackedWord)) {
    assert!(basis.len() < 64, "span too large to enumerate");
    let mut cur = PackedWord::zeros(n);
    f(0, &cur);
    let total = 1u64 << basis.len();
    for i in 1..total {
        let bit = i.trailing_zeros() as usize;
        cur.xor_assign(&basis[bit]);
        f(i ^ (i >> 1), &cur);
    }
}
