//! Dense linear algebra over GF(4) and GF(2) on small matrices.

use crate::gf2m::Gf4;

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<Gf4>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            let f = row[c];
            if i != r && !f.is_zero() {
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x += f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Gf4>]) -> usize {
    rref(&mut rows.to_vec()).len()
}

/// A basis of the right null space {x : rows·xᵀ = 0} of a matrix with `ncols` columns.
pub fn nullspace(rows: &[Vec<Gf4>], ncols: usize) -> Vec<Vec<Gf4>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Gf4::ZERO; ncols];
            v[f] = Gf4::ONE;
            for (row, &p) in m.iter().zip(&pivots) {
                // x_p + row[f]·x_f = 0 in characteristic 2
                v[p] = row[f];
            }
            v
        })
        .collect()
}

pub fn dot(a: &[Gf4], b: &[Gf4]) -> Gf4 {
    a.iter().zip(b).fold(Gf4::ZERO, |acc, (&x, &y)| acc + x * y)
}

/// Σ coeffs[i]·rows[i].
pub fn combine(coeffs: &[Gf4], rows: &[Vec<Gf4>], ncols: usize) -> Vec<Gf4> {
    let mut out = vec![Gf4::ZERO; ncols];
    for (&c, row) in coeffs.iter().zip(rows) {
        if !c.is_zero() {
            for (o, &x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
    }
    out
}

/// Bits of a GF(4) vector viewed in GF(2)^(2n): bit 2j is the 1-coordinate and
/// bit 2j + 1 the ω-coordinate of symbol j.
fn to_bits(v: &[Gf4]) -> Vec<u64> {
    let mut out = vec![0u64; (2 * v.len()).div_ceil(64)];
    for (j, x) in v.iter().enumerate() {
        let (b0, b1) = x.coords();
        out[(2 * j) / 64] |= (b0 as u64) << ((2 * j) % 64);
        out[(2 * j + 1) / 64] |= (b1 as u64) << ((2 * j + 1) % 64);
    }
    out
}

fn from_bits(bits: &[u64], n: usize) -> Vec<Gf4> {
    let bit = |i: usize| ((bits[i / 64] >> (i % 64)) & 1) as u8;
    (0..n).map(|j| Gf4::from_bits(bit(2 * j) | (bit(2 * j + 1) << 1))).collect()
}

/// GF(2)-reduced echelon basis of the additive span of `vectors` (all of length `n`).
pub fn f2_rref(vectors: &[Vec<Gf4>], n: usize) -> Vec<Vec<Gf4>> {
    let mut rows: Vec<Vec<u64>> = vectors.iter().map(|v| to_bits(v)).collect();
    let mut r = 0;
    for c in 0..2 * n {
        let has = |row: &Vec<u64>| (row[c / 64] >> (c % 64)) & 1 == 1;
        let Some(p) = (r..rows.len()).find(|&i| has(&rows[i])) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && has(row) {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x ^= y;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows.iter().map(|b| from_bits(b, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::from_symbols;

    fn m(rows: &[&str]) -> Vec<Vec<Gf4>> {
        rows.iter().map(|r| from_symbols(r).unwrap()).collect()
    }

    #[test]
    fn rref_and_nullspace_are_orthogonal() {
        let g = m(&["1203", "2130", "3313"]);
        let k = rank(&g);
        let h = nullspace(&g, 4);
        assert_eq!(k + h.len(), 4);
        for row in &g {
            for hr in &h {
                assert_eq!(dot(row, hr), Gf4::ZERO);
            }
        }
    }

    #[test]
    fn f2_rank_counts_additive_span() {
        // (1,0), (ω,0), (0,1) span a GF(2)-space of dimension 3.
        assert_eq!(f2_rref(&m(&["10", "20", "01"]), 2).len(), 3);
        assert_eq!(f2_rref(&m(&["10", "20", "30"]), 2).len(), 2);
        assert!(f2_rref(&[], 2).is_empty());
    }
}
