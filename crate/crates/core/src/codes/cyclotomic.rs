use std::collections::BTreeSet;

use crate::error::{Error, Result};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A set of residues modulo `n`, used as the zero set of a cyclic code.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefiningSet {
    n: usize,
    q: usize,
    exponents: BTreeSet<usize>,
}

impl DefiningSet {
    /// The empty set; closed under every multiplier.
    pub fn empty(q: usize, n: usize) -> Result<DefiningSet> {
        if n == 0 || gcd(q, n) != 1 {
            return Err(Error::Construction(format!("gcd({q}, {n}) must be 1")));
        }
        Ok(DefiningSet { n, q, exponents: BTreeSet::new() })
    }

    /// Wraps residues without checking closure.
    pub fn from_exponents(q: usize, n: usize, exps: impl IntoIterator<Item = usize>) -> Result<DefiningSet> {
        let mut s = DefiningSet::empty(q, n)?;
        s.exponents = exps.into_iter().map(|e| e % n).collect();
        Ok(s)
    }

    /// Union of the cosets containing each of `reps`.
    pub fn from_cosets(q: usize, n: usize, reps: &[usize]) -> Result<DefiningSet> {
        let mut s = DefiningSet::empty(q, n)?;
        for &r in reps {
            s = s.union(&cyclotomic_coset(r, q, n)?);
        }
        Ok(s)
    }

    /// The union C_b ∪ C_(b+1) ∪ … ∪ C_(b+δ−2) (empty for δ ≤ 1).
    pub fn designed(q: usize, n: usize, b: usize, delta: usize) -> Result<DefiningSet> {
        let reps: Vec<usize> = (0..delta.saturating_sub(1)).map(|j| b + j).collect();
        DefiningSet::from_cosets(q, n, &reps)
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.exponents.contains(&(e % self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents.iter().copied()
    }

    pub fn union(&self, other: &DefiningSet) -> DefiningSet {
        let mut out = self.clone();
        out.exponents.extend(other.exponents.iter().copied());
        out
    }

    pub fn is_closed(&self) -> bool {
        self.exponents.iter().all(|&s| self.exponents.contains(&(s * self.q % self.n)))
    }

    /// Smallest representative of each coset in the set.
    pub fn coset_representatives(&self) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        let mut reps = Vec::new();
        for &s in &self.exponents {
            if seen.insert(s) {
                reps.push(s);
                let mut t = s * self.q % self.n;
                while t != s {
                    seen.insert(t);
                    t = t * self.q % self.n;
                }
            }
        }
        reps
    }

    /// Longest run of cyclically consecutive residues in the set, as `(start, length)`.
    /// Ties go to the smallest start; the full set yields `(0, n)`.
    pub fn longest_run(&self) -> (usize, usize) {
        let n = self.n;
        if self.exponents.len() == n {
            return (0, n);
        }
        let mut best = (0, 0);
        for &s in &self.exponents {
            if self.contains(s + n - 1) {
                continue;
            }
            let mut len = 1;
            while self.contains(s + len) {
                len += 1;
            }
            if len > best.1 {
                best = (s, len);
            }
        }
        best
    }

    /// The BCH bound: length of the longest consecutive run plus one.
    pub fn bch_bound(&self) -> usize {
        self.longest_run().1 + 1
    }
}

/// The q-cyclotomic coset {s, sq, sq², …} modulo n.
pub fn cyclotomic_coset(s: usize, q: usize, n: usize) -> Result<DefiningSet> {
    let mut set = DefiningSet::empty(q, n)?;
    let s = s % n;
    let mut t = s;
    loop {
        set.exponents.insert(t);
        t = t * q % n;
        if t == s {
            break;
        }
    }
    Ok(set)
}

/// All q-cyclotomic cosets modulo n, ordered by smallest element.
pub fn all_cosets(q: usize, n: usize) -> Result<Vec<DefiningSet>> {
    let mut out: Vec<DefiningSet> = Vec::new();
    for s in 0..n {
        if !out.iter().any(|c| c.contains(s)) {
            out.push(cyclotomic_coset(s, q, n)?);
        }
    }
    Ok(out)
}
