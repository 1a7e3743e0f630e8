use crate::error::{Error, Result};

/// q-ary entropy H_q(x) = x·log_q(q − 1) − x·log_q(x) − (1 − x)·log_q(1 − x)
/// for 0 ≤ x ≤ 1 − 1/q.
pub fn entropy_q(q: f64, x: f64) -> Result<f64> {
    if q.is_nan() || q < 2.0 || !(0.0..=1.0 - 1.0 / q).contains(&x) {
        return Err(Error::Domain(format!("H_{q}({x}) needs q ≥ 2 and 0 ≤ x ≤ 1 − 1/q")));
    }
    let ln_q = q.ln();
    let xlogx = |t: f64| if t == 0.0 { 0.0 } else { t * t.ln() };
    Ok((x * (q - 1.0).ln() - xlogx(x) - xlogx(1.0 - x)) / ln_q)
}

fn check_delta(delta: f64) -> Result<()> {
    if (0.0..0.25).contains(&delta) {
        Ok(())
    } else {
        Err(Error::Domain(format!("relative distance {delta} outside [0, 1/4)")))
    }
}

/// Rate achievable by SR(C1, C2) with random components: 1 − ½(H4(δ) + H4(2δ)).
pub fn gv_rate(delta: f64) -> Result<f64> {
    check_delta(delta)?;
    Ok(1.0 - 0.5 * (entropy_q(4.0, delta)? + entropy_q(4.0, 2.0 * delta)?))
}

/// Rate achievable with components meeting the decoder preconditions:
/// 1 − ½(H4(4δ/3) + H4(2δ)).
pub fn decodable_gv_rate(delta: f64) -> Result<f64> {
    check_delta(delta)?;
    Ok(1.0 - 0.5 * (entropy_q(4.0, 4.0 * delta / 3.0)? + entropy_q(4.0, 2.0 * delta)?))
}

/// Rate of the grouping embedding of a quaternary GV code: 1 − H4(2δ).
pub fn embedding_gv_rate(delta: f64) -> Result<f64> {
    check_delta(delta)?;
    Ok(1.0 - entropy_q(4.0, 2.0 * delta)?)
}

/// Largest GF(2) dimension of a length-ℓ code with minimum sum-rank
/// distance d: 2·(2ℓ − d + 1).
pub fn singleton_bound(len: usize, d_sr: usize) -> Result<usize> {
    if d_sr == 0 || d_sr > 2 * len {
        return Err(Error::Range(format!("d_sr = {d_sr} outside 1..={}", 2 * len)));
    }
    Ok(2 * (2 * len - d_sr + 1))
}

/// Bound values for one (ℓ, d_sr); rates are evaluated at δ = d_sr/(2ℓ) and
/// are `None` when δ ≥ 1/4.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub len: usize,
    pub d_sr: usize,
    pub singleton_f2_dim: usize,
    pub gv_rate: Option<f64>,
    pub decodable_gv_rate: Option<f64>,
}

impl BoundReport {
    pub fn new(len: usize, d_sr: usize) -> Result<BoundReport> {
        let singleton_f2_dim = singleton_bound(len, d_sr)?;
        let delta = d_sr as f64 / (2 * len) as f64;
        Ok(BoundReport {
            len,
            d_sr,
            singleton_f2_dim,
            gv_rate: gv_rate(delta).ok(),
            decodable_gv_rate: decodable_gv_rate(delta).ok(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_endpoints() {
        assert_eq!(entropy_q(4.0, 0.0).unwrap(), 0.0);
        assert!((entropy_q(4.0, 0.75).unwrap() - 1.0).abs() < 1e-12);
        assert!(entropy_q(4.0, 0.8).is_err());
        assert!(entropy_q(4.0, -0.1).is_err());
    }

    #[test]
    fn rate_domain() {
        assert_eq!(gv_rate(0.0).unwrap(), 1.0);
        assert_eq!(decodable_gv_rate(0.0).unwrap(), 1.0);
        assert!(gv_rate(0.25).is_err());
        assert!(decodable_gv_rate(f64::NAN).is_err());
    }

    #[test]
    fn singleton_values() {
        assert_eq!(singleton_bound(15, 4).unwrap(), 54);
        assert_eq!(singleton_bound(15, 14).unwrap(), 34);
        assert_eq!(singleton_bound(7, 1).unwrap(), 28);
        assert!(singleton_bound(15, 31).is_err());
        assert!(singleton_bound(15, 0).is_err());
    }
}
