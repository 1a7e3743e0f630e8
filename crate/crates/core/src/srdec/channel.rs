use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{sr_decode, SrStatus};
use crate::error::{Error, Result};
use crate::gf2m::Gf4;
use crate::hamdec::BoundedDistanceDecoder;
use crate::sumrank::{sr_encode, SrWord, SumRankCode};

fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Gf4 {
    Gf4::NONZERO[rng.gen_range(0..3)]
}

/// A uniformly chosen error profile (i1, i2, i3) with 2·i1 + 2·i2 + i3 = w and
/// i1 + i2 + i3 ≤ ℓ, uniform positions and uniform nonzero values.
pub fn sample_error_with<R: Rng + ?Sized>(len: usize, w: usize, rng: &mut R) -> Result<SrWord> {
    if w > 2 * len {
        return Err(Error::Range(format!("sum-rank weight {w} exceeds 2ℓ = {}", 2 * len)));
    }
    let mut profiles = Vec::new();
    for i3 in (w % 2..=w.min(len)).step_by(2) {
        let pairs = (w - i3) / 2;
        if pairs + i3 > len {
            continue;
        }
        for i1 in 0..=pairs {
            profiles.push((i1, pairs - i1, i3));
        }
    }
    let (i1, i2, i3) = profiles[rng.gen_range(0..profiles.len())];
    let mut positions = rand::seq::index::sample(rng, len, i1 + i2 + i3).into_vec();
    positions.shuffle(rng);
    let mut e = SrWord::zeros(len);
    for (k, &p) in positions.iter().enumerate() {
        let (a0, a1) = if k < i1 {
            (random_nonzero(rng), Gf4::ZERO)
        } else if k < i1 + i2 {
            (Gf4::ZERO, random_nonzero(rng))
        } else {
            (random_nonzero(rng), random_nonzero(rng))
        };
        e.set_block(p, a0, a1);
    }
    Ok(e)
}

/// [`sample_error_with`] driven by a ChaCha8 generator seeded with `seed`.
pub fn sample_error(len: usize, w: usize, seed: u64) -> Result<SrWord> {
    sample_error_with(len, w, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimulationConfig {
    pub weights: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    /// Target distance; defaults to the code's decodable distance.
    pub d_sr: Option<usize>,
}

/// Counts for one error weight. `failure` includes decoder failures and
/// miscorrections; `miscorrected` counts the latter separately.
#[derive(Clone, Debug, PartialEq)]
pub struct TallyRow {
    pub weight: usize,
    pub trials: u64,
    pub success: u64,
    pub failure: u64,
    pub ambiguous: u64,
    pub miscorrected: u64,
    pub mean_decode_micros: f64,
}

#[derive(Clone, Copy)]
enum Trial {
    Success,
    Failure,
    Miscorrected,
    Ambiguous,
}

fn trial_seed(seed: u64, w: usize, trial: u64) -> u64 {
    // splitmix64 over a counter derived from (seed, w, trial)
    let mut z = seed ^ (w as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ trial.wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Encodes random messages, adds sampled errors of each weight and decodes.
/// Counts depend only on the seed, never on the thread schedule.
pub fn simulate(
    code: &SumRankCode,
    dec1: &dyn BoundedDistanceDecoder,
    dec2: &dyn BoundedDistanceDecoder,
    config: &SimulationConfig,
) -> Result<Vec<TallyRow>> {
    let d_sr = config
        .d_sr
        .or(code.decodable_distance())
        .ok_or_else(|| Error::Config("no target distance meets the decoder preconditions".into()))?;
    super::check_decoder_config(code, dec1, dec2, d_sr)?;
    let len = code.length();
    let run_trial = |w: usize, t: u64| -> Result<(Trial, f64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(config.seed, w, t));
        let bits: Vec<bool> = (0..code.f2_dimension()).map(|_| rng.gen()).collect();
        let sent = sr_encode(code, &bits)?;
        let received = sent.add(&sample_error_with(len, w, &mut rng)?)?;
        let start = Instant::now();
        let out = sr_decode(code, dec1, dec2, &received, d_sr)?;
        let micros = start.elapsed().as_secs_f64() * 1e6;
        let kind = match out.status {
            SrStatus::Success if out.codeword == sent => Trial::Success,
            SrStatus::Success => Trial::Miscorrected,
            SrStatus::Ambiguous => Trial::Ambiguous,
            _ => Trial::Failure,
        };
        Ok((kind, micros))
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let mut rows = Vec::with_capacity(config.weights.len());
    for &w in &config.weights {
        if w > 2 * len {
            return Err(Error::Range(format!("sum-rank weight {w} exceeds 2ℓ = {}", 2 * len)));
        }
        let results: Vec<(Trial, f64)> =
            pool.install(|| (0..config.trials).into_par_iter().map(|t| run_trial(w, t)).collect::<Result<_>>())?;
        let mut row = TallyRow {
            weight: w,
            trials: config.trials,
            success: 0,
            failure: 0,
            ambiguous: 0,
            miscorrected: 0,
            mean_decode_micros: 0.0,
        };
        for (kind, _) in &results {
            match kind {
                Trial::Success => row.success += 1,
                Trial::Failure => row.failure += 1,
                Trial::Miscorrected => {
                    row.failure += 1;
                    row.miscorrected += 1;
                }
                Trial::Ambiguous => row.ambiguous += 1,
            }
        }
        if !results.is_empty() {
            row.mean_decode_micros = results.iter().map(|r| r.1).sum::<f64>() / results.len() as f64;
        }
        rows.push(row);
    }
    Ok(rows)
}

/// CSV with header `weight,trials,success,failure,ambiguous,mean_decode_micros`.
pub fn tally_csv(rows: &[TallyRow]) -> String {
    let mut out = String::from("weight,trials,success,failure,ambiguous,mean_decode_micros\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{:.3}\n",
            r.weight, r.trials, r.success, r.failure, r.ambiguous, r.mean_decode_micros
        ));
    }
    out
}
