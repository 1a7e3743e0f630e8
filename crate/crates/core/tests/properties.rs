use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use srcodes::codes::{bch_build, min_distance_bruteforce, BaseField, BchCode, BchSpec, DefiningSet, LinearCode};
use srcodes::formats::{word_from_text, word_to_text, CodeFile};
use srcodes::gf2m::{weight, Fe, FieldContext, Gf4, Poly};
use srcodes::hamdec::{BchDecoder, BoundedDistanceDecoder};
use srcodes::srdec::{best_branch, evaluate_word, sample_error, sr_decode, ErrorProfile, SrStatus};
use srcodes::sumrank::{sr_distance, sr_encode, sumrank_weight, sumrank_weight_formula, SrWord, SumRankCode};

fn gf4() -> impl Strategy<Value = Gf4> {
    (0u8..4).prop_map(|s| Gf4::from_symbol(s).unwrap())
}

fn gf4_vec(len: usize) -> impl Strategy<Value = Vec<Gf4>> {
    prop::collection::vec(gf4(), len)
}

fn sr_word(len: usize) -> impl Strategy<Value = SrWord> {
    (gf4_vec(len), gf4_vec(len)).prop_map(|(a, b)| SrWord::new(a, b).unwrap())
}

struct Fixture {
    code: SumRankCode,
    dec1: BchDecoder,
    dec2: BchDecoder,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let build = |s: DefiningSet| Arc::new(bch_build(15, BchSpec::DefiningSet(s)).unwrap());
        let c1: Arc<BchCode> = build(DefiningSet::from_cosets(4, 15, &[0, 1, 2, 3]).unwrap());
        let c2: Arc<BchCode> = build(DefiningSet::from_exponents(4, 15, [0, 1, 2, 4, 8]).unwrap());
        Fixture {
            code: SumRankCode::new(c1.code().clone(), c2.code().clone()).unwrap(),
            dec1: BchDecoder::new(c1),
            dec2: BchDecoder::new(c2),
        }
    })
}

proptest! {
    #[test]
    fn field_axioms(m in 1u32..=12, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = FieldContext::shared(m).unwrap();
        let mask = (1u32 << m) - 1;
        let (a, b, c) = (Fe(a & mask), Fe(b & mask), Fe(c & mask));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        if a != Fe::ZERO {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
        }
        prop_assert_eq!(f.pow(a, f.size() as i64).unwrap(), a);
    }

    #[test]
    fn poly_division_identity(a in prop::collection::vec(0u32..256, 0..12), b in prop::collection::vec(0u32..256, 1..6)) {
        let f = FieldContext::shared(8).unwrap();
        let pa = Poly::from_coeffs(a.into_iter().map(Fe).collect());
        let pb = Poly::from_coeffs(b.into_iter().map(Fe).collect());
        prop_assume!(!pb.is_zero());
        let (q, r) = pa.divrem(&f, &pb).unwrap();
        prop_assert_eq!(q.mul(&f, &pb).add(&r), pa);
        prop_assert!(r.degree().is_none_or(|d| d < pb.degree().unwrap()));
    }

    #[test]
    fn sum_rank_weight_matches_closed_form(w in sr_word(20)) {
        let formula = sumrank_weight_formula(w.coeff_x2(), w.coeff_x()).unwrap();
        prop_assert_eq!(sumrank_weight(&w), formula);
        prop_assert!(formula <= 2 * w.len());
    }

    #[test]
    fn sum_rank_distance_is_a_metric(x in sr_word(10), y in sr_word(10), z in sr_word(10)) {
        let d = |a: &SrWord, b: &SrWord| sr_distance(a, b).unwrap();
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z));
        prop_assert_eq!(d(&x, &x), 0);
    }

    #[test]
    fn hamming_weight_bounds_sum_rank_weight(w in sr_word(12)) {
        // max(wt(a1), wt(a2)) ≤ wt_sr ≤ 2·|supp(a1) ∪ supp(a2)|
        let union = (0..w.len()).filter(|&i| w.block(i) != (Gf4::ZERO, Gf4::ZERO)).count();
        let s = sumrank_weight(&w);
        prop_assert!(s <= 2 * union);
        prop_assert!(s >= weight(w.coeff_x()).max(weight(w.coeff_x2())));
    }

    #[test]
    fn some_branch_cancels_a_third_of_the_shared_blocks(w in sr_word(16)) {
        // Over the three β the shared blocks vanish exactly once each, so the
        // branch weights sum to 3·(i1 + i2) + 2·i3.
        let p = ErrorProfile::of(&w);
        let weights: Vec<usize> =
            Gf4::NONZERO.iter().map(|&b| weight(&evaluate_word(&w, b).unwrap())).collect();
        prop_assert_eq!(weights.iter().sum::<usize>(), 3 * (p.i1 + p.i2) + 2 * p.i3);
        let (beta, best) = best_branch(&w);
        prop_assert_eq!(best, *weights.iter().min().unwrap());
        prop_assert_eq!(weight(&evaluate_word(&w, beta).unwrap()), best);
        prop_assert!(best <= p.i1 + p.i2 + 2 * p.i3 / 3);
    }

    #[test]
    fn decoding_within_radius_is_exact(seed in any::<u64>(), w in 0usize..=2) {
        let f = fixture();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bits: Vec<bool> = (0..f.code.f2_dimension()).map(|_| rng.gen()).collect();
        let sent = sr_encode(&f.code, &bits).unwrap();
        let e = sample_error(15, w, seed).unwrap();
        prop_assert_eq!(sumrank_weight(&e), w);
        let out = sr_decode(&f.code, &f.dec1, &f.dec2, &sent.add(&e).unwrap(), 6).unwrap();
        prop_assert_eq!(out.status, SrStatus::Success);
        prop_assert_eq!(out.codeword, sent);
        prop_assert_eq!(out.error, e);
    }

    #[test]
    fn decoder_never_returns_a_distant_codeword(seed in any::<u64>(), w in 3usize..=8) {
        let f = fixture();
        let e = sample_error(15, w, seed).unwrap();
        let out = sr_decode(&f.code, &f.dec1, &f.dec2, &e, 6).unwrap();
        if out.status == SrStatus::Success {
            prop_assert!(f.code.contains(&out.codeword));
            prop_assert!(sr_distance(&out.codeword, &e).unwrap() <= 2);
        }
    }

    #[test]
    fn bch_decoder_corrects_up_to_radius(seed in any::<u64>(), delta in 3usize..=9) {
        let code = Arc::new(bch_build(21, BchSpec::Designed { b: 1, delta }).unwrap());
        let dec = BchDecoder::new(code.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let msg: Vec<Gf4> = (0..code.code().dimension()).map(|_| Gf4::from_symbol(rng.gen_range(0..4)).unwrap()).collect();
        let c = code.code().encode(&msg).unwrap();
        let mut y = c.clone();
        let t = dec.radius();
        let target = rng.gen_range(0..=t);
        let mut hit = 0;
        while hit < target {
            let p = rng.gen_range(0..21);
            if y[p] == c[p] {
                y[p] += Gf4::from_symbol(rng.gen_range(1..4)).unwrap();
                hit += 1;
            }
        }
        let out = dec.decode(&y).unwrap();
        prop_assert!(out.is_success());
        prop_assert_eq!(out.codeword, c);
    }

    #[test]
    fn code_files_round_trip(rows in prop::collection::vec(gf4_vec(9), 1..5)) {
        let code = LinearCode::from_generator(BaseField::Gf4, 9, rows).unwrap();
        let file = CodeFile::new(code.clone());
        let back = CodeFile::parse(&file.to_text()).unwrap();
        prop_assert!(back.component.as_linear().unwrap().same_code(&code));
    }

    #[test]
    fn word_files_round_trip(w in sr_word(7)) {
        prop_assert_eq!(word_from_text(&word_to_text(&w)).unwrap(), w);
    }
}

#[test]
fn designed_distance_holds_on_random_codewords() {
    // [63,35] with BCH bound 14: too large to enumerate, so sample instead.
    let set = DefiningSet::from_cosets(4, 63, &[0, 1, 2, 3, 5, 6, 7, 9, 10, 11]).unwrap();
    let code = bch_build(63, BchSpec::DefiningSet(set)).unwrap();
    let bound = code.defining_set().bch_bound();
    assert_eq!((code.code().dimension(), bound), (35, 14));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10_000 {
        let msg: Vec<Gf4> = (0..35).map(|_| Gf4::from_symbol(rng.gen_range(0..4)).unwrap()).collect();
        let c = code.code().encode(&msg).unwrap();
        assert!(weight(&c) == 0 || weight(&c) >= bound);
    }
}

#[test]
fn small_bch_distances_meet_their_bound() {
    for n in [5usize, 15, 17, 21] {
        for delta in 2..6 {
            let Ok(code) = bch_build(n, BchSpec::Designed { b: 1, delta }) else { continue };
            if code.code().is_zero_code() || 2 * code.code().dimension() > 22 {
                continue;
            }
            let d = min_distance_bruteforce(code.code(), 1 << 22).unwrap().distance;
            assert!(d >= code.defining_set().bch_bound(), "n = {n}, delta = {delta}");
        }
    }
}
