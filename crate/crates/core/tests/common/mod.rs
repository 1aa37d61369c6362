#![allow(dead_code)]

use eqos_core::arrangement::{parse_arrangement, AffineForm, Arrangement};
use eqos_core::fixtures;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const RANDOM_COUNT: usize = 16;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random arrangement with integer coefficients in `[-3, 3]`; redraws
/// forms that are zero or repeat an earlier hyperplane.
pub fn random_arrangement(rng: &mut ChaCha8Rng, n: usize, d: usize, central: bool) -> Arrangement {
    let mut forms: Vec<AffineForm> = Vec::new();
    while forms.len() < n {
        let normal: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
        let offset = if central { 0 } else { rng.gen_range(-3..=3) };
        let f = AffineForm::from_ints(&normal, offset);
        let mut trial = forms.clone();
        trial.push(f);
        if Arrangement::new(d, trial.clone()).is_ok() {
            forms = trial;
        }
    }
    Arrangement::new(d, forms).expect("validated")
}

/// The arrangement fixtures followed by seeded random arrangements with at
/// most 6 hyperplanes in dimension at most 3; every fourth one is central.
pub fn corpus() -> Vec<(String, Arrangement)> {
    let mut out: Vec<(String, Arrangement)> = fixtures::ARRANGEMENTS
        .iter()
        .map(|(name, text)| (name.to_string(), parse_arrangement(text).expect("fixture parses")))
        .collect();
    let mut r = rng(0x5eed);
    for k in 0..RANDOM_COUNT {
        let central = k % 4 == 3;
        let d = if central { 3 } else { r.gen_range(1..=3) };
        let n = r.gen_range(if d == 1 { 2 } else { 3 }..=6);
        out.push((format!("random_{k}"), random_arrangement(&mut r, n, d, central)));
    }
    out
}
