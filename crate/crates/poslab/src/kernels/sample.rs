//! Deterministic random point sets for stress runs.
//!
//! Points are dyadic-ish rationals `a / 64` with `a` drawn uniformly from
//! `[1, 1280]`, so they range over `(0, 20]` on a grid fine enough to hit
//! fractional cases but coarse enough that reductions stay small. The
//! generator is a seeded stream cipher, so the same seed yields the same
//! points on every platform.

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rug::Rational;
use std::collections::BTreeSet;

/// Draws `count` distinct points `a/64`, `a` uniform in `[1, 1280]`,
/// returned strictly increasing. `count` must be at most 1280.
pub fn sample_points(seed: u64, count: usize) -> Vec<Rational> {
    assert!(count <= 1280, "only 1280 distinct grid points exist");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = Uniform::new_inclusive(1u32, 1280);
    let mut chosen: BTreeSet<u32> = BTreeSet::new();
    while chosen.len() < count {
        chosen.insert(dist.sample(&mut rng));
    }
    chosen
        .into_iter()
        .map(|a| Rational::from((a, 64u32)))
        .collect()
}
