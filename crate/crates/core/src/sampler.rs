//! Seeded Monte Carlo simulation of measurement outcomes.
//!
//! Sampling is driven by SplitMix64 (Steele, Lea & Flood's 64-bit mixer,
//! the `java.util.SplittableRandom` finalizer), chosen because its output
//! sequence is fixed by the algorithm alone: the same seed produces the
//! same report on every platform and in every release.

use std::num::NonZeroU64;

use serde::Serialize;

use crate::bloch::{BlochState, PovmSet};
use crate::error::Result;

/// SplitMix64 pseudorandom generator. Deterministic, seedable, and
/// trivially reproducible; not cryptographic.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 random mantissa bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Empirical outcome frequencies from repeated measurement of one state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleReport {
    /// Trials assigned to each outcome, in set order; sums to `n`.
    pub counts: Vec<u64>,
    /// Total number of trials.
    pub n: u64,
    /// `counts[i] / n`.
    pub frequencies: Vec<f64>,
    /// The exact distribution the samples were drawn from.
    pub expected: Vec<f64>,
    /// `max_i |frequencies[i] - expected[i]|`.
    pub max_abs_deviation: f64,
    /// Seed the report was generated from.
    pub seed: u64,
}

/// Draw `n` independent outcomes from the set's distribution on `state`.
///
/// Identical inputs produce identical reports. Sampling inverts the
/// cumulative distribution with strict inequality, so an outcome with
/// probability zero is never selected; any residual float mass at the top
/// of the cumulative sum falls to the last outcome with nonzero
/// probability.
pub fn sample_outcomes(
    set: &PovmSet,
    state: &BlochState,
    n: NonZeroU64,
    seed: u64,
) -> Result<SampleReport> {
    let expected = set.distribution(state)?;
    let cumulative: Vec<f64> = expected
        .iter()
        .scan(0.0, |acc, p| {
            *acc += p;
            Some(*acc)
        })
        .collect();
    let last_nonzero = expected
        .iter()
        .rposition(|&p| p > 0.0)
        .expect("a valid distribution has positive mass");

    let mut rng = SplitMix64::new(seed);
    let mut counts = vec![0u64; expected.len()];
    for _ in 0..n.get() {
        let u = rng.next_f64();
        let outcome = cumulative
            .iter()
            .position(|&c| u < c)
            .unwrap_or(last_nonzero);
        counts[outcome] += 1;
    }

    let total = n.get();
    let frequencies: Vec<f64> = counts.iter().map(|&c| c as f64 / total as f64).collect();
    let max_abs_deviation = frequencies
        .iter()
        .zip(&expected)
        .map(|(f, p)| (f - p).abs())
        .fold(0.0, f64::max);

    Ok(SampleReport {
        counts,
        n: total,
        frequencies,
        expected,
        max_abs_deviation,
        seed,
    })
}
