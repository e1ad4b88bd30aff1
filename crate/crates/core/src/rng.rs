//! Reproducible random streams.
//!
//! Every sampler draws from ChaCha8 seeded with `seed` and switched to stream
//! `chunk`, one stream per block of [`CHUNK_SIZE`] draws. Chunks are generated
//! in parallel and concatenated in chunk order, so results depend only on the
//! seed and never on the thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub const CHUNK_SIZE: usize = 4096;

pub fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

/// Runs `f(rng, chunk_index, items_in_chunk)` for every chunk of `count` items.
pub(crate) fn par_chunks<R, F>(count: usize, seed: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(&mut ChaCha8Rng, usize, usize) -> R + Sync,
{
    let chunks = count.div_ceil(CHUNK_SIZE);
    (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = chunk_rng(seed, k as u64);
            let n = CHUNK_SIZE.min(count - k * CHUNK_SIZE);
            f(&mut rng, k, n)
        })
        .collect()
}

/// Inverse-CDF sampler for digits `1..=m` with the given probabilities.
#[derive(Clone, Debug)]
pub struct DigitSampler {
    cumulative: Vec<f64>,
}

impl DigitSampler {
    pub fn new(weights: &[f64]) -> Self {
        let total: f64 = weights.iter().sum();
        let mut acc = 0.0;
        let cumulative = weights
            .iter()
            .map(|w| {
                acc += w / total;
                acc
            })
            .collect();
        Self { cumulative }
    }

    pub fn uniform(m: usize) -> Self {
        Self::new(&vec![1.0; m])
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u8 {
        let u: f64 = rng.gen();
        let i = self.cumulative.partition_point(|&c| c <= u);
        (i.min(self.cumulative.len() - 1) + 1) as u8
    }

    pub fn fill<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [u8]) {
        for d in out {
            *d = self.sample(rng);
        }
    }
}
