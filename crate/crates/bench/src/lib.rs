//! Seeded point generators shared by the benchmarks.

use perpfit_core::DataPoint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 7;

/// `n` points uniform in the square [−1000, 1000]².
pub fn uniform(n: usize, seed: u64) -> Vec<DataPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| DataPoint::new(rng.gen_range(-1e3..1e3), rng.gen_range(-1e3..1e3)))
        .collect()
}

/// `n` points scattered about the line y = 0.75x + 3 with perpendicular
/// noise of relative size `noise`.
pub fn near_line(n: usize, noise: f64, seed: u64) -> Vec<DataPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (ux, uy) = (0.8, 0.6);
    (0..n)
        .map(|_| {
            let t = rng.gen_range(-500.0..500.0);
            let e = rng.gen_range(-500.0 * noise..500.0 * noise);
            DataPoint::new(t * ux - e * uy, 3.0 + t * uy + e * ux)
        })
        .collect()
}
