#![allow(dead_code)]

use cpkin::{MotionSpec, PlaneParam};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SWEEP: [f64; 7] = [-3.0, -1.0, -0.4, 0.0, 0.4, 1.0, 3.0];

pub fn pp(p: f64) -> PlaneParam<f64> {
    PlaneParam::new(p).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn battery(p: f64, n: usize, seed: u64) -> Vec<MotionSpec<f64>> {
    let mut r = rng(seed);
    (0..n)
        .map(|_| cpkin::synthetic::random_motion(pp(p), || r.gen_range(-1.0..1.0), 1000).expect("motion"))
        .collect()
}

/// Canonical ray angles strictly inside the principal sector's upper half.
pub fn ray_angle(p: f64, u: f64) -> f64 {
    if p < 0.0 {
        let half = std::f64::consts::PI / (-p).sqrt();
        half * (0.05 + 0.9 * u)
    } else {
        (0.05 + 1.5 * u) / 1f64.max(p.sqrt())
    }
}
