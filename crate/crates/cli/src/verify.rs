//! Seeded property battery over a sweep of plane parameters.

use std::collections::BTreeMap;
use std::time::Instant;

use cpkin::bobillier::{bobillier_kinematic_check, bobillier_residual, rho_star_kinematic, BobillierConfig};
use cpkin::euler_savary::{collinearity_residual, inversion_image, measure_station, tangent_wedge, PoleRayStation};
use cpkin::gc::{exp_i, mul, quadratic, GcNum};
use cpkin::trig::{cosp, p_trig_derivatives, sinp};
use cpkin::{PAngle, PlaneParam};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub const DEFAULT_P: [f64; 5] = [-3.0, -1.0, 0.0, 1.0, 3.0];

/// Motion-based checks run on every `MOTION_STRIDE`-th case offset.
pub const MOTION_STRIDE: usize = 4;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub p_values: Vec<f64>,
    pub seed: u64,
    pub cases: usize,
    pub tol: f64,
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { p_values: DEFAULT_P.to_vec(), seed: 42, cases: 10_000, tol: 1e-8, timing: false }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Failure {
    pub p: f64,
    pub offset: usize,
    pub check: &'static str,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub p_values: Vec<f64>,
    pub seed: u64,
    pub cases_run: usize,
    pub tolerance: f64,
    pub max_abs_residual: f64,
    pub failures: Vec<Failure>,
    /// Milliseconds per check; only filled on request so reports stay reproducible.
    pub timing_ms: Option<BTreeMap<&'static str, f64>>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The Bobillier evaluation under test; swappable to check that the battery
/// notices a broken formula.
pub type ResidualFn = fn(&BobillierConfig<f64>) -> f64;

pub const CHECKS: [&str; 7] = [
    "p_trig_identity",
    "p_trig_derivative",
    "norm_multiplicativity",
    "bobillier_circle",
    "route_equivalence",
    "kinematic_bobillier",
    "collinearity",
];

pub fn run_verify(opts: &VerifyOptions) -> VerifyReport {
    run_verify_with(opts, bobillier_residual)
}

pub fn run_verify_with(opts: &VerifyOptions, residual: ResidualFn) -> VerifyReport {
    let mut cells: Vec<(usize, usize)> = Vec::with_capacity(opts.p_values.len() * opts.cases);
    for pi in 0..opts.p_values.len() {
        cells.extend((0..opts.cases).map(|k| (pi, k)));
    }
    let results: Vec<CellResult> = cells
        .par_iter()
        .map(|&(pi, k)| run_cell(opts.p_values[pi], cell_seed(opts.seed, pi, k), k, residual, opts.timing))
        .collect();

    let mut max_abs = 0.0f64;
    let mut failures = Vec::new();
    let mut timing: BTreeMap<&'static str, f64> = BTreeMap::new();
    for (&(pi, k), cell) in cells.iter().zip(&results) {
        for &(check, r, ms) in &cell.checks {
            let r = if r.is_nan() { f64::INFINITY } else { r.abs() };
            max_abs = max_abs.max(r);
            if !(r <= opts.tol) {
                failures.push(Failure { p: opts.p_values[pi], offset: k, check, residual: r });
            }
            *timing.entry(check).or_default() += ms;
        }
    }
    failures.sort_by(|a, b| a.p.total_cmp(&b.p).then(a.offset.cmp(&b.offset)).then(a.check.cmp(b.check)));
    VerifyReport {
        p_values: opts.p_values.clone(),
        seed: opts.seed,
        cases_run: opts.cases,
        tolerance: opts.tol,
        max_abs_residual: max_abs,
        failures,
        timing_ms: opts.timing.then_some(timing),
    }
}

fn cell_seed(seed: u64, pi: usize, k: usize) -> u64 {
    // splitmix64 finaliser over the packed cell index
    let mut z = seed ^ ((pi as u64) << 48) ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct CellResult {
    checks: Vec<(&'static str, f64, f64)>,
}

fn run_cell(p: f64, seed: u64, offset: usize, residual: ResidualFn, timing: bool) -> CellResult {
    let pl = PlaneParam::new(p).expect("finite p");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(CHECKS.len());
    let mut timed = |name: &'static str, f: &mut dyn FnMut() -> f64| {
        let start = timing.then(Instant::now);
        let r = f();
        let ms = start.map_or(0.0, |s| s.elapsed().as_secs_f64() * 1e3);
        out.push((name, r, ms));
    };

    timed("p_trig_identity", &mut || {
        let th = rng.gen_range(-10.0..10.0);
        let (c, s) = (cosp(th, pl), sinp(th, pl));
        (c * c - p * s * s - 1.0) / (c * c).max(1.0)
    });
    timed("p_trig_derivative", &mut || {
        let th = rng.gen_range(-2.0..2.0);
        let h = 1e-5;
        let (dc, ds) = p_trig_derivatives(th, pl);
        let fc = (cosp(th + h, pl) - cosp(th - h, pl)) / (2.0 * h);
        let fs = (sinp(th + h, pl) - sinp(th - h, pl)) / (2.0 * h);
        ((dc - fc).abs() / (1.0 + dc.abs())).max((ds - fs).abs() / (1.0 + ds.abs()))
    });
    timed("norm_multiplicativity", &mut || {
        let mut g = || GcNum::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let (a, b) = (g(), g());
        let scale = |z: GcNum<f64>| z.x * z.x + p.abs() * z.y * z.y;
        (quadratic(mul(a, b, pl), pl) - quadratic(a, pl) * quadratic(b, pl)) / (scale(a) * scale(b)).max(f64::MIN_POSITIVE)
    });
    timed("bobillier_circle", &mut || {
        let h = rng.gen_range(0.01..50.0);
        let th = [(); 3].map(|_| ray_angle(p, rng.gen_range(0.0..1.0)));
        match BobillierConfig::from_raw(pl, th.map(|t| h * sinp(t, pl)), th) {
            Ok(cfg) => residual(&cfg) / h,
            Err(_) => f64::INFINITY,
        }
    });

    if offset % MOTION_STRIDE == 0 {
        let m = cpkin::synthetic::random_motion(pl, || rng.gen_range(-1.0..1.0), 1000);
        let th = [0.15, 0.5, 0.85].map(|u| ray_angle(p, u));
        let rho_scale = rng.gen_range(0.2..2.0);
        let motion = m.as_ref().and_then(|m| m.instant_invariants(0.0).ok().map(|inv| (m, inv)));
        timed("route_equivalence", &mut || {
            let Some((m, inv)) = &motion else { return f64::INFINITY };
            let a = PAngle::principal(th[1], pl);
            let geo = measure_station(m, 0.0, a, rho_scale * inv.h).map(|s| s.rho_star);
            let kin = rho_star_kinematic(inv, exp_i(th[1], pl), pl);
            match (geo, kin) {
                (Ok(g), Ok(k)) => (g - k) / inv.h,
                _ => f64::INFINITY,
            }
        });
        timed("kinematic_bobillier", &mut || {
            let Some((m, inv)) = &motion else { return f64::INFINITY };
            bobillier_kinematic_check(m, 0.0, th.map(|t| PAngle::principal(t, pl))).map_or(f64::INFINITY, |r| r / inv.h)
        });
        timed("collinearity", &mut || {
            let Some((m, inv)) = &motion else { return f64::INFINITY };
            let images: Result<Vec<_>, cpkin::Error> = th
                .iter()
                .map(|&t| {
                    let a = PAngle::principal(t, pl);
                    let rho = m.find_inflection_point(0.0, a)?;
                    inversion_image(&PoleRayStation::from_rho_star(a, rho, pl)?)
                })
                .collect();
            let Ok(q) = images else { return f64::INFINITY };
            let h2 = inv.h * inv.h;
            (collinearity_residual(&q[0], &q[1], &q[2]) * h2).abs().max(tangent_wedge(&q[0], &q[2]).abs())
        });
    }
    CellResult { checks: out }
}

/// Canonical ray angle in the upper half of the principal sector, `u` in `[0, 1)`.
/// Angles stay below `pi` so that `sinp` stays of order one as `p -> 0-`.
pub fn ray_angle(p: f64, u: f64) -> f64 {
    if p < 0.0 {
        let span = (std::f64::consts::PI / (-p).sqrt()).min(std::f64::consts::PI);
        span * (0.05 + 0.9 * u)
    } else {
        (0.05 + 1.5 * u) / 1f64.max(p.sqrt())
    }
}
