//! Random polynomial motions with a well-conditioned instant at `t = 0`.
//!
//! The generators take a source of uniform samples in `[-1, 1)` so callers
//! choose their own RNG.

use crate::gc::{Geometry, PlaneParam};
use crate::motion::MotionSpec;
use crate::scalar::Scalar;

/// Diameter range accepted for a synthetic instant.
pub const H_RANGE: (f64, f64) = (0.05, 20.0);

/// Cubic motion whose instant at `t = 0` has a pole, a non-null pole
/// velocity in the principal sector and an inflection diameter within
/// [`H_RANGE`]. For `p = 0` the first translation component is constant,
/// which keeps a pole at every instant. Gives up after `attempts` draws.
pub fn random_motion<T: Scalar>(
    p: PlaneParam<T>,
    mut draw: impl FnMut() -> T,
    attempts: usize,
) -> Option<MotionSpec<T>> {
    let lit = T::lit;
    for _ in 0..attempts {
        let mut d = || draw();
        let w0 = {
            let s = d();
            let mag = lit(0.6) + lit(0.45) * (s.abs() * lit(2.0));
            if s < T::zero() { -mag } else { mag }
        };
        let theta = vec![d(), w0, lit(0.5) * d(), lit(0.3) * d()];
        let tx = match p.geometry() {
            Geometry::Parabolic => vec![d()],
            _ => vec![d(), d(), lit(0.5) * d(), lit(0.3) * d()],
        };
        let ty = vec![d(), d(), lit(0.5) * d(), lit(0.3) * d()];
        let Ok(m) = MotionSpec::new(p, theta, tx, ty) else { continue };
        let Ok(inv) = m.instant_invariants(T::zero()) else { continue };
        let h = inv.h;
        if h >= lit(H_RANGE.0) && h <= lit(H_RANGE.1) {
            return Some(m);
        }
    }
    None
}
