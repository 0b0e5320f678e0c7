//! p-trigonometric kernel.
//!
//! `cosp` and `sinp` unify the circular (`p < 0`), linear (`p = 0`) and
//! hyperbolic (`p > 0`) families. The kernels never reduce their argument:
//! kinematics differentiates `theta(t)` through them and needs the raw value.

use crate::error::{Error, Result};
use crate::gc::{Geometry, PlaneParam};
use crate::scalar::Scalar;

/// p-cosine.
pub fn cosp<T: Scalar>(theta: T, p: PlaneParam<T>) -> T {
    match p.geometry() {
        Geometry::Elliptic => (theta * p.sqrt_abs()).cos(),
        Geometry::Parabolic => T::one(),
        Geometry::Hyperbolic => (theta * p.sqrt_abs()).cosh(),
    }
}

/// p-sine.
pub fn sinp<T: Scalar>(theta: T, p: PlaneParam<T>) -> T {
    let k = p.sqrt_abs();
    match p.geometry() {
        Geometry::Elliptic => (theta * k).sin() / k,
        Geometry::Parabolic => theta,
        Geometry::Hyperbolic => (theta * k).sinh() / k,
    }
}

/// p-tangent, `sinp / cosp`.
///
/// The p-cosine only vanishes in the elliptic plane; there the quotient is
/// rejected once `|cosp|` is within a few ulps of the argument's magnitude.
pub fn tanp<T: Scalar>(theta: T, p: PlaneParam<T>) -> Result<T> {
    let c = cosp(theta, p);
    if p.geometry() == Geometry::Elliptic {
        let arg = (theta * p.sqrt_abs()).abs();
        let guard = T::lit(16.0) * T::epsilon() * T::one().max(arg);
        if c.abs() <= guard {
            return Err(Error::PoleOfTangent);
        }
    }
    Ok(sinp(theta, p) / c)
}

/// Derivatives with respect to the angle: `(d cosp, d sinp) = (p sinp, cosp)`.
pub fn p_trig_derivatives<T: Scalar>(theta: T, p: PlaneParam<T>) -> (T, T) {
    (p.value() * sinp(theta, p), cosp(theta, p))
}

/// Inverse p-tangent.
///
/// Elliptic: the principal value in `(-pi/(2 sqrt|p|), pi/(2 sqrt|p|)]`.
/// Hyperbolic: defined for `|v| sqrt(p) < 1`, the tangent range of one sector.
pub fn atanp<T: Scalar>(v: T, p: PlaneParam<T>) -> Result<T> {
    let k = p.sqrt_abs();
    match p.geometry() {
        Geometry::Elliptic => Ok((v * k).atan() / k),
        Geometry::Parabolic => Ok(v),
        Geometry::Hyperbolic => {
            let s = v * k;
            if !(s.abs() < T::one()) {
                return Err(Error::OutOfRange(v.to_f64().unwrap_or(f64::NAN)));
            }
            Ok(s.atanh() / k)
        }
    }
}
