//! Euler-Savary relation, inversion images of inflection points and the
//! collinearity law.
//!
//! Distances along a pole ray are signed: positive along the unit direction
//! `X`, negative on the far side of the pole. Stations are expressed in the
//! canonical pole frame of their instant (pole at the origin, common tangent
//! along the real axis).

use crate::error::{Error, Result};
use crate::gc::{self, mul, scalar, wedge_raw, GcNum, PAngle, PlaneParam};
use crate::motion::{divide_by_i, CurvatureCenter, MotionSpec};
use crate::scalar::Scalar;
use crate::trig::sinp;

/// A distance that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Radius<T> {
    Finite(T),
    Infinite,
}

impl<T: Scalar> Radius<T> {
    fn from_reciprocal(inv: T, scale: T) -> Self {
        if inv.abs() <= T::lit(8.0) * T::epsilon() * scale {
            Radius::Infinite
        } else {
            Radius::Finite(T::one() / inv)
        }
    }

    /// Finite value, or `+inf`.
    pub fn value(self) -> T {
        match self {
            Radius::Finite(v) => v,
            Radius::Infinite => T::infinity(),
        }
    }

    pub fn recip(self) -> T {
        match self {
            Radius::Finite(v) => T::one() / v,
            Radius::Infinite => T::zero(),
        }
    }
}

/// Solves `1/r' - 1/r = sinp(theta) (1/a' - 1/a)` for `a'`.
///
/// `r` is the curvature radius of the moving pole curve and `r_prime` that of
/// the fixed one; either may be infinite. `a` is the distance of a point on
/// the ray, `a'` that of its trajectory's curvature center.
pub fn euler_savary_solve<T: Scalar>(
    r: T,
    r_prime: T,
    a: T,
    theta: PAngle<T>,
    p: PlaneParam<T>,
) -> Result<Radius<T>> {
    if r == T::zero() || r_prime == T::zero() {
        return Err(Error::Invalid("pole curve radius must be non-zero".into()));
    }
    if a == T::zero() {
        return Err(Error::ZeroDistance);
    }
    let s = sinp(theta.theta, p);
    if s == T::zero() {
        return Err(Error::TangentRay);
    }
    let shift = (T::one() / r_prime - T::one() / r) / s;
    let inv = T::one() / a + shift;
    Ok(Radius::from_reciprocal(inv, (T::one() / a).abs().max(shift.abs())))
}

/// `rho* = 1 / (1/rho - 1/rho')`. An infinite `rho'` gives `rho* = rho`.
pub fn rho_star_geometric<T: Scalar>(rho: T, rho_prime: T) -> Result<T> {
    if rho == T::zero() || rho_prime == T::zero() {
        return Err(Error::ZeroDistance);
    }
    if rho == rho_prime {
        return Err(Error::CircularTrajectory);
    }
    Ok(T::one() / (T::one() / rho - T::one() / rho_prime))
}

/// One pole ray with the distances measured on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleRayStation<T> {
    /// Unit ray direction in the canonical frame.
    pub x: GcNum<T>,
    pub theta: PAngle<T>,
    pub rho: Option<T>,
    /// May be infinite when the point is an inflection point.
    pub rho_prime: Option<T>,
    pub rho_star: T,
}

impl<T: Scalar> PoleRayStation<T> {
    /// Station whose only datum is the inflection distance.
    pub fn from_rho_star(theta: PAngle<T>, rho_star: T, p: PlaneParam<T>) -> Result<Self> {
        Ok(Self { x: ray_unit(theta, p)?, theta, rho: None, rho_prime: None, rho_star })
    }

    /// Station of a point at `rho` whose curvature center lies at `rho_prime`.
    pub fn from_distances(theta: PAngle<T>, rho: T, rho_prime: T, p: PlaneParam<T>) -> Result<Self> {
        Ok(Self {
            x: ray_unit(theta, p)?,
            theta,
            rho: Some(rho),
            rho_prime: Some(rho_prime),
            rho_star: rho_star_geometric(rho, rho_prime)?,
        })
    }
}

fn ray_unit<T: Scalar>(theta: PAngle<T>, p: PlaneParam<T>) -> Result<GcNum<T>> {
    let x = gc::unit_in_sector(theta.theta, theta.sector, p);
    if gc::is_null(x, p) {
        return Err(Error::NullDivisor(crate::error::NullBoundary::Origin));
    }
    Ok(x)
}

/// Image `Q = X / rho*` of an inflection point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InversionImage<T> {
    pub q: GcNum<T>,
    /// Coordinate on the common normal.
    pub height: T,
}

pub fn inversion_image<T: Scalar>(station: &PoleRayStation<T>) -> Result<InversionImage<T>> {
    let rs = station.rho_star;
    if !rs.is_finite() || rs == T::zero() {
        return Err(Error::InfiniteRadius);
    }
    let q = station.x / rs;
    Ok(InversionImage { q, height: q.y })
}

/// `Q1 ^ Q2 + Q3 ^ Q1 + Q2 ^ Q3`, twice the signed area of the triangle.
pub fn collinearity_residual<T: Scalar>(
    q1: &InversionImage<T>,
    q2: &InversionImage<T>,
    q3: &InversionImage<T>,
) -> T {
    wedge_raw(q1.q, q2.q) + wedge_raw(q3.q, q1.q) + wedge_raw(q2.q, q3.q)
}

/// Wedge of the unit chord direction `Q1 -> Q2` with the common tangent; zero
/// when the chord is parallel to it.
pub fn tangent_wedge<T: Scalar>(q1: &InversionImage<T>, q2: &InversionImage<T>) -> T {
    let d = q2.q - q1.q;
    let len = d.coord_len();
    if len == T::zero() {
        return T::zero();
    }
    wedge_raw(GcNum::one(), d / len)
}

/// Measures the station of the point at canonical distance `rho` on the ray
/// `theta` at time `t`: the curvature center of its trajectory gives `rho'`.
pub fn measure_station<T: Scalar>(
    m: &MotionSpec<T>,
    t: T,
    theta: PAngle<T>,
    rho: T,
) -> Result<PoleRayStation<T>> {
    let p = m.p();
    let frame = m.instant_frame(t)?;
    let x = ray_unit(theta, p)?;
    let n = frame.from_canonical(x * rho);
    let rho_prime = match m.curvature_center_at(n, t) {
        CurvatureCenter::Finite(g) => scalar(frame.to_canonical(g), x, p) / scalar(x, x, p),
        CurvatureCenter::AtInfinity => T::infinity(),
    };
    PoleRayStation::from_distances(theta, rho, rho_prime, p)
}

/// Curvature radii `(r, r')` of the moving and fixed pole curves at `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleCurveRadii<T> {
    pub moving: Radius<T>,
    pub fixed: Radius<T>,
}

/// Pole-curve radii at `t` from the exact derivatives of the pole loci.
///
/// Curvature is `(c' ^ c'') / c'_x^3` in the canonical frame, where both
/// curves are tangent to the real axis. The moving curve is drawn where the
/// moving plane sits at `t`; it has the same velocity as the fixed one.
/// Curvatures below `1e-9 / h` read as straight pole curves.
pub fn pole_curve_radii<T: Scalar>(m: &MotionSpec<T>, t: T) -> Result<PoleCurveRadii<T>> {
    let p = m.p();
    let frame = m.instant_frame(t)?;
    let (_, w, w1) = m.angle(t);
    let (_, _, w2) = m.theta().derivative().eval2(t);
    let d = |q: &crate::poly::Polynomial<T>| q.derivative().eval2(t);
    let (x1, x2, x3) = d(m.tx());
    let (y1, y2, y3) = d(m.ty());
    let l1 = divide_by_i(GcNum::new(x1, y1), p)?;
    let l2 = divide_by_i(GcNum::new(x2, y2), p)?;
    let l3 = divide_by_i(GcNum::new(x3, y3), p)?;
    let ww = w * w;
    // R = -L(T') / w and its first two derivatives
    let r0 = -(l1 / w);
    let r1 = l1 * (w1 / ww) - l2 / w;
    let r2 = -(l3 / w) + l2 * (T::two() * w1 / ww) + l1 * (w2 / ww - T::two() * w1 * w1 / (ww * w));
    let i = GcNum::i();
    let fixed_v = GcNum::new(x1, y1) + r1;
    let fixed_a = GcNum::new(x2, y2) + r2;
    let moving_a = r2 - mul(i, r0, p) * w1 - mul(i, r1, p) * (T::two() * w) + r0 * (p.value() * ww);
    let k = |a: GcNum<T>| {
        let v = frame.vector_to_canonical(fixed_v);
        let a = frame.vector_to_canonical(a);
        let k = wedge_raw(v, a) / (v.x * v.x * v.x);
        if k.abs() * frame.h_analytic <= T::lit(1e-9) {
            Radius::Infinite
        } else {
            Radius::Finite(T::one() / k)
        }
    };
    Ok(PoleCurveRadii { moving: k(moving_a), fixed: k(fixed_a) })
}
