//! One-parameter planar motions `K_p / K'_p`.
//!
//! A point `z` of the moving plane is carried to
//! `z'(t) = T(t) + e^{i theta(t)} z`. Both `theta` and `T` are polynomials, so
//! every derivative used here is exact.
//!
//! # The parabolic plane
//!
//! For `p = 0` the unit `i` is a zero divisor. Velocities are
//! `T' + w (0, x)`, so a pole exists only while `T'_x = 0`, and then every
//! velocity and acceleration is parallel to the isotropic direction. The
//! wedge of velocity and acceleration vanishes identically, so inflection
//! and curvature quantities are taken from its derivative in `p` at
//! `p = 0`, with the point held fixed in the fixed plane. This is the value
//! the `p != 0` formulas converge to. The pole itself is the continuous
//! extension of the `p != 0` formula: `T' / i` is read as `(T'_y, 0)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, NullBoundary, Result};
use crate::gc::{
    self, exp_i, mul, norm, quadratic, scalar, wedge_raw, GcNum, Geometry, PAngle, PlaneParam,
    Sector,
};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::trig::sinp;

/// A polynomial one-parameter motion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMotionSpec<T>", into = "RawMotionSpec<T>")]
#[serde(bound(serialize = "T: Scalar + Serialize", deserialize = "T: Scalar + Deserialize<'de>"))]
pub struct MotionSpec<T: Scalar> {
    p: PlaneParam<T>,
    theta: Polynomial<T>,
    tx: Polynomial<T>,
    ty: Polynomial<T>,
}

/// Wire form: `{ "p": .., "theta": [c0, c1, ..], "tx": [..], "ty": [..] }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawMotionSpec<T> {
    p: T,
    theta: Vec<T>,
    tx: Vec<T>,
    ty: Vec<T>,
}

impl<T: Scalar> TryFrom<RawMotionSpec<T>> for MotionSpec<T> {
    type Error = Error;
    fn try_from(r: RawMotionSpec<T>) -> Result<Self> {
        MotionSpec::new(PlaneParam::new(r.p)?, r.theta, r.tx, r.ty)
    }
}

impl<T: Scalar> From<MotionSpec<T>> for RawMotionSpec<T> {
    fn from(m: MotionSpec<T>) -> Self {
        RawMotionSpec {
            p: m.p.value(),
            theta: m.theta.coeffs().to_vec(),
            tx: m.tx.coeffs().to_vec(),
            ty: m.ty.coeffs().to_vec(),
        }
    }
}

/// Velocity decomposition of one point, plus its acceleration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicState<T> {
    pub absolute: GcNum<T>,
    /// `w i (X - I)`, the rotation about the pole.
    pub sliding: GcNum<T>,
    /// Velocity of the moving-plane point at the pole; zero up to rounding.
    pub relative: GcNum<T>,
    pub acceleration: GcNum<T>,
}

/// `J_a(X) = J(I) + w' i (X - I) + p w^2 (X - I)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccelerationTerms<T> {
    pub pole: GcNum<T>,
    pub tangential: GcNum<T>,
    pub normal: GcNum<T>,
}

impl<T: Scalar> AccelerationTerms<T> {
    pub fn total(&self) -> GcNum<T> {
        self.pole + self.tangential + self.normal
    }
}

/// Velocity and acceleration of a point held fixed in the fixed plane, with
/// their derivatives in `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointKinematics<T> {
    pub velocity: GcNum<T>,
    pub acceleration: GcNum<T>,
    pub dvelocity_dp: GcNum<T>,
    pub dacceleration_dp: GcNum<T>,
}

/// Where the trajectory's curvature center lies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurvatureCenter<T> {
    Finite(GcNum<T>),
    /// The point is momentarily an inflection point.
    AtInfinity,
}

/// Per-instant geometry without the fitted inflection diameter.
///
/// The canonical pole frame has the pole at the origin and `tangent_dir`
/// along `(1, 0)`. `tangent_dir` is the pole velocity, oriented so that the
/// inflection locus lies on the positive side of the common normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstantFrame<T> {
    pub p: PlaneParam<T>,
    pub t: T,
    pub pole: GcNum<T>,
    pub w: T,
    pub w_dot: T,
    /// Time derivative of the fixed pole curve.
    pub pole_velocity: GcNum<T>,
    /// Acceleration of the moving-plane point instantaneously at the pole.
    pub pole_accel: GcNum<T>,
    pub tangent_dir: GcNum<T>,
    /// `||pole_velocity||_p / |w|`.
    pub h_analytic: T,
}

impl<T: Scalar> InstantFrame<T> {
    pub fn to_canonical(&self, n: GcNum<T>) -> GcNum<T> {
        // tangent_dir has unit positive quadratic form, so its inverse is its conjugate
        mul(gc::conj(self.tangent_dir), n - self.pole, self.p)
    }

    pub fn from_canonical(&self, c: GcNum<T>) -> GcNum<T> {
        self.pole + mul(self.tangent_dir, c, self.p)
    }

    /// Rotates a canonical-frame vector into the fixed plane.
    pub fn vector_from_canonical(&self, c: GcNum<T>) -> GcNum<T> {
        mul(self.tangent_dir, c, self.p)
    }

    pub fn vector_to_canonical(&self, v: GcNum<T>) -> GcNum<T> {
        mul(gc::conj(self.tangent_dir), v, self.p)
    }

    /// Fixed-plane unit vector of the pole ray at canonical angle `theta`.
    pub fn ray(&self, theta: T) -> GcNum<T> {
        self.vector_from_canonical(exp_i(theta, self.p))
    }
}

/// Instantaneous invariants of the motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstantInvariants<T> {
    pub frame: InstantFrame<T>,
    /// Inflection diameter fitted from `rho*(theta) = h sinp(theta)`.
    pub h: T,
    /// Largest `|rho*_k - h sinp theta_k|` over the fitted rays.
    pub fit_residual: T,
}

impl<T: Scalar> MotionSpec<T> {
    pub fn new(p: PlaneParam<T>, theta: Vec<T>, tx: Vec<T>, ty: Vec<T>) -> Result<Self> {
        let theta = Polynomial::new(theta)?;
        if theta.degree().unwrap_or(0) < 1 {
            return Err(Error::Invalid("rotation angle must have degree at least one".into()));
        }
        Ok(Self { p, theta, tx: Polynomial::new(tx)?, ty: Polynomial::new(ty)? })
    }

    /// Parses `{ "p": .., "theta": [..], "tx": [..], "ty": [..] }`.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error>
    where
        T: for<'de> Deserialize<'de>,
    {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String
    where
        T: Serialize,
    {
        serde_json::to_string(self).expect("motion spec serializes")
    }

    pub fn p(&self) -> PlaneParam<T> {
        self.p
    }

    pub fn theta(&self) -> &Polynomial<T> {
        &self.theta
    }

    pub fn tx(&self) -> &Polynomial<T> {
        &self.tx
    }

    pub fn ty(&self) -> &Polynomial<T> {
        &self.ty
    }

    /// The same path traversed with time `lambda t`.
    pub fn time_scaled(&self, lambda: T) -> Self {
        Self {
            p: self.p,
            theta: self.theta.time_scaled(lambda),
            tx: self.tx.time_scaled(lambda),
            ty: self.ty.time_scaled(lambda),
        }
    }

    /// `(theta, w, w')` at `t`.
    pub fn angle(&self, t: T) -> (T, T, T) {
        self.theta.eval2(t)
    }

    /// `(T, T', T'')` at `t`.
    pub fn translation(&self, t: T) -> (GcNum<T>, GcNum<T>, GcNum<T>) {
        let (x, dx, ddx) = self.tx.eval2(t);
        let (y, dy, ddy) = self.ty.eval2(t);
        (GcNum::new(x, y), GcNum::new(dx, dy), GcNum::new(ddx, ddy))
    }

    pub fn trajectory(&self, z: GcNum<T>, t: T) -> GcNum<T> {
        let (th, _, _) = self.angle(t);
        self.translation(t).0 + mul(exp_i(th, self.p), z, self.p)
    }

    /// Moving-plane coordinates of the fixed-plane point `n` at time `t`.
    pub fn to_moving(&self, n: GcNum<T>, t: T) -> GcNum<T> {
        let (th, _, _) = self.angle(t);
        mul(exp_i(-th, self.p), n - self.translation(t).0, self.p)
    }

    /// Velocity and acceleration of whatever moving-plane point occupies
    /// the fixed-plane position `n` at `t`.
    pub fn kinematics_at(&self, n: GcNum<T>, t: T) -> PointKinematics<T> {
        let (_, w, wd) = self.angle(t);
        let (tr, dtr, ddtr) = self.translation(t);
        let r = n - tr;
        let ir = mul(GcNum::i(), r, self.p);
        let pv = self.p.value();
        PointKinematics {
            velocity: dtr + ir * w,
            acceleration: ddtr + ir * wd + r * (pv * w * w),
            dvelocity_dp: GcNum::new(w * r.y, T::zero()),
            dacceleration_dp: GcNum::new(wd * r.y, T::zero()) + r * (w * w),
        }
    }

    /// Absolute velocity `T' + w i e^{i theta} z`.
    pub fn absolute_velocity(&self, z: GcNum<T>, t: T) -> GcNum<T> {
        self.kinematics_at(self.trajectory(z, t), t).velocity
    }

    /// Absolute acceleration, the exact second derivative of the trajectory.
    pub fn acceleration(&self, z: GcNum<T>, t: T) -> GcNum<T> {
        self.kinematics_at(self.trajectory(z, t), t).acceleration
    }

    /// Full velocity decomposition about the instantaneous pole.
    pub fn velocity(&self, z: GcNum<T>, t: T) -> Result<KinematicState<T>> {
        let pole = self.instantaneous_pole(t)?;
        let (_, w, _) = self.angle(t);
        let n = self.trajectory(z, t);
        let k = self.kinematics_at(n, t);
        let sliding = mul(GcNum::i(), n - pole, self.p) * w;
        Ok(KinematicState {
            absolute: k.velocity,
            sliding,
            relative: k.velocity - sliding,
            acceleration: k.acceleration,
        })
    }

    pub fn acceleration_terms(&self, z: GcNum<T>, t: T) -> Result<AccelerationTerms<T>> {
        let pole = self.instantaneous_pole(t)?;
        let (_, w, wd) = self.angle(t);
        let d = self.trajectory(z, t) - pole;
        Ok(AccelerationTerms {
            pole: self.kinematics_at(pole, t).acceleration,
            tangential: mul(GcNum::i(), d, self.p) * wd,
            normal: d * (self.p.value() * w * w),
        })
    }

    /// Fixed-plane position of the point with zero absolute velocity.
    pub fn instantaneous_pole(&self, t: T) -> Result<GcNum<T>> {
        let (_, w, _) = self.angle(t);
        if w == T::zero() {
            return Err(Error::NoPole);
        }
        let (tr, dtr, _) = self.translation(t);
        let rel = divide_by_i(dtr, self.p)? / w;
        Ok(tr - rel)
    }

    pub fn instant_frame(&self, t: T) -> Result<InstantFrame<T>> {
        let p = self.p;
        let pole = self.instantaneous_pole(t)?;
        let (_, w, wd) = self.angle(t);
        let (tr, dtr, ddtr) = self.translation(t);
        // d/dt of -(T' / i) / w
        let rel_dot = -(divide_by_i(ddtr * w - dtr * wd, p)? / (w * w));
        let u = dtr + rel_dot;
        let pole_accel = self.kinematics_at(pole, t).acceleration;

        let scale = dtr.coord_len() + w.abs() * (pole - tr).coord_len() + rel_dot.coord_len();
        if u.coord_len() <= T::null_tol() * scale || u.coord_len() == T::zero() {
            return Err(Error::DegenerateMotion("pole is stationary, the pole acceleration vanishes"));
        }
        if gc::is_null(u, p) || quadratic(u, p) < T::zero() {
            return match p.geometry() {
                Geometry::Hyperbolic if !gc::is_null(u, p) => Err(Error::SectorMismatch),
                _ => Err(Error::DegenerateMotion("pole velocity is a null direction")),
            };
        }
        let speed = norm(u, p);
        let orient = if w > T::zero() { -T::one() } else { T::one() };
        Ok(InstantFrame {
            p,
            t,
            pole,
            w,
            w_dot: wd,
            pole_velocity: u,
            pole_accel,
            tangent_dir: u * (orient / speed),
            h_analytic: speed / w.abs(),
        })
    }

    pub fn instant_invariants(&self, t: T) -> Result<InstantInvariants<T>> {
        let frame = self.instant_frame(t)?;
        let p = self.p;
        let rays = fit_ray_angles(p);
        let mut num = T::zero();
        let mut den = T::zero();
        let mut samples = Vec::with_capacity(rays.len());
        for &th in &rays {
            let rho = self.inflection_on_ray(&frame, th)?;
            let s = sinp(th, p);
            num = num + rho * s;
            den = den + s * s;
            samples.push((rho, s));
        }
        let h = num / den;
        let fit_residual = samples
            .iter()
            .fold(T::zero(), |m, &(rho, s)| m.max((rho - h * s).abs()));
        if !(fit_residual <= T::lit(1e-8).max(T::epsilon() * T::lit(1e4)) * h.abs()) {
            return Err(Error::DegenerateMotion("inflection locus is not a p-circle"));
        }
        Ok(InstantInvariants { frame, h, fit_residual })
    }

    /// Signed distance `rho*` along the pole ray at canonical angle
    /// `direction` where the trajectory has zero normal acceleration.
    pub fn find_inflection_point(&self, t: T, direction: PAngle<T>) -> Result<T> {
        if direction.sector != Sector::principal(self.p.geometry()) {
            return Err(Error::SectorMismatch);
        }
        let frame = self.instant_frame(t)?;
        self.inflection_on_ray(&frame, direction.theta)
    }

    /// Wedge of velocity and acceleration at the fixed-plane point `n`; for
    /// `p = 0` its derivative in `p`.
    pub fn inflection_indicator(&self, n: GcNum<T>, t: T) -> T {
        let k = self.kinematics_at(n, t);
        match self.p.geometry() {
            Geometry::Parabolic => {
                wedge_raw(k.dvelocity_dp, k.acceleration) + wedge_raw(k.velocity, k.dacceleration_dp)
            }
            _ => wedge_raw(k.velocity, k.acceleration),
        }
    }

    /// Center of the osculating p-circle of the trajectory through the
    /// fixed-plane point `n`.
    pub fn curvature_center_at(&self, n: GcNum<T>, t: T) -> CurvatureCenter<T> {
        let k = self.kinematics_at(n, t);
        let v = k.velocity;
        let (speed2, normal, wedge) = match self.p.geometry() {
            Geometry::Parabolic => {
                // limits of <V,V>/p, iV/p and wedge/p as p -> 0
                let dv = k.dvelocity_dp;
                let speed2 = T::two() * v.x * dv.x - v.y * v.y;
                let normal = GcNum::new(v.y, dv.x);
                (speed2, normal, self.inflection_indicator(n, t))
            }
            _ => {
                let pv = self.p.value();
                let normal = mul(GcNum::i(), v, self.p) / pv;
                (quadratic(v, self.p), normal, wedge_raw(v, k.acceleration))
            }
        };
        if wedge == T::zero() {
            return CurvatureCenter::AtInfinity;
        }
        CurvatureCenter::Finite(n - normal * (speed2 / wedge))
    }

    pub fn curvature_center(&self, z: GcNum<T>, t: T) -> CurvatureCenter<T> {
        self.curvature_center_at(self.trajectory(z, t), t)
    }

    pub(crate) fn inflection_on_ray(&self, frame: &InstantFrame<T>, theta: T) -> Result<T> {
        let x = frame.ray(theta);
        let g = |rho: T| self.inflection_indicator(frame.pole + x * rho, frame.t);
        // near the pole the indicator drowns in cancellation noise for short floats
        let lo = T::lit(1e-9).max(T::lit(1e3) * T::epsilon()) * frame.h_analytic;
        let hi = T::lit(1e3) * frame.h_analytic;
        let steps = 240usize;
        let ratio = (hi / lo).powf(T::one() / T::from_usize(steps).unwrap());
        let mut a = lo;
        let mut ga = g(a);
        if ga == T::zero() {
            return Ok(a);
        }
        for _ in 0..steps {
            let b = (a * ratio).min(hi);
            let gb = g(b);
            if gb == T::zero() {
                return Ok(b);
            }
            if (ga < T::zero()) != (gb < T::zero()) {
                return Ok(bisect(g, a, b, ga));
            }
            a = b;
            ga = gb;
        }
        Err(Error::NoRoot)
    }
}

fn bisect<T: Scalar>(g: impl Fn(T) -> T, mut a: T, mut b: T, mut ga: T) -> T {
    let rel = T::lit(2.5e-13).max(T::lit(4.0) * T::epsilon());
    for _ in 0..300 {
        let m = (a + b) / T::two();
        if m <= a || m >= b || (b - a) <= rel * b.abs() {
            break;
        }
        let gm = g(m);
        if gm == T::zero() {
            return m;
        }
        if (ga < T::zero()) == (gm < T::zero()) {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    (a + b) / T::two()
}

/// `v / i`. For `p = 0` the quotient exists only when `v` has no real part.
pub(crate) fn divide_by_i<T: Scalar>(v: GcNum<T>, p: PlaneParam<T>) -> Result<GcNum<T>> {
    match p.geometry() {
        Geometry::Parabolic => {
            if v.x.abs() <= T::null_tol() * v.coord_len() {
                Ok(GcNum::new(v.y, T::zero()))
            } else {
                Err(Error::NullDivisor(NullBoundary::ImaginaryAxis))
            }
        }
        _ => Ok(mul(gc::inverse(GcNum::i(), p)?, v, p)),
    }
}

/// Canonical ray angles used to fit the inflection diameter.
pub fn fit_ray_angles<T: Scalar>(p: PlaneParam<T>) -> Vec<T> {
    let n = 6usize;
    (1..=n)
        .map(|k| {
            let k = T::from_usize(k).unwrap();
            match p.geometry() {
                Geometry::Elliptic => k * T::PI() / (p.sqrt_abs() * T::from_usize(n + 1).unwrap()),
                _ => k * T::lit(0.2) / T::one().max(p.sqrt_abs()),
            }
        })
        .collect()
}

/// `-<J(I), X>_p / (p w^2)` for `p != 0`: the signed inflection distance on
/// the pole ray with fixed-plane unit direction `x`.
pub(crate) fn rho_star_from_pole_accel<T: Scalar>(frame: &InstantFrame<T>, x: GcNum<T>) -> T {
    let w2 = frame.w * frame.w;
    match frame.p.geometry() {
        Geometry::Parabolic => {
            let jc = frame.vector_to_canonical(frame.pole_accel);
            let xc = frame.vector_to_canonical(x);
            jc.y * xc.y / w2
        }
        _ => -scalar(frame.pole_accel, x, frame.p) / (frame.p.value() * w2),
    }
}
