//! Arithmetic and metric structure of the generalized complex plane `C_p`.
//!
//! A [`GcNum`] is a bare coordinate pair; it does not remember which plane it
//! belongs to. Every operation that depends on the geometry takes the
//! [`PlaneParam`] explicitly, so a single code path serves all `p`.

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, NullBoundary, Result};
use crate::scalar::Scalar;
use crate::trig::{atanp, cosp, sinp};

/// Sign class of `p`. The classification is exact: no band around zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Geometry {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// The plane parameter `p` with `i^2 = p`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct PlaneParam<T>(T);

impl<T: Scalar> PlaneParam<T> {
    pub fn new(p: T) -> Result<Self> {
        if !p.is_finite() {
            return Err(Error::Invalid(format!("plane parameter must be finite, got {p}")));
        }
        Ok(Self(p))
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }

    #[inline]
    pub fn geometry(self) -> Geometry {
        if self.0 < T::zero() {
            Geometry::Elliptic
        } else if self.0 > T::zero() {
            Geometry::Hyperbolic
        } else {
            Geometry::Parabolic
        }
    }

    /// `sqrt(|p|)`.
    #[inline]
    pub fn sqrt_abs(self) -> T {
        self.0.abs().sqrt()
    }
}

impl<T: Scalar + Serialize> Serialize for PlaneParam<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for PlaneParam<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = T::deserialize(d)?;
        Self::new(v).map_err(serde::de::Error::custom)
    }
}

/// A point or vector `x + iy` of the generalized complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct GcNum<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> GcNum<T> {
    #[inline]
    pub const fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    #[inline]
    pub fn one() -> Self {
        Self::new(T::one(), T::zero())
    }

    /// The imaginary unit.
    #[inline]
    pub fn i() -> Self {
        Self::new(T::zero(), T::one())
    }

    #[inline]
    pub fn scale(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Euclidean length of the coordinate pair, used only for scale estimates.
    pub fn coord_len(self) -> T {
        self.x.hypot(self.y)
    }
}

impl<T: Scalar> Add for GcNum<T> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Scalar> AddAssign for GcNum<T> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<T: Scalar> Sub for GcNum<T> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Scalar> SubAssign for GcNum<T> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<T: Scalar> Neg for GcNum<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<T: Scalar> Mul<T> for GcNum<T> {
    type Output = Self;
    #[inline]
    fn mul(self, s: T) -> Self {
        self.scale(s)
    }
}

impl<T: Scalar> Div<T> for GcNum<T> {
    type Output = Self;
    #[inline]
    fn div(self, s: T) -> Self {
        Self::new(self.x / s, self.y / s)
    }
}

/// Region of the plane an angle parameterizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sector {
    Elliptic,
    GalileanRight,
    GalileanLeft,
    HyperbolicRight,
    HyperbolicUp,
    HyperbolicLeft,
    HyperbolicDown,
}

impl Sector {
    /// The sector containing `(1, 0)` for the given geometry.
    pub fn principal(g: Geometry) -> Self {
        match g {
            Geometry::Elliptic => Sector::Elliptic,
            Geometry::Parabolic => Sector::GalileanRight,
            Geometry::Hyperbolic => Sector::HyperbolicRight,
        }
    }

    fn belongs_to(self, g: Geometry) -> bool {
        matches!(
            (self, g),
            (Sector::Elliptic, Geometry::Elliptic)
                | (Sector::GalileanRight | Sector::GalileanLeft, Geometry::Parabolic)
                | (
                    Sector::HyperbolicRight
                        | Sector::HyperbolicUp
                        | Sector::HyperbolicLeft
                        | Sector::HyperbolicDown,
                    Geometry::Hyperbolic
                )
        )
    }
}

/// A p-rotation angle together with the sector it lives in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PAngle<T> {
    pub theta: T,
    pub sector: Sector,
}

impl<T: Scalar> PAngle<T> {
    /// Angle in the sector containing the real axis. Elliptic angles are reduced.
    pub fn principal(theta: T, p: PlaneParam<T>) -> Self {
        let g = p.geometry();
        let theta = if g == Geometry::Elliptic {
            reduce_elliptic(theta, p)
        } else {
            theta
        };
        Self { theta, sector: Sector::principal(g) }
    }

    pub fn new(theta: T, sector: Sector, p: PlaneParam<T>) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::Invalid("angle must be finite".into()));
        }
        if !sector.belongs_to(p.geometry()) {
            return Err(Error::SectorMismatch);
        }
        let theta = if sector == Sector::Elliptic {
            reduce_elliptic(theta, p)
        } else {
            theta
        };
        Ok(Self { theta, sector })
    }
}

/// Reduces into `(-pi/sqrt|p|, pi/sqrt|p|]`.
fn reduce_elliptic<T: Scalar>(theta: T, p: PlaneParam<T>) -> T {
    let half = T::PI() / p.sqrt_abs();
    let period = half + half;
    let mut r = theta - period * (theta / period).round();
    if r <= -half {
        r = r + period;
    }
    r
}

/// Magnitude-and-angle decomposition `z = r_p e^{i theta}` (up to the sector's unit).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarForm<T> {
    pub r: T,
    pub angle: PAngle<T>,
}

/// The product `M^p(z1, z2) = (x1 x2 + p y1 y2) + i (x1 y2 + x2 y1)`.
#[inline]
pub fn mul<T: Scalar>(z1: GcNum<T>, z2: GcNum<T>, p: PlaneParam<T>) -> GcNum<T> {
    GcNum::new(z1.x * z2.x + p.value() * z1.y * z2.y, z1.x * z2.y + z2.x * z1.y)
}

#[inline]
pub fn conj<T: Scalar>(z: GcNum<T>) -> GcNum<T> {
    GcNum::new(z.x, -z.y)
}

/// `<z1, z2>_p = x1 x2 - p y1 y2`.
#[inline]
pub fn scalar<T: Scalar>(z1: GcNum<T>, z2: GcNum<T>, p: PlaneParam<T>) -> T {
    z1.x * z2.x - p.value() * z1.y * z2.y
}

/// Signed quadratic form `x^2 - p y^2`.
#[inline]
pub fn quadratic<T: Scalar>(z: GcNum<T>, p: PlaneParam<T>) -> T {
    scalar(z, z, p)
}

/// p-magnitude `sqrt|x^2 - p y^2|`.
#[inline]
pub fn norm<T: Scalar>(z: GcNum<T>, p: PlaneParam<T>) -> T {
    quadratic(z, p).abs().sqrt()
}

/// Signed determinant `x1 y2 - x2 y1`. For unit vectors at angles `a`, `b`
/// in one sector this equals `sinp(b - a)`.
#[inline]
pub fn wedge_raw<T: Scalar>(z1: GcNum<T>, z2: GcNum<T>) -> T {
    z1.x * z2.y - z2.x * z1.y
}

/// Magnitude of the p-cross product: `sqrt|p| |wedge_raw|`, or `|wedge_raw|` when `p = 0`.
pub fn wedge_magnitude<T: Scalar>(z1: GcNum<T>, z2: GcNum<T>, p: PlaneParam<T>) -> T {
    let w = wedge_raw(z1, z2).abs();
    match p.geometry() {
        Geometry::Parabolic => w,
        _ => p.sqrt_abs() * w,
    }
}

/// True when `x^2 - p y^2` vanishes relative to `max(x^2, |p| y^2)`.
pub fn is_null<T: Scalar>(z: GcNum<T>, p: PlaneParam<T>) -> bool {
    let m = z.x.abs().max(z.y.abs());
    if m == T::zero() {
        return true;
    }
    // rescale so tiny or huge vectors do not under- or overflow when squared
    let z = z / m;
    let xx = z.x * z.x;
    let yy = p.value().abs() * z.y * z.y;
    quadratic(z, p).abs() <= T::null_tol() * xx.max(yy)
}

fn null_boundary<T: Scalar>(z: GcNum<T>, p: PlaneParam<T>) -> NullBoundary {
    if z.x == T::zero() && z.y == T::zero() {
        return NullBoundary::Origin;
    }
    match p.geometry() {
        Geometry::Elliptic => NullBoundary::Origin,
        Geometry::Parabolic => NullBoundary::ImaginaryAxis,
        Geometry::Hyperbolic => {
            if (z.x >= T::zero()) == (z.y >= T::zero()) {
                NullBoundary::AsymptoteRising
            } else {
                NullBoundary::AsymptoteFalling
            }
        }
    }
}

fn check_non_null<T: Scalar>(z: GcNum<T>, p: PlaneParam<T>) -> Result<()> {
    if is_null(z, p) {
        Err(Error::NullDivisor(null_boundary(z, p)))
    } else {
        Ok(())
    }
}

/// Multiplicative inverse, `conj(z) / (x^2 - p y^2)`.
pub fn inverse<T: Scalar>(z: GcNum<T>, p: PlaneParam<T>) -> Result<GcNum<T>> {
    check_non_null(z, p)?;
    Ok(conj(z) / quadratic(z, p))
}

/// `e^{i theta} = cosp theta + i sinp theta`.
#[inline]
pub fn exp_i<T: Scalar>(theta: T, p: PlaneParam<T>) -> GcNum<T> {
    GcNum::new(cosp(theta, p), sinp(theta, p))
}

/// Sector of a non-null vector.
pub fn sector_of<T: Scalar>(z: GcNum<T>, p: PlaneParam<T>) -> Result<Sector> {
    check_non_null(z, p)?;
    Ok(match p.geometry() {
        Geometry::Elliptic => Sector::Elliptic,
        Geometry::Parabolic => {
            if z.x > T::zero() {
                Sector::GalileanRight
            } else {
                Sector::GalileanLeft
            }
        }
        Geometry::Hyperbolic => {
            if quadratic(z, p) > T::zero() {
                if z.x > T::zero() {
                    Sector::HyperbolicRight
                } else {
                    Sector::HyperbolicLeft
                }
            } else if z.y > T::zero() {
                Sector::HyperbolicUp
            } else {
                Sector::HyperbolicDown
            }
        }
    })
}

/// Unit vector of the given sector at p-angle `theta`.
///
/// Right (and elliptic) sectors give `e^{i theta}`, left sectors its negative.
/// The up sector of the hyperbolic plane is `(i / sqrt p) e^{i theta}`.
pub fn unit_in_sector<T: Scalar>(theta: T, sector: Sector, p: PlaneParam<T>) -> GcNum<T> {
    let e = exp_i(theta, p);
    match sector {
        Sector::Elliptic | Sector::GalileanRight | Sector::HyperbolicRight => e,
        Sector::GalileanLeft | Sector::HyperbolicLeft => -e,
        Sector::HyperbolicUp | Sector::HyperbolicDown => {
            let k = p.sqrt_abs();
            let up = GcNum::new(k * e.y, e.x / k);
            if sector == Sector::HyperbolicUp {
                up
            } else {
                -up
            }
        }
    }
}

pub fn to_polar<T: Scalar>(z: GcNum<T>, p: PlaneParam<T>) -> Result<PolarForm<T>> {
    let sector = sector_of(z, p)?;
    let r = norm(z, p);
    let on_boundary = |_| Error::NullDivisor(null_boundary(z, p));
    let theta = match sector {
        Sector::Elliptic => {
            let k = p.sqrt_abs();
            (z.y * k).atan2(z.x) / k
        }
        Sector::GalileanRight | Sector::GalileanLeft => z.y / z.x,
        Sector::HyperbolicRight | Sector::HyperbolicLeft => {
            atanp(z.y / z.x, p).map_err(on_boundary)?
        }
        Sector::HyperbolicUp | Sector::HyperbolicDown => {
            atanp(z.x / (p.value() * z.y), p).map_err(on_boundary)?
        }
    };
    Ok(PolarForm { r, angle: PAngle::new(theta, sector, p)? })
}

pub fn from_polar<T: Scalar>(pf: PolarForm<T>, p: PlaneParam<T>) -> GcNum<T> {
    unit_in_sector(pf.angle.theta, pf.angle.sector, p).scale(pf.r)
}

/// p-rotation angle carrying the direction of `z1` onto that of `z2`.
///
/// Outside the elliptic plane both vectors must share a sector. In the
/// timelike sectors of the hyperbolic plane the relations with the scalar
/// product and the wedge carry the sign of the quadratic form.
pub fn angle_between<T: Scalar>(z1: GcNum<T>, z2: GcNum<T>, p: PlaneParam<T>) -> Result<PAngle<T>> {
    let a = to_polar(z1, p)?;
    let b = to_polar(z2, p)?;
    if a.angle.sector != b.angle.sector {
        return Err(Error::SectorMismatch);
    }
    PAngle::new(b.angle.theta - a.angle.theta, a.angle.sector, p)
}
