//! The Bobillier identity of three pole rays,
//! `rho*_1 sinp th23 + rho*_2 sinp th31 + rho*_3 sinp th12 = 0`,
//! evaluated from inflection distances or straight from the motion.

use crate::error::{Error, Result};
use crate::euler_savary::PoleRayStation;
use crate::gc::{sector_of, wedge_raw, GcNum, Geometry, PAngle, PlaneParam, Sector};
use crate::motion::{rho_star_from_pole_accel, InstantInvariants, MotionSpec};
use crate::scalar::Scalar;
use crate::trig::sinp;

/// Three stations of one instant, with their pairwise ray angles
/// `(th23, th31, th12)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BobillierConfig<T> {
    pub p: PlaneParam<T>,
    pub stations: [PoleRayStation<T>; 3],
    pub pairwise: [T; 3],
}

impl<T: Scalar> BobillierConfig<T> {
    pub fn new(p: PlaneParam<T>, stations: [PoleRayStation<T>; 3]) -> Result<Self> {
        if p.geometry() == Geometry::Hyperbolic {
            let s = stations[0].theta.sector;
            if stations.iter().any(|st| st.theta.sector != s) {
                return Err(Error::SectorMismatch);
            }
        }
        let th = stations.map(|s| s.theta.theta);
        Ok(Self { p, stations, pairwise: pairwise_angles(th) })
    }

    /// Configuration from bare `(rho*, theta)` triples in the principal sector.
    pub fn from_raw(p: PlaneParam<T>, rho_star: [T; 3], theta: [T; 3]) -> Result<Self> {
        let mut st = Vec::with_capacity(3);
        for k in 0..3 {
            st.push(PoleRayStation::from_rho_star(PAngle::principal(theta[k], p), rho_star[k], p)?);
        }
        let mut cfg = Self::new(p, [st[0], st[1], st[2]])?;
        // principal reduction may shift elliptic angles by a period; keep the inputs
        cfg.pairwise = pairwise_angles(theta);
        Ok(cfg)
    }

    pub fn rho_star(&self) -> [T; 3] {
        self.stations.map(|s| s.rho_star)
    }

    /// The same configuration relabelled `(1, 2, 3) -> (2, 3, 1)`.
    pub fn rotated(&self) -> Self {
        let [a, b, c] = self.stations;
        let [t23, t31, t12] = self.pairwise;
        Self { p: self.p, stations: [b, c, a], pairwise: [t31, t12, t23] }
    }
}

/// `(th3 - th2, th1 - th3, th2 - th1)`; the last is formed so the three sum
/// to exactly zero.
pub fn pairwise_angles<T: Scalar>(th: [T; 3]) -> [T; 3] {
    let t23 = th[2] - th[1];
    let t31 = th[0] - th[2];
    [t23, t31, -(t23 + t31)]
}

pub fn bobillier_residual<T: Scalar>(cfg: &BobillierConfig<T>) -> T {
    let r = cfg.rho_star();
    let s = cfg.pairwise.map(|a| sinp(a, cfg.p));
    r[0] * s[0] + r[1] * s[1] + r[2] * s[2]
}

/// Inflection distance on the canonical unit ray `x` from the pole
/// acceleration: `-<J(I), X>_p / (p w^2)`, and its limit
/// `J_y X_y / w^2` (canonical components) at `p = 0`.
pub fn rho_star_kinematic<T: Scalar>(inv: &InstantInvariants<T>, x: GcNum<T>, p: PlaneParam<T>) -> Result<T> {
    let f = &inv.frame;
    if f.p != p {
        return Err(Error::Invalid("ray and instant belong to different planes".into()));
    }
    Ok(rho_star_from_pole_accel(f, f.vector_from_canonical(x)))
}

/// `(X2 ^ X3, X3 ^ X1, X1 ^ X2)`, which annihilates the three rays:
/// `l1 X1 + l2 X2 + l3 X3 = 0`.
pub fn dependence_coefficients<T: Scalar>(
    x1: GcNum<T>,
    x2: GcNum<T>,
    x3: GcNum<T>,
    p: PlaneParam<T>,
) -> Result<(T, T, T)> {
    if p.geometry() == Geometry::Hyperbolic {
        let s = sector_of(x1, p)?;
        if sector_of(x2, p)? != s || sector_of(x3, p)? != s {
            return Err(Error::SectorMismatch);
        }
    }
    Ok((wedge_raw(x2, x3), wedge_raw(x3, x1), wedge_raw(x1, x2)))
}

/// Bobillier residual of three canonical rays, with every `rho*` taken from
/// the pole acceleration rather than from measured curvature centers.
pub fn bobillier_kinematic_check<T: Scalar>(m: &MotionSpec<T>, t: T, angles: [PAngle<T>; 3]) -> Result<T> {
    let p = m.p();
    let inv = m.instant_invariants(t)?;
    let principal = Sector::principal(p.geometry());
    let mut st = Vec::with_capacity(3);
    for a in angles {
        if a.sector != principal {
            return Err(Error::SectorMismatch);
        }
        let x = crate::gc::exp_i(a.theta, p);
        st.push(PoleRayStation { x, theta: a, rho: None, rho_prime: None, rho_star: rho_star_kinematic(&inv, x, p)? });
    }
    let cfg = BobillierConfig::new(p, [st[0], st[1], st[2]])?;
    Ok(bobillier_residual(&cfg))
}

/// The three classical planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// `p = -1`, circular sines.
    Elliptical,
    /// `p = 0`, the shear motion form with the bare angles.
    Parabolic,
    /// `p = 1`, hyperbolic sines.
    Hyperbolic,
}

impl Case {
    pub fn p<T: Scalar>(self) -> PlaneParam<T> {
        let v = match self {
            Case::Elliptical => -T::one(),
            Case::Parabolic => T::zero(),
            Case::Hyperbolic => T::one(),
        };
        PlaneParam::new(v).expect("finite")
    }

    pub fn for_p<T: Scalar>(p: PlaneParam<T>) -> Option<Self> {
        let v = p.value();
        if v == -T::one() {
            Some(Case::Elliptical)
        } else if v == T::zero() {
            Some(Case::Parabolic)
        } else if v == T::one() {
            Some(Case::Hyperbolic)
        } else {
            None
        }
    }
}

/// Residual in the closed form of one classical plane; `pairwise` holds
/// `(th23, th31, th12)`.
pub fn specialized_residual<T: Scalar>(case: Case, rho_star: [T; 3], pairwise: [T; 3]) -> T {
    let f = |a: T| match case {
        Case::Elliptical => a.sin(),
        Case::Parabolic => a,
        Case::Hyperbolic => a.sinh(),
    };
    rho_star[0] * f(pairwise[0]) + rho_star[1] * f(pairwise[1]) + rho_star[2] * f(pairwise[2])
}
