//! Bobillier residual of a configuration file, by two independent routes.

use std::path::Path;

use cpkin::bobillier::{
    bobillier_kinematic_check, bobillier_residual, dependence_coefficients, rho_star_kinematic,
    specialized_residual, BobillierConfig, Case,
};
use cpkin::euler_savary::{measure_station, PoleRayStation};
use cpkin::gc::exp_i;
use cpkin::{MotionSpec, PAngle, PlaneParam};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::output::read_file;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Raw,
    Motion,
}

#[derive(Debug, Clone, Deserialize)]
pub struct RawBlock {
    pub rho_star: [f64; 3],
    pub theta: [f64; 3],
}

#[derive(Debug, Clone, Deserialize)]
pub struct MotionBlock {
    pub spec: MotionSpec<f64>,
    pub t: f64,
    pub angles: [f64; 3],
}

#[derive(Debug, Clone, Deserialize)]
pub struct BobillierInput {
    pub p: f64,
    pub mode: Mode,
    pub raw: Option<RawBlock>,
    pub motion: Option<MotionBlock>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BobillierReport {
    pub mode: Mode,
    pub p: f64,
    /// Inflection diameter of the instant (motion mode).
    pub h: Option<f64>,
    pub rho_star: [f64; 3],
    /// Kinematic inflection distances (motion mode).
    pub rho_star_kinematic: Option<[f64; 3]>,
    pub pairwise_angles: [f64; 3],
    /// Sum over rays of `rho* sinp(angle difference)`.
    pub geometric_residual: f64,
    /// Raw mode: sum of `rho* lambda` with `lambda` from ray wedges.
    /// Motion mode: residual with `rho*` from the pole acceleration.
    pub kinematic_residual: f64,
    pub difference: f64,
    /// Closed form of the classical plane, for `p` in `{-1, 0, 1}`.
    pub specialized_residual: Option<f64>,
}

pub fn parse_input(path: &Path) -> CliResult<BobillierInput> {
    let text = read_file(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::parse(path, &e))
}

pub fn evaluate(input: &BobillierInput) -> CliResult<BobillierReport> {
    let p = PlaneParam::new(input.p)?;
    match input.mode {
        Mode::Raw => {
            let raw = input.raw.as_ref().ok_or_else(|| CliError::Input("mode \"raw\" needs a \"raw\" block".into()))?;
            let cfg = BobillierConfig::from_raw(p, raw.rho_star, raw.theta)?;
            let x = raw.theta.map(|t| exp_i(t, p));
            let (l1, l2, l3) = dependence_coefficients(x[0], x[1], x[2], p)?;
            let r = raw.rho_star;
            let geometric = bobillier_residual(&cfg);
            let kinematic = r[0] * l1 + r[1] * l2 + r[2] * l3;
            Ok(BobillierReport {
                mode: Mode::Raw,
                p: input.p,
                h: None,
                rho_star: r,
                rho_star_kinematic: None,
                pairwise_angles: cfg.pairwise,
                geometric_residual: geometric,
                kinematic_residual: kinematic,
                difference: geometric - kinematic,
                specialized_residual: Case::for_p(p).map(|c| specialized_residual(c, r, cfg.pairwise)),
            })
        }
        Mode::Motion => {
            let mb = input.motion.as_ref().ok_or_else(|| CliError::Input("mode \"motion\" needs a \"motion\" block".into()))?;
            if mb.spec.p() != p {
                return Err(CliError::Input("motion spec and configuration disagree on p".into()));
            }
            let m = &mb.spec;
            let inv = m.instant_invariants(mb.t)?;
            let h = inv.h;
            let mut geo = [0.0; 3];
            let mut kin = [0.0; 3];
            let mut stations = Vec::with_capacity(3);
            for k in 0..3 {
                let a = PAngle::principal(mb.angles[k], p);
                let st = measure_station(m, mb.t, a, 0.6 * h)?;
                geo[k] = st.rho_star;
                kin[k] = rho_star_kinematic(&inv, exp_i(mb.angles[k], p), p)?;
                stations.push(PoleRayStation::from_rho_star(a, geo[k], p)?);
            }
            let mut cfg = BobillierConfig::new(p, [stations[0], stations[1], stations[2]])?;
            cfg.pairwise = cpkin::bobillier::pairwise_angles(mb.angles);
            let geometric = bobillier_residual(&cfg);
            let angles = mb.angles.map(|t| PAngle::principal(t, p));
            let kinematic = bobillier_kinematic_check(m, mb.t, angles)?;
            Ok(BobillierReport {
                mode: Mode::Motion,
                p: input.p,
                h: Some(h),
                rho_star: geo,
                rho_star_kinematic: Some(kin),
                pairwise_angles: cfg.pairwise,
                geometric_residual: geometric,
                kinematic_residual: kinematic,
                difference: geometric - kinematic,
                specialized_residual: Case::for_p(p).map(|c| specialized_residual(c, kin, cfg.pairwise)),
            })
        }
    }
}

pub fn cmd_bobillier(config: &Path) -> CliResult<BobillierReport> {
    evaluate(&parse_input(config)?)
}
