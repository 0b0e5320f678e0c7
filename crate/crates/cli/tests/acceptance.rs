//! Acceptance run: one PASS/FAIL line per criterion, tolerances as pinned.
//! Exits non-zero when any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use cpkin::bobillier::{bobillier_kinematic_check, bobillier_residual, rho_star_kinematic, specialized_residual, BobillierConfig, Case};
use cpkin::euler_savary::{collinearity_residual, inversion_image, measure_station, tangent_wedge, PoleRayStation};
use cpkin::gc::{conj, exp_i, mul, quadratic, scalar, wedge_raw, GcNum};
use cpkin::trig::{cosp, p_trig_derivatives, sinp};
use cpkin::{MotionSpec, PAngle, PlaneParam};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn pp(p: f64) -> PlaneParam<f64> {
    PlaneParam::new(p).unwrap()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ray_angle(p: f64, u: f64) -> f64 {
    cpkin_cli::verify::ray_angle(p, u)
}

fn within(secs: f64, limit: f64) -> bool {
    secs < limit
}

fn c1_identity() -> Outcome {
    let mut g = rng(1);
    let (mut max_abs, mut max_rel, mut worst) = (0.0f64, 0.0f64, (0.0, 0.0));
    for _ in 0..100_000 {
        let th = g.gen_range(-10.0..10.0);
        let p = g.gen_range(-5.0..5.0);
        let (c, s) = (cosp(th, pp(p)), sinp(th, pp(p)));
        let e = (c * c - p * s * s - 1.0).abs();
        if e > max_abs {
            max_abs = e;
            worst = (th, p);
        }
        max_rel = max_rel.max(e / (c * c).max(1.0));
    }
    Outcome {
        pass: max_abs <= 1e-12,
        detail: format!(
            "max |cosp^2 - p sinp^2 - 1| = {max_abs:.3e} (tol 1e-12) at theta={:.3}, p={:.3}; relative to cosp^2: {max_rel:.3e}",
            worst.0, worst.1
        ),
    }
}

fn c2_derivatives() -> Outcome {
    let mut g = rng(2);
    let mut max = 0.0f64;
    let h = 1e-5;
    for _ in 0..10_000 {
        let th = g.gen_range(-2.0..2.0);
        let p = pp(g.gen_range(-4.0..4.0));
        let (dc, ds) = p_trig_derivatives(th, p);
        let fc = (cosp(th + h, p) - cosp(th - h, p)) / (2.0 * h);
        let fs = (sinp(th + h, p) - sinp(th - h, p)) / (2.0 * h);
        max = max.max((dc - fc).abs()).max((ds - fs).abs());
    }
    Outcome { pass: max <= 1e-8, detail: format!("max |analytic - central difference| = {max:.3e} (tol 1e-8), theta in [-2,2], p in [-4,4]") }
}

fn c3_norms() -> Outcome {
    let mut g = rng(3);
    let (mut mult, mut cons) = (0.0f64, 0.0f64);
    for p in [-3.0, -1.0, -0.4, 0.0, 0.4, 1.0, 3.0] {
        let pl = pp(p);
        let scale = |z: GcNum<f64>| z.x * z.x + p.abs() * z.y * z.y;
        for _ in 0..100_000 {
            let a = GcNum::new(g.gen_range(-3.0..3.0), g.gen_range(-3.0..3.0));
            let b = GcNum::new(g.gen_range(-3.0..3.0), g.gen_range(-3.0..3.0));
            let s = scale(a) * scale(b);
            if s == 0.0 {
                continue;
            }
            mult = mult.max((quadratic(mul(a, b, pl), pl) - quadratic(a, pl) * quadratic(b, pl)).abs() / s);
            let c = mul(conj(a), b, pl);
            let sc = s.sqrt();
            cons = cons.max((c.x - scalar(a, b, pl)).abs() / sc).max((c.y - wedge_raw(a, b)).abs() / sc);
        }
    }
    Outcome {
        pass: mult <= 1e-12 && cons <= 1e-12,
        detail: format!("multiplicativity {mult:.3e}, conj(a) b = <a,b> + i a^b {cons:.3e} (tol 1e-12 relative)"),
    }
}

fn c4_circle_identity() -> Outcome {
    let mut g = rng(4);
    let mut max = 0.0f64;
    for k in 0..10_000 {
        let p = if k % 10 == 0 { 0.0 } else { g.gen_range(-5.0..5.0) };
        let h = g.gen_range(0.01..100.0);
        let th = [(); 3].map(|_| ray_angle(p, g.gen_range(0.0..1.0)));
        let cfg = BobillierConfig::from_raw(pp(p), th.map(|t| h * sinp(t, pp(p))), th).unwrap();
        max = max.max(bobillier_residual(&cfg).abs() / h);
    }
    Outcome { pass: max <= 1e-12, detail: format!("max |residual| / h = {max:.3e} (tol 1e-12)") }
}

fn c5_cases() -> Outcome {
    let mut g = rng(5);
    let mut max = 0.0f64;
    for case in [Case::Elliptical, Case::Parabolic, Case::Hyperbolic] {
        for _ in 0..1000 {
            let rho: [f64; 3] = [(); 3].map(|_| g.gen_range(-3.0..3.0));
            let th = [(); 3].map(|_| g.gen_range(-1.5..1.5));
            let cfg = BobillierConfig::<f64>::from_raw(case.p(), rho, th).unwrap();
            max = max.max((bobillier_residual(&cfg) - specialized_residual(case, rho, cfg.pairwise)).abs());
        }
    }
    Outcome { pass: max <= 1e-14, detail: format!("max |general - specialized| = {max:.3e} (tol 1e-14)") }
}

fn battery(p: f64, seed: u64) -> Vec<MotionSpec<f64>> {
    let mut g = rng(seed);
    (0..5).map(|_| cpkin::synthetic::random_motion(pp(p), || g.gen_range(-1.0..1.0), 1000).expect("motion")).collect()
}

const ROUTE_P: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

fn c6_routes() -> Outcome {
    let mut g = rng(6);
    let (mut rel, mut bob) = (0.0f64, 0.0f64);
    let mut motions = 0;
    for (i, p) in ROUTE_P.into_iter().enumerate() {
        for m in battery(p, 60 + i as u64) {
            motions += 1;
            let inv = m.instant_invariants(0.0).unwrap();
            let h = inv.h;
            let th = [0.15, 0.5, 0.85].map(|u| ray_angle(p, u));
            for &t in &th {
                let a = PAngle::principal(t, m.p());
                let geo = measure_station(&m, 0.0, a, h * g.gen_range(0.2..2.0)).unwrap().rho_star;
                let kin = rho_star_kinematic(&inv, exp_i(t, m.p()), m.p()).unwrap();
                rel = rel.max((geo - kin).abs() / kin.abs());
            }
            let r = bobillier_kinematic_check(&m, 0.0, th.map(|t| PAngle::principal(t, m.p()))).unwrap();
            bob = bob.max(r.abs() / h);
        }
    }
    Outcome {
        pass: rel <= 1e-6 && bob <= 1e-10,
        detail: format!("{motions} motions: max |rho*_geo - rho*_kin| / |rho*| = {rel:.3e} (tol 1e-6); kinematic residual / h = {bob:.3e} (tol 1e-10)"),
    }
}

fn c7_collinearity() -> Outcome {
    let (mut col, mut par) = (0.0f64, 0.0f64);
    for (i, p) in ROUTE_P.into_iter().enumerate() {
        for m in battery(p, 60 + i as u64) {
            let q: Vec<_> = [0.15, 0.5, 0.85]
                .iter()
                .map(|&u| {
                    let a = PAngle::principal(ray_angle(p, u), m.p());
                    let rho = m.find_inflection_point(0.0, a).unwrap();
                    inversion_image(&PoleRayStation::from_rho_star(a, rho, m.p()).unwrap()).unwrap()
                })
                .collect();
            col = col.max(collinearity_residual(&q[0], &q[1], &q[2]).abs());
            par = par.max(tangent_wedge(&q[0], &q[1]).abs()).max(tangent_wedge(&q[0], &q[2]).abs());
        }
    }
    Outcome {
        pass: col <= 1e-10 && par <= 1e-10,
        detail: format!("collinearity residual {col:.3e}, direction wedge with tangent {par:.3e} (tol 1e-10)"),
    }
}

fn c8_kinematics() -> Outcome {
    let mut g = rng(8);
    let (mut dv, mut da, mut pole) = (0.0f64, 0.0f64, 0.0f64);
    let sweep = [-3.0, -1.0, -0.4, 0.0, 0.4, 1.0, 3.0];
    for k in 0..1000 {
        let p = sweep[k % sweep.len()];
        let m = cpkin::synthetic::random_motion(pp(p), || g.gen_range(-1.0..1.0), 1000).unwrap();
        let z = GcNum::new(g.gen_range(-2.0..2.0), g.gen_range(-2.0..2.0));
        let t = g.gen_range(-0.5..0.5);
        let v = m.absolute_velocity(z, t);
        let a = m.acceleration(z, t);
        let fv = (m.trajectory(z, t + 1e-6) - m.trajectory(z, t - 1e-6)) / 2e-6;
        let fa = (m.trajectory(z, t + 1e-4) + m.trajectory(z, t - 1e-4) - m.trajectory(z, t) * 2.0) / 1e-8;
        dv = dv.max((v - fv).coord_len() / v.coord_len().max(1.0));
        da = da.max((a - fa).coord_len() / a.coord_len().max(1.0));
        let ip = m.instantaneous_pole(0.0).unwrap();
        let scale = m.translation(0.0).1.coord_len() + m.angle(0.0).1.abs() * (1.0 + ip.coord_len());
        pole = pole.max(m.absolute_velocity(m.to_moving(ip, 0.0), 0.0).coord_len() / scale);
    }
    Outcome {
        pass: dv <= 1e-8 && da <= 1e-6 && pole <= 1e-10,
        detail: format!("velocity {dv:.3e} (tol 1e-8), acceleration {da:.3e} (tol 1e-6), pole speed / scale {pole:.3e} (tol 1e-10)"),
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cpkin"))
}

fn read_rows(path: &Path) -> Vec<csv::StringRecord> {
    csv::Reader::from_path(path).unwrap().records().map(|r| r.unwrap()).collect()
}

fn c9_figures() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut circle = 0.0f64;
    for p in [-1.0f64, 0.0, 1.0] {
        let out = dir.path().join(format!("circle{p}.svg"));
        let ok = bin().args(["circle", "--p", &p.to_string(), "--out", out.to_str().unwrap()]).status().unwrap().success();
        if !ok {
            return Outcome { pass: false, detail: format!("circle --p {p} failed") };
        }
        for r in read_rows(&out.with_extension("csv")) {
            let (x, y): (f64, f64) = (r[2].parse().unwrap(), r[3].parse().unwrap());
            circle = circle.max(((x * x - p * y * y).abs() - 1.0).abs());
        }
    }
    let configs = [
        (-1.0, r#"{"p": -1, "theta": [0, 1], "tx": [0, 1], "ty": [0]}"#, "0"),
        (0.0, r#"{"p": 0, "theta": [0, 1], "tx": [0], "ty": [0, 0, 0.5]}"#, "0"),
        (1.0, r#"{"p": 1, "theta": [0.1, 1, 0.3], "tx": [0.3, 0.1, 0.6], "ty": [0, 0.5, -0.2]}"#, "0.1"),
    ];
    let mut conic = 0.0f64;
    let mut kinds = Vec::new();
    for (p, body, t) in configs {
        let cfg = dir.path().join(format!("m{p}.json"));
        std::fs::write(&cfg, body).unwrap();
        let out = dir.path().join(format!("infl{p}.svg"));
        let ok = bin().args(["inflection", "--config", cfg.to_str().unwrap(), "--t", t, "--out", out.to_str().unwrap()]).status().unwrap().success();
        if !ok {
            return Outcome { pass: false, detail: format!("inflection for p={p} failed") };
        }
        let svg = std::fs::read_to_string(&out).unwrap();
        for k in ["ellipse", "parabola", "hyperbola"] {
            if svg.contains(&format!("data-locus=\"{k}\"")) {
                kinds.push(k);
            }
        }
        let rows = read_rows(&out.with_extension("csv"));
        let pts: Vec<(f64, f64)> = rows.iter().filter(|r| &r[0] == "locus").map(|r| (r[4].parse().unwrap(), r[5].parse().unwrap())).collect();
        // least-squares diameter of x^2 - p y^2 = h y
        let (num, den) = pts.iter().fold((0.0, 0.0), |(n, d), &(x, y)| (n + (x * x - p * y * y) * y, d + y * y));
        let h = num / den;
        for &(x, y) in &pts {
            conic = conic.max((x * x - p * y * y - h * y).abs() / (h * h));
        }
    }
    let kinds_ok = kinds == ["ellipse", "parabola", "hyperbola"];
    Outcome {
        pass: circle <= 1e-9 && conic <= 1e-8 && kinds_ok,
        detail: format!("unit circle CSV max ||x^2-py^2|-1| = {circle:.3e} (tol 1e-9); inflection locus vs fitted conic {conic:.3e} (tol 1e-8); loci {kinds:?}"),
    }
}

fn c10_determinism() -> Outcome {
    let run = || bin().args(["verify", "--seed", "42"]).output().unwrap();
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    let code = a.status.code();
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap_or_default();
    let max = v["max_abs_residual"].as_f64().unwrap_or(f64::NAN);
    Outcome {
        pass: same && code == Some(0) && max <= 1e-8,
        detail: format!("byte-identical: {same}; exit {code:?}; default sweep max residual {max:.3e} (tol 1e-8)"),
    }
}

fn main() {
    let criteria: [(&str, f64, fn() -> Outcome); 10] = [
        ("p-trig fundamental identity", 1.0, c1_identity),
        ("p-trig derivative conformance", 1.0, c2_derivatives),
        ("norm multiplicativity and product consistency", 5.0, c3_norms),
        ("Bobillier identity on the inflection circle", 2.0, c4_circle_identity),
        ("classical case reductions", 1.0, c5_cases),
        ("route equivalence", 30.0, c6_routes),
        ("collinearity of inversion images", f64::INFINITY, c7_collinearity),
        ("analytic kinematics vs differences", f64::INFINITY, c8_kinematics),
        ("figure reproduction", 5.0, c9_figures),
        ("verify determinism", f64::INFINITY, c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let secs = start.elapsed().as_secs_f64();
        let pass = o.pass && within(secs, *limit);
        if !pass {
            failed += 1;
        }
        let budget = if limit.is_finite() { format!(" (budget {limit} s)") } else { String::new() };
        println!("{} #{:<2} {name}: {}; {secs:.2} s{budget}", if pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
