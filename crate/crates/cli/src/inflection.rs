//! Figure of one instant: pole, common tangent and normal, inflection
//! locus, three pole rays with their points, images and the line D.

use std::path::Path;

use cpkin::euler_savary::{inversion_image, PoleRayStation};
use cpkin::gc::{exp_i, GcNum};
use cpkin::motion::{CurvatureCenter, InstantFrame};
use cpkin::{Geometry, MotionSpec, PAngle};

use crate::error::{CliError, CliResult};

use crate::output::{csv_path, fmt17, read_file, write_file, CsvOut};
use crate::plot::Scene;

/// A labelled point in fixed and canonical coordinates.
#[derive(Debug, Clone, Copy)]
pub struct FigPoint {
    pub kind: &'static str,
    pub index: usize,
    pub fixed: GcNum<f64>,
    pub canonical: GcNum<f64>,
}

#[derive(Debug, Clone)]
pub struct InflectionFigure {
    pub p: f64,
    pub h: f64,
    pub frame: InstantFrame<f64>,
    pub locus: Vec<Vec<FigPoint>>,
    pub points: Vec<FigPoint>,
    pub line_d: Vec<FigPoint>,
}

/// Canonical ray angles drawn in the figure.
pub fn figure_angles(p: f64) -> [f64; 3] {
    if p < 0.0 {
        let half = std::f64::consts::PI / (-p).sqrt();
        [0.22 * half, 0.5 * half, 0.74 * half]
    } else {
        let s = 1f64.max(p.sqrt());
        [0.35 / s, 0.8 / s, 1.3 / s]
    }
}

/// Canonical samples of `x^2 - p y^2 = h y`, one list per branch.
pub fn locus_branches(p: f64, h: f64, samples: usize) -> Vec<Vec<(f64, f64)>> {
    let n = samples.max(2);
    let grid = |a: f64, b: f64| (0..n).map(move |k| a + (b - a) * k as f64 / (n - 1) as f64);
    if p < 0.0 {
        let q = -p;
        let c = h / (2.0 * q);
        let pts = (0..=n)
            .map(|j| 2.0 * std::f64::consts::PI * j as f64 / n as f64)
            .map(|s| (h / (2.0 * q.sqrt()) * s.cos(), c + c * s.sin()))
            .collect();
        vec![pts]
    } else if p == 0.0 {
        vec![grid(-1.5 * h, 1.5 * h).map(|x| (x, x * x / h)).collect()]
    } else {
        let c = h / (2.0 * p);
        let a = h / (2.0 * p.sqrt());
        let branch = |sgn: f64| grid(-2.0, 2.0).map(move |s| (a * s.sinh(), -c + sgn * c * s.cosh())).collect();
        vec![branch(1.0), branch(-1.0)]
    }
}

pub fn build_figure(m: &MotionSpec<f64>, t: f64) -> CliResult<InflectionFigure> {
    let p = m.p();
    let inv = m.instant_invariants(t)?;
    let (frame, h) = (inv.frame, inv.h);
    let pt = |kind, index, c: GcNum<f64>| FigPoint { kind, index, fixed: frame.from_canonical(c), canonical: c };

    let locus = locus_branches(p.value(), h, 129)
        .into_iter()
        .map(|b| b.into_iter().enumerate().map(|(i, (x, y))| pt("locus", i, GcNum::new(x, y))).collect())
        .collect();

    let mut points = vec![pt("pole", 0, GcNum::zero())];
    for (k, &th) in figure_angles(p.value()).iter().enumerate() {
        let a = PAngle::principal(th, p);
        let x = exp_i(th, p);
        let rho = 0.6 * h;
        let n_fixed = frame.from_canonical(x * rho);
        points.push(pt("N", k + 1, x * rho));
        let rho_star = m.find_inflection_point(t, a)?;
        points.push(pt("N*", k + 1, x * rho_star));
        if let CurvatureCenter::Finite(g) = m.curvature_center_at(n_fixed, t) {
            points.push(pt("gamma", k + 1, frame.to_canonical(g)));
        }
        let img = inversion_image(&PoleRayStation::from_rho_star(a, rho_star, p)?)?;
        points.push(pt("Q", k + 1, img.q));
    }
    let span = 1.5 * h.max(1.0 / h);
    let line_d = [-span, span].iter().enumerate().map(|(i, &x)| pt("D", i, GcNum::new(x, 1.0 / h))).collect();
    Ok(InflectionFigure { p: p.value(), h, frame, locus, points, line_d })
}

pub fn write_figure(fig: &InflectionFigure, out: &Path) -> CliResult<()> {
    let f = &fig.frame;
    let mut csv = CsvOut::new(&["kind", "index", "x", "y", "cx", "cy"])?;
    let row = |csv: &mut CsvOut, q: &FigPoint| csv.row(q.kind, q.index, &[q.fixed.x, q.fixed.y, q.canonical.x, q.canonical.y]);
    csv.row("h", 0, &[fig.h, fig.h, fig.h, fig.h])?;
    let mut scene = Scene::default();
    scene.meta("p", fmt17(fig.p));
    scene.meta("h", fmt17(fig.h));
    scene.meta("t", fmt17(f.t));
    scene.meta(
        "locus",
        match f.p.geometry() {
            Geometry::Elliptic => "ellipse",
            Geometry::Parabolic => "parabola",
            Geometry::Hyperbolic => "hyperbola",
        },
    );
    for branch in &fig.locus {
        for q in branch {
            row(&mut csv, q)?;
        }
        scene.polyline(branch.iter().map(|q| (q.fixed.x, q.fixed.y)).collect(), "locus", false);
    }
    for q in &fig.points {
        row(&mut csv, q)?;
        scene.marker((q.fixed.x, q.fixed.y), &label(q));
    }
    for q in &fig.line_d {
        row(&mut csv, q)?;
    }
    scene.polyline(fig.line_d.iter().map(|q| (q.fixed.x, q.fixed.y)).collect(), "line-d", false);

    let ((x0, y0), (x1, y1)) = scene.bounds();
    let reach = (x1 - x0).max(y1 - y0);
    let axis = |c: GcNum<f64>| {
        let a = f.from_canonical(c * reach);
        let b = f.from_canonical(c * -reach);
        vec![(a.x, a.y), (b.x, b.y)]
    };
    scene.guide(axis(GcNum::one()), "tangent", true);
    scene.guide(axis(GcNum::i()), "normal", true);
    for q in fig.points.iter().filter(|q| q.kind == "N*") {
        let dir = q.canonical / q.canonical.coord_len();
        let o = f.pole;
        let e = f.from_canonical(dir * reach);
        scene.guide(vec![(o.x, o.y), (e.x, e.y)], "ray", false);
    }
    write_file(out, &scene.render())?;
    write_file(&csv_path(out), &csv.finish()?)
}

fn label(q: &FigPoint) -> String {
    match q.kind {
        "pole" => "I".to_string(),
        k => format!("{k}{}", q.index),
    }
}

pub fn load_motion(path: &Path) -> CliResult<MotionSpec<f64>> {
    let text = read_file(path)?;
    MotionSpec::from_json(&text).map_err(|e| CliError::parse(path, &e))
}

pub fn cmd_inflection(config: &Path, t: f64, out: &Path) -> CliResult<()> {
    let m = load_motion(config)?;
    let fig = build_figure(&m, t)?;
    write_figure(&fig, out)
}
