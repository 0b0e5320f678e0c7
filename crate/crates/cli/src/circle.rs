//! Unit circle `|x^2 - p y^2| = 1` of the plane.

use std::path::Path;

use crate::error::{CliError, CliResult};
use crate::output::{csv_path, fmt17, write_file, CsvOut};
use crate::plot::Scene;

/// Sampled branches of the unit circle, each a list of `(x, y)`.
pub fn unit_circle_branches(p: f64, samples: usize) -> Vec<(&'static str, Vec<(f64, f64)>)> {
    let n = samples.max(2);
    let grid = |a: f64, b: f64| (0..n).map(move |k| a + (b - a) * k as f64 / (n - 1) as f64);
    if p < 0.0 {
        let k = (-p).sqrt();
        let pts = (0..n)
            .map(|j| 2.0 * std::f64::consts::PI * j as f64 / n as f64)
            .map(|s| (s.cos(), s.sin() / k))
            .collect();
        vec![("ellipse", pts)]
    } else if p == 0.0 {
        vec![
            ("line+", grid(-1.5, 1.5).map(|y| (1.0, y)).collect()),
            ("line-", grid(-1.5, 1.5).map(|y| (-1.0, y)).collect()),
        ]
    } else {
        let k = p.sqrt();
        let s = grid(-1.5, 1.5).collect::<Vec<_>>();
        vec![
            ("right", s.iter().map(|&s| (s.cosh(), s.sinh() / k)).collect()),
            ("left", s.iter().map(|&s| (-s.cosh(), s.sinh() / k)).collect()),
            ("up", s.iter().map(|&s| (s.sinh(), s.cosh() / k)).collect()),
            ("down", s.iter().map(|&s| (s.sinh(), -s.cosh() / k)).collect()),
        ]
    }
}

pub fn cmd_circle(p: f64, out: &Path, samples: usize) -> CliResult<()> {
    if !p.is_finite() {
        return Err(CliError::Input("p must be finite".into()));
    }
    if samples < 16 {
        return Err(CliError::Input(format!("samples must be at least 16, got {samples}")));
    }
    let branches = unit_circle_branches(p, samples);
    let mut scene = Scene::default();
    scene.meta("p", fmt17(p));
    let mut csv = CsvOut::new(&["branch", "index", "x", "y"])?;
    for (name, pts) in &branches {
        for (i, &(x, y)) in pts.iter().enumerate() {
            csv.row(name, i, &[x, y])?;
        }
        let mut path = pts.clone();
        if *name == "ellipse" {
            path.push(path[0]);
        }
        scene.polyline(path, "unit-circle", false);
    }
    if p == 0.0 {
        // the inflection cycle of the parabolic plane is a parabola
        let para: Vec<_> = (0..=64).map(|k| -1.0 + k as f64 / 32.0).map(|x| (x, x * x)).collect();
        scene.polyline(para, "annotation", true);
        scene.meta("annotation", "parabola y = x^2");
    }
    if p > 0.0 {
        let slope = 1.0 / p.sqrt();
        scene.meta("asymptote-slope", format!("+-{}", fmt17(slope)));
        let ((x0, _), (x1, _)) = scene.bounds();
        let r = x0.abs().max(x1.abs());
        scene.guide(vec![(-r, -r * slope), (r, r * slope)], "asymptote", true);
        scene.guide(vec![(-r, r * slope), (r, -r * slope)], "asymptote", true);
    }
    write_file(out, &scene.render())?;
    write_file(&csv_path(out), &csv.finish()?)
}
