//! Small SVG scene builder on top of the `svg` crate.

use svg::node::element::{Circle, Element, Group, Polyline, Text};
use svg::node::Comment;
use svg::{Document, Node};

pub const VERSION_COMMENT: &str = concat!("cpkin ", env!("CARGO_PKG_VERSION"));

fn n(v: f64) -> String {
    format!("{v:.6}")
}

/// Scene in math coordinates (y up). The view box is the bounding box of
/// everything drawn plus a 10% margin.
pub struct Scene {
    items: Vec<Item>,
    min: (f64, f64),
    max: (f64, f64),
    metadata: Vec<(String, String)>,
}

enum Item {
    Polyline { pts: Vec<(f64, f64)>, class: String, dashed: bool },
    Marker { at: (f64, f64), label: String },
}

impl Default for Scene {
    fn default() -> Self {
        Self { items: Vec::new(), min: (f64::INFINITY, f64::INFINITY), max: (f64::NEG_INFINITY, f64::NEG_INFINITY), metadata: Vec::new() }
    }
}

impl Scene {
    fn grow(&mut self, (x, y): (f64, f64)) {
        if x.is_finite() && y.is_finite() {
            self.min = (self.min.0.min(x), self.min.1.min(y));
            self.max = (self.max.0.max(x), self.max.1.max(y));
        }
    }

    pub fn meta(&mut self, key: &str, value: impl Into<String>) {
        self.metadata.push((key.to_string(), value.into()));
    }

    pub fn polyline(&mut self, pts: Vec<(f64, f64)>, class: &str, dashed: bool) {
        for &p in &pts {
            self.grow(p);
        }
        self.items.push(Item::Polyline { pts, class: class.to_string(), dashed });
    }

    /// A line that does not widen the view box.
    pub fn guide(&mut self, pts: Vec<(f64, f64)>, class: &str, dashed: bool) {
        self.items.push(Item::Polyline { pts, class: class.to_string(), dashed });
    }

    pub fn marker(&mut self, at: (f64, f64), label: &str) {
        self.grow(at);
        self.items.push(Item::Marker { at, label: label.to_string() });
    }

    pub fn bounds(&self) -> ((f64, f64), (f64, f64)) {
        (self.min, self.max)
    }

    pub fn render(&self) -> String {
        let (mut w, mut h) = (self.max.0 - self.min.0, self.max.1 - self.min.1);
        if !(w > 0.0) {
            w = 1.0;
        }
        if !(h > 0.0) {
            h = 1.0;
        }
        let (mx, my) = (0.1 * w, 0.1 * h);
        let (x0, y0) = (self.min.0 - mx, self.min.1 - my);
        let (vw, vh) = (w + 2.0 * mx, h + 2.0 * my);
        let stroke = 0.004 * vw.max(vh);
        // flip y so the drawing is in math orientation
        let flip = |(x, y): (f64, f64)| (x, 2.0 * y0 + vh - y);
        let mut g = Group::new().set("fill", "none").set("stroke-width", n(stroke));
        for item in &self.items {
            match item {
                Item::Polyline { pts, class, dashed } => {
                    let pts: Vec<String> = pts
                        .iter()
                        .filter(|p| p.0.is_finite() && p.1.is_finite())
                        .map(|&p| {
                            let (x, y) = flip(p);
                            format!("{},{}", n(x), n(y))
                        })
                        .collect();
                    let mut pl = Polyline::new().set("points", pts.join(" ")).set("class", class.as_str()).set("stroke", colour(class));
                    if *dashed {
                        pl = pl.set("stroke-dasharray", format!("{} {}", n(4.0 * stroke), n(3.0 * stroke)));
                    }
                    g = g.add(pl);
                }
                Item::Marker { at, label } => {
                    let (x, y) = flip(*at);
                    g = g.add(Circle::new().set("cx", n(x)).set("cy", n(y)).set("r", n(2.5 * stroke)).set("fill", "black"));
                    g = g.add(
                        Text::new(label.as_str())
                            .set("x", n(x + 3.0 * stroke))
                            .set("y", n(y - 3.0 * stroke))
                            .set("font-size", n(12.0 * stroke))
                            .set("fill", "black")
                            .set("stroke", "none"),
                    );
                }
            }
        }
        let mut meta = Element::new("metadata");
        for (k, v) in &self.metadata {
            meta.assign(format!("data-{k}"), v.as_str());
        }
        let doc = Document::new()
            .set("viewBox", format!("{} {} {} {}", n(x0), n(y0), n(vw), n(vh)))
            .add(Comment::new(VERSION_COMMENT))
            .add(meta)
            .add(g);
        let mut s = doc.to_string();
        s.push('\n');
        s
    }
}

fn colour(class: &str) -> &'static str {
    match class {
        "locus" | "unit-circle" => "#1f4e9c",
        "tangent" | "normal" | "asymptote" => "#888888",
        "ray" => "#3a7d3a",
        "line-d" => "#b03030",
        _ => "#444444",
    }
}
