//! Rank-2 pictures: Weyl translates of the fundamental parallelepiped, the
//! Dirac circle, reducibility lines and an externally supplied overlay.
//!
//! Geometry is exact up to [`PlaneEmbedding`], which is the only place
//! weights become floating point.

mod overlay;
mod svg;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::infchar::weyl_orbit_with_words;
use crate::rational::{to_f64, Rational};
use crate::rootdata::{RootDatum, Weight};

pub use overlay::{load_overlay, parse_overlay};
pub use svg::{emit_svg, format_coord, write_svg};

pub type Point = [f64; 2];

/// Upper-triangular `E` with `E^T E` equal to the simple-root Gram matrix, so
/// the map is an isometry and `alpha_1` lands on the positive x-axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneEmbedding {
    matrix: [[f64; 2]; 2],
}

impl PlaneEmbedding {
    pub fn new(datum: &RootDatum) -> Result<Self> {
        if datum.rank() != 2 {
            return Err(Error::NotRankTwo(datum.rank()));
        }
        let g = datum.simple_root_gram();
        let (g11, g12, g22) = (to_f64(&g[0][0]), to_f64(&g[0][1]), to_f64(&g[1][1]));
        let a = g11.sqrt();
        let b = g12 / a;
        let c = (g22 - b * b).sqrt();
        Ok(Self { matrix: [[a, b], [0.0, c]] })
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        self.matrix
    }

    pub fn embed_root_coords(&self, r: &[Rational]) -> Point {
        let (x, y) = (to_f64(&r[0]), to_f64(&r[1]));
        let m = &self.matrix;
        [m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y]
    }

    pub fn embed(&self, datum: &RootDatum, w: &Weight) -> Point {
        self.embed_root_coords(&datum.to_root_basis(w))
    }
}

/// Axis-aligned drawing window in embedded coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Frame {
    pub min: Point,
    pub max: Point,
}

impl Frame {
    pub fn square(half_width: f64) -> Self {
        Self { min: [-half_width, -half_width], max: [half_width, half_width] }
    }

    pub fn is_empty(&self) -> bool {
        !(self.max[0] > self.min[0] && self.max[1] > self.min[1])
    }

    pub fn width(&self) -> f64 {
        self.max[0] - self.min[0]
    }

    pub fn height(&self) -> f64 {
        self.max[1] - self.min[1]
    }
}

/// `w . {0, varpi_1, varpi_1 + varpi_2, varpi_2}` for every `w` in `W`,
/// deduplicated, in breadth-first order of `w`.
pub fn fpp_translates(datum: &RootDatum, cap: usize) -> Result<Vec<Vec<Weight>>> {
    if datum.rank() != 2 {
        return Err(Error::NotRankTwo(datum.rank()));
    }
    let base = [
        datum.zero_weight(),
        datum.fundamental_weight(0)?,
        datum.rho(),
        datum.fundamental_weight(1)?,
    ];
    // rho is regular, so its orbit lists each Weyl element once
    let elements = weyl_orbit_with_words(datum, &datum.rho(), cap)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (_, word) in elements {
        let quad = base
            .iter()
            .map(|v| datum.act(&word, v))
            .collect::<Result<Vec<_>>>()?;
        if seen.insert(quad.iter().cloned().collect::<BTreeSet<_>>()) {
            out.push(quad);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Segment {
    pub from: Point,
    pub to: Point,
    /// Index into the datum's positive roots.
    pub coroot: usize,
    pub level: i64,
}

/// The lines `<lambda, beta^vee> = n` for every positive coroot and
/// `|n| <= levels`, clipped to `frame`.
pub fn reducibility_lines(datum: &RootDatum, levels: u32, frame: &Frame) -> Result<Vec<Segment>> {
    let emb = PlaneEmbedding::new(datum)?;
    if frame.is_empty() {
        return Ok(Vec::new());
    }
    let levels = i64::from(levels);
    let mut out = Vec::new();
    for (k, beta) in datum.positive_roots().iter().enumerate() {
        let r: Vec<Rational> = beta.iter().map(|&c| Rational::from_integer(c)).collect();
        let b = emb.embed_root_coords(&r);
        let half = to_f64(&datum.root_half_norm(k));
        // <lambda, beta^vee> = x . u with u = beta / ((beta, beta) / 2)
        let u = [b[0] / half, b[1] / half];
        let uu = u[0] * u[0] + u[1] * u[1];
        let dir = [-u[1], u[0]];
        for n in -levels..=levels {
            let base = [n as f64 * u[0] / uu, n as f64 * u[1] / uu];
            if let Some((from, to)) = clip_line(base, dir, frame) {
                out.push(Segment { from, to, coroot: k, level: n });
            }
        }
    }
    Ok(out)
}

/// Liang-Barsky clip of the infinite line `base + t dir`.
fn clip_line(base: Point, dir: Point, frame: &Frame) -> Option<(Point, Point)> {
    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::INFINITY;
    for axis in 0..2 {
        if dir[axis] == 0.0 {
            if base[axis] < frame.min[axis] || base[axis] > frame.max[axis] {
                return None;
            }
            continue;
        }
        let t0 = (frame.min[axis] - base[axis]) / dir[axis];
        let t1 = (frame.max[axis] - base[axis]) / dir[axis];
        lo = lo.max(t0.min(t1));
        hi = hi.min(t0.max(t1));
    }
    if lo >= hi {
        return None;
    }
    let at = |t: f64| [base[0] + t * dir[0], base[1] + t * dir[1]];
    Some((at(lo), at(hi)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

/// The circle `|lambda| = |rho|`.
pub fn dirac_circle(datum: &RootDatum) -> Result<Circle> {
    PlaneEmbedding::new(datum)?;
    let r2 = datum.norm_squared(&datum.rho());
    Ok(Circle { center: [0.0, 0.0], radius: to_f64(&r2).sqrt() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Style {
    Red,
    Dashed,
    Blue,
    Green,
}

impl Style {
    pub fn class(self) -> &'static str {
        match self {
            Style::Red => "red",
            Style::Dashed => "dashed",
            Style::Blue => "blue",
            Style::Green => "green",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Polygon(Vec<Point>),
    Segment(Point, Point),
    Circle(Circle),
    Point(Point),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Layer {
    pub name: String,
    pub style: Style,
    pub shapes: Vec<Shape>,
}

impl Layer {
    pub fn new(name: &str, style: Style) -> Self {
        Self { name: name.to_string(), style, shapes: Vec::new() }
    }

    pub fn count(&self, pred: impl Fn(&Shape) -> bool) -> usize {
        self.shapes.iter().filter(|s| pred(s)).count()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Scene {
    pub frame: Frame,
    pub layers: Vec<Layer>,
}

#[derive(Clone, Debug)]
pub struct SceneOptions {
    pub levels: u32,
    /// Defaults to a square of half-width `1.15 |rho|`.
    pub frame: Option<Frame>,
    pub overlay: Option<Layer>,
    pub orbit_cap: usize,
}

impl Default for SceneOptions {
    fn default() -> Self {
        Self { levels: 6, frame: None, overlay: None, orbit_cap: crate::infchar::DEFAULT_ORBIT_CAP }
    }
}

impl Scene {
    pub fn empty(frame: Frame) -> Self {
        Self { frame, layers: Vec::new() }
    }

    /// Layers in fixed order: translates, hyperplanes, circle, overlay.
    pub fn build(datum: &RootDatum, opts: &SceneOptions) -> Result<Self> {
        let emb = PlaneEmbedding::new(datum)?;
        let circle = dirac_circle(datum)?;
        let frame = opts.frame.unwrap_or_else(|| Frame::square(1.15 * circle.radius));

        let mut translates = Layer::new("translates", Style::Red);
        for quad in fpp_translates(datum, opts.orbit_cap)? {
            translates
                .shapes
                .push(Shape::Polygon(quad.iter().map(|v| emb.embed(datum, v)).collect()));
        }
        let mut lines = Layer::new("hyperplanes", Style::Dashed);
        for s in reducibility_lines(datum, opts.levels, &frame)? {
            lines.shapes.push(Shape::Segment(s.from, s.to));
        }
        let mut disc = Layer::new("dirac", Style::Blue);
        disc.shapes.push(Shape::Circle(circle));

        let mut layers = vec![translates, lines, disc];
        if let Some(overlay) = &opts.overlay {
            layers.push(overlay.clone());
        }
        Ok(Self { frame, layers })
    }

    pub fn layer(&self, name: &str) -> Option<&Layer> {
        self.layers.iter().find(|l| l.name == name)
    }

    pub fn all_finite(&self) -> bool {
        let ok = |p: &Point| p[0].is_finite() && p[1].is_finite();
        self.layers.iter().flat_map(|l| &l.shapes).all(|s| match s {
            Shape::Polygon(v) => v.iter().all(ok),
            Shape::Segment(a, b) => ok(a) && ok(b),
            Shape::Circle(c) => ok(&c.center) && c.radius.is_finite(),
            Shape::Point(p) => ok(p),
        })
    }

    /// Per-layer element counts, used for CLI statistics.
    pub fn stats(&self) -> Vec<LayerStats> {
        self.layers
            .iter()
            .map(|l| LayerStats {
                name: l.name.clone(),
                style: l.style,
                polygons: l.count(|s| matches!(s, Shape::Polygon(_))),
                segments: l.count(|s| matches!(s, Shape::Segment(..))),
                circles: l.count(|s| matches!(s, Shape::Circle(_))),
                points: l.count(|s| matches!(s, Shape::Point(_))),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerStats {
    pub name: String,
    pub style: Style,
    pub polygons: usize,
    pub segments: usize,
    pub circles: usize,
    pub points: usize,
}
