use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn segment_distance(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = (((z - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (z - (a + d * t)).norm()
}

/// Convex polygon with counter-clockwise, deduplicated vertices. One vertex
/// is a point, two vertices a segment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HullPolygon {
    vertices: Vec<Complex64>,
}

impl HullPolygon {
    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Largest vertex modulus; the reference length for tolerances.
    pub fn scale(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    fn edges(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Distance from `z` to the polygon boundary, positive inside and
    /// negative outside. Degenerate hulls have empty interior.
    pub fn signed_distance(&self, z: Complex64) -> f64 {
        let d = self
            .edges()
            .map(|(a, b)| segment_distance(z, a, b))
            .fold(f64::INFINITY, f64::min);
        if self.vertices.len() < 3 {
            return -d;
        }
        let inside = self.edges().all(|(a, b)| cross(b - a, z - a) >= 0.0);
        if inside {
            d
        } else {
            -d
        }
    }

    /// Distance from `z` to the filled polygon (zero inside).
    pub fn distance(&self, z: Complex64) -> f64 {
        (-self.signed_distance(z)).max(0.0)
    }

    /// `max Re(e^{iθ}z)` over the polygon.
    pub fn support(&self, theta: f64) -> f64 {
        let rot = Complex64::from_polar(1.0, theta);
        self.vertices
            .iter()
            .map(|v| (rot * v).re)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn perimeter(&self) -> f64 {
        if self.vertices.len() < 2 {
            return 0.0;
        }
        self.edges().map(|(a, b)| (b - a).norm()).sum()
    }

    /// `count` points equally spaced in arc length along the boundary.
    pub fn boundary_samples(&self, count: usize) -> Vec<Complex64> {
        let total = self.perimeter();
        if total == 0.0 || count == 0 {
            return self.vertices.clone();
        }
        let step = total / count as f64;
        let mut out = Vec::with_capacity(count);
        let mut target = 0.0;
        let mut walked = 0.0;
        for (a, b) in self.edges() {
            let len = (b - a).norm();
            while target < walked + len && out.len() < count {
                out.push(a + (b - a) * ((target - walked) / len));
                target += step;
            }
            walked += len;
        }
        out
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Result<Self> {
        convex_hull(&self.vertices.iter().map(|v| f(*v)).collect::<Vec<_>>())
    }
}

/// Planar convex hull by Andrew's monotone chain. Points closer than
/// `1e−12·scale` are merged and nearly collinear vertices are dropped.
pub fn convex_hull(points: &[Complex64]) -> Result<HullPolygon> {
    if points.is_empty() {
        return Err(Error::usage("convex hull of an empty point set"));
    }
    if points.iter().any(|p| !(p.re.is_finite() && p.im.is_finite())) {
        return Err(Error::numeric("convex hull input contains non-finite points"));
    }
    let scale = points
        .iter()
        .map(|p| p.norm())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let eps = 1e-12 * scale;
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup_by(|a, b| (*a - *b).norm() <= eps);
    if pts.len() == 1 {
        return Ok(HullPolygon { vertices: pts });
    }
    // Turn test relative to the edge length keeps the tolerance scale-free.
    let turns_left = |o: Complex64, a: Complex64, b: Complex64| cross(a - o, b - o) > eps * (b - o).norm().max(eps);
    let mut lower: Vec<Complex64> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && !turns_left(lower[lower.len() - 2], lower[lower.len() - 1], p) {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Complex64> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && !turns_left(upper[upper.len() - 2], upper[upper.len() - 1], p) {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let mut vertices = lower;
    if vertices.len() == 2 && (vertices[0] - vertices[1]).norm() <= eps {
        vertices.pop();
    }
    Ok(HullPolygon { vertices })
}

/// Vertices `radius·e^{i(rotation + 2πk/n)}`.
pub fn regular_polygon(n: usize, radius: f64, rotation: f64) -> Result<HullPolygon> {
    if n < 3 {
        return Err(Error::usage(format!("a regular polygon needs n >= 3, got {n}")));
    }
    let pts: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, rotation + TAU * k as f64 / n as f64))
        .collect();
    convex_hull(&pts)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscSpec {
    pub center: Complex64,
    pub radius: f64,
}

impl DiscSpec {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius >= 0.0) {
            return Err(Error::domain(format!("disc radius must be non-negative, got {radius}")));
        }
        Ok(DiscSpec { center, radius })
    }

    pub fn boundary_samples(&self, count: usize) -> Vec<Complex64> {
        (0..count)
            .map(|k| self.center + Complex64::from_polar(self.radius, TAU * k as f64 / count as f64))
            .collect()
    }
}

/// Ellipse given by its foci and full minor axis length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipseSpec {
    pub focus1: Complex64,
    pub focus2: Complex64,
    pub minor_axis: f64,
}

impl EllipseSpec {
    pub fn new(focus1: Complex64, focus2: Complex64, minor_axis: f64) -> Result<Self> {
        if !(minor_axis >= 0.0) {
            return Err(Error::domain(format!(
                "minor axis must be non-negative, got {minor_axis}"
            )));
        }
        Ok(EllipseSpec {
            focus1,
            focus2,
            minor_axis,
        })
    }

    pub fn center(&self) -> Complex64 {
        (self.focus1 + self.focus2) * 0.5
    }

    /// Full major axis length `√(|f1 − f2|² + minor²)`.
    pub fn major_axis(&self) -> f64 {
        (self.focus1 - self.focus2).norm().hypot(self.minor_axis)
    }

    fn axis_angle(&self) -> f64 {
        let d = self.focus2 - self.focus1;
        if d.norm() == 0.0 {
            0.0
        } else {
            d.arg()
        }
    }

    pub fn boundary_samples(&self, count: usize) -> Vec<Complex64> {
        let (a, b) = (self.major_axis() / 2.0, self.minor_axis / 2.0);
        let rot = Complex64::from_polar(1.0, self.axis_angle());
        (0..count)
            .map(|k| {
                let t = TAU * k as f64 / count as f64;
                self.center() + rot * Complex64::new(a * t.cos(), b * t.sin())
            })
            .collect()
    }

    /// The boundary point maximizing `Re(e^{iθ}z)`.
    pub fn support_point(&self, theta: f64) -> Complex64 {
        let (a, b) = (self.major_axis() / 2.0, self.minor_axis / 2.0);
        let phi = self.axis_angle();
        let beta = theta + phi;
        let (cb, sb) = (beta.cos(), beta.sin());
        let h = (a * a * cb * cb + b * b * sb * sb).sqrt();
        if h == 0.0 {
            return self.center();
        }
        self.center() + Complex64::from_polar(1.0, phi) * Complex64::new(a * a * cb, -b * b * sb) / h
    }

    /// `|z − f1| + |z − f2| − major`: zero on the ellipse, negative inside.
    pub fn focal_excess(&self, z: Complex64) -> f64 {
        (z - self.focus1).norm() + (z - self.focus2).norm() - self.major_axis()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Shape {
    Disc(DiscSpec),
    Ellipse(EllipseSpec),
    Point(Complex64),
}

impl Shape {
    pub fn boundary_samples(&self, count: usize) -> Vec<Complex64> {
        match self {
            Shape::Disc(d) => d.boundary_samples(count),
            Shape::Ellipse(e) => e.boundary_samples(count),
            Shape::Point(p) => vec![*p],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Containment {
    pub contained: bool,
    pub min_signed_distance: f64,
}

/// Number of shape boundary samples used by [`shape_containment`].
pub const CONTAINMENT_SAMPLES: usize = 720;

/// Whether every boundary sample of `shape` has signed distance at least
/// `−margin` to the hull.
pub fn shape_containment(hull: &HullPolygon, shape: &Shape, margin: f64) -> Containment {
    let min = shape
        .boundary_samples(CONTAINMENT_SAMPLES)
        .iter()
        .map(|z| hull.signed_distance(*z))
        .fold(f64::INFINITY, f64::min);
    Containment {
        contained: min >= -margin,
        min_signed_distance: min,
    }
}

/// Number of perimeter samples per hull in [`hull_hausdorff`].
pub const HAUSDORFF_SAMPLES: usize = 1024;

/// Symmetric Hausdorff distance between filled convex polygons, evaluated on
/// the vertices plus equally spaced perimeter samples of each.
pub fn hull_hausdorff(a: &HullPolygon, b: &HullPolygon) -> f64 {
    let one_way = |x: &HullPolygon, y: &HullPolygon| {
        x.vertices
            .iter()
            .copied()
            .chain(x.boundary_samples(HAUSDORFF_SAMPLES))
            .map(|z| y.distance(z))
            .fold(0.0, f64::max)
    };
    one_way(a, b).max(one_way(b, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hull_examples() {
        let sq = convex_hull(&[c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0), c(0.1, 0.1)]).unwrap();
        assert_eq!(sq.len(), 4);
        let seg = convex_hull(&[c(0.0, 0.0), c(1.0, 0.0), c(0.5, 0.0)]).unwrap();
        assert_eq!(seg.vertices(), &[c(0.0, 0.0), c(1.0, 0.0)]);
        let pt = convex_hull(&[c(2.0, 1.0), c(2.0, 1.0)]).unwrap();
        assert_eq!(pt.len(), 1);
        assert!(convex_hull(&[]).is_err());
    }

    #[test]
    fn hull_is_counter_clockwise() {
        let h = convex_hull(&[c(0.0, 0.0), c(2.0, 0.0), c(2.0, 1.0), c(0.0, 1.0)]).unwrap();
        let v = h.vertices();
        for i in 0..v.len() {
            let (a, b, d) = (v[i], v[(i + 1) % v.len()], v[(i + 2) % v.len()]);
            assert!(cross(b - a, d - b) > 0.0);
        }
    }

    #[test]
    fn signed_distance_signs() {
        let sq = regular_polygon(4, 1.0, 0.0).unwrap();
        let inner = std::f64::consts::FRAC_1_SQRT_2;
        assert!((sq.signed_distance(c(0.0, 0.0)) - inner).abs() < 1e-15);
        assert!((sq.signed_distance(c(2.0, 0.0)) + 1.0).abs() < 1e-15);
        let seg = convex_hull(&[c(-1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(seg.signed_distance(c(0.0, 0.0)) <= 0.0);
    }

    #[test]
    fn containment_examples() {
        let square = convex_hull(&[c(1.0, 1.0), c(-1.0, 1.0), c(-1.0, -1.0), c(1.0, -1.0)]).unwrap();
        let small = Shape::Disc(DiscSpec::new(c(0.0, 0.0), 0.5).unwrap());
        assert!(shape_containment(&square, &small, 0.0).contained);
        let big = Shape::Disc(DiscSpec::new(c(0.0, 0.0), 2.0).unwrap());
        assert!(!shape_containment(&square, &big, 0.0).contained);
    }

    #[test]
    fn hausdorff_square_vs_disc() {
        let square = convex_hull(&[c(1.0, 1.0), c(-1.0, 1.0), c(-1.0, -1.0), c(1.0, -1.0)]).unwrap();
        let disc = regular_polygon(360, 1.0, 0.0).unwrap();
        assert!((hull_hausdorff(&square, &disc) - (2f64.sqrt() - 1.0)).abs() < 2e-3);
        assert_eq!(hull_hausdorff(&square, &square), 0.0);
    }

    #[test]
    fn regular_polygon_examples() {
        let sq = regular_polygon(4, 1.0, 0.0).unwrap();
        let mut expected = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
        for v in sq.vertices() {
            let hit = expected.iter_mut().find(|e| (**e - v).norm() < 1e-15);
            assert!(hit.is_some());
        }
        assert!(regular_polygon(2, 1.0, 0.0).is_err());
        let tri = regular_polygon(3, 1.0, 0.3).unwrap();
        let rot = regular_polygon(3, 1.0, 0.3 + TAU / 3.0).unwrap();
        assert!(hull_hausdorff(&tri, &rot) < 1e-14);
    }

    #[test]
    fn ellipse_support_point_is_extremal() {
        let e = EllipseSpec::new(c(-1.0, 0.5), c(1.0, -0.2), 0.8).unwrap();
        for k in 0..16 {
            let theta = TAU * k as f64 / 16.0;
            let p = e.support_point(theta);
            assert!(e.focal_excess(p).abs() < 1e-12);
            let rot = Complex64::from_polar(1.0, theta);
            let best = e
                .boundary_samples(4096)
                .iter()
                .map(|z| (rot * z).re)
                .fold(f64::MIN, f64::max);
            assert!((rot * p).re >= best - 1e-12);
        }
    }
}
