//! Convex polygon model (with facet extraction and polar duals), simplices
//! for dimensions up to 4, and signed-area utilities.

use crate::error::{Error, Result};
use crate::projective::{bracket, HomPoint, HyperplaneForm};

/// Interiority cutoff: a point is strictly interior when every inward facet
/// value exceeds this fraction of the polygon diameter.
pub const INTERIOR_TOL: f64 = 1e-12;

/// A strictly convex polygon with counterclockwise vertices and derived
/// inward facet lines, one per edge, normalized to unit gradient.
///
/// Facet `i` supports the edge from vertex `i` to vertex `i + 1 (mod n)`;
/// its form is nonnegative on the polygon and positive in the interior.
#[derive(Debug, Clone)]
pub struct ConvexPolygon {
    vertices: Vec<[f64; 2]>,
    facets: Vec<HyperplaneForm>,
    edge_lengths: Vec<f64>,
    diameter: f64,
    reversed: bool,
}

impl ConvexPolygon {
    /// Validates a vertex list into a convex polygon.
    ///
    /// Clockwise input is auto-reversed (the [`input_reversed`] flag records
    /// it); repeated consecutive vertices, collinear triples and non-convex
    /// chains are rejected.
    ///
    /// [`input_reversed`]: ConvexPolygon::input_reversed
    pub fn from_vertices(points: &[[f64; 2]]) -> Result<Self> {
        let n = points.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let scale = points
            .iter()
            .flat_map(|p| p.iter())
            .fold(0.0f64, |m, c| m.max(c.abs()))
            .max(1e-300);
        for i in 0..n {
            let j = (i + 1) % n;
            let d = ((points[j][0] - points[i][0]).powi(2)
                + (points[j][1] - points[i][1]).powi(2))
            .sqrt();
            if d <= 1e-14 * scale {
                return Err(Error::DuplicateVertex(i));
            }
        }

        let mut vertices = points.to_vec();
        let mut reversed = false;
        if polygon_area(&vertices) < 0.0 {
            vertices.reverse();
            reversed = true;
        }

        // strict convexity: consecutive edge vectors must turn left
        for i in 0..n {
            let a = vertices[(i + n - 1) % n];
            let b = vertices[i];
            let c = vertices[(i + 1) % n];
            let cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
            if cross <= 0.0 {
                return Err(Error::NotConvex(i));
            }
        }

        let mut facets = Vec::with_capacity(n);
        let mut edge_lengths = Vec::with_capacity(n);
        for i in 0..n {
            let p = vertices[i];
            let q = vertices[(i + 1) % n];
            let (ex, ey) = (q[0] - p[0], q[1] - p[1]);
            let len = (ex * ex + ey * ey).sqrt();
            // inward normal of a CCW edge is the edge direction rotated +90°
            let (nx, ny) = (-ey / len, ex / len);
            let c = -(nx * p[0] + ny * p[1]);
            facets.push(HyperplaneForm::new(vec![nx, ny, c])?);
            edge_lengths.push(len);
        }

        let mut diameter = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                let d = ((vertices[j][0] - vertices[i][0]).powi(2)
                    + (vertices[j][1] - vertices[i][1]).powi(2))
                .sqrt();
                diameter = diameter.max(d);
            }
        }

        Ok(Self { vertices, facets, edge_lengths, diameter, reversed })
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Inward unit-gradient facet lines, in edge order.
    pub fn facets(&self) -> &[HyperplaneForm] {
        &self.facets
    }

    pub fn edge_lengths(&self) -> &[f64] {
        &self.edge_lengths
    }

    /// Largest pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// True when the constructor flipped a clockwise input to counterclockwise.
    pub fn input_reversed(&self) -> bool {
        self.reversed
    }

    pub fn centroid(&self) -> [f64; 2] {
        let n = self.vertices.len() as f64;
        let (sx, sy) = self
            .vertices
            .iter()
            .fold((0.0, 0.0), |(sx, sy), p| (sx + p[0], sy + p[1]));
        [sx / n, sy / n]
    }

    /// Axis-aligned bounding box as (xmin, xmax, ymin, ymax).
    pub fn bbox(&self) -> (f64, f64, f64, f64) {
        let mut b = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for p in &self.vertices {
            b.0 = b.0.min(p[0]);
            b.1 = b.1.max(p[0]);
            b.2 = b.2.min(p[1]);
            b.3 = b.3.max(p[1]);
        }
        b
    }

    /// Smallest inward facet value at `x`; positive inside, negative outside.
    pub fn min_facet_value(&self, x: [f64; 2]) -> f64 {
        self.facets
            .iter()
            .map(|f| f.eval_xy(x[0], x[1]))
            .fold(f64::INFINITY, f64::min)
    }

    /// Strict interiority at tolerance [`INTERIOR_TOL`] × diameter.
    pub fn is_strictly_interior(&self, x: [f64; 2]) -> bool {
        self.min_facet_value(x) > INTERIOR_TOL * self.diameter
    }

    /// Closed containment (boundary points allowed, same tolerance).
    pub fn contains(&self, x: [f64; 2]) -> bool {
        self.min_facet_value(x) >= -INTERIOR_TOL * self.diameter
    }

    /// Smallest distance from `x` to any diagonal line through two
    /// non-adjacent vertices; fan triangulations have individually singular
    /// terms along those lines.
    pub fn distance_to_diagonal_lines(&self, x: [f64; 2]) -> f64 {
        let n = self.vertices.len();
        let mut best = f64::INFINITY;
        for i in 0..n {
            for j in i + 1..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                best = best.min(self.distance_to_line(i, j, x));
            }
        }
        best
    }

    fn distance_to_line(&self, i: usize, j: usize, x: [f64; 2]) -> f64 {
        let a = self.vertices[i];
        let b = self.vertices[j];
        let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
        let len = (dx * dx + dy * dy).sqrt();
        ((x[0] - a[0]) * dy - (x[1] - a[1]) * dx).abs() / len
    }

    /// Fan base whose diagonal lines stay farthest from `x`; evaluating the
    /// fan sum from this base avoids the worst removable-singularity
    /// cancellation.
    pub fn stable_fan_base(&self, x: [f64; 2]) -> usize {
        let n = self.vertices.len();
        let mut best = (0usize, f64::NEG_INFINITY);
        for b in 0..n {
            let mut clearance = f64::INFINITY;
            for j in 0..n {
                if j == b || j == (b + 1) % n || (j + 1) % n == b {
                    continue;
                }
                clearance = clearance.min(self.distance_to_line(b, j, x));
            }
            if clearance > best.1 {
                best = (b, clearance);
            }
        }
        best.0
    }

    /// Polar dual polygon with respect to a strictly interior point.
    ///
    /// Writing facet `i` as `n·p ≤ h` with outward normal `n`, the dual
    /// vertex is `n / (h − n·x)`; dual vertices follow the facet order and
    /// wind counterclockwise around the dual-plane origin.
    pub fn polar_dual(&self, x: [f64; 2]) -> Result<DualPolygon> {
        if !self.is_strictly_interior(x) {
            return Err(Error::NotInterior);
        }
        let vertices = self
            .facets
            .iter()
            .map(|f| {
                let c = f.coeffs();
                let v = f.eval_xy(x[0], x[1]);
                // outward normal is -(a, b) and h - n_out·x equals the
                // inward facet value at x
                [-c[0] / v, -c[1] / v]
            })
            .collect();
        Ok(DualPolygon { vertices, base_point: x })
    }
}

/// Polar dual of a convex polygon, taken about an interior base point; one
/// dual vertex per primal facet, with the dual-plane origin strictly inside.
#[derive(Debug, Clone)]
pub struct DualPolygon {
    vertices: Vec<[f64; 2]>,
    base_point: [f64; 2],
}

impl DualPolygon {
    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn base_point(&self) -> [f64; 2] {
        self.base_point
    }

    /// Signed shoelace area; positive since dual vertices wind
    /// counterclockwise.
    pub fn area(&self) -> f64 {
        polygon_area(&self.vertices)
    }
}

/// Signed shoelace area of an ordered vertex list; positive for
/// counterclockwise order.
pub fn polygon_area(vertices: &[[f64; 2]]) -> f64 {
    let n = vertices.len();
    let mut sum = 0.0;
    for i in 0..n {
        let j = (i + 1) % n;
        sum += vertices[i][0] * vertices[j][1] - vertices[j][0] * vertices[i][1];
    }
    sum / 2.0
}

/// Signed area of the triangle (a, b, c); equals the bracket of the three
/// lifted points divided by two, and agrees bit-for-bit with
/// [`polygon_area`] on the same three vertices.
pub fn signed_triangle_area(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    polygon_area(&[a, b, c])
}

/// An affine d-simplex, d ≤ 4, stored as d+1 affine vertices.
#[derive(Debug, Clone)]
pub struct Simplex {
    dim: usize,
    vertices: Vec<Vec<f64>>,
}

impl Simplex {
    pub fn new(vertices: Vec<Vec<f64>>) -> Result<Self> {
        let d = vertices.len().saturating_sub(1);
        if d < 1 || vertices.iter().any(|v| v.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d.max(1),
                got: vertices.first().map_or(0, |v| v.len()),
            });
        }
        let s = Self { dim: d, vertices };
        if s.vertex_bracket() == 0.0 {
            return Err(Error::DegenerateSimplex);
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    /// Vertices lifted into the last-coordinate-1 chart.
    pub fn lifted(&self) -> Vec<HomPoint> {
        self.vertices.iter().map(|v| HomPoint::from_affine(v)).collect()
    }

    fn vertex_bracket(&self) -> f64 {
        bracket(&self.lifted()).expect("lifted vertices have matching dimension")
    }

    /// Signed volume: vertex bracket over d!.
    pub fn signed_volume(&self) -> f64 {
        let mut fact = 1.0;
        for k in 2..=self.dim {
            fact *= k as f64;
        }
        self.vertex_bracket() / fact
    }
}
