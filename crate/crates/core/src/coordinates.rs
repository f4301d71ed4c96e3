//! Generalized barycentric coordinates: linear interpolation on segments,
//! signed-area coordinates on triangles, and Wachspress coordinates on
//! convex polygons computed by three mutually cross-validating routes.
//!
//! The classical route evaluates the cleared-denominator corner/edge-area
//! form and is boundary-safe. The canonical route forms the ratio of
//! projective canonical functions (the wedge at each vertex, closed by the
//! dual line of the query point, over the polygon's own canonical function).
//! The dual route reads the same weights off a fan triangulation of the
//! polar dual polygon. All three agree at interior points; their pairwise
//! agreement is the library's central correctness check.

use crate::canonical::SimplexTerm;
use crate::error::{Error, Result};
use crate::geometry::{signed_triangle_area, ConvexPolygon};
use crate::projective::{cross3, HomPoint};

/// Which construction produced a weight vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Cleared-denominator corner/edge-area form (boundary-safe).
    Classical,
    /// Ratio of canonical rational functions.
    Canonical,
    /// Fan triangulation of the polar dual polygon.
    Dual,
}

/// Barycentric weights, one per vertex, summing to one.
#[derive(Debug, Clone)]
pub struct BaryWeights {
    values: Vec<f64>,
    route: Route,
}

impl BaryWeights {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn route(&self) -> Route {
        self.route
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Interpolates vertex data: the dot product of weights and data.
    pub fn apply(&self, data: &[f64]) -> Result<f64> {
        if data.len() != self.values.len() {
            return Err(Error::DimensionMismatch {
                expected: self.values.len(),
                got: data.len(),
            });
        }
        Ok(self.values.iter().zip(data).map(|(w, f)| w * f).sum())
    }
}

/// Per-vertex area data of the classical Wachspress form: the corner area
/// Cᵢ = area(pᵢ₋₁, pᵢ, pᵢ₊₁) and the two adjacent edge areas
/// A_{i−1,i}, A_{i,i+1}, where A_{k,k+1} = area(x, p_k, p_{k+1}).
#[derive(Debug, Clone)]
pub struct WachspressTerms {
    corner_areas: Vec<f64>,
    edge_areas: Vec<f64>,
}

/// The record for one vertex of a [`WachspressTerms`] table.
#[derive(Debug, Clone, Copy)]
pub struct VertexTerm {
    pub corner_area: f64,
    pub prev_edge_area: f64,
    pub next_edge_area: f64,
}

impl WachspressTerms {
    pub fn compute(polygon: &ConvexPolygon, x: [f64; 2]) -> Self {
        let n = polygon.len();
        let v = polygon.vertices();
        let edge_areas = (0..n)
            .map(|k| signed_triangle_area(x, v[k], v[(k + 1) % n]))
            .collect();
        let corner_areas = (0..n)
            .map(|i| signed_triangle_area(v[(i + n - 1) % n], v[i], v[(i + 1) % n]))
            .collect();
        Self { corner_areas, edge_areas }
    }

    pub fn len(&self) -> usize {
        self.corner_areas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corner_areas.is_empty()
    }

    /// Corner areas Cᵢ, one per vertex; positive for strictly convex input.
    pub fn corner_areas(&self) -> &[f64] {
        &self.corner_areas
    }

    /// Edge areas A_{k,k+1}, one per edge; positive for strictly interior x.
    pub fn edge_areas(&self) -> &[f64] {
        &self.edge_areas
    }

    pub fn vertex(&self, i: usize) -> VertexTerm {
        let n = self.len();
        VertexTerm {
            corner_area: self.corner_areas[i],
            prev_edge_area: self.edge_areas[(i + n - 1) % n],
            next_edge_area: self.edge_areas[i],
        }
    }
}

/// Linear barycentric coordinates of x in the segment [a, b]:
/// ((b−x)/(b−a), (x−a)/(b−a)).
///
/// This closed form is the canonical-form ratio on the projective line after
/// translating x to the origin, with poles cancelled.
pub fn segment_coords(a: f64, b: f64, x: f64) -> Result<BaryWeights> {
    if !(a < b) {
        return Err(Error::InvalidParameter("segment requires a < b"));
    }
    if x < a || x > b {
        return Err(Error::InvalidParameter("query point must lie within [a, b]"));
    }
    let d = b - a;
    Ok(BaryWeights { values: vec![(b - x) / d, (x - a) / d], route: Route::Classical })
}

/// Signed-area barycentric coordinates of x in the triangle (p0, p1, p2):
/// λᵢ = Aᵢ / A with Aᵢ the area of the sub-triangle opposite vertex i.
pub fn triangle_coords(
    p0: [f64; 2],
    p1: [f64; 2],
    p2: [f64; 2],
    x: [f64; 2],
) -> Result<BaryWeights> {
    let area = signed_triangle_area(p0, p1, p2);
    let scale = [p0, p1, p2]
        .iter()
        .flat_map(|p| p.iter())
        .fold(0.0f64, |m, c| m.max(c.abs()))
        .max(1e-300);
    if area.abs() <= 1e-14 * scale * scale {
        return Err(Error::DegenerateSimplex);
    }
    let values = vec![
        signed_triangle_area(x, p1, p2) / area,
        signed_triangle_area(x, p2, p0) / area,
        signed_triangle_area(x, p0, p1) / area,
    ];
    Ok(BaryWeights { values, route: Route::Classical })
}

/// Wachspress coordinates in cleared-denominator polynomial form:
/// wᵢ = Cᵢ ∏_{k ∉ {i−1, i}} A_{k,k+1}, normalized by their sum.
///
/// Well-defined on the closed polygon including edges and vertices; queries
/// within 1e−12 × diameter of a vertex snap to that vertex's Kronecker
/// delta.
pub fn wachspress_classical(polygon: &ConvexPolygon, x: [f64; 2]) -> Result<BaryWeights> {
    let n = polygon.len();
    let snap = 1e-12 * polygon.diameter();
    for (j, v) in polygon.vertices().iter().enumerate() {
        if ((x[0] - v[0]).powi(2) + (x[1] - v[1]).powi(2)).sqrt() <= snap {
            let mut values = vec![0.0; n];
            values[j] = 1.0;
            return Ok(BaryWeights { values, route: Route::Classical });
        }
    }
    if !polygon.contains(x) {
        return Err(Error::OutsidePolygon);
    }
    let terms = WachspressTerms::compute(polygon, x);
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let mut w = terms.corner_areas()[i];
        for k in 0..n {
            if k == (i + n - 1) % n || k == i {
                continue;
            }
            w *= terms.edge_areas()[k];
        }
        values.push(w);
    }
    let total: f64 = values.iter().sum();
    for v in &mut values {
        *v /= total;
    }
    Ok(BaryWeights { values, route: Route::Classical })
}

/// Wachspress coordinates as ratios of canonical rational functions.
///
/// Coordinates are translated so the query point is the origin and its dual
/// line is the line at infinity. The numerator for vertex pᵢ is the
/// canonical function of the wedge bounded by the two edge lines through pᵢ
/// and the line at infinity; the denominator is the polygon's canonical
/// function. Requires a strictly interior query point.
pub fn wachspress_canonical(polygon: &ConvexPolygon, x: [f64; 2]) -> Result<BaryWeights> {
    let scales = vec![1.0; polygon.len()];
    wachspress_canonical_scaled(polygon, x, &scales)
}

/// [`wachspress_canonical`] with explicit positive rescalings of the lifted
/// homogeneous vertex coordinates.
///
/// The weights are exactly invariant under the choice of scales; exposing
/// them makes that projective invariance directly testable.
pub fn wachspress_canonical_scaled(
    polygon: &ConvexPolygon,
    x: [f64; 2],
    scales: &[f64],
) -> Result<BaryWeights> {
    let n = polygon.len();
    if scales.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: scales.len() });
    }
    if scales.iter().any(|s| !(*s > 0.0 && s.is_finite())) {
        return Err(Error::InvalidParameter("vertex scales must be positive"));
    }
    if !polygon.is_strictly_interior(x) {
        return Err(Error::NotInterior);
    }

    // translate x to the origin and lift with the requested scales
    let lifted: Vec<HomPoint> = polygon
        .vertices()
        .iter()
        .zip(scales)
        .map(|(p, s)| {
            HomPoint::new(vec![s * (p[0] - x[0]), s * (p[1] - x[1]), *s])
                .expect("positive scale yields valid coordinates")
        })
        .collect();
    let origin = [0.0, 0.0, 1.0];
    let at_infinity = origin; // dual of the origin is the line at infinity

    // edge lines and their points at infinity (the edge directions)
    let directions: Vec<HomPoint> = (0..n)
        .map(|i| {
            let line = cross3(lifted[i].coords(), lifted[(i + 1) % n].coords());
            HomPoint::new(cross3(&line, &at_infinity).to_vec())
                .map_err(|_| Error::DegenerateSimplex)
        })
        .collect::<Result<_>>()?;

    // wedge numerators, oriented to be positive at interior points
    let mut numerators = Vec::with_capacity(n);
    for i in 0..n {
        let term = SimplexTerm::new(
            vec![
                directions[(i + n - 1) % n].clone(),
                lifted[i].clone(),
                directions[i].clone(),
            ],
            1,
        )?;
        numerators.push(term.eval(&origin));
    }

    // denominator: fan triangulation of the translated polygon at the
    // origin, fanned from the base whose diagonals stay farthest from the
    // query point (the fan value is base-independent, but terms become
    // individually singular on diagonal lines)
    let base = polygon.stable_fan_base(x);
    let mut denominator = 0.0;
    for i in 0..n {
        let j = (i + 1) % n;
        if i == base || j == base {
            continue;
        }
        let term = SimplexTerm::new(
            vec![lifted[base].clone(), lifted[i].clone(), lifted[j].clone()],
            1,
        )?;
        denominator += term.eval(&origin);
    }
    if !denominator.is_finite() {
        // query point sits on a diagonal of every fan (e.g. the center of a
        // regular hexagon); the numerator wedges triangulate the same region
        // with boundary-only poles, so their sum is the safe equivalent
        denominator = numerators.iter().sum();
    }

    let values = numerators.iter().map(|v| v / denominator).collect();
    Ok(BaryWeights { values, route: Route::Canonical })
}

/// Wachspress coordinates as ratios of polar-dual volumes.
///
/// The dual face of vertex pᵢ is the dual-polygon edge joining the dual
/// vertices of facets i−1 and i; λᵢ is the area of the triangle that edge
/// spans with the dual-plane origin, over the full dual area. Requires a
/// strictly interior query point.
pub fn wachspress_dual(polygon: &ConvexPolygon, x: [f64; 2]) -> Result<BaryWeights> {
    let dual = polygon.polar_dual(x)?;
    let n = polygon.len();
    let ys = dual.vertices();
    let total = dual.area();
    let values = (0..n)
        .map(|i| {
            let prev = ys[(i + n - 1) % n];
            signed_triangle_area([0.0, 0.0], prev, ys[i]) / total
        })
        .collect();
    Ok(BaryWeights { values, route: Route::Dual })
}

/// Barycentric interpolation of per-vertex data at x along the chosen route.
pub fn interpolate(
    polygon: &ConvexPolygon,
    x: [f64; 2],
    data: &[f64],
    route: Route,
) -> Result<f64> {
    let weights = match route {
        Route::Classical => wachspress_classical(polygon, x)?,
        Route::Canonical => wachspress_canonical(polygon, x)?,
        Route::Dual => wachspress_dual(polygon, x)?,
    };
    weights.apply(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{polytope_canonical, segment_canonical};
    use approx::assert_relative_eq;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::from_vertices(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap()
    }

    fn sym_square() -> ConvexPolygon {
        ConvexPolygon::from_vertices(&[[1.0, -1.0], [1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0]])
            .unwrap()
    }

    fn assert_weights(w: &BaryWeights, expected: &[f64], tol: f64) {
        assert_eq!(w.len(), expected.len());
        for (got, want) in w.values().iter().zip(expected) {
            assert_relative_eq!(got, want, epsilon = tol, max_relative = tol);
        }
    }

    #[test]
    fn segment_fixtures() {
        assert_weights(&segment_coords(0.0, 1.0, 0.5).unwrap(), &[0.5, 0.5], 0.0);
        assert_weights(&segment_coords(0.0, 1.0, 0.25).unwrap(), &[0.75, 0.25], 0.0);
        assert_weights(&segment_coords(0.0, 1.0, 0.0).unwrap(), &[1.0, 0.0], 0.0);
        assert!(segment_coords(1.0, 1.0, 1.0).is_err());
        assert!(segment_coords(0.0, 1.0, 1.5).is_err());
    }

    #[test]
    fn segment_matches_canonical_ratio() {
        // λ_a = Ω([a, x*]) / Ω([a, b]) with x translated to the origin,
        // evaluated through the bracket machinery directly
        let hp = |c: [f64; 2]| HomPoint::new(c.to_vec()).unwrap();
        let (a, b) = (-0.4, 1.7);
        for x in [0.1, 0.5, 1.2] {
            let a_t = hp([a - x, 1.0]);
            let b_t = hp([b - x, 1.0]);
            let infinity = hp([1.0, 0.0]);
            let origin = hp([0.0, 1.0]);
            let den = segment_canonical(&a_t, &b_t).unwrap().eval(&origin);
            let num_a = segment_canonical(&a_t, &infinity).unwrap().eval(&origin);
            let num_b = segment_canonical(&infinity, &b_t).unwrap().eval(&origin);
            let w = segment_coords(a, b, x).unwrap();
            assert_relative_eq!(num_a / den, w.values()[0], max_relative = 1e-13);
            assert_relative_eq!(num_b / den, w.values()[1], max_relative = 1e-13);
        }
    }

    #[test]
    fn triangle_fixtures() {
        let (p0, p1, p2) = ([0.0, 0.0], [1.0, 0.0], [0.0, 1.0]);
        let third = 1.0 / 3.0;
        let w = triangle_coords(p0, p1, p2, [third, third]).unwrap();
        assert_weights(&w, &[third, third, third], 1e-15);
        let w = triangle_coords(p0, p1, p2, [0.25, 0.25]).unwrap();
        assert_weights(&w, &[0.5, 0.25, 0.25], 1e-15);
        let w = triangle_coords(p0, p1, p2, p0).unwrap();
        assert_weights(&w, &[1.0, 0.0, 0.0], 0.0);
        assert!(triangle_coords([0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [0.5, 0.5]).is_err());
    }

    #[test]
    fn classical_unit_square_fixture() {
        let w = wachspress_classical(&unit_square(), [0.25, 0.25]).unwrap();
        assert_weights(&w, &[0.5625, 0.1875, 0.0625, 0.1875], 1e-15);
    }

    #[test]
    fn classical_regular_ngon_center() {
        for n in [3usize, 5, 8] {
            let pts: Vec<[f64; 2]> = (0..n)
                .map(|k| {
                    let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                    [t.cos(), t.sin()]
                })
                .collect();
            let poly = ConvexPolygon::from_vertices(&pts).unwrap();
            let w = wachspress_classical(&poly, [0.0, 0.0]).unwrap();
            assert_weights(&w, &vec![1.0 / n as f64; n], 1e-12);
        }
    }

    #[test]
    fn classical_vertex_is_kronecker_delta() {
        let sq = unit_square();
        for j in 0..4 {
            let w = wachspress_classical(&sq, sq.vertices()[j]).unwrap();
            for (i, v) in w.values().iter().enumerate() {
                assert_eq!(*v, if i == j { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn classical_edge_restriction() {
        let sq = unit_square();
        let t = 0.3;
        let w = wachspress_classical(&sq, [t, 0.0]).unwrap();
        assert!(w.values()[2].abs() <= 1e-12);
        assert!(w.values()[3].abs() <= 1e-12);
        assert_relative_eq!(w.values()[0], 1.0 - t, max_relative = 1e-12);
        assert_relative_eq!(w.values()[1], t, max_relative = 1e-12);
    }

    #[test]
    fn classical_rejects_exterior_point() {
        assert_eq!(
            wachspress_classical(&unit_square(), [2.0, 0.5]).unwrap_err(),
            Error::OutsidePolygon
        );
    }

    #[test]
    fn canonical_matches_classical_on_square() {
        let sq = unit_square();
        let w = wachspress_canonical(&sq, [0.25, 0.25]).unwrap();
        assert_weights(&w, &[0.5625, 0.1875, 0.0625, 0.1875], 1e-13);
        assert_eq!(w.route(), Route::Canonical);
    }

    #[test]
    fn canonical_reduces_to_triangle_coords() {
        let pts = [[0.1, -0.2], [1.3, 0.4], [-0.3, 1.1]];
        let tri = ConvexPolygon::from_vertices(&pts).unwrap();
        let x = [0.3, 0.35];
        let w = wachspress_canonical(&tri, x).unwrap();
        let t = triangle_coords(pts[0], pts[1], pts[2], x).unwrap();
        for (a, b) in w.values().iter().zip(t.values()) {
            assert_relative_eq!(a, b, max_relative = 1e-12);
        }
    }

    #[test]
    fn canonical_numerators_sum_to_polytope_canonical() {
        let pts = [[1.2, 0.0], [0.4, 1.1], [-0.9, 0.8], [-1.1, -0.4], [0.3, -1.2]];
        let pent = ConvexPolygon::from_vertices(&pts).unwrap();
        let x = [0.13, 0.21];
        let w = wachspress_canonical(&pent, x).unwrap();
        // Σ λᵢ = Σ numᵢ / C_P(x); the sum identity is equivalent to Σ λᵢ = 1
        let total: f64 = w.values().iter().sum();
        assert_relative_eq!(total, 1.0, max_relative = 1e-10);
        // and the denominator itself matches the fan sum at x
        let c = polytope_canonical(&pent, 0).unwrap();
        let fan = c.eval_xy(x[0], x[1]);
        let num_sum: f64 = w.values().iter().map(|l| l * fan).sum();
        assert_relative_eq!(num_sum, fan, max_relative = 1e-10);
    }

    #[test]
    fn canonical_requires_interior_point() {
        let sq = unit_square();
        assert_eq!(wachspress_canonical(&sq, [0.5, 0.0]).unwrap_err(), Error::NotInterior);
        assert_eq!(wachspress_dual(&sq, [0.5, 0.0]).unwrap_err(), Error::NotInterior);
    }

    #[test]
    fn canonical_scaled_invariance() {
        let sq = unit_square();
        let x = [0.37, 0.62];
        let base = wachspress_canonical(&sq, x).unwrap();
        let scaled =
            wachspress_canonical_scaled(&sq, x, &[3.0, 0.11, 7.5, 0.9]).unwrap();
        for (a, b) in base.values().iter().zip(scaled.values()) {
            assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn dual_route_fixtures() {
        let w = wachspress_dual(&sym_square(), [0.0, 0.0]).unwrap();
        assert_weights(&w, &[0.25, 0.25, 0.25, 0.25], 1e-15);
        let w = wachspress_dual(&unit_square(), [0.25, 0.25]).unwrap();
        assert_weights(&w, &[0.5625, 0.1875, 0.0625, 0.1875], 1e-13);

        let tri = ConvexPolygon::from_vertices(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
        let w = wachspress_dual(&tri, tri.centroid()).unwrap();
        assert_weights(&w, &[1.0 / 3.0; 3], 1e-14);
    }

    #[test]
    fn interpolation_fixtures() {
        let sq = unit_square();
        for route in [Route::Classical, Route::Canonical, Route::Dual] {
            let v = interpolate(&sq, [0.31, 0.47], &[1.0; 4], route).unwrap();
            assert_relative_eq!(v, 1.0, max_relative = 1e-12);
            let xs: Vec<f64> = sq.vertices().iter().map(|p| p[0]).collect();
            let v = interpolate(&sq, [0.31, 0.47], &xs, route).unwrap();
            assert_relative_eq!(v, 0.31, max_relative = 1e-11);
        }
        let v = interpolate(&sq, [0.5, 0.5], &[0.0, 1.0, 2.0, 1.0], Route::Classical).unwrap();
        assert_relative_eq!(v, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn terms_table_signs() {
        let pts = [[1.2, 0.0], [0.4, 1.1], [-0.9, 0.8], [-1.1, -0.4], [0.3, -1.2]];
        let pent = ConvexPolygon::from_vertices(&pts).unwrap();
        let terms = WachspressTerms::compute(&pent, [0.05, 0.1]);
        for i in 0..pent.len() {
            let rec = terms.vertex(i);
            assert!(rec.corner_area > 0.0);
            assert!(rec.prev_edge_area > 0.0);
            assert!(rec.next_edge_area > 0.0);
        }
    }
}
