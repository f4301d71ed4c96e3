//! Canonical rational functions: segments, simplices of dimension up to 4,
//! convex polygons via signed fan triangulation, and the fractional-power
//! conic form, together with the numerical residue check on polygon facets.
//!
//! All values returned are the coefficient C(x) of the canonical form
//! relative to the standard measure on projective d-space, never the
//! differential form itself; in particular the 1/d! chart factor relating
//! that measure to the affine volume form is not folded into C.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::geometry::ConvexPolygon;
use crate::projective::{det2, det3, HomPoint};

/// Default residue limit schedule, as fractions of the polygon diameter.
pub const RESIDUE_EPS_REL: [f64; 3] = [1e-3, 5e-4, 2.5e-4];

/// One signed simplex summand of a canonical rational function.
///
/// Evaluation at x is sign · (1/d!) ⟨v₀,…,v_d⟩^d / ∏ᵢ ⟨x, vᵢ, …, vᵢ₊d₋₁⟩,
/// the denominator running over the d+1 facet brackets formed by x with d
/// cyclically consecutive vertices. The value is invariant under independent
/// positive rescaling of any vertex's homogeneous coordinates.
#[derive(Debug, Clone)]
pub struct SimplexTerm {
    vertices: Vec<HomPoint>,
    sign: i8,
    numerator: f64,
}

impl SimplexTerm {
    pub fn new(vertices: Vec<HomPoint>, sign: i8) -> Result<Self> {
        if !(sign == 1 || sign == -1) {
            return Err(Error::InvalidParameter("term sign must be +1 or -1"));
        }
        let d = vertices.len().saturating_sub(1);
        if d < 1 {
            return Err(Error::DimensionMismatch { expected: 2, got: vertices.len() });
        }
        for v in &vertices {
            if v.coords().len() != d + 1 {
                return Err(Error::DimensionMismatch { expected: d + 1, got: v.coords().len() });
            }
        }
        let b = crate::projective::bracket(&vertices)?;
        let scale: f64 = vertices
            .iter()
            .map(|v| v.coords().iter().fold(0.0f64, |m, c| m.max(c.abs())))
            .product();
        if b.abs() <= 1e-12 * scale {
            return Err(Error::DegenerateSimplex);
        }
        let mut fact = 1.0;
        for k in 2..=d {
            fact *= k as f64;
        }
        let numerator = f64::from(sign) * b.powi(d as i32) / fact;
        Ok(Self { vertices, sign, numerator })
    }

    pub fn vertices(&self) -> &[HomPoint] {
        &self.vertices
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub(crate) fn eval(&self, x: &[f64]) -> f64 {
        let d = self.vertices.len() - 1;
        let mut den = 1.0;
        match d {
            1 => {
                for v in &self.vertices {
                    den *= det2(x, v.coords());
                }
            }
            2 => {
                for i in 0..3 {
                    den *= det3(
                        x,
                        self.vertices[i].coords(),
                        self.vertices[(i + 1) % 3].coords(),
                    );
                }
            }
            _ => {
                for i in 0..=d {
                    let m = DMatrix::from_fn(d + 1, d + 1, |r, c| {
                        if r == 0 {
                            x[c]
                        } else {
                            self.vertices[(i + r - 1) % (d + 1)].coords()[c]
                        }
                    });
                    den *= m.determinant();
                }
            }
        }
        self.numerator / den
    }
}

/// An evaluable canonical rational function, represented as a signed sum of
/// simplex terms.
///
/// Evaluation returns ±∞ or NaN on the pole locus (the boundary of the
/// underlying region, plus any internal triangulation lines where poles
/// cancel only in the exact limit).
#[derive(Debug, Clone)]
pub struct CanonicalFn {
    dim: usize,
    terms: Vec<SimplexTerm>,
}

impl CanonicalFn {
    pub fn from_terms(terms: Vec<SimplexTerm>) -> Result<Self> {
        let dim = match terms.first() {
            Some(t) => t.vertices().len() - 1,
            None => return Err(Error::InvalidParameter("canonical function needs terms")),
        };
        if terms.iter().any(|t| t.vertices().len() != dim + 1) {
            return Err(Error::DimensionMismatch { expected: dim + 1, got: 0 });
        }
        Ok(Self { dim, terms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[SimplexTerm] {
        &self.terms
    }

    /// Evaluates C at a point given in homogeneous coordinates.
    ///
    /// C is homogeneous of degree −(d+1) in these coordinates; use
    /// [`eval_affine`](Self::eval_affine) for chart values.
    pub fn eval(&self, x: &HomPoint) -> f64 {
        assert_eq!(
            x.coords().len(),
            self.dim + 1,
            "evaluation point dimension must match the canonical function"
        );
        self.terms.iter().map(|t| t.eval(x.coords())).sum()
    }

    /// Evaluates C at an affine point of the last-coordinate-1 chart.
    pub fn eval_affine(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.dim, "affine point dimension must match");
        let mut coords = x.to_vec();
        coords.push(1.0);
        self.terms.iter().map(|t| t.eval(&coords)).sum()
    }

    /// Chart evaluation for the planar case.
    pub fn eval_xy(&self, x: f64, y: f64) -> f64 {
        self.eval_affine(&[x, y])
    }
}

/// Canonical rational function of the segment between two points of the
/// projective line: C(x) = ⟨b,a⟩ / (⟨x,a⟩⟨x,b⟩).
///
/// On an affine segment [a, b] with a < b this is negative in the interior
/// and has simple poles at both endpoints.
pub fn segment_canonical(a: &HomPoint, b: &HomPoint) -> Result<CanonicalFn> {
    if a.coords().len() != 2 || b.coords().len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: a.coords().len().max(b.coords().len()),
        });
    }
    // the numerator bracket of the generic simplex term is taken in vertex
    // order, so storing (b, a) realizes ⟨b,a⟩ exactly
    let term = SimplexTerm::new(vec![b.clone(), a.clone()], 1)?;
    CanonicalFn::from_terms(vec![term])
}

/// Canonical rational function of a nondegenerate d-simplex, d ≥ 1
/// (supported and tested for d ≤ 4).
///
/// For a counterclockwise planar triangle this is
/// (1/2) ⟨p₀,p₁,p₂⟩² / (⟨x,p₀,p₁⟩⟨x,p₁,p₂⟩⟨x,p₂,p₀⟩), positive inside.
pub fn simplex_canonical(vertices: &[HomPoint]) -> Result<CanonicalFn> {
    let term = SimplexTerm::new(vertices.to_vec(), 1)?;
    CanonicalFn::from_terms(vec![term])
}

/// Canonical rational function of a convex polygon, as the signed fan
/// triangulation from the given base vertex: terms (p_b, pᵢ, pᵢ₊₁) for all
/// i ∉ {b−1, b}, each with sign +1.
///
/// Away from the fan diagonals the value is independent of the base vertex;
/// poles of interior diagonals cancel in the sum, leaving poles only on the
/// boundary edge lines.
pub fn polytope_canonical(polygon: &ConvexPolygon, base: usize) -> Result<CanonicalFn> {
    let n = polygon.len();
    if base >= n {
        return Err(Error::BadVertexIndex { index: base, len: n });
    }
    let lifted: Vec<HomPoint> = polygon
        .vertices()
        .iter()
        .map(|p| HomPoint::from_xy(p[0], p[1]))
        .collect();
    let mut terms = Vec::with_capacity(n - 2);
    for i in 0..n {
        let j = (i + 1) % n;
        if i == base || j == base {
            continue;
        }
        terms.push(SimplexTerm::new(
            vec![lifted[base].clone(), lifted[i].clone(), lifted[j].clone()],
            1,
        )?);
    }
    CanonicalFn::from_terms(terms)
}

/// Polynomial extrapolation of samples (εᵢ, f(εᵢ)) to ε = 0 by Neville's
/// algorithm.
pub fn extrapolate_to_zero(samples: &[(f64, f64)]) -> f64 {
    let m = samples.len();
    let mut tab: Vec<f64> = samples.iter().map(|s| s.1).collect();
    for k in 1..m {
        for i in 0..m - k {
            let (xi, xk) = (samples[i].0, samples[i + k].0);
            tab[i] += (tab[i] - tab[i + 1]) * xi / (xk - xi);
        }
    }
    tab[0]
}

/// Default residue schedule for a polygon: [`RESIDUE_EPS_REL`] scaled by its
/// diameter.
pub fn default_eps_schedule(polygon: &ConvexPolygon) -> Vec<f64> {
    RESIDUE_EPS_REL.iter().map(|e| e * polygon.diameter()).collect()
}

/// Residue schedule scaled by the local pole distance at the facet point:
/// the distance from q(t) to the nearest other facet line.
///
/// The extrapolation error of [`residue_ratio`] is governed by the ratio of
/// the schedule to that distance, so this keeps the limit uniformly accurate
/// on squashed polygons and short edges where the diameter-scaled default
/// loses digits.
pub fn local_eps_schedule(polygon: &ConvexPolygon, facet_index: usize, t: f64) -> Result<Vec<f64>> {
    let n = polygon.len();
    if facet_index >= n {
        return Err(Error::BadFacetIndex { index: facet_index, len: n });
    }
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::InvalidParameter("t must lie strictly between facet endpoints"));
    }
    let p = polygon.vertices()[facet_index];
    let q = polygon.vertices()[(facet_index + 1) % n];
    let point = [p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])];
    let local = polygon
        .facets()
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != facet_index)
        .map(|(_, f)| f.eval_xy(point[0], point[1]).abs())
        .fold(f64::INFINITY, f64::min)
        .min(polygon.diameter());
    Ok([4e-3, 2e-3, 1e-3, 5e-4].iter().map(|e| e * local).collect())
}

/// Residue ratio of a polygon facet at normalized arc-length position
/// t ∈ (0, 1).
///
/// Estimates L(t) = lim_{ε→0⁺} ε · C_P(q(t) + ε·n_in) by Richardson
/// extrapolation over the strictly decreasing schedule, where q(t) is the
/// facet point and n_in the unit inward normal, and divides by the facet's
/// own segment canonical function on its arc-length interval [0, L].
///
/// The ratio is constant in t along each facet and across facets of the same
/// polygon; with these conventions its value is −1/2 for planar polygons.
pub fn residue_ratio(
    polygon: &ConvexPolygon,
    facet_index: usize,
    t: f64,
    eps_schedule: &[f64],
) -> Result<f64> {
    let n = polygon.len();
    if facet_index >= n {
        return Err(Error::BadFacetIndex { index: facet_index, len: n });
    }
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::InvalidParameter("t must lie strictly between facet endpoints"));
    }
    if eps_schedule.is_empty()
        || eps_schedule.iter().any(|e| !(*e > 0.0 && e.is_finite()))
        || eps_schedule.windows(2).any(|w| w[1] >= w[0])
    {
        return Err(Error::InvalidParameter(
            "eps schedule must be strictly decreasing and positive",
        ));
    }

    let p = polygon.vertices()[facet_index];
    let q = polygon.vertices()[(facet_index + 1) % n];
    let point = [p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])];
    let coeffs = polygon.facets()[facet_index].coeffs();
    let n_in = [coeffs[0], coeffs[1]];

    let canonical = polytope_canonical(polygon, polygon.stable_fan_base(point))?;
    let mut samples = Vec::with_capacity(eps_schedule.len());
    for &eps in eps_schedule {
        let x = [point[0] + eps * n_in[0], point[1] + eps * n_in[1]];
        if !polygon.is_strictly_interior(x) {
            return Err(Error::InvalidParameter("eps schedule leaves the polygon interior"));
        }
        samples.push((eps, eps * canonical.eval_xy(x[0], x[1])));
    }
    let limit = extrapolate_to_zero(&samples);

    let length = polygon.edge_lengths()[facet_index];
    let seg = segment_canonical(
        &HomPoint::new(vec![0.0, 1.0])?,
        &HomPoint::new(vec![length, 1.0])?,
    )?;
    let seg_value = seg.eval(&HomPoint::new(vec![t * length, 1.0])?);
    Ok(limit / seg_value)
}

/// A nondegenerate projective conic xᵀQx = 0, stored as a symmetric 3×3
/// matrix.
#[derive(Debug, Clone)]
pub struct ConicQ {
    matrix: [[f64; 3]; 3],
}

impl ConicQ {
    /// Accepts a symmetric (within 1e−14 absolute) matrix with nonzero
    /// determinant.
    pub fn new(matrix: [[f64; 3]; 3]) -> Result<Self> {
        for i in 0..3 {
            for j in i + 1..3 {
                if (matrix[i][j] - matrix[j][i]).abs() > 1e-14 {
                    return Err(Error::AsymmetricConic);
                }
            }
        }
        let q = Self { matrix };
        let scale = matrix
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0f64, |m, c| m.max(c.abs()));
        if !q.det().is_finite() || q.det().abs() <= 1e-12 * scale.powi(3) {
            return Err(Error::DegenerateConic);
        }
        Ok(q)
    }

    /// Builds Q from its upper-triangular entries (q00, q01, q02, q11, q12, q22).
    pub fn from_upper(u: [f64; 6]) -> Result<Self> {
        Self::new([
            [u[0], u[1], u[2]],
            [u[1], u[3], u[4]],
            [u[2], u[4], u[5]],
        ])
    }

    pub fn matrix(&self) -> &[[f64; 3]; 3] {
        &self.matrix
    }

    pub fn det(&self) -> f64 {
        det3(&self.matrix[0], &self.matrix[1], &self.matrix[2])
    }

    fn quadratic_form(&self, x: &[f64]) -> f64 {
        let mut s = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                s += x[i] * self.matrix[i][j] * x[j];
            }
        }
        s
    }
}

/// The fractional-power canonical function of a nondegenerate conic:
/// π |det Q|^{3/4} / |xᵀQx|^{3/2}, evaluated on the determinant-normalized
/// matrix so the value depends only on the conic and not on the scale of Q.
///
/// Absolute values keep the result real and positive inside the conic, where
/// xᵀQx and det Q may be negative. Evaluation on the conic itself returns a
/// non-finite value (branch-point singularity rather than a simple pole).
#[derive(Debug, Clone)]
pub struct ConicCanonical {
    conic: ConicQ,
    det_abs: f64,
}

impl ConicCanonical {
    pub fn eval(&self, x: &HomPoint) -> f64 {
        assert_eq!(x.coords().len(), 3, "conic form is defined on the projective plane");
        // |det Q|^{3/4} / |xᵀQx|^{3/2} with Q scaled by |det Q|^{-1/3}
        // collapses to |det Q|^{1/2} / |xᵀQx|^{3/2} on the raw matrix
        let v = self.conic.quadratic_form(x.coords()).abs();
        std::f64::consts::PI * self.det_abs.sqrt() / v.powf(1.5)
    }

    pub fn eval_xy(&self, x: f64, y: f64) -> f64 {
        self.eval(&HomPoint::from_xy(x, y))
    }
}

/// Builds the evaluable conic canonical function for a nondegenerate Q.
pub fn conic_canonical(q: &ConicQ) -> ConicCanonical {
    ConicCanonical { conic: q.clone(), det_abs: q.det().abs() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn hp(c: &[f64]) -> HomPoint {
        HomPoint::new(c.to_vec()).unwrap()
    }

    fn unit_segment() -> CanonicalFn {
        segment_canonical(&hp(&[0.0, 1.0]), &hp(&[1.0, 1.0])).unwrap()
    }

    fn standard_triangle() -> Vec<HomPoint> {
        vec![hp(&[0.0, 0.0, 1.0]), hp(&[1.0, 0.0, 1.0]), hp(&[0.0, 1.0, 1.0])]
    }

    fn sym_square() -> ConvexPolygon {
        ConvexPolygon::from_vertices(&[[1.0, -1.0], [1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0]])
            .unwrap()
    }

    #[test]
    fn segment_fixture_values() {
        let seg = unit_segment();
        assert_relative_eq!(seg.eval(&hp(&[0.5, 1.0])), -4.0, max_relative = 1e-14);
        assert_relative_eq!(seg.eval(&hp(&[0.25, 1.0])), -16.0 / 3.0, max_relative = 1e-14);
    }

    #[test]
    fn segment_pole_at_endpoint() {
        let seg = unit_segment();
        assert!(!seg.eval(&hp(&[0.0, 1.0])).is_finite());
    }

    #[test]
    fn segment_rejects_proportional_endpoints() {
        let a = hp(&[1.0, 2.0]);
        let b = hp(&[2.0, 4.0]);
        assert_eq!(segment_canonical(&a, &b).unwrap_err(), Error::DegenerateSimplex);
    }

    #[test]
    fn triangle_fixture_values() {
        let c = simplex_canonical(&standard_triangle()).unwrap();
        assert_relative_eq!(c.eval_xy(0.25, 0.25), 16.0, max_relative = 1e-14);
        // C(x,y) = 1 / (2 x y (1-x-y))
        assert_relative_eq!(c.eval_xy(1.0 / 3.0, 1.0 / 3.0), 13.5, max_relative = 1e-13);
        assert!(!c.eval_xy(0.5, 0.0).is_finite());
    }

    #[test]
    fn simplex_rejects_degenerate() {
        let verts = vec![hp(&[0.0, 0.0, 1.0]), hp(&[1.0, 1.0, 1.0]), hp(&[2.0, 2.0, 1.0])];
        assert_eq!(simplex_canonical(&verts).unwrap_err(), Error::DegenerateSimplex);
    }

    #[test]
    fn simplex_vertex_rescaling_invariance() {
        let verts = standard_triangle();
        let c = simplex_canonical(&verts).unwrap();
        let scaled: Vec<HomPoint> = verts
            .iter()
            .zip([3.7, 0.2, 11.0])
            .map(|(v, s)| hp(&v.coords().iter().map(|x| x * s).collect::<Vec<_>>()))
            .collect();
        let cs = simplex_canonical(&scaled).unwrap();
        for xy in [[0.2, 0.3], [0.1, 0.05], [0.4, 0.55]] {
            assert_relative_eq!(
                c.eval_affine(&xy),
                cs.eval_affine(&xy),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn higher_dim_simplices_match_dual_volume() {
        // standard d-simplex: |C(x)| = (1/d!) / (x_1 ... x_d (1 - sum x_i)),
        // which equals the volume of its polar dual at x
        for (d, x, expected) in [
            (3usize, vec![0.25, 0.25, 0.25], -128.0 / 3.0),
            (4usize, vec![0.125, 0.125, 0.125, 0.125], 1024.0 / 3.0),
        ] {
            let mut verts = vec![HomPoint::from_affine(&vec![0.0; d])];
            for i in 0..d {
                let mut v = vec![0.0; d];
                v[i] = 1.0;
                verts.push(HomPoint::from_affine(&v));
            }
            let c = simplex_canonical(&verts).unwrap();
            let value = c.eval_affine(&x);
            assert_relative_eq!(value, expected, max_relative = 1e-12);
            assert_relative_eq!(value.abs(), dual_simplex_volume(d, &x), max_relative = 1e-12);
        }
    }

    // independent oracle: dual vertices n_i / (h_i - n_i·x) of the standard
    // d-simplex facets, volume |det| / d!
    fn dual_simplex_volume(d: usize, x: &[f64]) -> f64 {
        let norm = (d as f64).sqrt();
        let mut duals: Vec<Vec<f64>> = Vec::new();
        for i in 0..d {
            let mut n = vec![0.0; d];
            n[i] = -1.0;
            let denom = 0.0 - n.iter().zip(x).map(|(a, b)| a * b).sum::<f64>();
            duals.push(n.iter().map(|v| v / denom).collect());
        }
        let n_last: Vec<f64> = vec![1.0 / norm; d];
        let denom = 1.0 / norm - n_last.iter().zip(x).map(|(a, b)| a * b).sum::<f64>();
        duals.push(n_last.iter().map(|v| v / denom).collect());
        let m = DMatrix::from_fn(d, d, |i, j| duals[i + 1][j] - duals[0][j]);
        let mut fact = 1.0;
        for k in 2..=d {
            fact *= k as f64;
        }
        (m.determinant() / fact).abs()
    }

    #[test]
    fn square_fan_fixture_values() {
        let sq = sym_square();
        for base in 0..4 {
            let c = polytope_canonical(&sq, base).unwrap();
            assert_relative_eq!(c.eval_xy(0.5, 0.0), 8.0 / 3.0, max_relative = 1e-13);
            // (0,0) lies on the diagonals of every fan of this square; its
            // value is the removable-singularity limit, reached here by
            // extrapolating the ±t symmetric average in t²
            let samples: Vec<(f64, f64)> = [0.02, 0.01, 0.005, 0.0025]
                .iter()
                .map(|&t| (t * t, 0.5 * (c.eval_xy(t, 0.0) + c.eval_xy(-t, 0.0))))
                .collect();
            assert_relative_eq!(extrapolate_to_zero(&samples), 2.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn triangle_fan_is_single_simplex_term() {
        let tri = ConvexPolygon::from_vertices(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
        let c = polytope_canonical(&tri, 0).unwrap();
        assert_eq!(c.terms().len(), 1);
        let s = simplex_canonical(&standard_triangle()).unwrap();
        assert_eq!(c.eval_xy(0.25, 0.25), s.eval_xy(0.25, 0.25));
    }

    #[test]
    fn fan_base_out_of_range() {
        let sq = sym_square();
        assert!(matches!(
            polytope_canonical(&sq, 4).unwrap_err(),
            Error::BadVertexIndex { .. }
        ));
    }

    #[test]
    fn fan_diagonal_pole_is_removable() {
        // (0,0) lies on the base-0 fan diagonal of the symmetric square;
        // approaching it transversally from both sides extrapolates to the
        // value C(0,0) = 2 computed from any other base
        let sq = sym_square();
        let c = polytope_canonical(&sq, 0).unwrap();
        let schedule = [1e-3, 5e-4, 2.5e-4];
        let up: Vec<(f64, f64)> =
            schedule.iter().map(|&e| (e, c.eval_xy(0.0, e))).collect();
        let down: Vec<(f64, f64)> =
            schedule.iter().map(|&e| (e, c.eval_xy(0.0, -e))).collect();
        let (lu, ld) = (extrapolate_to_zero(&up), extrapolate_to_zero(&down));
        assert_relative_eq!(lu, 2.0, max_relative = 1e-6);
        assert_relative_eq!(ld, 2.0, max_relative = 1e-6);
        assert_relative_eq!(lu, ld, max_relative = 1e-6);
    }

    #[test]
    fn residue_ratio_triangle_and_square() {
        let tri = ConvexPolygon::from_vertices(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
        let sched = default_eps_schedule(&tri);
        let r = residue_ratio(&tri, 0, 0.5, &sched).unwrap();
        assert_relative_eq!(r, -0.5, max_relative = 1e-6);

        let sq = sym_square();
        let sched = default_eps_schedule(&sq);
        // facet 0 is x = 1; t = 1/2 gives the midpoint y = 0
        let r = residue_ratio(&sq, 0, 0.5, &sched).unwrap();
        assert_relative_eq!(r, -0.5, max_relative = 1e-6);
    }

    #[test]
    fn residue_ratio_constant_along_facet() {
        let sq = sym_square();
        let sched = default_eps_schedule(&sq);
        let a = residue_ratio(&sq, 2, 0.31, &sched).unwrap();
        let b = residue_ratio(&sq, 2, 0.77, &sched).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-6);
    }

    #[test]
    fn residue_ratio_rejects_bad_input() {
        let sq = sym_square();
        let sched = default_eps_schedule(&sq);
        assert!(residue_ratio(&sq, 0, 0.0, &sched).is_err());
        assert!(residue_ratio(&sq, 0, 1.0, &sched).is_err());
        assert!(residue_ratio(&sq, 9, 0.5, &sched).is_err());
        assert!(residue_ratio(&sq, 0, 0.5, &[1e-3, 2e-3]).is_err());
        assert!(residue_ratio(&sq, 0, 0.5, &[5.0, 2.5, 1.25]).is_err());
    }

    #[test]
    fn extrapolation_recovers_polynomial_constant() {
        let f = |e: f64| 3.0 + 2.0 * e - 7.0 * e * e;
        let samples: Vec<(f64, f64)> = [1e-2, 5e-3, 2.5e-3].iter().map(|&e| (e, f(e))).collect();
        assert_relative_eq!(extrapolate_to_zero(&samples), 3.0, max_relative = 1e-12);
    }

    #[test]
    fn conic_unit_circle_values() {
        let q = ConicQ::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]]).unwrap();
        let c = conic_canonical(&q);
        assert_relative_eq!(c.eval_xy(0.0, 0.0), PI, max_relative = 1e-15);
        let expected = 8.0 * PI / (3.0 * 3.0f64.sqrt());
        assert_relative_eq!(c.eval_xy(0.5, 0.0), expected, max_relative = 1e-14);
        assert!(!c.eval_xy(1.0, 0.0).is_finite());
    }

    #[test]
    fn conic_scale_invariance() {
        let q = ConicQ::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]]).unwrap();
        let q2 = ConicQ::new([[2.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, -2.0]]).unwrap();
        let (c, c2) = (conic_canonical(&q), conic_canonical(&q2));
        for xy in [[0.0, 0.0], [0.5, 0.0], [0.3, -0.4]] {
            assert_relative_eq!(
                c.eval_xy(xy[0], xy[1]),
                c2.eval_xy(xy[0], xy[1]),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn conic_matches_dual_area_quadrature() {
        // polar dual of the unit disk about (c, 0) has area
        // (1/2) ∫ dφ / (1 - c cos φ)², integrated by trapezoid rule
        let q = ConicQ::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]]).unwrap();
        let form = conic_canonical(&q);
        for c in [0.0, 0.3, 0.62] {
            let m = 400_000;
            let mut area = 0.0;
            for k in 0..m {
                let phi = 2.0 * PI * (k as f64 + 0.5) / m as f64;
                let r = 1.0 / (1.0 - c * phi.cos());
                area += 0.5 * r * r * (2.0 * PI / m as f64);
            }
            assert_relative_eq!(form.eval_xy(c, 0.0), area, max_relative = 1e-9);
        }
    }

    #[test]
    fn conic_rejects_bad_matrices() {
        assert_eq!(
            ConicQ::new([[1.0, 0.5, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]]).unwrap_err(),
            Error::AsymmetricConic
        );
        assert_eq!(
            ConicQ::new([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 0.0]]).unwrap_err(),
            Error::DegenerateConic
        );
    }
}
