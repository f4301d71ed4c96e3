//! Numeric extraction of the adjoint polynomial — the numerator of a convex
//! polygon's canonical rational function once the product of unit-gradient
//! facet forms is cleared.
//!
//! The adjoint of an n-gon has total degree n−3 (a constant for triangles,
//! linear for quadrilaterals). It is recovered by sampling
//! A(x) = C_P(x) · ∏ᵢ ℓᵢ(x) at interior lattice points and fitting a
//! polynomial of that degree by least squares; the fit residual doubles as a
//! correctness check, since A must be exactly polynomial.

use nalgebra::{DMatrix, DVector};

use crate::canonical::polytope_canonical;
use crate::error::{Error, Result};
use crate::geometry::ConvexPolygon;
use crate::projective::{bracket, HomPoint};

/// Largest acceptable relative fit residual; anything above signals a bug or
/// a degenerate polygon.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// A bivariate polynomial of total degree n−3 with its fit residual.
///
/// Coefficients are stored over plain monomials in graded order with x-powers
/// descending within each degree: 1; x, y; x², xy, y²; …
#[derive(Debug, Clone)]
pub struct AdjointPoly {
    degree: usize,
    coeffs: Vec<f64>,
    residual: f64,
}

impl AdjointPoly {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Relative fit residual: max |A_sampled − A_fit| / max |A_sampled|.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// Monomial powers (i, j) for x^i y^j paired with [`coeffs`](Self::coeffs).
    pub fn monomials(&self) -> Vec<(usize, usize)> {
        monomial_powers(self.degree)
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.monomials()
            .iter()
            .zip(&self.coeffs)
            .map(|(&(i, j), c)| c * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }
}

/// Graded monomial order used throughout: 1; x, y; x², xy, y²; …
pub fn monomial_powers(degree: usize) -> Vec<(usize, usize)> {
    let mut powers = Vec::new();
    for d in 0..=degree {
        for i in (0..=d).rev() {
            powers.push((i, d - i));
        }
    }
    powers
}

/// Extracts the adjoint polynomial of a convex polygon (fan base 0).
pub fn extract_adjoint(polygon: &ConvexPolygon) -> Result<AdjointPoly> {
    extract_adjoint_from_base(polygon, 0)
}

/// Extracts the adjoint using the fan triangulation from the given base
/// vertex; the result is independent of the base.
pub fn extract_adjoint_from_base(polygon: &ConvexPolygon, base: usize) -> Result<AdjointPoly> {
    let n = polygon.len();
    let canonical = polytope_canonical(polygon, base)?;
    let cleared = |x: f64, y: f64| {
        let mut v = canonical.eval_xy(x, y);
        for f in polygon.facets() {
            v *= f.eval_xy(x, y);
        }
        v
    };

    let samples = sample_grid(polygon);
    let values: Vec<f64> = samples.iter().map(|p| cleared(p[0], p[1])).collect();
    let value_scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));

    if n == 3 {
        // exact cancellation: C · ∏ℓ = (1/2)⟨p₀,p₁,p₂⟩² / ∏ edge lengths
        let lifted: Vec<HomPoint> = polygon
            .vertices()
            .iter()
            .map(|p| HomPoint::from_xy(p[0], p[1]))
            .collect();
        let b = bracket(&lifted)?;
        let constant =
            0.5 * b * b / polygon.edge_lengths().iter().product::<f64>();
        let residual = values
            .iter()
            .fold(0.0f64, |m, v| m.max((v - constant).abs()))
            / value_scale;
        return finish(0, vec![constant], residual);
    }

    let degree = n - 3;
    let powers = monomial_powers(degree);
    if samples.len() < powers.len() {
        return Err(Error::InvalidParameter("not enough interior samples for the adjoint fit"));
    }

    // fit over centered, scaled coordinates for conditioning, then expand
    // back to plain monomials
    let c = polygon.centroid();
    let h = 0.5 * polygon.diameter();
    let m = DMatrix::from_fn(samples.len(), powers.len(), |r, k| {
        let (i, j) = powers[k];
        let u = (samples[r][0] - c[0]) / h;
        let v = (samples[r][1] - c[1]) / h;
        u.powi(i as i32) * v.powi(j as i32)
    });
    let rhs = DVector::from_column_slice(&values);
    let svd = m.svd(true, true);
    let sol = svd
        .solve(&rhs, 1e-14)
        .map_err(|_| Error::InvalidParameter("adjoint least-squares solve failed"))?;

    let coeffs = expand_to_raw(&powers, sol.as_slice(), c, h, degree);

    let fitted = AdjointPoly { degree, coeffs, residual: 0.0 };
    let residual = samples
        .iter()
        .zip(&values)
        .fold(0.0f64, |m, (p, v)| m.max((fitted.eval(p[0], p[1]) - v).abs()))
        / value_scale;
    finish(degree, fitted.coeffs, residual)
}

fn finish(degree: usize, coeffs: Vec<f64>, residual: f64) -> Result<AdjointPoly> {
    if !(residual <= RESIDUAL_TOL) {
        return Err(Error::AdjointResidual { residual, tol: RESIDUAL_TOL });
    }
    Ok(AdjointPoly { degree, coeffs, residual })
}

/// Regular (n+2)² lattice over an axis-aligned box inscribed about the
/// centroid, with points within 1e−3 × diameter of any edge removed.
fn sample_grid(polygon: &ConvexPolygon) -> Vec<[f64; 2]> {
    let c = polygon.centroid();
    let (xmin, xmax, ymin, ymax) = polygon.bbox();
    let corners = |s: f64| {
        [
            [c[0] + s * (xmin - c[0]), c[1] + s * (ymin - c[1])],
            [c[0] + s * (xmax - c[0]), c[1] + s * (ymin - c[1])],
            [c[0] + s * (xmax - c[0]), c[1] + s * (ymax - c[1])],
            [c[0] + s * (xmin - c[0]), c[1] + s * (ymax - c[1])],
        ]
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if corners(mid).iter().all(|p| polygon.is_strictly_interior(*p)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let box_pts = corners(0.98 * lo);
    let (bx0, by0) = (box_pts[0][0], box_pts[0][1]);
    let (bx1, by1) = (box_pts[2][0], box_pts[2][1]);

    let side = polygon.len() + 2;
    let cutoff = 1e-3 * polygon.diameter();
    let mut samples = Vec::new();
    for r in 0..side {
        for q in 0..side {
            let x = bx0 + (bx1 - bx0) * q as f64 / (side - 1) as f64;
            let y = by0 + (by1 - by0) * r as f64 / (side - 1) as f64;
            // keep clear of edges (poles) and of fan diagonals, where the
            // triangulated evaluation cancels catastrophically
            if polygon.min_facet_value([x, y]) > cutoff
                && polygon.distance_to_diagonal_lines([x, y]) > cutoff
            {
                samples.push([x, y]);
            }
        }
    }
    samples
}

/// Expands coefficients over ((x−cx)/h)^i ((y−cy)/h)^j into plain monomials.
fn expand_to_raw(
    powers: &[(usize, usize)],
    fitted: &[f64],
    center: [f64; 2],
    h: f64,
    degree: usize,
) -> Vec<f64> {
    let size = degree + 1;
    let mut raw = vec![vec![0.0f64; size]; size];
    for (&(i, j), &coeff) in powers.iter().zip(fitted) {
        let scale = coeff / h.powi((i + j) as i32);
        for p in 0..=i {
            let bi = binomial(i, p) * (-center[0]).powi((i - p) as i32);
            for q in 0..=j {
                let bj = binomial(j, q) * (-center[1]).powi((j - q) as i32);
                raw[p][q] += scale * bi * bj;
            }
        }
    }
    powers.iter().map(|&(i, j)| raw[i][j]).collect()
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut v = 1.0;
    for t in 0..k.min(n - k) {
        v = v * (n - t) as f64 / (t + 1) as f64;
    }
    v
}
