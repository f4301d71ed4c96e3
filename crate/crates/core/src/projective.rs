//! Homogeneous-coordinate primitives: points and hyperplanes of projective
//! d-space, determinant brackets, point/hyperplane duality and line meets.
//!
//! The affine chart used throughout the crate puts the last homogeneous
//! coordinate equal to 1, so an affine point (x, y) lifts to [x : y : 1].

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Relative tolerance for the line-proportionality test in [`meet_lines`].
pub const PROPORTIONALITY_TOL: f64 = 1e-12;

/// A point of projective d-space as d+1 real homogeneous coordinates.
///
/// Two points are projectively equal iff one is a nonzero scalar multiple of
/// the other; at least one coordinate must be nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct HomPoint {
    coords: Vec<f64>,
}

impl HomPoint {
    /// Builds a point from homogeneous coordinates, rejecting zero or
    /// non-finite coordinate vectors.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty()
            || coords.iter().any(|c| !c.is_finite())
            || coords.iter().all(|&c| c == 0.0)
        {
            return Err(Error::InvalidHomogeneous);
        }
        Ok(Self { coords })
    }

    /// Lifts an affine point of R^d into the last-coordinate-1 chart.
    pub fn from_affine(point: &[f64]) -> Self {
        let mut coords = point.to_vec();
        coords.push(1.0);
        Self { coords }
    }

    /// Lifts an affine 2D point into P².
    pub fn from_xy(x: f64, y: f64) -> Self {
        Self { coords: vec![x, y, 1.0] }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Projective dimension d (one less than the coordinate count).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Chart map: divides the first d coordinates by the last.
    ///
    /// Fails for points at infinity (last coordinate zero relative to the
    /// largest coordinate).
    pub fn to_affine(&self) -> Result<Vec<f64>> {
        let last = *self.coords.last().expect("nonempty coords");
        let max = self.coords.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if last.abs() <= 1e-14 * max {
            return Err(Error::PointAtInfinity);
        }
        Ok(self.coords[..self.coords.len() - 1]
            .iter()
            .map(|c| c / last)
            .collect())
    }

    /// The projective dual hyperplane under the identity bilinear form:
    /// coefficients equal coordinates, so the origin [0:…:0:1] dualizes to
    /// the hyperplane at infinity.
    pub fn dual(&self) -> HyperplaneForm {
        HyperplaneForm { coeffs: self.coords.clone() }
    }
}

/// A hyperplane of projective d-space (a line when d = 2) as d+1 real
/// coefficients; a point lies on it iff the dot product with the point's
/// coordinates vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperplaneForm {
    coeffs: Vec<f64>,
}

impl HyperplaneForm {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty()
            || coeffs.iter().any(|c| !c.is_finite())
            || coeffs.iter().all(|&c| c == 0.0)
        {
            return Err(Error::InvalidHomogeneous);
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Incidence product with a point; zero iff the point lies on the
    /// hyperplane.
    pub fn incidence(&self, point: &HomPoint) -> f64 {
        debug_assert_eq!(self.coeffs.len(), point.coords().len());
        self.coeffs
            .iter()
            .zip(point.coords())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// The dual point (identity form); inverse of [`HomPoint::dual`].
    pub fn dual(&self) -> HomPoint {
        HomPoint { coords: self.coeffs.clone() }
    }

    /// Evaluates a 2D line form on an affine point (x, y).
    pub fn eval_xy(&self, x: f64, y: f64) -> f64 {
        debug_assert_eq!(self.coeffs.len(), 3);
        self.coeffs[0] * x + self.coeffs[1] * y + self.coeffs[2]
    }
}

/// Determinant of the (d+1)×(d+1) matrix whose rows are the given points.
///
/// Requires exactly d+1 points of projective d-space; the bracket is
/// multilinear and alternating in its arguments.
pub fn bracket(points: &[HomPoint]) -> Result<f64> {
    let n = points.len();
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    for p in points {
        if p.coords().len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: p.coords().len() });
        }
    }
    Ok(match n {
        1 => points[0].coords[0],
        2 => det2(points[0].coords(), points[1].coords()),
        3 => det3(points[0].coords(), points[1].coords(), points[2].coords()),
        _ => {
            let m = DMatrix::from_fn(n, n, |i, j| points[i].coords[j]);
            m.determinant()
        }
    })
}

pub(crate) fn det2(a: &[f64], b: &[f64]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

pub(crate) fn det3(a: &[f64], b: &[f64], c: &[f64]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

pub(crate) fn cross3(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Intersection point of two projective lines (d = 2), via the cross product
/// of their coefficient triples.
///
/// Proportional lines have no unique meet and are rejected; proportionality
/// is tested on inputs normalized to unit max-coefficient, with relative
/// tolerance [`PROPORTIONALITY_TOL`].
pub fn meet_lines(l1: &HyperplaneForm, l2: &HyperplaneForm) -> Result<HomPoint> {
    if l1.coeffs.len() != 3 || l2.coeffs.len() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: l1.coeffs.len().max(l2.coeffs.len()),
        });
    }
    let m1 = l1.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let m2 = l2.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let a: Vec<f64> = l1.coeffs.iter().map(|c| c / m1).collect();
    let b: Vec<f64> = l2.coeffs.iter().map(|c| c / m2).collect();
    let x = cross3(&a, &b);
    let mag = x.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if mag <= PROPORTIONALITY_TOL {
        return Err(Error::ProportionalLines);
    }
    let raw = cross3(l1.coeffs(), l2.coeffs());
    Ok(HomPoint { coords: raw.to_vec() })
}
