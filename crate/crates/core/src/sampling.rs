//! Seeded generation of random strictly convex polygons and well-separated
//! interior query points, shared by the property tests and the CLI check
//! suite.

use rand::Rng;

use crate::geometry::ConvexPolygon;

/// Random strictly convex n-gon: jittered angles on the unit circle pushed
/// through a random nondegenerate affine map.
pub fn random_convex_polygon<R: Rng>(rng: &mut R, n: usize) -> ConvexPolygon {
    assert!(n >= 3, "polygon needs at least 3 vertices");
    loop {
        let mut m = [[0.0f64; 2]; 2];
        for row in &mut m {
            for v in row.iter_mut() {
                *v = rng.random_range(-1.0..1.0);
            }
        }
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det.abs() < 0.3 {
            continue;
        }
        let (tx, ty) = (rng.random_range(-0.3..0.3), rng.random_range(-0.3..0.3));
        let pts: Vec<[f64; 2]> = (0..n)
            .map(|k| {
                let jitter = rng.random_range(-0.35..0.35);
                let t = 2.0 * std::f64::consts::PI * (k as f64 + jitter) / n as f64;
                let (cx, cy) = (t.cos(), t.sin());
                [
                    m[0][0] * cx + m[0][1] * cy + tx,
                    m[1][0] * cx + m[1][1] * cy + ty,
                ]
            })
            .collect();
        // orientation is normalized by the constructor; the jitter bound
        // keeps consecutive angles separated, so convexity always holds
        match ConvexPolygon::from_vertices(&pts) {
            Ok(p) => return p,
            Err(_) => continue,
        }
    }
}

/// Random strictly interior point, kept at least 1e−6 × diameter away from
/// every edge and 1e−4 × diameter away from every diagonal line through two
/// vertices (where fan triangulations have individually singular terms).
pub fn random_interior_point<R: Rng>(rng: &mut R, polygon: &ConvexPolygon) -> [f64; 2] {
    let n = polygon.len();
    let c = polygon.centroid();
    let diam = polygon.diameter();
    loop {
        // Dirichlet(1) convex combination, shrunk toward the centroid
        let mut w: Vec<f64> = (0..n)
            .map(|_| -(1.0 - rng.random_range(0.0..1.0f64)).ln())
            .collect();
        let total: f64 = w.iter().sum();
        for v in &mut w {
            *v /= total;
        }
        let mix = polygon
            .vertices()
            .iter()
            .zip(&w)
            .fold([0.0, 0.0], |acc, (p, wi)| [acc[0] + wi * p[0], acc[1] + wi * p[1]]);
        let x = [c[0] + 0.9 * (mix[0] - c[0]), c[1] + 0.9 * (mix[1] - c[1])];

        if polygon.min_facet_value(x) <= 1e-6 * diam {
            continue;
        }
        if polygon.distance_to_diagonal_lines(x) <= 1e-4 * diam {
            continue;
        }
        return x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_polygons_are_valid_and_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut rng2 = ChaCha8Rng::seed_from_u64(42);
        for n in 3..=12 {
            let p = random_convex_polygon(&mut rng, n);
            let q = random_convex_polygon(&mut rng2, n);
            assert_eq!(p.len(), n);
            assert_eq!(p.vertices(), q.vertices());
            let x = random_interior_point(&mut rng, &p);
            let y = random_interior_point(&mut rng2, &q);
            assert_eq!(x, y);
            assert!(p.is_strictly_interior(x));
            assert!(p.min_facet_value(x) > 1e-6 * p.diameter());
        }
    }
}
