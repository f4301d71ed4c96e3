//! The invariant suite behind `posgeom check`: route agreement, partition of
//! unity, linear precision, fan additivity, residue-ratio constancy and the
//! dual-volume identity, evaluated with seeded random interior points.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use posgeom::{
    local_eps_schedule, polytope_canonical, residue_ratio, sampling, wachspress_canonical,
    wachspress_classical, wachspress_dual, ConvexPolygon,
};

pub struct PropertyResult {
    pub name: &'static str,
    pub max_err: f64,
    pub tol: f64,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.max_err <= self.tol
    }
}

/// Runs the six properties against one polygon with `trials` seeded interior
/// query points; results come back in a fixed order.
pub fn run_suite(polygon: &ConvexPolygon, seed: u64, trials: usize) -> Vec<PropertyResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = polygon.len();
    let points: Vec<[f64; 2]> = (0..trials)
        .map(|_| sampling::random_interior_point(&mut rng, polygon))
        .collect();

    let mut route_agreement = 0.0f64;
    let mut partition = 0.0f64;
    let mut linear_precision = 0.0f64;
    let mut additivity = 0.0f64;
    let mut dual_volume = 0.0f64;

    let fans: Vec<_> = (0..n)
        .map(|b| polytope_canonical(polygon, b).expect("valid polygon and base"))
        .collect();

    for &x in &points {
        let classical = wachspress_classical(polygon, x).expect("interior point");
        let canonical = wachspress_canonical(polygon, x).expect("interior point");
        let dual = wachspress_dual(polygon, x).expect("interior point");

        for ((a, b), c) in classical
            .values()
            .iter()
            .zip(canonical.values())
            .zip(dual.values())
        {
            let m = a.abs().max(b.abs()).max(c.abs()).max(1e-300);
            route_agreement = route_agreement
                .max((a - b).abs() / m)
                .max((a - c).abs() / m)
                .max((b - c).abs() / m);
        }

        for w in [&classical, &canonical, &dual] {
            let sum: f64 = w.values().iter().sum();
            partition = partition.max((sum - 1.0).abs());
            let rx: f64 = w
                .values()
                .iter()
                .zip(polygon.vertices())
                .map(|(l, p)| l * p[0])
                .sum();
            let ry: f64 = w
                .values()
                .iter()
                .zip(polygon.vertices())
                .map(|(l, p)| l * p[1])
                .sum();
            linear_precision =
                linear_precision.max((rx - x[0]).abs()).max((ry - x[1]).abs());
        }

        let reference = fans[0].eval_xy(x[0], x[1]);
        for fan in &fans[1..] {
            let v = fan.eval_xy(x[0], x[1]);
            additivity = additivity.max((v - reference).abs() / reference.abs());
        }

        let area = polygon.polar_dual(x).expect("interior point").area();
        dual_volume = dual_volume.max((reference - area).abs() / area.abs());
    }

    // residue ratios: constancy along and across facets, magnitude 1/2
    let mut ratios = Vec::new();
    for facet in 0..n {
        for t in [0.35, 0.65] {
            let schedule = local_eps_schedule(polygon, facet, t).expect("valid facet");
            ratios.push(residue_ratio(polygon, facet, t, &schedule).expect("valid facet"));
        }
    }
    let first = ratios[0];
    let mut residue = (first.abs() - 0.5).abs();
    for r in &ratios {
        residue = residue.max((r - first).abs());
    }

    vec![
        PropertyResult { name: "route_agreement", max_err: route_agreement, tol: 1e-9 },
        PropertyResult { name: "partition_of_unity", max_err: partition, tol: 1e-10 },
        PropertyResult { name: "linear_precision", max_err: linear_precision, tol: 1e-10 },
        PropertyResult { name: "additivity", max_err: additivity, tol: 1e-10 },
        PropertyResult { name: "residue_ratio", max_err: residue, tol: 1e-6 },
        PropertyResult { name: "dual_volume_identity", max_err: dual_volume, tol: 1e-9 },
    ]
}
