//! Canonical rational functions of simple positive regions — segments,
//! simplices, convex polygons and conics — and the generalized barycentric
//! (Wachspress) coordinates they induce.
//!
//! The crate centers on three independent constructions of the same
//! coordinates over a convex polygon:
//!
//! * the classical cleared-denominator form built from corner and edge areas,
//! * ratios of canonical rational functions (projective bracket calculus),
//! * volume ratios on the polar dual polygon.
//!
//! Pairwise agreement of the three routes, additivity of fan triangulations,
//! the dual-volume identity C_P(x) = area(P*_x), and the constancy of facet
//! residue ratios are the correctness mechanisms; the `adjoint` module
//! recovers the polynomial numerator of a polygon's canonical function.

pub mod adjoint;
pub mod canonical;
pub mod coordinates;
pub mod error;
pub mod geometry;
pub mod projective;
pub mod sampling;

pub use adjoint::{extract_adjoint, extract_adjoint_from_base, AdjointPoly};
pub use canonical::{
    conic_canonical, default_eps_schedule, extrapolate_to_zero, local_eps_schedule,
    polytope_canonical, residue_ratio, segment_canonical, simplex_canonical, CanonicalFn,
    ConicCanonical, ConicQ, SimplexTerm,
};
pub use coordinates::{
    interpolate, segment_coords, triangle_coords, wachspress_canonical,
    wachspress_canonical_scaled, wachspress_classical, wachspress_dual, BaryWeights, Route,
    WachspressTerms,
};
pub use error::{Error, Result};
pub use geometry::{polygon_area, signed_triangle_area, ConvexPolygon, DualPolygon, Simplex};
pub use projective::{bracket, meet_lines, HomPoint, HyperplaneForm};
