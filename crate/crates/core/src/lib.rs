//! Anchored disc and ball covers of point constellations.
//!
//! For an anchor Ω and points P_1..P_N, the cover is the union of the discs
//! (balls) having `[Ω, P_i]` as diameters. The union always contains the
//! convex hull of the points; in the plane its area is minimized when Ω is
//! the Steiner center of the hull.
//!
//! * [`geom`]: points, hulls, exterior angles, Minkowski sums.
//! * [`steiner`]: Steiner center by angles, projections and random
//!   directions.
//! * [`cover_area`]: union area in closed form, exactly, and by Monte Carlo.
//! * [`coverage`]: sampling-based hull coverage checks with certificates.
//! * [`optimizer`]: analytic and Nelder–Mead area minimizers.
//! * [`conjecture3d`]: the three-dimensional experiment harness.

pub mod conjecture3d;
pub mod cover_area;
pub mod coverage;
pub mod error;
pub mod geom;
pub mod nelder_mead;
pub mod optimizer;
pub mod rng;
pub mod steiner;

pub use conjecture3d::{
    run_conjecture_suite, run_conjecture_trial, ConjectureConfig, ConjectureReport, ConjectureSuite,
    SuiteSummary,
};
pub use cover_area::{
    build_cover, excess_area_closed_form, union_area_exact, union_measure_mc, AreaMethod, AreaReport,
    DiscCover,
};
pub use coverage::{classify_pair, is_covered, sample_hull_points, verify_coverage, CoverageReport, PairClass};
pub use error::{Error, Result};
pub use geom::{
    convex_hull_2d, exterior_angles, minkowski_sum, point_in_hull, polygon_area, scale_polygon, ConvexPolygon,
    Dim, Disc, HullKind, Point, PointSet,
};
pub use nelder_mead::NMConfig;
pub use optimizer::{
    dominance_probe, optimal_omega_analytic, optimal_omega_numeric, quadratic_objective, DominanceReport,
    OptimizationMethod, OptimizationResult,
};
pub use steiner::{
    steiner_center_angles, steiner_center_projection, steiner_point_directional, SteinerMethod, SteinerResult,
};

/// Crate version, recorded in run reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
