//! The anchor that minimizes the union area.
//!
//! In the plane the minimizer has a closed form, the Steiner center of the
//! hull. The numeric route runs Nelder–Mead on the exact union area (or the
//! Monte Carlo volume in 3D) and serves as an independent check.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cover_area::{build_cover, union_area_of_anchored, union_measure_mc_sharded};
use crate::coverage::sample_hull_points;
use crate::error::{invalid, Result};
use crate::geom::{convex_hull_2d, hull_of_points, ConvexPolygon, Dim, Point, PointSet};
use crate::nelder_mead::{minimize, NMConfig};
use crate::rng::{derive_seed, rng_from_seed};
use crate::steiner::steiner_center_angles;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OptimizationMethod {
    Analytic,
    NelderMead,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimizationResult {
    pub omega_star: Point,
    pub objective_area: f64,
    pub method: OptimizationMethod,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub iterations: Option<usize>,
    pub converged: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub objective_history: Option<Vec<f64>>,
}

/// Σ θ_i ‖ω − v_i‖² over the hull vertices.
pub fn quadratic_objective(omega: &Point, poly: &ConvexPolygon) -> f64 {
    poly.weighted_vertices()
        .map(|(v, theta)| theta * omega.dist(v).powi(2))
        .sum()
}

/// Gradient of [`quadratic_objective`]: 2 Σ θ_i (ω − v_i).
pub fn quadratic_objective_gradient(omega: &Point, poly: &ConvexPolygon) -> Point {
    poly.weighted_vertices()
        .fold(Point::xy(0.0, 0.0), |acc, (v, theta)| acc + (*omega - *v) * (2.0 * theta))
}

fn exact_area(ps: &PointSet, omega: &Point) -> f64 {
    union_area_of_anchored(omega, ps.points())
}

/// The Steiner center of the hull, with the exact union area there.
pub fn optimal_omega_analytic(ps: &PointSet) -> Result<OptimizationResult> {
    let hull = convex_hull_2d(ps)?;
    let omega = steiner_center_angles(&hull).center;
    Ok(OptimizationResult {
        omega_star: omega,
        objective_area: exact_area(ps, &omega),
        method: OptimizationMethod::Analytic,
        iterations: None,
        converged: true,
        objective_history: None,
    })
}

/// Nelder–Mead on the union area. Planar inputs use the exact area; 3D
/// inputs use the Monte Carlo volume with the same seed on every call.
pub fn optimal_omega_numeric(ps: &PointSet, config: &NMConfig) -> Result<OptimizationResult> {
    config.validate()?;
    let dim = ps.dim();
    if dim == Dim::Three && config.mc_samples < crate::cover_area::MIN_MC_SAMPLES {
        return invalid("3D optimization needs mc_samples >= 10^4 in the configuration");
    }
    let start = match dim {
        Dim::Two => {
            let hull = convex_hull_2d(ps)?;
            hull.as_point_set().centroid()
        }
        Dim::Three => ps.centroid(),
    };
    let diag = ps.bbox_diagonal();
    if diag == 0.0 {
        let omega = ps.points()[0];
        return Ok(OptimizationResult {
            omega_star: omega,
            objective_area: 0.0,
            method: OptimizationMethod::NelderMead,
            iterations: Some(0),
            converged: true,
            objective_history: Some(Vec::new()),
        });
    }

    let to_point = |x: &[f64]| Point::from_raw(dim, [x[0], x[1], x.get(2).copied().unwrap_or(0.0)]);
    let objective = |x: &[f64]| -> f64 {
        let omega = to_point(x);
        match dim {
            Dim::Two => exact_area(ps, &omega),
            Dim::Three => {
                let cover = build_cover(ps, &omega).expect("dimension checked");
                union_measure_mc_sharded(&cover, config.mc_samples, config.seed, config.shards)
                    .expect("sample budget checked")
                    .union_area
            }
        }
    };
    let min = minimize(objective, start.coords(), config.initial_edge_fraction * diag, config);
    Ok(OptimizationResult {
        omega_star: to_point(&min.x),
        objective_area: min.value,
        method: OptimizationMethod::NelderMead,
        iterations: Some(min.iterations),
        converged: min.converged,
        objective_history: Some(min.history),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DominanceReport {
    pub trials: usize,
    pub steiner_center: Point,
    pub steiner_area: f64,
    /// Anchors whose area beat the Steiner anchor's by more than 1e-9.
    pub violations: usize,
    /// Smallest observed area(Ω) − area(Ω_s).
    pub min_gap: f64,
    pub worst_anchor: Option<Point>,
}

/// Random anchors, half inside the hull and half outside it within three
/// times the bounding box, compared against the Steiner anchor.
pub fn dominance_probe(ps: &PointSet, trials: usize, seed: u64) -> Result<DominanceReport> {
    ps.require_dim(Dim::Two)?;
    if trials == 0 {
        return invalid("dominance probe needs at least one trial");
    }
    let hull = hull_of_points(ps.points());
    let steiner = steiner_center_angles(&hull).center;
    let steiner_area = exact_area(ps, &steiner);

    let inside_n = trials / 2;
    let mut anchors = sample_hull_points(ps, inside_n, derive_seed(seed, 0));
    anchors.extend(exterior_anchors(ps, &hull, trials - inside_n, derive_seed(seed, 1)));

    let mut report = DominanceReport {
        trials,
        steiner_center: steiner,
        steiner_area,
        violations: 0,
        min_gap: f64::INFINITY,
        worst_anchor: None,
    };
    for omega in anchors {
        let gap = exact_area(ps, &omega) - steiner_area;
        if gap < report.min_gap {
            report.min_gap = gap;
            report.worst_anchor = Some(omega);
        }
        if gap < -1e-9 {
            report.violations += 1;
        }
    }
    Ok(report)
}

fn exterior_anchors(ps: &PointSet, hull: &ConvexPolygon, n: usize, seed: u64) -> Vec<Point> {
    let (lo, hi) = ps.bbox();
    let center = lo.midpoint(&hi);
    let diag = ps.bbox_diagonal();
    // Flat or point-like boxes still need a region to sample from.
    let floor = if diag > 0.0 { 0.1 * diag } else { 1.0 };
    let half = [(hi.x() - lo.x()).max(floor) * 1.5, (hi.y() - lo.y()).max(floor) * 1.5];
    let mut rng = rng_from_seed(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let q = Point::xy(
            center.x() + half[0] * (2.0 * rng.random::<f64>() - 1.0),
            center.y() + half[1] * (2.0 * rng.random::<f64>() - 1.0),
        );
        if !hull.contains(&q) {
            out.push(q);
        }
    }
    out
}
