//! Steiner center of a point constellation, three ways.
//!
//! * `angles`: vertices of the planar hull weighted by exterior angle / 2π.
//! * `projection`: quadrature of the support-function integral over half a
//!   turn of directions.
//! * `directional`: Monte Carlo estimate in any dimension. A uniformly random
//!   direction is maximized by the vertex whose normal cone contains it, so
//!   the average argmax point converges to the normal-cone weighted vertex
//!   centroid.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::geom::{ConvexPolygon, Point, PointSet};
use crate::rng::{rng_from_seed, run_sharded, unit_direction};

pub const MIN_PROJECTION_NODES: usize = 16;
pub const DEFAULT_PROJECTION_NODES: usize = 4096;
pub const MIN_DIRECTIONAL_SAMPLES: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SteinerMethod {
    Angles,
    Projection,
    Directional,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SteinerResult {
    pub center: Point,
    pub method: SteinerMethod,
    /// Per-coordinate standard error of the mean; directional only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stderr: Option<Vec<f64>>,
    pub samples_or_nodes: usize,
    /// Number of sampled directions maximized by each input point;
    /// directional only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hit_counts: Option<Vec<u64>>,
}

/// Σ (θ_i / 2π) v_i over the hull vertices.
pub fn steiner_center_angles(poly: &ConvexPolygon) -> SteinerResult {
    let first = poly.vertices()[0];
    let sum = poly
        .weighted_vertices()
        .fold(Point::origin(first.dim()), |acc, (v, theta)| acc + *v * theta);
    SteinerResult {
        center: sum * (1.0 / TAU),
        method: SteinerMethod::Angles,
        stderr: None,
        samples_or_nodes: poly.len(),
        hit_counts: None,
    }
}

/// Composite midpoint rule for
/// (1/π) ∫₀^π u_θ (min_i ⟨P_i,u_θ⟩ + max_i ⟨P_i,u_θ⟩) dθ.
///
/// Projections are signed; the width term `min + max` over a half turn is
/// the same as integrating the support function over the full circle.
pub fn steiner_center_projection(ps: &PointSet, nodes: usize) -> Result<SteinerResult> {
    ps.require_dim(crate::geom::Dim::Two)?;
    if nodes < MIN_PROJECTION_NODES {
        return invalid(format!("projection quadrature needs at least {MIN_PROJECTION_NODES} nodes, got {nodes}"));
    }
    let h = PI / nodes as f64;
    let (mut sx, mut sy) = (0.0, 0.0);
    for k in 0..nodes {
        let theta = (k as f64 + 0.5) * h;
        let (s, c) = theta.sin_cos();
        let (lo, hi) = ps.points().iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
            let t = p.x() * c + p.y() * s;
            (lo.min(t), hi.max(t))
        });
        let w = lo + hi;
        sx += c * w;
        sy += s * w;
    }
    Ok(SteinerResult {
        center: Point::xy(sx * h / PI, sy * h / PI),
        method: SteinerMethod::Projection,
        stderr: None,
        samples_or_nodes: nodes,
        hit_counts: None,
    })
}

pub fn steiner_point_directional(ps: &PointSet, samples: usize, seed: u64) -> Result<SteinerResult> {
    steiner_point_directional_sharded(ps, samples, seed, 1)
}

/// Directional estimator split over `shards` workers (seed `seed + k` for
/// shard `k`). Hit counts are summed, so the result does not depend on the
/// order in which shards finish.
pub fn steiner_point_directional_sharded(
    ps: &PointSet,
    samples: usize,
    seed: u64,
    shards: usize,
) -> Result<SteinerResult> {
    if samples < MIN_DIRECTIONAL_SAMPLES {
        return invalid(format!(
            "directional estimator needs at least {MIN_DIRECTIONAL_SAMPLES} samples, got {samples}"
        ));
    }
    let points = ps.points();
    let dim = ps.dim();
    let per_shard = run_sharded(samples, shards, seed, |n, s| {
        let mut rng = rng_from_seed(s);
        let mut hits = vec![0u64; points.len()];
        for _ in 0..n {
            let u = unit_direction(&mut rng, dim);
            hits[argmax_along(points, &u)] += 1;
        }
        hits
    });
    let mut hits = vec![0u64; points.len()];
    for shard in per_shard {
        for (acc, h) in hits.iter_mut().zip(shard) {
            *acc += h;
        }
    }

    let n = samples as f64;
    let mut mean = Point::origin(dim);
    for (p, &c) in points.iter().zip(&hits) {
        mean += *p * (c as f64 / n);
    }
    let stderr = (0..dim.n())
        .map(|k| {
            let ss: f64 = points
                .iter()
                .zip(&hits)
                .map(|(p, &c)| c as f64 * (p.coords()[k] - mean.coords()[k]).powi(2))
                .sum();
            (ss / (n - 1.0) / n).sqrt()
        })
        .collect();
    Ok(SteinerResult {
        center: mean,
        method: SteinerMethod::Directional,
        stderr: Some(stderr),
        samples_or_nodes: samples,
        hit_counts: Some(hits),
    })
}

/// Index of the point with the largest projection on `u`; ties go to the
/// lowest index.
pub fn argmax_along(points: &[Point], u: &Point) -> usize {
    let mut best = 0;
    let mut best_val = f64::NEG_INFINITY;
    for (i, p) in points.iter().enumerate() {
        let v = p.dot(u);
        if v > best_val {
            best_val = v;
            best = i;
        }
    }
    best
}
