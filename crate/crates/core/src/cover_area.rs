//! Area (volume) of the union of anchored discs.
//!
//! Every disc of a [`DiscCover`] has the anchor Ω on its boundary. Two such
//! circles are either tangent at Ω (anchor and both points collinear) or
//! meet a second time at the foot of the perpendicular from Ω to the line
//! through their two points. The exact route uses that structure directly;
//! the closed form only applies while Ω sits inside the hull.

use std::f64::consts::TAU;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::geom::{convex_hull_2d, point_in_hull, polygon_area, Dim, Disc, Point, PointSet};
use crate::rng::{rng_from_seed, run_sharded};

pub const MIN_MC_SAMPLES: usize = 10_000;

/// Slack used when pruning discs contained in another disc.
const CONTAINMENT_EPS: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscCover {
    pub anchor: Point,
    pub source: PointSet,
    /// `discs[i]` has `[anchor, source[i]]` as a diameter.
    pub discs: Vec<Disc>,
}

pub fn build_cover(ps: &PointSet, omega: &Point) -> Result<DiscCover> {
    ps.check_dim(omega)?;
    if !omega.is_finite() {
        return invalid("anchor must be finite");
    }
    Ok(DiscCover {
        anchor: *omega,
        source: ps.clone(),
        discs: ps.points().iter().map(|p| Disc::anchored(omega, p)).collect(),
    })
}

impl DiscCover {
    pub fn dim(&self) -> Dim {
        self.source.dim()
    }

    /// Axis-aligned bounding box of all discs as `(min, max)`.
    pub fn bbox(&self) -> (Point, Point) {
        let dim = self.dim();
        let mut lo = [f64::INFINITY; 3];
        let mut hi = [f64::NEG_INFINITY; 3];
        for d in &self.discs {
            let c = d.center.raw();
            for k in 0..dim.n() {
                lo[k] = lo[k].min(c[k] - d.radius);
                hi[k] = hi[k].max(c[k] + d.radius);
            }
        }
        for k in dim.n()..3 {
            lo[k] = 0.0;
            hi[k] = 0.0;
        }
        (Point::from_raw(dim, lo), Point::from_raw(dim, hi))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AreaMethod {
    ClosedForm,
    Exact,
    MonteCarlo,
}

/// Union area against hull area. In 3D the hull volume is not computed, so
/// `hull_area` and `excess_area` are absent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AreaReport {
    pub hull_area: Option<f64>,
    pub union_area: f64,
    pub excess_area: Option<f64>,
    pub method: AreaMethod,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stderr: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub samples: Option<u64>,
}

/// ΔS = Σ (d_i²/4) θ_i − S_CH/2 over the hull vertices, union = S_CH + ΔS.
///
/// Interior points are ignored: their discs lie inside the union of the two
/// discs of the hull edge their ray from Ω exits through.
pub fn excess_area_closed_form(cover: &DiscCover) -> Result<AreaReport> {
    let hull = convex_hull_2d(&cover.source)?;
    if !point_in_hull(&cover.anchor, &hull) {
        return Err(Error::Precondition(format!(
            "closed form requires the anchor inside the convex hull; {} is outside, use the exact method",
            cover.anchor
        )));
    }
    let hull_area = polygon_area(&hull);
    let weighted: f64 = hull
        .weighted_vertices()
        .map(|(v, theta)| 0.25 * theta * v.dist(&cover.anchor).powi(2))
        .sum();
    let excess = weighted - 0.5 * hull_area;
    Ok(AreaReport {
        hull_area: Some(hull_area),
        union_area: hull_area + excess,
        excess_area: Some(excess),
        method: AreaMethod::ClosedForm,
        stderr: None,
        samples: None,
    })
}

/// Exact planar union area by boundary arcs and Green's theorem.
///
/// Works for any anchor. Per circle, the arc breakpoints are Ω (shared by all
/// circles) and the second intersection with each non-tangent neighbour; an
/// arc between consecutive breakpoints is on the union boundary iff its
/// midpoint is outside every other disc.
pub fn union_area_exact(cover: &DiscCover) -> Result<AreaReport> {
    cover.source.require_dim(Dim::Two)?;
    let hull_area = polygon_area(&convex_hull_2d(&cover.source)?);
    let union = union_area_of_anchored(&cover.anchor, cover.source.points());
    Ok(AreaReport {
        hull_area: Some(hull_area),
        union_area: union,
        excess_area: Some(union - hull_area),
        method: AreaMethod::Exact,
        stderr: None,
        samples: None,
    })
}

struct Circle {
    /// Far end of the diameter, relative to the anchor.
    far: Point,
    center: Point,
    radius: f64,
}

pub(crate) fn union_area_of_anchored(anchor: &Point, points: &[Point]) -> f64 {
    // Work in the anchor's frame: every circle passes through the origin.
    let circles: Vec<Circle> = points
        .iter()
        .map(|p| *p - *anchor)
        .filter(|far| far.norm() > 0.0)
        .map(|far| Circle { far, center: far * 0.5, radius: 0.5 * far.norm() })
        .collect();

    let contains = |outer: &Circle, inner: &Circle| {
        outer.center.dist(&inner.center) + inner.radius <= outer.radius + CONTAINMENT_EPS
    };
    let kept: Vec<&Circle> = circles
        .iter()
        .enumerate()
        .filter(|&(i, ci)| {
            !circles.iter().enumerate().any(|(j, cj)| {
                j != i && contains(cj, ci) && (!contains(ci, cj) || j < i)
            })
        })
        .map(|(_, c)| c)
        .collect();

    let mut area = 0.0;
    let mut breaks: Vec<f64> = Vec::with_capacity(kept.len() + 1);
    for (i, ci) in kept.iter().enumerate() {
        breaks.clear();
        let at = |q: &Point| (q.y() - ci.center.y()).atan2(q.x() - ci.center.x());
        breaks.push(at(&Point::xy(0.0, 0.0)));
        for (j, cj) in kept.iter().enumerate() {
            if j == i {
                continue;
            }
            if let Some(q) = second_intersection(&ci.far, &cj.far) {
                breaks.push(at(&q));
            }
        }
        breaks.sort_by(f64::total_cmp);

        let m = breaks.len();
        for k in 0..m {
            let t0 = breaks[k];
            let t1 = if k + 1 < m { breaks[k + 1] } else { breaks[0] + TAU };
            if t1 - t0 <= 0.0 {
                continue;
            }
            let mid = 0.5 * (t0 + t1);
            let probe = ci.center + Point::xy(mid.cos(), mid.sin()) * ci.radius;
            let covered = kept.iter().enumerate().any(|(j, cj)| {
                j != i && probe.dist(&cj.center) < cj.radius - CONTAINMENT_EPS
            });
            if !covered {
                area += arc_green(ci, t0, t1);
            }
        }
    }
    area
}

/// ½ ∮ (x dy − y dx) along the arc of `c` from angle `t0` to `t1`.
fn arc_green(c: &Circle, t0: f64, t1: f64) -> f64 {
    let (cx, cy, r) = (c.center.x(), c.center.y(), c.radius);
    let (s0, c0) = t0.sin_cos();
    let (s1, c1) = t1.sin_cos();
    0.5 * (r * r * (t1 - t0) + r * (cx * (s1 - s0) - cy * (c1 - c0)))
}

/// Second common point of the circles with diameters `[0, a]` and `[0, b]`:
/// the foot of the perpendicular from the origin to line `ab`. `None` when
/// the circles are tangent at the origin.
pub(crate) fn second_intersection(a: &Point, b: &Point) -> Option<Point> {
    let scale = a.norm() * b.norm();
    if a.cross(b).abs() < 1e-9 * scale {
        return None;
    }
    let ab = *b - *a;
    let t = -a.dot(&ab) / ab.norm_sq();
    Some(*a + ab * t)
}

pub fn union_measure_mc(cover: &DiscCover, samples: usize, seed: u64) -> Result<AreaReport> {
    union_measure_mc_sharded(cover, samples, seed, 1)
}

/// Rejection sampling over the tight bounding box of the discs (balls).
/// Hit counts from each shard are summed.
pub fn union_measure_mc_sharded(
    cover: &DiscCover,
    samples: usize,
    seed: u64,
    shards: usize,
) -> Result<AreaReport> {
    if samples < MIN_MC_SAMPLES {
        return invalid(format!("Monte Carlo needs at least {MIN_MC_SAMPLES} samples, got {samples}"));
    }
    let dim = cover.dim();
    let n = dim.n();
    let (lo, hi) = cover.bbox();
    let (lo, hi) = (lo.raw(), hi.raw());
    let extent: Vec<f64> = (0..n).map(|k| hi[k] - lo[k]).collect();
    let box_measure: f64 = extent.iter().product();

    let (hull_area, hull_for_excess) = match dim {
        Dim::Two => {
            let a = polygon_area(&convex_hull_2d(&cover.source)?);
            (Some(a), a)
        }
        Dim::Three => (None, 0.0),
    };

    let mut balls: Vec<([f64; 3], f64)> = cover
        .discs
        .iter()
        .filter(|d| d.radius > 0.0)
        .map(|d| (d.center.raw(), d.radius * d.radius))
        .collect();
    // Large balls first: most hits exit early.
    balls.sort_by(|a, b| b.1.total_cmp(&a.1));

    let hits: u64 = if box_measure > 0.0 {
        run_sharded(samples, shards, seed, |count, s| {
            let mut rng = rng_from_seed(s);
            let mut hits = 0u64;
            let mut q = [0.0; 3];
            for _ in 0..count {
                for k in 0..n {
                    q[k] = lo[k] + extent[k] * rng.random::<f64>();
                }
                let inside = balls.iter().any(|(c, r2)| {
                    let mut d2 = 0.0;
                    for k in 0..n {
                        d2 += (q[k] - c[k]) * (q[k] - c[k]);
                    }
                    d2 <= *r2
                });
                hits += u64::from(inside);
            }
            hits
        })
        .into_iter()
        .sum()
    } else {
        0
    };

    let p = hits as f64 / samples as f64;
    let estimate = box_measure * p;
    let stderr = box_measure * (p * (1.0 - p) / samples as f64).sqrt();
    Ok(AreaReport {
        hull_area,
        union_area: estimate,
        excess_area: hull_area.map(|_| estimate - hull_for_excess),
        method: AreaMethod::MonteCarlo,
        stderr: Some(stderr),
        samples: Some(samples as u64),
    })
}
