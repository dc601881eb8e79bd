//! Empirical check that the anchored discs cover the convex hull.
//!
//! A hull point Q escapes every disc only if (Q−Ω)ᵀ(P_i−Q) < 0 for all i,
//! which no point of the hull can satisfy. Each violation is therefore
//! reported with those projections: all-negative would be a genuine
//! counterexample, anything else is floating-point noise.

use rand::Rng;
use rand_distr::Exp1;
use serde::{Deserialize, Serialize};

use crate::cover_area::{build_cover, second_intersection, DiscCover};
use crate::error::{invalid, Error, Result};
use crate::geom::{hull_of_points, polygon_area, Dim, HullKind, Point, PointSet};
use crate::rng::rng_from_seed;

/// Slack on radii; hull boundary points can lie exactly on a circle.
pub const COVER_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplingScheme {
    /// Uniform over the planar hull.
    Uniform,
    /// Exponential-weight convex combinations of the points; always in the
    /// hull, not uniform.
    ConvexCombination,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// Some projection is nonnegative, so the point is not a real
    /// counterexample.
    Numerical,
    /// Every projection is negative.
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ViolationWitness {
    pub q: Point,
    /// (Q−Ω)ᵀ(P_i−Q) for every point P_i.
    pub projections: Vec<f64>,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub samples: usize,
    pub violations: usize,
    pub numerical_violations: usize,
    pub counterexamples: usize,
    /// Minimum over samples of max_i (r_i − ‖Q − c_i‖).
    pub worst_margin: f64,
    pub violation_witnesses: Vec<ViolationWitness>,
    pub sampling: SamplingScheme,
}

/// Random points of the convex hull of `ps`.
pub fn sample_hull_points(ps: &PointSet, n: usize, seed: u64) -> Vec<Point> {
    let mut rng = rng_from_seed(seed);
    match ps.dim() {
        Dim::Two => sample_planar_hull(ps.points(), n, &mut rng),
        Dim::Three => sample_convex_combinations(ps.points(), n, &mut rng),
    }
}

pub fn sampling_scheme(dim: Dim) -> SamplingScheme {
    match dim {
        Dim::Two => SamplingScheme::Uniform,
        Dim::Three => SamplingScheme::ConvexCombination,
    }
}

fn sample_planar_hull<R: Rng>(points: &[Point], n: usize, rng: &mut R) -> Vec<Point> {
    let hull = hull_of_points(points);
    let v = hull.vertices();
    match hull.kind() {
        HullKind::SinglePoint => vec![v[0]; n],
        HullKind::Segment => (0..n)
            .map(|_| {
                let t: f64 = rng.random();
                v[0] + (v[1] - v[0]) * t
            })
            .collect(),
        HullKind::Full => {
            // Fan from v[0], triangles picked proportionally to area.
            let mut cum = Vec::with_capacity(v.len() - 2);
            let mut acc = 0.0;
            for k in 1..v.len() - 1 {
                acc += 0.5 * (v[k] - v[0]).cross(&(v[k + 1] - v[0]));
                cum.push(acc);
            }
            debug_assert!((acc - polygon_area(&hull)).abs() < 1e-9 * acc.max(1.0));
            (0..n)
                .map(|_| {
                    let pick = rng.random::<f64>() * acc;
                    let k = cum.partition_point(|&c| c < pick).min(cum.len() - 1) + 1;
                    let (a, b, c) = (v[0], v[k], v[k + 1]);
                    let s = rng.random::<f64>().sqrt();
                    let t: f64 = rng.random();
                    a * (1.0 - s) + b * (s * (1.0 - t)) + c * (s * t)
                })
                .collect()
        }
    }
}

fn sample_convex_combinations<R: Rng>(points: &[Point], n: usize, rng: &mut R) -> Vec<Point> {
    let dim = points[0].dim();
    let mut w = vec![0.0; points.len()];
    (0..n)
        .map(|_| {
            for wi in w.iter_mut() {
                *wi = rng.sample::<f64, _>(Exp1);
            }
            let total: f64 = w.iter().sum();
            points
                .iter()
                .zip(&w)
                .fold(Point::origin(dim), |acc, (p, wi)| acc + *p * (wi / total))
        })
        .collect()
}

/// Whether `q` lies in some disc (radius + [`COVER_EPS`]); the witness is
/// the first such disc.
pub fn is_covered(q: &Point, cover: &DiscCover) -> (bool, Option<usize>) {
    let witness = cover.discs.iter().position(|d| d.contains(q, COVER_EPS));
    (witness.is_some(), witness)
}

fn margin(q: &Point, cover: &DiscCover) -> f64 {
    cover
        .discs
        .iter()
        .map(|d| d.radius - q.dist(&d.center))
        .fold(f64::NEG_INFINITY, f64::max)
}

pub fn verify_coverage(ps: &PointSet, omega: &Point, n: usize, seed: u64) -> Result<CoverageReport> {
    if n == 0 {
        return invalid("coverage check needs at least one sample");
    }
    let cover = build_cover(ps, omega)?;
    let samples = sample_hull_points(ps, n, seed);
    Ok(check_points(&cover, &samples))
}

/// Coverage report for an explicit list of hull points.
pub fn check_points(cover: &DiscCover, samples: &[Point]) -> CoverageReport {
    let omega = cover.anchor;
    let mut report = CoverageReport {
        samples: samples.len(),
        violations: 0,
        numerical_violations: 0,
        counterexamples: 0,
        worst_margin: f64::INFINITY,
        violation_witnesses: Vec::new(),
        sampling: sampling_scheme(cover.dim()),
    };
    for q in samples {
        report.worst_margin = report.worst_margin.min(margin(q, cover));
        if is_covered(q, cover).0 {
            continue;
        }
        let rel = *q - omega;
        let projections: Vec<f64> = cover
            .source
            .points()
            .iter()
            .map(|p| rel.dot(&(*p - *q)))
            .collect();
        let kind = if projections.iter().all(|&v| v < 0.0) {
            report.counterexamples += 1;
            ViolationKind::Counterexample
        } else {
            report.numerical_violations += 1;
            ViolationKind::Numerical
        };
        report.violations += 1;
        report.violation_witnesses.push(ViolationWitness { q: *q, projections, kind });
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "case")]
pub enum PairClass {
    /// The two circles touch only at the anchor.
    TangentAtAnchor,
    /// The circles also meet at `q`, the foot of the perpendicular from the
    /// anchor to the line through both points.
    IntersectTwoPoints { q: Point },
}

/// Mutual position of the planar discs `i` and `j`.
pub fn classify_pair(cover: &DiscCover, i: usize, j: usize) -> Result<PairClass> {
    cover.source.require_dim(Dim::Two)?;
    let n = cover.discs.len();
    if i >= n || j >= n {
        return invalid(format!("disc index out of range (have {n})"));
    }
    if i == j {
        return invalid("classify_pair needs two distinct discs");
    }
    if cover.discs[i].radius == 0.0 || cover.discs[j].radius == 0.0 {
        return Err(Error::InvalidArgument("zero-radius disc has no circle to classify".into()));
    }
    let omega = cover.anchor;
    let pts = cover.source.points();
    Ok(match second_intersection(&(pts[i] - omega), &(pts[j] - omega)) {
        None => PairClass::TangentAtAnchor,
        Some(q) => PairClass::IntersectTwoPoints { q: q + omega },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> PointSet {
        PointSet::from_xy(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]).unwrap()
    }

    #[test]
    fn sampling_edge_cases() {
        assert!(sample_hull_points(&square(), 0, 1).is_empty());
        let one = PointSet::from_xy(&[(2., 3.)]).unwrap();
        assert!(sample_hull_points(&one, 10, 1).iter().all(|p| *p == Point::xy(2., 3.)));
        let one3 = PointSet::from_xyz(&[(2., 3., 4.)]).unwrap();
        assert!(sample_hull_points(&one3, 10, 1).iter().all(|p| p.dist(&Point::xyz(2., 3., 4.)) < 1e-12));
    }

    #[test]
    fn samples_stay_in_hull() {
        let ps = PointSet::from_xy(&[(0., 0.), (4., 0.), (5., 2.), (1., 4.), (-1., 2.)]).unwrap();
        let hull = hull_of_points(ps.points());
        for q in sample_hull_points(&ps, 2000, 9) {
            assert!(hull.contains(&q));
        }
    }

    #[test]
    fn uniform_square_mean() {
        let n = 100_000;
        let qs = sample_hull_points(&square(), n, 17);
        let mean = qs.iter().fold(Point::xy(0., 0.), |a, q| a + *q) * (1.0 / n as f64);
        // Uniform on [0,1]: σ = 1/√12 per coordinate.
        let sigma = (1.0 / 12.0f64).sqrt() / (n as f64).sqrt();
        assert!((mean.x() - 0.5).abs() < 4.0 * sigma);
        assert!((mean.y() - 0.5).abs() < 4.0 * sigma);
    }

    #[test]
    fn is_covered_examples() {
        let cover = build_cover(&square(), &Point::xy(0., 0.)).unwrap();
        let (ok, w) = is_covered(&Point::xy(0.9, 0.9), &cover);
        assert!(ok);
        let d = &cover.discs[w.unwrap()];
        assert!(Point::xy(0.9, 0.9).dist(&d.center) <= d.radius);
        // the disc of (1,1) covers it: distance ≈ 0.5657 ≤ √2/2
        let far_corner = &cover.discs[2];
        assert!((Point::xy(0.9, 0.9).dist(&far_corner.center) - 0.32f64.sqrt()).abs() < 1e-12);

        assert!(is_covered(&Point::xy(0., 0.), &cover).0);
        assert_eq!(is_covered(&Point::xy(100., 100.), &cover), (false, None));

        let degenerate = build_cover(&PointSet::from_xy(&[(1., 1.)]).unwrap(), &Point::xy(1., 1.)).unwrap();
        assert!(is_covered(&Point::xy(1., 1.), &degenerate).0);
    }

    #[test]
    fn far_anchor_still_covers() {
        let r = verify_coverage(&square(), &Point::xy(10., 10.), 10_000, 1).unwrap();
        assert_eq!(r.violations, 0);
        assert!(r.worst_margin >= -1e-9);
    }

    #[test]
    fn single_point_cover() {
        let ps = PointSet::from_xy(&[(3., -1.)]).unwrap();
        let r = verify_coverage(&ps, &Point::xy(0., 7.), 50, 2).unwrap();
        assert_eq!(r.violations, 0);
        assert!(r.worst_margin.abs() < 1e-9);
    }

    #[test]
    fn uncovered_point_is_triaged() {
        let cover = build_cover(&square(), &Point::xy(0., 0.)).unwrap();
        let r = check_points(&cover, &[Point::xy(100., 100.)]);
        assert_eq!(r.violations, 1);
        // Q = (100,100) is outside the hull, so it is a "counterexample" in
        // the projection sense.
        assert_eq!(r.counterexamples, 1);
        assert_eq!(r.violation_witnesses[0].projections.len(), 4);
    }

    #[test]
    fn classify_examples() {
        let mk = |a: (f64, f64), b: (f64, f64)| build_cover(&PointSet::from_xy(&[a, b]).unwrap(), &Point::xy(0., 0.)).unwrap();
        assert_eq!(classify_pair(&mk((1., 0.), (2., 0.)), 0, 1).unwrap(), PairClass::TangentAtAnchor);
        assert_eq!(classify_pair(&mk((1., 0.), (-2., 0.)), 0, 1).unwrap(), PairClass::TangentAtAnchor);
        match classify_pair(&mk((1., 0.), (0., 1.)), 0, 1).unwrap() {
            PairClass::IntersectTwoPoints { q } => assert!(q.dist(&Point::xy(0.5, 0.5)) < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
        let zero = build_cover(&PointSet::from_xy(&[(0., 0.), (1., 0.)]).unwrap(), &Point::xy(0., 0.)).unwrap();
        assert!(classify_pair(&zero, 0, 1).is_err());
        assert!(classify_pair(&mk((1., 0.), (0., 1.)), 1, 1).is_err());
    }
}
