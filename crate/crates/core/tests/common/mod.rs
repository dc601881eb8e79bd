#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use steiner_cover::{convex_hull_2d, ConvexPolygon, HullKind, Point, PointSet};

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

pub fn unit_square() -> PointSet {
    PointSet::from_xy(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]).unwrap()
}

pub fn right_triangle() -> PointSet {
    PointSet::from_xy(&[(0., 0.), (4., 0.), (0., 3.)]).unwrap()
}

/// Uniform points in [-half, half]^2.
pub fn random_planar_set<R: Rng>(rng: &mut R, n: usize, half: f64) -> PointSet {
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.random_range(-half..half), rng.random_range(-half..half)))
        .collect();
    PointSet::from_xy(&pts).unwrap()
}

/// A random point set whose hull is a full polygon.
pub fn random_polygon_set<R: Rng>(rng: &mut R, max_n: usize) -> (PointSet, ConvexPolygon) {
    loop {
        let n = rng.random_range(3..=max_n);
        let ps = random_planar_set(rng, n, 5.0);
        let hull = convex_hull_2d(&ps).unwrap();
        if hull.kind() == HullKind::Full && hull.area() > 1e-3 {
            return (ps, hull);
        }
    }
}

pub fn random_polygon<R: Rng>(rng: &mut R, max_n: usize) -> ConvexPolygon {
    random_polygon_set(rng, max_n).1
}

/// Random convex combination of the hull vertices (Dirichlet(1) weights).
pub fn random_interior<R: Rng>(rng: &mut R, poly: &ConvexPolygon) -> Point {
    let w: Vec<f64> = poly.vertices().iter().map(|_| -rng.random::<f64>().max(1e-300).ln()).collect();
    let total: f64 = w.iter().sum();
    poly.vertices()
        .iter()
        .zip(&w)
        .fold(Point::xy(0., 0.), |acc, (v, wi)| acc + *v * (wi / total))
}

/// Area of the union of discs with diameters [Ω, P_i], computed from the
/// radial function of the union about Ω: R(φ) = max(0, max_i ⟨u_φ, P_i − Ω⟩),
/// area = ½ ∮ R² dφ. Integrated exactly between the angles where the
/// maximizer or the sign can change.
pub fn support_integral_area(omega: &Point, points: &[Point]) -> f64 {
    let w: Vec<(f64, f64)> = points.iter().map(|p| (p.x() - omega.x(), p.y() - omega.y())).collect();
    let mut cuts = vec![0.0, TAU];
    let mut add = |a: f64| {
        let a = a.rem_euclid(TAU);
        cuts.push(a);
    };
    for (i, &(xi, yi)) in w.iter().enumerate() {
        if xi == 0.0 && yi == 0.0 {
            continue;
        }
        let psi = yi.atan2(xi);
        add(psi + PI / 2.0);
        add(psi - PI / 2.0);
        for &(xj, yj) in &w[i + 1..] {
            let (dx, dy) = (xi - xj, yi - yj);
            if dx == 0.0 && dy == 0.0 {
                continue;
            }
            let a = dy.atan2(dx);
            add(a + PI / 2.0);
            add(a - PI / 2.0);
        }
    }
    cuts.sort_by(f64::total_cmp);
    let mut area = 0.0;
    for pair in cuts.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if b - a <= 0.0 {
            continue;
        }
        let m = 0.5 * (a + b);
        let (s, c) = m.sin_cos();
        let (best, val) = w
            .iter()
            .map(|&(x, y)| ((x, y), x * c + y * s))
            .fold(((0.0, 0.0), f64::NEG_INFINITY), |acc, e| if e.1 > acc.1 { e } else { acc });
        if val <= 0.0 {
            continue;
        }
        let r2 = best.0 * best.0 + best.1 * best.1;
        let psi = best.1.atan2(best.0);
        let prim = |t: f64| 0.5 * (t - psi) + 0.25 * (2.0 * (t - psi)).sin();
        area += 0.5 * r2 * (prim(b) - prim(a));
    }
    area
}
