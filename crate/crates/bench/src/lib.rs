//! Fixtures shared by the benchmarks.

use steiner_cover::{Point, PointSet};

/// `n` points on a slightly perturbed circle, all hull vertices.
pub fn polygon(n: usize) -> PointSet {
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let a = std::f64::consts::TAU * k as f64 / n as f64;
            let r = 1.0 + 0.1 * ((7 * k) % 5) as f64 / 5.0;
            (r * a.cos(), r * a.sin())
        })
        .collect();
    PointSet::from_xy(&pts).expect("finite points")
}

pub fn tetrahedron() -> PointSet {
    PointSet::from_xyz(&[(0., 0., 0.), (1., 0., 0.), (0., 1., 0.), (0., 0., 1.)]).expect("finite points")
}

pub fn off_center() -> Point {
    Point::xy(0.3, -0.2)
}
