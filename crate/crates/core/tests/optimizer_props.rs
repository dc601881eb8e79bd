mod common;

use common::*;
use rand::Rng;
use steiner_cover::optimizer::quadratic_objective_gradient;
use steiner_cover::{
    build_cover, convex_hull_2d, optimal_omega_analytic, optimal_omega_numeric, quadratic_objective,
    steiner_center_angles, union_area_exact, NMConfig, Point,
};

#[test]
fn numeric_triangle_matches_weighted_centroid() {
    let r = optimal_omega_numeric(&right_triangle(), &NMConfig::planar()).unwrap();
    assert!(r.omega_star.dist(&Point::xy(1.590334470601733, 1.0572491470487002)) < 1e-5, "{}", r.omega_star);
}

#[test]
fn quadratic_argmin_is_the_steiner_center() {
    let mut r = rng(401);
    for _ in 0..20 {
        let hull = random_polygon(&mut r, 15);
        let s = steiner_center_angles(&hull).center;
        assert!(quadratic_objective_gradient(&s, &hull).norm() < 1e-12 * (1.0 + s.norm()) * 10.0);
        for _ in 0..20 {
            let w = Point::xy(r.random_range(-6.0..6.0), r.random_range(-6.0..6.0));
            let g = quadratic_objective_gradient(&w, &hull);
            let h = 1e-6;
            let fd = |e: Point| {
                (quadratic_objective(&(w + e * h), &hull) - quadratic_objective(&(w - e * h), &hull)) / (2.0 * h)
            };
            let num = Point::xy(fd(Point::xy(1., 0.)), fd(Point::xy(0., 1.)));
            assert!(g.dist(&num) < 1e-5 * (1.0 + g.norm()), "{g} vs {num}");
            assert!(quadratic_objective(&w, &hull) >= quadratic_objective(&s, &hull));
        }
    }
}

#[test]
fn area_minus_quarter_quadratic_is_half_hull_area() {
    let mut r = rng(402);
    for _ in 0..20 {
        let (ps, hull) = random_polygon_set(&mut r, 15);
        let gaps: Vec<f64> = (0..50)
            .map(|_| {
                let w = random_interior(&mut r, &hull);
                union_area_exact(&build_cover(&ps, &w).unwrap()).unwrap().union_area
                    - quadratic_objective(&w, &hull) / 4.0
            })
            .collect();
        let spread = gaps.iter().cloned().fold(f64::MIN, f64::max) - gaps.iter().cloned().fold(f64::MAX, f64::min);
        assert!(spread < 1e-9);
        assert!((gaps[0] - hull.area() / 2.0).abs() < 1e-9);
    }
}

#[test]
fn translation_moves_the_optimum() {
    let mut r = rng(403);
    for _ in 0..10 {
        let (ps, _) = random_polygon_set(&mut r, 10);
        let shift = Point::xy(r.random_range(-50.0..50.0), r.random_range(-50.0..50.0));
        let moved = ps.translated(shift);
        let a0 = optimal_omega_analytic(&ps).unwrap().omega_star;
        let a1 = optimal_omega_analytic(&moved).unwrap().omega_star;
        assert!((a0 + shift).dist(&a1) < 1e-9);
        let n0 = optimal_omega_numeric(&ps, &NMConfig::planar()).unwrap().omega_star;
        let n1 = optimal_omega_numeric(&moved, &NMConfig::planar()).unwrap().omega_star;
        assert!((n0 + shift).dist(&n1) < 1e-5);
    }
}

#[test]
fn numeric_optimum_reports_its_objective() {
    let mut r = rng(404);
    for _ in 0..10 {
        let (ps, hull) = random_polygon_set(&mut r, 12);
        let res = optimal_omega_numeric(&ps, &NMConfig::planar()).unwrap();
        let area = union_area_exact(&build_cover(&ps, &res.omega_star).unwrap()).unwrap().union_area;
        assert!((res.objective_area - area).abs() < 1e-9);
        assert!(hull.contains(&res.omega_star) || convex_hull_2d(&ps).unwrap().contains(&res.omega_star));
        let hist = res.objective_history.unwrap();
        assert!(hist.windows(2).all(|w| w[1] <= w[0]));
    }
}
