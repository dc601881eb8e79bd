//! Points, point sets and planar convex polygons.
//!
//! Points carry their dimension and always store three coordinates; planar
//! points keep `z = 0`, which lets the vector arithmetic ignore the
//! dimension entirely.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Tolerance for collinearity and containment predicates.
pub const GEOM_EPS: f64 = 1e-9;
/// Points closer than this are merged when a [`PointSet`] is built.
pub const DUPLICATE_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "usize", try_from = "usize")]
pub enum Dim {
    Two,
    Three,
}

impl Dim {
    pub fn n(self) -> usize {
        match self {
            Dim::Two => 2,
            Dim::Three => 3,
        }
    }
}

impl From<Dim> for usize {
    fn from(d: Dim) -> usize {
        d.n()
    }
}

impl TryFrom<usize> for Dim {
    type Error = Error;

    fn try_from(n: usize) -> Result<Dim> {
        match n {
            2 => Ok(Dim::Two),
            3 => Ok(Dim::Three),
            _ => invalid(format!("dimension must be 2 or 3, got {n}")),
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n())
    }
}

/// A point (or vector) in R^2 or R^3.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    dim: Dim,
    c: [f64; 3],
}

impl Point {
    pub const fn xy(x: f64, y: f64) -> Point {
        Point { dim: Dim::Two, c: [x, y, 0.0] }
    }

    pub const fn xyz(x: f64, y: f64, z: f64) -> Point {
        Point { dim: Dim::Three, c: [x, y, z] }
    }

    pub fn origin(dim: Dim) -> Point {
        Point { dim, c: [0.0; 3] }
    }

    /// Builds a point from a coordinate slice of length 2 or 3, rejecting
    /// non-finite values.
    pub fn new(coords: &[f64]) -> Result<Point> {
        let dim = Dim::try_from(coords.len())?;
        if let Some(bad) = coords.iter().find(|v| !v.is_finite()) {
            return invalid(format!("non-finite coordinate {bad}"));
        }
        let mut c = [0.0; 3];
        c[..coords.len()].copy_from_slice(coords);
        Ok(Point { dim, c })
    }

    pub(crate) fn from_raw(dim: Dim, mut c: [f64; 3]) -> Point {
        if dim == Dim::Two {
            c[2] = 0.0;
        }
        Point { dim, c }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn x(&self) -> f64 {
        self.c[0]
    }

    pub fn y(&self) -> f64 {
        self.c[1]
    }

    pub fn z(&self) -> f64 {
        self.c[2]
    }

    pub fn coords(&self) -> &[f64] {
        &self.c[..self.dim.n()]
    }

    pub(crate) fn raw(&self) -> [f64; 3] {
        self.c
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|v| v.is_finite())
    }

    pub fn dot(&self, o: &Point) -> f64 {
        self.c[0] * o.c[0] + self.c[1] * o.c[1] + self.c[2] * o.c[2]
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist(&self, o: &Point) -> f64 {
        (*self - *o).norm()
    }

    /// z-component of the planar cross product.
    pub fn cross(&self, o: &Point) -> f64 {
        self.c[0] * o.c[1] - self.c[1] * o.c[0]
    }

    pub fn cross3(&self, o: &Point) -> Point {
        Point::from_raw(
            self.dim,
            [
                self.c[1] * o.c[2] - self.c[2] * o.c[1],
                self.c[2] * o.c[0] - self.c[0] * o.c[2],
                self.c[0] * o.c[1] - self.c[1] * o.c[0],
            ],
        )
    }

    pub fn midpoint(&self, o: &Point) -> Point {
        (*self + *o) * 0.5
    }

    /// Lexicographic order on coordinates.
    pub fn lex_cmp(&self, o: &Point) -> Ordering {
        self.c
            .iter()
            .zip(o.c.iter())
            .map(|(a, b)| a.total_cmp(b))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        debug_assert_eq!(self.dim, o.dim);
        Point {
            dim: self.dim,
            c: [self.c[0] + o.c[0], self.c[1] + o.c[1], self.c[2] + o.c[2]],
        }
    }
}

impl AddAssign for Point {
    fn add_assign(&mut self, o: Point) {
        *self = *self + o;
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        debug_assert_eq!(self.dim, o.dim);
        Point {
            dim: self.dim,
            c: [self.c[0] - o.c[0], self.c[1] - o.c[1], self.c[2] - o.c[2]],
        }
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, t: f64) -> Point {
        Point { dim: self.dim, c: [self.c[0] * t, self.c[1] * t, self.c[2] * t] }
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        self * -1.0
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.dim.n()))?;
        for v in self.coords() {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Point, D::Error> {
        let v = Vec::<f64>::deserialize(d)?;
        Point::new(&v).map_err(de::Error::custom)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A non-empty constellation of distinct points sharing one dimension.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPointSet")]
pub struct PointSet {
    dim: Dim,
    points: Vec<Point>,
}

#[derive(Deserialize)]
struct RawPointSet {
    dim: Dim,
    points: Vec<Point>,
}

impl TryFrom<RawPointSet> for PointSet {
    type Error = Error;
    fn try_from(raw: RawPointSet) -> Result<PointSet> {
        PointSet::new(raw.dim, raw.points)
    }
}

impl PointSet {
    /// Validates dimensions and finiteness and merges points closer than
    /// [`DUPLICATE_EPS`], keeping the first occurrence.
    pub fn new(dim: Dim, points: Vec<Point>) -> Result<PointSet> {
        if points.is_empty() {
            return invalid("at least one point required");
        }
        let mut kept: Vec<Point> = Vec::with_capacity(points.len());
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim.n(), got: p.dim().n() });
            }
            if !p.is_finite() {
                return invalid(format!("non-finite point {p}"));
            }
            if !kept.iter().any(|q| q.dist(&p) <= DUPLICATE_EPS) {
                kept.push(p);
            }
        }
        Ok(PointSet { dim, points: kept })
    }

    pub fn from_xy(pts: &[(f64, f64)]) -> Result<PointSet> {
        PointSet::new(Dim::Two, pts.iter().map(|&(x, y)| Point::xy(x, y)).collect())
    }

    pub fn from_xyz(pts: &[(f64, f64, f64)]) -> Result<PointSet> {
        PointSet::new(Dim::Three, pts.iter().map(|&(x, y, z)| Point::xyz(x, y, z)).collect())
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Axis-aligned bounding box as `(min, max)`.
    pub fn bbox(&self) -> (Point, Point) {
        bbox_of(&self.points)
    }

    pub fn bbox_diagonal(&self) -> f64 {
        let (lo, hi) = self.bbox();
        hi.dist(&lo)
    }

    pub fn centroid(&self) -> Point {
        let sum = self
            .points
            .iter()
            .fold(Point::origin(self.dim), |acc, p| acc + *p);
        sum * (1.0 / self.len() as f64)
    }

    pub fn translated(&self, by: Point) -> PointSet {
        PointSet {
            dim: self.dim,
            points: self.points.iter().map(|p| *p + by).collect(),
        }
    }

    pub(crate) fn check_dim(&self, p: &Point) -> Result<()> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim.n(), got: p.dim().n() });
        }
        Ok(())
    }

    pub(crate) fn require_dim(&self, dim: Dim) -> Result<()> {
        if self.dim != dim {
            return Err(Error::DimensionMismatch { expected: dim.n(), got: self.dim.n() });
        }
        Ok(())
    }
}

pub(crate) fn bbox_of(points: &[Point]) -> (Point, Point) {
    let dim = points[0].dim();
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    for p in points {
        for k in 0..3 {
            lo[k] = lo[k].min(p.c[k]);
            hi[k] = hi[k].max(p.c[k]);
        }
    }
    (Point::from_raw(dim, lo), Point::from_raw(dim, hi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HullKind {
    Full,
    Segment,
    SinglePoint,
}

/// Extreme points of a planar point set in counter-clockwise order, starting
/// at the lexicographically smallest vertex, with the exterior turn angle at
/// each vertex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
    ext_angles: Vec<f64>,
    kind: HullKind,
}

impl ConvexPolygon {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn ext_angles(&self) -> &[f64] {
        &self.ext_angles
    }

    pub fn kind(&self) -> HullKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex `i` with its exterior angle.
    pub fn weighted_vertices(&self) -> impl Iterator<Item = (&Point, f64)> + '_ {
        self.vertices.iter().zip(self.ext_angles.iter().copied())
    }

    pub fn area(&self) -> f64 {
        polygon_area(self)
    }

    pub fn contains(&self, q: &Point) -> bool {
        point_in_hull(q, self)
    }

    pub fn as_point_set(&self) -> PointSet {
        PointSet { dim: Dim::Two, points: self.vertices.clone() }
    }

    pub fn translated(&self, by: Point) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|p| *p + by).collect(),
            ext_angles: self.ext_angles.clone(),
            kind: self.kind,
        }
    }

    fn from_ccw(vertices: Vec<Point>) -> ConvexPolygon {
        let kind = match vertices.len() {
            1 => HullKind::SinglePoint,
            2 => HullKind::Segment,
            _ => HullKind::Full,
        };
        let ext_angles = match kind {
            HullKind::SinglePoint => vec![TAU],
            HullKind::Segment => vec![PI, PI],
            HullKind::Full => turn_angles(&vertices),
        };
        ConvexPolygon { vertices, ext_angles, kind }
    }
}

fn turn_angles(vertices: &[Point]) -> Vec<f64> {
    let m = vertices.len();
    (0..m)
        .map(|i| {
            let prev = vertices[(i + m - 1) % m];
            let cur = vertices[i];
            let next = vertices[(i + 1) % m];
            let e_in = cur - prev;
            let e_out = next - cur;
            e_in.cross(&e_out).atan2(e_in.dot(&e_out))
        })
        .collect()
}

/// Distance of `a` to the right of the directed line `o -> b`; positive when
/// `o -> a -> b` is a strict left turn.
fn right_offset(o: &Point, a: &Point, b: &Point) -> f64 {
    let ob = *b - *o;
    let len = ob.norm();
    if len == 0.0 {
        return 0.0;
    }
    (*a - *o).cross(&ob) / len
}

/// Monotone-chain hull. Collinear boundary points are dropped so every
/// vertex has a strictly positive turn angle.
pub fn convex_hull_2d(ps: &PointSet) -> Result<ConvexPolygon> {
    ps.require_dim(Dim::Two)?;
    Ok(hull_of_points(ps.points()))
}

pub(crate) fn hull_of_points(points: &[Point]) -> ConvexPolygon {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup_by(|a, b| a.dist(b) <= DUPLICATE_EPS);
    if pts.len() == 1 {
        return ConvexPolygon::from_ccw(pts);
    }

    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    let push = |hull: &mut Vec<Point>, floor: usize, p: Point| {
        while hull.len() >= floor + 2 {
            let n = hull.len();
            if right_offset(&hull[n - 2], &hull[n - 1], &p) > GEOM_EPS {
                break;
            }
            hull.pop();
        }
        hull.push(p);
    };
    for p in &pts {
        push(&mut hull, 0, *p);
    }
    let lower_len = hull.len();
    for p in pts.iter().rev().skip(1) {
        push(&mut hull, lower_len - 1, *p);
    }
    hull.pop();

    // All points within GEOM_EPS of one line: keep the two extremes.
    if hull.len() <= 2 {
        let first = pts[0];
        let last = pts[pts.len() - 1];
        if first.dist(&last) <= DUPLICATE_EPS {
            return ConvexPolygon::from_ccw(vec![first]);
        }
        return ConvexPolygon::from_ccw(vec![first, last]);
    }
    ConvexPolygon::from_ccw(hull)
}

/// Exterior turn angles; they sum to 2π for every hull kind.
pub fn exterior_angles(poly: &ConvexPolygon) -> Vec<f64> {
    poly.ext_angles.clone()
}

/// Shoelace area; zero for degenerate hulls.
pub fn polygon_area(poly: &ConvexPolygon) -> f64 {
    if poly.kind != HullKind::Full {
        return 0.0;
    }
    let v = &poly.vertices;
    let m = v.len();
    let twice: f64 = (0..m).map(|i| v[i].cross(&v[(i + 1) % m])).sum();
    0.5 * twice
}

pub(crate) fn dist_to_segment(q: &Point, a: &Point, b: &Point) -> f64 {
    let ab = *b - *a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return q.dist(a);
    }
    let t = ((*q - *a).dot(&ab) / len_sq).clamp(0.0, 1.0);
    q.dist(&(*a + ab * t))
}

/// Inside-or-on-boundary test with tolerance [`GEOM_EPS`].
pub fn point_in_hull(q: &Point, poly: &ConvexPolygon) -> bool {
    if q.dim() != Dim::Two {
        return false;
    }
    let v = &poly.vertices;
    match poly.kind {
        HullKind::SinglePoint => q.dist(&v[0]) <= GEOM_EPS,
        HullKind::Segment => dist_to_segment(q, &v[0], &v[1]) <= GEOM_EPS,
        HullKind::Full => {
            let m = v.len();
            (0..m).all(|i| {
                let a = v[i];
                let e = v[(i + 1) % m] - a;
                e.cross(&(*q - a)) / e.norm() >= -GEOM_EPS
            })
        }
    }
}

fn edge_angle(e: &Point) -> f64 {
    let a = e.y().atan2(e.x());
    if a < 0.0 {
        a + TAU
    } else {
        a
    }
}

/// Minkowski sum by merging the two CCW edge sequences by slope.
pub fn minkowski_sum(a: &ConvexPolygon, b: &ConvexPolygon) -> ConvexPolygon {
    if a.kind == HullKind::SinglePoint {
        return b.translated(a.vertices[0]);
    }
    if b.kind == HullKind::SinglePoint {
        return a.translated(b.vertices[0]);
    }

    // Start both cycles at the lowest (then leftmost) vertex so edge angles
    // increase monotonically through [0, 2π).
    let rotate = |p: &ConvexPolygon| -> Vec<Point> {
        let start = p
            .vertices
            .iter()
            .enumerate()
            .min_by(|(_, u), (_, v)| u.y().total_cmp(&v.y()).then(u.x().total_cmp(&v.x())))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let m = p.vertices.len();
        (0..m).map(|k| p.vertices[(start + k) % m]).collect()
    };
    let edges = |v: &[Point]| -> Vec<Point> {
        let m = v.len();
        (0..m).map(|i| v[(i + 1) % m] - v[i]).collect()
    };
    let va = rotate(a);
    let vb = rotate(b);
    let ea = edges(&va);
    let eb = edges(&vb);

    let mut out = Vec::with_capacity(ea.len() + eb.len());
    let mut cur = va[0] + vb[0];
    let (mut i, mut j) = (0, 0);
    while i < ea.len() || j < eb.len() {
        out.push(cur);
        let take_a = match (ea.get(i), eb.get(j)) {
            (Some(x), Some(y)) => edge_angle(x) <= edge_angle(y),
            (Some(_), None) => true,
            _ => false,
        };
        if take_a {
            cur += ea[i];
            i += 1;
        } else {
            cur += eb[j];
            j += 1;
        }
    }
    hull_of_points(&out)
}

/// Homothety about the origin; turn angles are unchanged.
pub fn scale_polygon(poly: &ConvexPolygon, t: f64) -> Result<ConvexPolygon> {
    if !(t > 0.0 && t.is_finite()) {
        return invalid(format!("scale factor must be positive and finite, got {t}"));
    }
    Ok(ConvexPolygon {
        vertices: poly.vertices.iter().map(|p| *p * t).collect(),
        ext_angles: poly.ext_angles.clone(),
        kind: poly.kind,
    })
}

/// Disc (or ball) with a center and a nonnegative radius.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Disc {
    pub center: Point,
    pub radius: f64,
}

impl Disc {
    /// The disc having `[anchor, p]` as a diameter.
    pub fn anchored(anchor: &Point, p: &Point) -> Disc {
        Disc { center: anchor.midpoint(p), radius: 0.5 * anchor.dist(p) }
    }

    pub fn contains(&self, q: &Point, tol: f64) -> bool {
        q.dist(&self.center) <= self.radius + tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> ConvexPolygon {
        convex_hull_2d(&PointSet::from_xy(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]).unwrap()).unwrap()
    }

    fn pts(v: &[(f64, f64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::xy(x, y)).collect()
    }

    #[test]
    fn hull_drops_interior_point() {
        let ps = PointSet::from_xy(&[(0., 0.), (4., 0.), (4., 3.), (0., 3.), (2., 1.)]).unwrap();
        let h = convex_hull_2d(&ps).unwrap();
        assert_eq!(h.kind(), HullKind::Full);
        assert_eq!(h.vertices(), pts(&[(0., 0.), (4., 0.), (4., 3.), (0., 3.)]).as_slice());
    }

    #[test]
    fn hull_of_collinear_points_is_segment() {
        let ps = PointSet::from_xy(&[(1., 1.), (0., 0.), (2., 2.)]).unwrap();
        let h = convex_hull_2d(&ps).unwrap();
        assert_eq!(h.kind(), HullKind::Segment);
        assert_eq!(h.vertices(), pts(&[(0., 0.), (2., 2.)]).as_slice());
        assert_eq!(h.ext_angles(), &[PI, PI]);
    }

    #[test]
    fn hull_of_single_point() {
        let h = convex_hull_2d(&PointSet::from_xy(&[(5., 7.)]).unwrap()).unwrap();
        assert_eq!(h.kind(), HullKind::SinglePoint);
        assert_eq!(h.ext_angles(), &[TAU]);
    }

    #[test]
    fn hull_drops_collinear_edge_points() {
        let ps = PointSet::from_xy(&[(0., 0.), (1., 0.), (2., 0.), (2., 2.), (0., 2.), (0., 1.)]).unwrap();
        let h = convex_hull_2d(&ps).unwrap();
        assert_eq!(h.len(), 4);
        assert!(h.ext_angles().iter().all(|&t| (t - PI / 2.0).abs() < 1e-15));
    }

    #[test]
    fn hull_rejects_3d_input() {
        let ps = PointSet::from_xyz(&[(0., 0., 0.)]).unwrap();
        assert!(convex_hull_2d(&ps).is_err());
    }

    #[test]
    fn point_set_merges_duplicates() {
        let ps = PointSet::from_xy(&[(0., 0.), (1e-13, 0.), (1., 0.)]).unwrap();
        assert_eq!(ps.len(), 2);
        assert!(PointSet::from_xy(&[]).is_err());
        assert!(PointSet::new(Dim::Two, vec![Point::xy(f64::NAN, 0.)]).is_err());
        assert!(PointSet::new(Dim::Two, vec![Point::xyz(0., 0., 0.)]).is_err());
    }

    #[test]
    fn square_and_triangle_angles() {
        for t in exterior_angles(&unit_square()) {
            assert!((t - PI / 2.0).abs() < 1e-15);
        }
        let s3 = 3f64.sqrt();
        let tri = hull_of_points(&pts(&[(0., 0.), (2., 0.), (1., s3)]));
        for t in tri.ext_angles() {
            assert!((t - 2.0 * PI / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn right_triangle_angles_match_arccos_oracle() {
        let tri = hull_of_points(&pts(&[(0., 0.), (4., 0.), (0., 3.)]));
        let v = tri.vertices();
        let m = v.len();
        let mut sum = 0.0;
        for i in 0..m {
            let a = v[(i + m - 1) % m] - v[i];
            let b = v[(i + 1) % m] - v[i];
            let interior = (a.dot(&b) / (a.norm() * b.norm())).acos();
            assert!((tri.ext_angles()[i] - (PI - interior)).abs() < 1e-12);
            sum += tri.ext_angles()[i];
        }
        assert!((sum - TAU).abs() < 1e-9);
        let expect = [PI / 2.0, PI - (0.75f64).atan(), PI - (4.0f64 / 3.0).atan()];
        for (got, want) in tri.ext_angles().iter().zip(expect) {
            assert!((got - want).abs() < 1e-12);
        }
        assert!((expect[1] - 2.4981).abs() < 1e-4 && (expect[2] - 2.2143).abs() < 1e-4);
    }

    #[test]
    fn areas() {
        assert_eq!(polygon_area(&unit_square()), 1.0);
        assert_eq!(polygon_area(&hull_of_points(&pts(&[(0., 0.), (2., 0.)]))), 0.0);
        assert_eq!(polygon_area(&hull_of_points(&pts(&[(0., 0.), (4., 0.), (0., 3.)]))), 6.0);
    }

    #[test]
    fn containment() {
        let sq = unit_square();
        assert!(point_in_hull(&Point::xy(0.5, 0.5), &sq));
        assert!(!point_in_hull(&Point::xy(1.5, 0.5), &sq));
        assert!(point_in_hull(&Point::xy(1.0, 0.5), &sq));
        for v in sq.vertices() {
            assert!(point_in_hull(v, &sq));
        }
        let seg = hull_of_points(&pts(&[(0., 0.), (2., 0.)]));
        assert!(point_in_hull(&Point::xy(1.0, 0.0), &seg));
        assert!(!point_in_hull(&Point::xy(1.0, 0.1), &seg));
    }

    #[test]
    fn minkowski_examples() {
        let sq = unit_square();
        let two = minkowski_sum(&sq, &sq);
        assert_eq!(two.vertices(), pts(&[(0., 0.), (2., 0.), (2., 2.), (0., 2.)]).as_slice());

        let shifted = minkowski_sum(&sq, &hull_of_points(&pts(&[(1., 1.)])));
        assert_eq!(shifted.vertices(), pts(&[(1., 1.), (2., 1.), (2., 2.), (1., 2.)]).as_slice());

        let seg = hull_of_points(&pts(&[(0., 0.), (1., 0.)]));
        let rect = minkowski_sum(&sq, &seg);
        // brute force: hull of all pairwise vertex sums
        let sums: Vec<Point> = sq
            .vertices()
            .iter()
            .flat_map(|a| seg.vertices().iter().map(move |b| *a + *b))
            .collect();
        assert_eq!(rect, hull_of_points(&sums));
        assert_eq!(rect.vertices(), pts(&[(0., 0.), (2., 0.), (2., 1.), (0., 1.)]).as_slice());

        let par = minkowski_sum(&seg, &hull_of_points(&pts(&[(0., 0.), (3., 0.)])));
        assert_eq!(par.kind(), HullKind::Segment);
        assert_eq!(par.vertices(), pts(&[(0., 0.), (4., 0.)]).as_slice());
    }

    #[test]
    fn scaling() {
        let sq = unit_square();
        let big = scale_polygon(&sq, 2.0).unwrap();
        assert_eq!(big.vertices(), pts(&[(0., 0.), (2., 0.), (2., 2.), (0., 2.)]).as_slice());
        assert_eq!(big.ext_angles(), sq.ext_angles());
        assert_eq!(scale_polygon(&sq, 1.0).unwrap(), sq);
        let tri = hull_of_points(&pts(&[(0., 0.), (4., 0.), (0., 3.)]));
        let half = scale_polygon(&tri, 0.5).unwrap();
        assert_eq!(half.vertices(), pts(&[(0., 0.), (2., 0.), (0., 1.5)]).as_slice());
        assert!(scale_polygon(&sq, 0.0).is_err());
        assert!(scale_polygon(&sq, -1.0).is_err());
    }

    #[test]
    fn anchored_disc() {
        let d = Disc::anchored(&Point::xy(0., 0.), &Point::xy(2., 3.));
        assert_eq!(d.center, Point::xy(1.0, 1.5));
        assert!((d.radius - 13f64.sqrt() / 2.0).abs() < 1e-15);
    }
}
