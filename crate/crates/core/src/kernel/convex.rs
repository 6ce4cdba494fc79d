//! Exact intersection of closed filled triangles.

use std::fmt;

use num_traits::Zero;

use super::intersect::{clip_coplanar_segment, segment_filled_triangle, IntersectionSet};
use super::point::{Point3, Segment, Triangle};
use super::predicates::{
    dominant_axis, orient2d_value, plane_eval, point_in_filled_triangle, point_in_triangle_plane,
    Sign,
};
use super::scalar::Scalar;

/// Exact intersection of two closed convex flat sets in 3-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConvexSet {
    Empty,
    Point(Point3),
    Segment(Segment),
    /// Convex polygon with at least three vertices, in convex position.
    /// Only possible for coplanar inputs.
    Polygon(Vec<Point3>),
}

impl ConvexSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, ConvexSet::Empty)
    }

    /// Order-insensitive comparison as point sets. A convex set is
    /// determined by its extreme points, so comparing sorted vertex
    /// lists is exact.
    pub fn same_set(&self, other: &ConvexSet) -> bool {
        fn key(set: &ConvexSet) -> Vec<&Point3> {
            let mut pts: Vec<&Point3> = match set {
                ConvexSet::Empty => Vec::new(),
                ConvexSet::Point(p) => vec![p],
                ConvexSet::Segment(s) => vec![s.start(), s.end()],
                ConvexSet::Polygon(v) => v.iter().collect(),
            };
            pts.sort();
            pts
        }
        key(self) == key(other)
    }
}

impl fmt::Display for ConvexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConvexSet::Empty => write!(f, "empty"),
            ConvexSet::Point(p) => write!(f, "point {p}"),
            ConvexSet::Segment(s) => write!(f, "segment {s}"),
            ConvexSet::Polygon(v) => write!(f, "polygon with {} vertices", v.len()),
        }
    }
}

/// Sutherland–Hodgman clip of a convex polygon (coplanar with `clip`)
/// against the three half-planes of `clip`, exact.
fn clip_polygon_by_triangle(mut subject: Vec<Point3>, clip: &Triangle) -> Vec<Point3> {
    let axis = dominant_axis(&clip.normal());
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        if subject.is_empty() {
            return subject;
        }
        let (vi, vj, vk) = (clip.vertex(i), clip.vertex(j), clip.vertex(k));
        let flip = Sign::of(&orient2d_value(axis, vi, vj, vk)) == Sign::Negative;
        let value = |p: &Point3| {
            let g = orient2d_value(axis, vi, vj, p);
            if flip {
                -g
            } else {
                g
            }
        };
        let mut output: Vec<Point3> = Vec::with_capacity(subject.len() + 1);
        for idx in 0..subject.len() {
            let cur = &subject[idx];
            let next = &subject[(idx + 1) % subject.len()];
            let gc = value(cur);
            let gn = value(next);
            let sc = Sign::of(&gc);
            let sn = Sign::of(&gn);
            if sc != Sign::Negative {
                output.push(cur.clone());
            }
            // Edge crosses the clip line strictly: add the exact crossing.
            if (sc == Sign::Positive && sn == Sign::Negative)
                || (sc == Sign::Negative && sn == Sign::Positive)
            {
                let lambda = &gc / (&gc - &gn);
                output.push(cur.lerp(next, &lambda));
            }
        }
        subject = output;
    }
    canonical_polygon(subject, clip)
}

/// Deduplicate and drop collinear middle vertices so the polygon's
/// vertices are distinct and in convex position. A clip result that
/// degenerated to a collinear point set collapses to its extreme pair.
fn canonical_polygon(pts: Vec<Point3>, plane_of: &Triangle) -> Vec<Point3> {
    let mut distinct: Vec<Point3> = Vec::with_capacity(pts.len());
    for p in pts {
        if !distinct.contains(&p) {
            distinct.push(p);
        }
    }
    if distinct.len() < 3 {
        return distinct;
    }
    let axis = dominant_axis(&plane_of.normal());
    if distinct[2..]
        .iter()
        .all(|p| Sign::of(&orient2d_value(axis, &distinct[0], &distinct[1], p)) == Sign::Zero)
    {
        let (lo, hi) = extreme_pair(&distinct);
        return vec![lo.clone(), hi.clone()];
    }
    let n = distinct.len();
    (0..n)
        .filter(|&i| {
            let prev = &distinct[(i + n - 1) % n];
            let next = &distinct[(i + 1) % n];
            Sign::of(&orient2d_value(axis, prev, next, &distinct[i])) != Sign::Zero
        })
        .map(|i| distinct[i].clone())
        .collect()
}

fn classify_polygon(pts: Vec<Point3>) -> ConvexSet {
    match pts.len() {
        0 => ConvexSet::Empty,
        1 => ConvexSet::Point(pts.into_iter().next().unwrap()),
        2 => {
            let mut it = pts.into_iter();
            ConvexSet::Segment(Segment::new(it.next().unwrap(), it.next().unwrap()))
        }
        _ => ConvexSet::Polygon(pts),
    }
}

/// Cross-section of the filled triangle `t` by the plane of `plane_of`,
/// assuming `t` is not coplanar with it and has vertices on both sides
/// or on the plane. Returns at most a segment.
fn triangle_plane_section(t: &Triangle, plane_of: &Triangle) -> Vec<Point3> {
    let d: Vec<Scalar> = t.vertices().iter().map(|v| plane_eval(plane_of, v)).collect();
    let mut contacts: Vec<Point3> = Vec::new();
    for i in 0..3 {
        if d[i].is_zero() {
            let v = t.vertex(i).clone();
            if !contacts.contains(&v) {
                contacts.push(v);
            }
        }
        let j = (i + 1) % 3;
        let (si, sj) = (Sign::of(&d[i]), Sign::of(&d[j]));
        if (si == Sign::Positive && sj == Sign::Negative)
            || (si == Sign::Negative && sj == Sign::Positive)
        {
            let lambda = &d[i] / (&d[i] - &d[j]);
            let x = t.vertex(i).lerp(t.vertex(j), &lambda);
            if !contacts.contains(&x) {
                contacts.push(x);
            }
        }
    }
    debug_assert!(contacts.len() <= 2);
    contacts
}

/// Exact intersection of two closed filled triangles.
///
/// `Polygon` can only arise for coplanar inputs; in the generic skew case
/// the result is empty, a point, or a segment.
pub fn filled_pair_intersection(a: &Triangle, b: &Triangle) -> ConvexSet {
    let signs: Vec<Sign> = a
        .vertices()
        .iter()
        .map(|v| Sign::of(&plane_eval(b, v)))
        .collect();

    if signs.iter().all(|s| *s == Sign::Zero) {
        // Coplanar: clip one filled triangle by the other.
        let clipped = clip_polygon_by_triangle(a.vertices().to_vec(), b);
        return classify_polygon(clipped);
    }
    if signs.iter().all(|s| *s == Sign::Positive) || signs.iter().all(|s| *s == Sign::Negative) {
        return ConvexSet::Empty;
    }

    // Skew planes: intersect the cross-section of hull(a) by plane(b)
    // with the filled triangle b, inside that plane.
    let section = triangle_plane_section(a, b);
    match section.len() {
        0 => ConvexSet::Empty,
        1 => {
            let p = section.into_iter().next().unwrap();
            if point_in_triangle_plane(&p, b) {
                ConvexSet::Point(p)
            } else {
                ConvexSet::Empty
            }
        }
        _ => {
            let [p, q] = [&section[0], &section[1]];
            match clip_coplanar_segment(p, q, b) {
                IntersectionSet::Empty => ConvexSet::Empty,
                IntersectionSet::SinglePoint(x) => ConvexSet::Point(x),
                IntersectionSet::SubSegment(s) => ConvexSet::Segment(s),
            }
        }
    }
}

/// Does the convex polygon (coplanar set of points) meet the closed
/// filled triangle `t`?
fn polygon_meets_triangle(poly: &[Point3], t: &Triangle) -> bool {
    let all_in_plane = poly.iter().all(|p| plane_eval(t, p).is_zero());
    if all_in_plane {
        return !clip_polygon_by_triangle(poly.to_vec(), t).is_empty();
    }
    // Cross-section of the filled polygon by t's plane, then clip in-plane.
    let n = poly.len();
    let d: Vec<Scalar> = poly.iter().map(|p| plane_eval(t, p)).collect();
    let mut contacts: Vec<Point3> = Vec::new();
    for i in 0..n {
        if d[i].is_zero() && !contacts.contains(&poly[i]) {
            contacts.push(poly[i].clone());
        }
        let j = (i + 1) % n;
        let (si, sj) = (Sign::of(&d[i]), Sign::of(&d[j]));
        if (si == Sign::Positive && sj == Sign::Negative)
            || (si == Sign::Negative && sj == Sign::Positive)
        {
            let lambda = &d[i] / (&d[i] - &d[j]);
            let x = poly[i].lerp(&poly[j], &lambda);
            if !contacts.contains(&x) {
                contacts.push(x);
            }
        }
    }
    match contacts.len() {
        0 => false,
        1 => point_in_triangle_plane(&contacts[0], t),
        _ => {
            // Convex section: contacts are collinear; clip the extreme pair.
            let (lo, hi) = extreme_pair(&contacts);
            !clip_coplanar_segment(lo, hi, t).is_empty()
        }
    }
}

/// Extreme points of a set of collinear points.
fn extreme_pair(pts: &[Point3]) -> (&Point3, &Point3) {
    let dir = pts[1].sub(&pts[0]);
    let mut lo = &pts[0];
    let mut hi = &pts[0];
    let mut lo_t = Scalar::zero();
    let mut hi_t = Scalar::zero();
    for p in pts {
        let t = p.sub(&pts[0]).dot(&dir);
        if t < lo_t {
            lo_t = t;
            lo = p;
        } else if t > hi_t {
            hi_t = t;
            hi = p;
        }
    }
    (lo, hi)
}

/// True iff the three closed filled triangles share at least one point.
pub fn triple_common_point(a: &Triangle, b: &Triangle, c: &Triangle) -> bool {
    match filled_pair_intersection(b, c) {
        ConvexSet::Empty => false,
        ConvexSet::Point(p) => point_in_filled_triangle(&p, a),
        ConvexSet::Segment(s) => !segment_filled_triangle(&s, a).is_empty(),
        ConvexSet::Polygon(poly) => polygon_meets_triangle(&poly, a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::{integer, ratio};

    fn tri(rows: [[i64; 3]; 3]) -> Triangle {
        Triangle::from_int_rows(rows).unwrap()
    }

    #[test]
    fn disjoint_hulls_give_empty() {
        let a = tri([[0, 0, 0], [2, 0, 0], [0, 2, 0]]);
        let b = tri([[100, 0, 0], [102, 0, 0], [100, 2, 0]]);
        assert_eq!(filled_pair_intersection(&a, &b), ConvexSet::Empty);
    }

    #[test]
    fn identical_triangles_intersect_in_their_own_polygon() {
        let a = tri([[0, 0, 0], [2, 0, 0], [0, 2, 0]]);
        match filled_pair_intersection(&a, &a) {
            ConvexSet::Polygon(pts) => {
                let mut got = pts;
                got.sort();
                let mut want = a.vertices().to_vec();
                want.sort();
                assert_eq!(got, want);
            }
            other => panic!("expected polygon, got {other:?}"),
        }
    }

    #[test]
    fn skew_triangles_intersect_in_a_segment() {
        // Vertical triangle piercing a horizontal one.
        let base = tri([[0, 0, 0], [4, 0, 0], [0, 4, 0]]);
        let wall = Triangle::new(
            Point3::new(ratio(1, 2), ratio(1, 2), integer(-1)),
            Point3::new(ratio(3, 2), ratio(1, 2), integer(-1)),
            Point3::new(integer(1), ratio(1, 2), integer(1)),
        )
        .unwrap();
        match filled_pair_intersection(&base, &wall) {
            ConvexSet::Segment(s) => {
                // Both endpoints lie in both hulls.
                for p in [s.start(), s.end()] {
                    assert!(point_in_filled_triangle(p, &base));
                    assert!(point_in_filled_triangle(p, &wall));
                }
            }
            other => panic!("expected segment, got {other:?}"),
        }
    }

    #[test]
    fn corner_touch_is_a_point() {
        let a = tri([[0, 0, 0], [2, 0, 0], [0, 2, 0]]);
        // Apex of b rests on a's hull at (1, 1, 0); the rest of b is above.
        let b = tri([[1, 1, 0], [3, 1, 2], [1, 3, 2]]);
        assert_eq!(
            filled_pair_intersection(&a, &b),
            ConvexSet::Point(Point3::from_ints(1, 1, 0))
        );
    }

    #[test]
    fn coplanar_overlap_is_a_polygon_in_convex_position() {
        let a = tri([[0, 0, 0], [4, 0, 0], [0, 4, 0]]);
        let b = tri([[-1, 1, 0], [2, 1, 0], [2, 3, 0]]);
        match filled_pair_intersection(&a, &b) {
            ConvexSet::Polygon(pts) => {
                assert!(pts.len() >= 3);
                // All polygon vertices belong to both hulls.
                for p in &pts {
                    assert!(point_in_filled_triangle(p, &a));
                    assert!(point_in_filled_triangle(p, &b));
                }
            }
            other => panic!("expected polygon, got {other:?}"),
        }
    }

    #[test]
    fn intersection_is_symmetric_as_a_point_set() {
        let cases = [
            (tri([[0, 0, 0], [4, 0, 0], [0, 4, 0]]), tri([[1, 1, -1], [1, 1, 1], [5, 1, 1]])),
            (tri([[0, 0, 0], [4, 0, 0], [0, 4, 0]]), tri([[-1, 1, 0], [2, 1, 0], [2, 3, 0]])),
            (tri([[0, 0, 0], [2, 0, 0], [0, 2, 0]]), tri([[5, 5, 5], [6, 5, 5], [5, 6, 5]])),
        ];
        for (a, b) in cases {
            let ab = filled_pair_intersection(&a, &b);
            let ba = filled_pair_intersection(&b, &a);
            assert!(ab.same_set(&ba), "{ab:?} vs {ba:?}");
        }
    }

    #[test]
    fn triple_common_point_cases() {
        let a = tri([[0, 0, 0], [2, 0, 0], [0, 2, 0]]);
        // Pairwise far apart.
        let b = tri([[10, 0, 0], [12, 0, 0], [10, 2, 0]]);
        let c = tri([[20, 0, 0], [22, 0, 0], [20, 2, 0]]);
        assert!(!triple_common_point(&a, &b, &c));
        // All equal share everything.
        assert!(triple_common_point(&a, &a, &a));
        // Three walls through a common axis region.
        let w1 = tri([[0, 0, -1], [2, 2, -1], [1, 1, 2]]);
        let w2 = tri([[2, 0, -1], [0, 2, -1], [1, 1, 2]]);
        assert!(triple_common_point(&a, &w1, &w2));
    }
}
