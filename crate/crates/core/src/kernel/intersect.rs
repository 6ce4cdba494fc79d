//! Exact intersections of segments with filled triangles and other segments.

use std::fmt;

use num_traits::Zero;

use super::point::{Point3, Segment, Triangle};
use super::predicates::{dominant_axis, orient2d_value, plane_eval, point_in_triangle_plane, Sign};
use super::scalar::Scalar;

/// Exact intersection of two closed convex one-dimensional-or-less sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntersectionSet {
    Empty,
    SinglePoint(Point3),
    SubSegment(Segment),
}

impl IntersectionSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, IntersectionSet::Empty)
    }
}

impl fmt::Display for IntersectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntersectionSet::Empty => write!(f, "empty"),
            IntersectionSet::SinglePoint(p) => write!(f, "point {p}"),
            IntersectionSet::SubSegment(s) => write!(f, "segment {s}"),
        }
    }
}

fn set_from_interval(p: &Point3, q: &Point3, lo: Scalar, hi: Scalar) -> IntersectionSet {
    if lo > hi {
        IntersectionSet::Empty
    } else if lo == hi {
        IntersectionSet::SinglePoint(p.lerp(q, &lo))
    } else {
        IntersectionSet::SubSegment(Segment::new(p.lerp(q, &lo), p.lerp(q, &hi)))
    }
}

/// Clip the in-plane segment `[p, q]` against the closed triangle.
///
/// Both endpoints must lie in the plane of `t`. Works by cutting the
/// parameter interval `[0, 1]` with the three half-plane constraints.
pub(crate) fn clip_coplanar_segment(p: &Point3, q: &Point3, t: &Triangle) -> IntersectionSet {
    let axis = dominant_axis(&t.normal());
    let mut lo = Scalar::zero();
    let mut hi = Scalar::from_integer(1.into());
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let (vi, vj, vk) = (t.vertex(i), t.vertex(j), t.vertex(k));
        let mut gp = orient2d_value(axis, vi, vj, p);
        let mut gq = orient2d_value(axis, vi, vj, q);
        // Normalize so the inner side is nonnegative.
        if Sign::of(&orient2d_value(axis, vi, vj, vk)) == Sign::Negative {
            gp = -gp;
            gq = -gq;
        }
        let slope = &gq - &gp;
        match Sign::of(&slope) {
            Sign::Zero => {
                if Sign::of(&gp) == Sign::Negative {
                    return IntersectionSet::Empty;
                }
            }
            Sign::Positive => {
                let root = -gp / slope;
                if root > lo {
                    lo = root;
                }
            }
            Sign::Negative => {
                let root = -gp / slope;
                if root < hi {
                    hi = root;
                }
            }
        }
        if lo > hi {
            return IntersectionSet::Empty;
        }
    }
    set_from_interval(p, q, lo, hi)
}

/// Exact intersection of a closed segment with a closed filled triangle.
///
/// Covers the transversal crossing, the endpoint touch, and the coplanar
/// overlap (where the answer can be a positive-length sub-segment).
pub fn segment_filled_triangle(s: &Segment, t: &Triangle) -> IntersectionSet {
    let dp = plane_eval(t, s.start());
    let dq = plane_eval(t, s.end());
    match (Sign::of(&dp), Sign::of(&dq)) {
        (Sign::Zero, Sign::Zero) => clip_coplanar_segment(s.start(), s.end(), t),
        (Sign::Zero, _) => point_touch(s.start(), t),
        (_, Sign::Zero) => point_touch(s.end(), t),
        (sp, sq) if sp == sq => IntersectionSet::Empty,
        _ => {
            // Endpoints strictly on opposite sides: one exact plane crossing.
            let lambda = &dp / (&dp - &dq);
            let x = s.start().lerp(s.end(), &lambda);
            if point_in_triangle_plane(&x, t) {
                IntersectionSet::SinglePoint(x)
            } else {
                IntersectionSet::Empty
            }
        }
    }
}

fn point_touch(p: &Point3, t: &Triangle) -> IntersectionSet {
    if point_in_triangle_plane(p, t) {
        IntersectionSet::SinglePoint(p.clone())
    } else {
        IntersectionSet::Empty
    }
}

/// Exact intersection of two closed segments in 3-space.
pub fn segment_segment(a: &Segment, b: &Segment) -> IntersectionSet {
    let u = a.direction();
    let v = b.direction();
    let w = b.start().sub(a.start());
    let uv = u.cross(&v);

    if uv.is_zero() {
        // Parallel lines: either disjoint or collinear.
        if !w.cross(&u).is_zero() {
            return IntersectionSet::Empty;
        }
        // Collinear: overlap of parameter intervals along `u`.
        let uu = u.dot(&u);
        let b0 = w.dot(&u);
        let b1 = &b0 + &v.dot(&u);
        let (blo, bhi) = if b0 <= b1 { (b0, b1) } else { (b1, b0) };
        let lo = if blo > Scalar::zero() { blo } else { Scalar::zero() };
        let hi = if bhi < uu { bhi } else { uu.clone() };
        if lo > hi {
            return IntersectionSet::Empty;
        }
        return set_from_interval(a.start(), a.end(), lo / &uu, hi / &uu);
    }

    // Skew lines never meet.
    if !w.dot(&uv).is_zero() {
        return IntersectionSet::Empty;
    }

    // Coplanar, non-parallel: solve s*u - t*v = w on the two coordinates
    // where the cross product has its dominant component.
    let axis = dominant_axis(&uv);
    let (c0, c1) = match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let det = u.coord(c0) * v.coord(c1) - u.coord(c1) * v.coord(c0);
    debug_assert!(!det.is_zero());
    let s = (w.coord(c0) * v.coord(c1) - w.coord(c1) * v.coord(c0)) / &det;
    let t = (u.coord(c1) * w.coord(c0) - u.coord(c0) * w.coord(c1)) / &det;
    let zero = Scalar::zero();
    let one = Scalar::from_integer(1.into());
    if s >= zero && s <= one && t >= zero && t <= one {
        IntersectionSet::SinglePoint(a.start().lerp(a.end(), &s))
    } else {
        IntersectionSet::Empty
    }
}
