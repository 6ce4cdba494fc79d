//! Exact sidedness and membership predicates.
//!
//! Everything here reduces to signs of exact rational determinants, so a
//! result is never "almost zero": it is `Negative`, `Zero` or `Positive`,
//! full stop. All higher-level classification in this crate rests on that.

use num_traits::{Signed, Zero};

use super::point::{Point3, Triangle, Vec3};
use super::scalar::Scalar;

/// Sign of an exact quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(v: &Scalar) -> Sign {
        if v.is_zero() {
            Sign::Zero
        } else if v > &Scalar::zero() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Orientation of `d` relative to the plane spanned by `a`, `b`, `c`:
/// the sign of the determinant with rows `b - a`, `c - a`, `d - a`.
/// `Zero` iff the four points are coplanar.
pub fn orient3d(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> Sign {
    let u = b.sub(a);
    let v = c.sub(a);
    let w = d.sub(a);
    Sign::of(&u.cross(&v).dot(&w))
}

/// Signed height of `p` over the plane of `t`: `normal(t) . (p - v0)`.
/// Same sign as `orient3d(v0, v1, v2, p)`, but the magnitude is reused
/// for exact plane-crossing parameters.
pub(crate) fn plane_eval(t: &Triangle, p: &Point3) -> Scalar {
    t.normal().dot(&p.sub(t.vertex(0)))
}

pub fn collinear(a: &Point3, b: &Point3, c: &Point3) -> bool {
    b.sub(a).cross(&c.sub(a)).is_zero()
}

/// Coordinate axis with the largest absolute component; projecting that
/// axis away maps the plane orthogonal to `v` injectively onto 2-space.
pub(crate) fn dominant_axis(v: &Vec3) -> usize {
    let ax = v.x.clone().abs();
    let ay = v.y.clone().abs();
    let az = v.z.clone().abs();
    if ax >= ay && ax >= az {
        0
    } else if ay >= az {
        1
    } else {
        2
    }
}

/// 2D orientation determinant of the three points with `axis` projected away.
pub(crate) fn orient2d_value(axis: usize, a: &Point3, b: &Point3, c: &Point3) -> Scalar {
    let (u, v) = match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let bu = b.coord(u) - a.coord(u);
    let bv = b.coord(v) - a.coord(v);
    let cu = c.coord(u) - a.coord(u);
    let cv = c.coord(v) - a.coord(v);
    bu * cv - bv * cu
}

/// Closed membership of a point known to lie in the triangle's plane.
///
/// The point is inside iff for each edge it lies on the same side as the
/// opposite vertex (or on the edge line itself).
pub(crate) fn point_in_triangle_plane(p: &Point3, t: &Triangle) -> bool {
    let axis = dominant_axis(&t.normal());
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let side = Sign::of(&orient2d_value(axis, t.vertex(i), t.vertex(j), p));
        if side == Sign::Zero {
            continue;
        }
        let inner = Sign::of(&orient2d_value(axis, t.vertex(i), t.vertex(j), t.vertex(k)));
        if side != inner {
            return false;
        }
    }
    true
}

/// Strict membership (relative interior) of an in-plane point.
pub(crate) fn point_strictly_in_triangle(p: &Point3, t: &Triangle) -> bool {
    let axis = dominant_axis(&t.normal());
    [(0, 1, 2), (1, 2, 0), (2, 0, 1)].into_iter().all(|(i, j, k)| {
        let side = Sign::of(&orient2d_value(axis, t.vertex(i), t.vertex(j), p));
        let inner = Sign::of(&orient2d_value(axis, t.vertex(i), t.vertex(j), t.vertex(k)));
        side == inner
    })
}

/// True iff `p` lies in the *closed filled* triangle (convex hull of the
/// vertices): coplanar with `t` and with nonnegative barycentric weights.
pub fn point_in_filled_triangle(p: &Point3, t: &Triangle) -> bool {
    if orient3d(t.vertex(0), t.vertex(1), t.vertex(2), p) != Sign::Zero {
        return false;
    }
    point_in_triangle_plane(p, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::{integer, ratio};
    use proptest::prelude::*;

    fn tri(rows: [[i64; 3]; 3]) -> Triangle {
        Triangle::from_int_rows(rows).unwrap()
    }

    #[test]
    fn unit_simplex_is_positive() {
        let a = Point3::from_ints(0, 0, 0);
        let b = Point3::from_ints(1, 0, 0);
        let c = Point3::from_ints(0, 1, 0);
        let d = Point3::from_ints(0, 0, 1);
        assert_eq!(orient3d(&a, &b, &c, &d), Sign::Positive);
    }

    #[test]
    fn coplanar_points_give_zero() {
        let a = Point3::from_ints(0, 0, 0);
        let b = Point3::from_ints(1, 0, 0);
        let c = Point3::from_ints(0, 1, 0);
        let d = Point3::from_ints(2, 3, 0);
        assert_eq!(orient3d(&a, &b, &c, &d), Sign::Zero);
    }

    fn rational_point(seed: (i32, i32, i32), den: i32) -> Point3 {
        Point3::new(
            ratio(seed.0 as i64, den as i64),
            ratio(seed.1 as i64, den as i64),
            ratio(seed.2 as i64, den as i64),
        )
    }

    proptest! {
        // Swapping any two arguments flips the sign.
        #[test]
        fn orient3d_is_antisymmetric(
            a in (-50i32..50, -50i32..50, -50i32..50),
            b in (-50i32..50, -50i32..50, -50i32..50),
            c in (-50i32..50, -50i32..50, -50i32..50),
            d in (-50i32..50, -50i32..50, -50i32..50),
            den in 1i32..32,
        ) {
            let (a, b, c, d) = (
                rational_point(a, den),
                rational_point(b, den),
                rational_point(c, den),
                rational_point(d, den),
            );
            let s = orient3d(&a, &b, &c, &d);
            prop_assert_eq!(orient3d(&b, &a, &c, &d), s.flipped());
            prop_assert_eq!(orient3d(&a, &c, &b, &d), s.flipped());
            prop_assert_eq!(orient3d(&a, &b, &d, &c), s.flipped());
            prop_assert_eq!(orient3d(&d, &b, &c, &a), s.flipped());
        }
    }

    #[test]
    fn centroid_and_vertices_are_in_filled_triangle() {
        let t = tri([[0, 0, 0], [1, 0, 0], [0, 1, 0]]);
        assert!(point_in_filled_triangle(&t.centroid(), &t));
        for v in t.vertices() {
            assert!(point_in_filled_triangle(v, &t));
        }
    }

    #[test]
    fn point_off_plane_is_outside() {
        let t = tri([[0, 0, 0], [1, 0, 0], [0, 1, 0]]);
        let mut p = t.centroid();
        p.z = integer(1); // normal direction for this triangle
        assert!(!point_in_filled_triangle(&p, &t));
    }

    #[test]
    fn membership_is_invariant_under_vertex_permutation() {
        let t = tri([[0, 0, 0], [4, 0, 0], [0, 4, 0]]);
        let inside = Point3::new(ratio(1, 3), ratio(1, 7), integer(0));
        let outside = Point3::from_ints(5, 5, 0);
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let u = t.permuted(perm);
            assert!(point_in_filled_triangle(&inside, &u));
            assert!(!point_in_filled_triangle(&outside, &u));
        }
    }

    #[test]
    fn strict_membership_excludes_boundary() {
        let t = tri([[0, 0, 0], [2, 0, 0], [0, 2, 0]]);
        let edge_mid = Point3::from_ints(1, 0, 0);
        assert!(point_in_triangle_plane(&edge_mid, &t));
        assert!(!point_strictly_in_triangle(&edge_mid, &t));
        assert!(point_strictly_in_triangle(&t.centroid(), &t));
    }
}
