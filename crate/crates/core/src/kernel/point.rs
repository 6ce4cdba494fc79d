//! Points, vectors, segments and triangles over exact rational coordinates.
//!
//! A [`Triangle`] stands for its *outline* — the union of the three edges —
//! not the filled region. Where an operation works with the filled triangle
//! (the convex hull of the vertices) it says so in its name or docs.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use super::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point3 {
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
}

impl Point3 {
    pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Self {
        Point3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        use super::scalar::integer;
        Point3::new(integer(x), integer(y), integer(z))
    }

    /// `self - other` as a displacement vector.
    pub fn sub(&self, other: &Point3) -> Vec3 {
        Vec3 {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
            z: &self.z - &other.z,
        }
    }

    pub fn add(&self, v: &Vec3) -> Point3 {
        Point3 {
            x: &self.x + &v.x,
            y: &self.y + &v.y,
            z: &self.z + &v.z,
        }
    }

    /// `self + t * (other - self)`, exact.
    pub fn lerp(&self, other: &Point3, t: &Scalar) -> Point3 {
        self.add(&other.sub(self).scaled(t))
    }

    pub fn coord(&self, axis: usize) -> &Scalar {
        match axis {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("axis out of range: {axis}"),
        }
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vec3 {
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
}

impl Vec3 {
    pub fn dot(&self, other: &Vec3) -> Scalar {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn cross(&self, other: &Vec3) -> Vec3 {
        Vec3 {
            x: &self.y * &other.z - &self.z * &other.y,
            y: &self.z * &other.x - &self.x * &other.z,
            z: &self.x * &other.y - &self.y * &other.x,
        }
    }

    pub fn scaled(&self, k: &Scalar) -> Vec3 {
        Vec3 {
            x: &self.x * k,
            y: &self.y * k,
            z: &self.z * k,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn coord(&self, axis: usize) -> &Scalar {
        match axis {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("axis out of range: {axis}"),
        }
    }
}

/// Closed segment with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    p: Point3,
    q: Point3,
}

impl Segment {
    /// Panics if `p == q`; degenerate segments are never materialized as
    /// `Segment` values.
    pub fn new(p: Point3, q: Point3) -> Self {
        assert!(p != q, "degenerate segment: both endpoints are {p}");
        Segment { p, q }
    }

    pub fn start(&self) -> &Point3 {
        &self.p
    }

    pub fn end(&self) -> &Point3 {
        &self.q
    }

    pub fn direction(&self) -> Vec3 {
        self.q.sub(&self.p)
    }

    /// Endpoints sorted lexicographically, for order-insensitive comparison.
    pub fn sorted_endpoints(&self) -> (&Point3, &Point3) {
        if self.p <= self.q {
            (&self.p, &self.q)
        } else {
            (&self.q, &self.p)
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} .. {}]", self.p, self.q)
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("degenerate triangle: the three vertices are collinear")]
pub struct DegenerateTriangle;

/// Non-degenerate triangle, understood as its outline.
///
/// The vertex list is ordered for storage only; every geometric operation
/// in this crate is invariant under vertex permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangle {
    vertices: [Point3; 3],
}

impl Triangle {
    pub fn new(a: Point3, b: Point3, c: Point3) -> Result<Self, DegenerateTriangle> {
        let t = Triangle { vertices: [a, b, c] };
        if t.normal().is_zero() {
            Err(DegenerateTriangle)
        } else {
            Ok(t)
        }
    }

    pub fn from_int_rows(rows: [[i64; 3]; 3]) -> Result<Self, DegenerateTriangle> {
        let [a, b, c] = rows.map(|[x, y, z]| Point3::from_ints(x, y, z));
        Triangle::new(a, b, c)
    }

    pub fn vertices(&self) -> &[Point3; 3] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point3 {
        &self.vertices[i]
    }

    /// The three outline edges.
    pub fn edges(&self) -> [Segment; 3] {
        let [a, b, c] = &self.vertices;
        [
            Segment::new(a.clone(), b.clone()),
            Segment::new(b.clone(), c.clone()),
            Segment::new(c.clone(), a.clone()),
        ]
    }

    /// Normal vector `(v1 - v0) x (v2 - v0)`; nonzero by the type invariant.
    pub fn normal(&self) -> Vec3 {
        let [a, b, c] = &self.vertices;
        b.sub(a).cross(&c.sub(a))
    }

    pub fn centroid(&self) -> Point3 {
        use super::scalar::integer;
        let [a, b, c] = &self.vertices;
        let three = integer(3);
        Point3 {
            x: (&a.x + &b.x + &c.x) / &three,
            y: (&a.y + &b.y + &c.y) / &three,
            z: (&a.z + &b.z + &c.z) / &three,
        }
    }

    /// Copy with vertex `i` replaced; fails if the result is degenerate.
    pub fn with_vertex_replaced(&self, i: usize, p: Point3) -> Result<Self, DegenerateTriangle> {
        let mut vertices = self.vertices.clone();
        vertices[i] = p;
        let [a, b, c] = vertices;
        Triangle::new(a, b, c)
    }

    /// Same vertex set in a different storage order.
    pub fn permuted(&self, perm: [usize; 3]) -> Triangle {
        Triangle {
            vertices: [
                self.vertices[perm[0]].clone(),
                self.vertices[perm[1]].clone(),
                self.vertices[perm[2]].clone(),
            ],
        }
    }

    /// Vertices in lexicographic order, for comparison as unordered sets.
    pub fn sorted_vertices(&self) -> [&Point3; 3] {
        let mut vs = [&self.vertices[0], &self.vertices[1], &self.vertices[2]];
        vs.sort();
        vs
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "triangle {} {} {}",
            self.vertices[0], self.vertices[1], self.vertices[2]
        )
    }
}
