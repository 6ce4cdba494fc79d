//! Exact geometric kernel: rational scalars, primitives, predicates and
//! intersection constructions.
//!
//! Everything is computed over arbitrary-precision rationals, so every
//! predicate answer is a certainty rather than a numerical guess. All
//! values are immutable after construction and every operation is a pure
//! function, so kernel data can be shared freely across threads.

pub mod convex;
pub mod intersect;
pub mod point;
pub mod predicates;
pub mod profile;
pub mod scalar;

pub use convex::{filled_pair_intersection, triple_common_point, ConvexSet};
pub use intersect::{segment_filled_triangle, segment_segment, IntersectionSet};
pub use point::{DegenerateTriangle, Point3, Segment, Triangle, Vec3};
pub use predicates::{collinear, orient3d, point_in_filled_triangle, Sign};
pub use profile::{outline_hull_profile, outlines_disjoint, DisjointnessViolated, IntersectionProfile};
pub use scalar::{integer, ratio, Scalar};
