//! Exact invariants and classification for linkings of triangles in 3-space.
//!
//! A *triangle* here is the outline (the union of the three edges) of a
//! non-degenerate triangle; a *linking* is a set of two or three such
//! triangles with pairwise disjoint outlines. Linkings are considered up
//! to *combinatorial isotopy*: the equivalence generated by elementary
//! moves, where a vertex `C` of a triangle `ABC` is replaced by `C'` and
//! the two swept filled triangles `ACC'`, `BCC'` avoid every other outline.
//!
//! The crate computes two isotopy invariants over exact rational
//! arithmetic:
//!
//! * the pairwise **mod-2 linking parity** — the parity of the number of
//!   transversal crossings of one outline with the other triangle's
//!   filled hull;
//! * the **Borromean property** — the three hulls share a common point
//!   and some cyclic enumeration has each outline meeting the next hull
//!   in exactly two points.
//!
//! On top of the invariants sit certified constructors for five canonical
//! linkings, a classifier mapping a linking to its isotopy-class label,
//! elementary-move validation/application, and a randomized fuzz harness
//! that checks invariance of both properties along long move sequences.
//!
//! Because every computation is exact, a classification can only change
//! along a move sequence if either an implementation or a claimed
//! invariant is wrong; the fuzz harness treats any change as a hard
//! violation.

pub mod canonical;
pub mod classify;
pub mod fuzz;
pub mod invariants;
pub mod kernel;
pub mod moves;

pub use kernel::{
    collinear, filled_pair_intersection, integer, orient3d, outline_hull_profile,
    outlines_disjoint, point_in_filled_triangle, ratio, segment_filled_triangle, segment_segment,
    triple_common_point, ConvexSet, DegenerateTriangle, DisjointnessViolated, IntersectionProfile,
    IntersectionSet, Point3, Scalar, Segment, Sign, Triangle, Vec3,
};

pub use canonical::{borromean_certified, chain3, hopf_split, necklace_rational, unlink3, CanonicalClass};
pub use classify::{classify2, classify3, ClassLabel2, ClassLabel3};
pub use fuzz::{run_bordef_equivalence, run_isotopy_fuzz, FuzzReport};
pub use invariants::{
    is_borromean, is_borromean_reduced, linking_parity, linking_parity_symmetric,
    pairwise_parity_profile, Linking, LinkingError, NonGeneric, ParityProfile,
};
pub use moves::{
    apply_move, random_move, perturb_to_generic, validate_move, InvalidReason, MoveError, MoveSpec,
    MoveVerdict,
};
