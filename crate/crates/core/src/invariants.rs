//! Linkings of triangles and their two isotopy invariants: pairwise mod-2
//! linking parity and the Borromean property.

use std::fmt;

use thiserror::Error;

use crate::kernel::intersect::{segment_filled_triangle, IntersectionSet};
use crate::kernel::point::Triangle;
use crate::kernel::predicates::{plane_eval, point_in_triangle_plane, Sign};
use crate::kernel::profile::{outline_hull_profile, outlines_disjoint, IntersectionProfile};
use crate::kernel::triple_common_point;

/// Two or three triangles in 3-space with pairwise disjoint outlines.
///
/// Both invariants are checked exactly at construction; a `Linking` value
/// is always valid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linking {
    triangles: Vec<Triangle>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkingError {
    #[error("a linking consists of 2 or 3 triangles, got {0}")]
    WrongCount(usize),
    #[error("outlines of triangles {0} and {1} intersect")]
    OutlinesIntersect(usize, usize),
}

impl Linking {
    pub fn new(triangles: Vec<Triangle>) -> Result<Self, LinkingError> {
        if triangles.len() < 2 || triangles.len() > 3 {
            return Err(LinkingError::WrongCount(triangles.len()));
        }
        for i in 0..triangles.len() {
            for j in (i + 1)..triangles.len() {
                if !outlines_disjoint(&triangles[i], &triangles[j]) {
                    return Err(LinkingError::OutlinesIntersect(i, j));
                }
            }
        }
        Ok(Linking { triangles })
    }

    pub fn pair(a: Triangle, b: Triangle) -> Result<Self, LinkingError> {
        Linking::new(vec![a, b])
    }

    pub fn triple(a: Triangle, b: Triangle, c: Triangle) -> Result<Self, LinkingError> {
        Linking::new(vec![a, b, c])
    }

    /// Number of triangles: always 2 or 3.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn triangle(&self, i: usize) -> &Triangle {
        &self.triangles[i]
    }

    /// Unordered index pairs of the linking.
    pub fn index_pairs(&self) -> Vec<(usize, usize)> {
        match self.triangles.len() {
            2 => vec![(0, 1)],
            _ => vec![(0, 1), (0, 2), (1, 2)],
        }
    }

    /// The three triangles of a 3-linking.
    ///
    /// Panics for a 2-linking; callers that may hold either arity check
    /// `len()` first.
    pub fn as_triple(&self) -> [&Triangle; 3] {
        assert_eq!(self.triangles.len(), 3, "operation requires a 3-linking");
        [&self.triangles[0], &self.triangles[1], &self.triangles[2]]
    }
}

impl fmt::Display for Linking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "linking of {} triangles", self.triangles.len())?;
        for t in &self.triangles {
            writeln!(f, "  {t}")?;
        }
        Ok(())
    }
}

/// Why a parity count is undefined on a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonGenericKind {
    /// A vertex of the first triangle lies in the other's plane inside its hull.
    VertexOnPlane,
    /// An edge of the first triangle is coplanar with the other and meets its hull.
    CoplanarEdgeContact,
    /// A crossing falls exactly on the hull's boundary edges.
    BoundaryContact,
}

impl fmt::Display for NonGenericKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonGenericKind::VertexOnPlane => write!(f, "vertex lies in the other triangle's plane inside its hull"),
            NonGenericKind::CoplanarEdgeContact => write!(f, "coplanar edge meets the other triangle's hull"),
            NonGenericKind::BoundaryContact => write!(f, "crossing lies on the hull boundary"),
        }
    }
}

/// Parity is undefined: some outline/hull contact is not a transversal
/// interior crossing. The configuration is still a valid linking; callers
/// that need a parity perturb the linking by elementary moves and retry.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub struct NonGeneric {
    /// Indices of the offending pair, when evaluated inside a linking.
    pub pair: Option<(usize, usize)>,
    pub kind: NonGenericKind,
}

impl fmt::Display for NonGeneric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pair {
            Some((i, j)) => write!(f, "pair ({i}, {j}) is non-generic: {}", self.kind),
            None => write!(f, "pair is non-generic: {}", self.kind),
        }
    }
}

fn non_generic(kind: NonGenericKind) -> NonGeneric {
    NonGeneric { pair: None, kind }
}

/// Mod-2 linking coefficient of a disjoint pair: 1 if linked mod 2, else 0.
///
/// Counts transversal crossings of `outline(a)` with the open filled
/// triangle of `b`; the count's parity is an isotopy invariant. The
/// outlines must be disjoint (guaranteed inside a [`Linking`]).
pub fn linking_parity(a: &Triangle, b: &Triangle) -> Result<u8, NonGeneric> {
    debug_assert!(outlines_disjoint(a, b), "linking_parity requires disjoint outlines");
    let mut crossings = 0u32;
    let d: Vec<Sign> = a
        .vertices()
        .iter()
        .map(|v| Sign::of(&plane_eval(b, v)))
        .collect();
    for i in 0..3 {
        let j = (i + 1) % 3;
        match (d[i], d[j]) {
            (Sign::Zero, Sign::Zero) => {
                // Whole edge lies in b's plane.
                let edge = crate::kernel::point::Segment::new(
                    a.vertex(i).clone(),
                    a.vertex(j).clone(),
                );
                if !segment_filled_triangle(&edge, b).is_empty() {
                    return Err(non_generic(NonGenericKind::CoplanarEdgeContact));
                }
            }
            (Sign::Zero, _) | (_, Sign::Zero) => {
                // A vertex of a sits exactly in b's plane. If it touches
                // the hull the count is not a clean transversal one.
                let v = if d[i] == Sign::Zero { a.vertex(i) } else { a.vertex(j) };
                if point_in_triangle_plane(v, b) {
                    return Err(non_generic(NonGenericKind::VertexOnPlane));
                }
            }
            (si, sj) if si != sj => {
                let edge = crate::kernel::point::Segment::new(
                    a.vertex(i).clone(),
                    a.vertex(j).clone(),
                );
                match segment_filled_triangle(&edge, b) {
                    IntersectionSet::Empty => {}
                    IntersectionSet::SinglePoint(x) => {
                        if crate::kernel::predicates::point_strictly_in_triangle(&x, b) {
                            crossings += 1;
                        } else {
                            // On the hull boundary: with disjoint outlines
                            // this cannot happen, but classify it honestly.
                            return Err(non_generic(NonGenericKind::BoundaryContact));
                        }
                    }
                    IntersectionSet::SubSegment(_) => {
                        unreachable!("transversal edge cannot overlap the hull in a segment")
                    }
                }
            }
            _ => {} // both endpoints strictly on the same side
        }
    }
    // A vertex of `a` exactly in b's plane but outside the hull leaves the
    // crossing count well defined, so only hull contacts above are errors.
    Ok((crossings % 2) as u8)
}

/// Parity with direction-symmetric genericity: both `outline(a) ∩ hull(b)`
/// and `outline(b) ∩ hull(a)` must be clean transversal interior crossing
/// sets, and their counts must agree mod 2 (they do, exactly — the
/// agreement is asserted as a self-check of the kernel).
pub fn linking_parity_symmetric(a: &Triangle, b: &Triangle) -> Result<u8, NonGeneric> {
    let ab = linking_parity(a, b)?;
    let ba = linking_parity(b, a)?;
    assert_eq!(ab, ba, "mod-2 linking parity must be symmetric");
    Ok(ab)
}

/// Multiset of the three pairwise parities of a 3-linking, stored sorted
/// so equality is reindexing-invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParityProfile([u8; 3]);

impl ParityProfile {
    pub fn new(mut parities: [u8; 3]) -> Self {
        parities.sort_unstable_by(|x, y| y.cmp(x));
        ParityProfile(parities)
    }

    pub fn as_sorted(&self) -> [u8; 3] {
        self.0
    }

    /// Number of pairs linked mod 2.
    pub fn linked_pairs(&self) -> usize {
        self.0.iter().filter(|&&p| p == 1).count()
    }
}

impl fmt::Display for ParityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// Pairwise mod-2 parities of a 3-linking as an unordered profile.
///
/// Each pair is evaluated with symmetric genericity; the error identifies
/// the offending pair. Panics on a 2-linking.
pub fn pairwise_parity_profile(l: &Linking) -> Result<ParityProfile, NonGeneric> {
    let [t0, t1, t2] = l.as_triple();
    let mut parities = [0u8; 3];
    for (slot, (i, j, a, b)) in [(0usize, 1usize, t0, t1), (0, 2, t0, t2), (1, 2, t1, t2)]
        .into_iter()
        .enumerate()
    {
        parities[slot] = linking_parity_symmetric(a, b).map_err(|e| NonGeneric {
            pair: Some((i, j)),
            ..e
        })?;
    }
    Ok(ParityProfile::new(parities))
}

/// Ordered outline/hull profiles for all six ordered pairs of a 3-linking.
/// `matrix[i][j]` is `outline(t_i) ∩ hull(t_j)`; diagonal entries unused.
fn profile_matrix(l: &Linking) -> [[Option<IntersectionProfile>; 3]; 3] {
    let [t0, t1, t2] = l.as_triple();
    let ts = [t0, t1, t2];
    let mut m: [[Option<IntersectionProfile>; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let profile = outline_hull_profile(ts[i], ts[j])
                    .expect("linking invariant guarantees disjoint outlines");
                m[i][j] = Some(profile);
            }
        }
    }
    m
}

fn points_count(m: &[[Option<IntersectionProfile>; 3]; 3], i: usize, j: usize) -> Option<usize> {
    m[i][j].as_ref().and_then(|p| p.point_count())
}

const ENUMERATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// The Borromean property of a 3-linking.
///
/// True iff the three hulls share a common point and the triangles admit
/// an enumeration `t_0, t_1, t_2` in which every outline meets the next
/// triangle's hull in exactly two points. All six enumerations are tried;
/// any profile that is not a clean point count simply fails the
/// enumeration, so the predicate is total.
pub fn is_borromean(l: &Linking) -> bool {
    let [t0, t1, t2] = l.as_triple();
    if !triple_common_point(t0, t1, t2) {
        return false;
    }
    let m = profile_matrix(l);
    ENUMERATIONS.iter().any(|&[i, j, k]| {
        points_count(&m, i, j) == Some(2)
            && points_count(&m, j, k) == Some(2)
            && points_count(&m, k, i) == Some(2)
    })
}

/// Reduced four-condition form of the Borromean property.
///
/// True iff some enumeration `t_0, t_1, t_2` satisfies, exactly:
/// `|outline(t_1) ∩ hull(t_2)| = 2`, `|outline(t_2) ∩ hull(t_0)| = 2`,
/// `outline(t_1) ∩ hull(t_0) = ∅`, and the three hulls share a point.
/// Equivalent to [`is_borromean`]; the equivalence is exercised at scale
/// by the fuzz harness.
pub fn is_borromean_reduced(l: &Linking) -> bool {
    let [t0, t1, t2] = l.as_triple();
    if !triple_common_point(t0, t1, t2) {
        return false;
    }
    let m = profile_matrix(l);
    ENUMERATIONS.iter().any(|&[i, j, k]| {
        points_count(&m, j, k) == Some(2)
            && points_count(&m, k, i) == Some(2)
            && m[j][i] == Some(IntersectionProfile::Empty)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::point::Point3;
    use crate::kernel::scalar::{integer, ratio};

    fn tri(rows: [[i64; 3]; 3]) -> Triangle {
        Triangle::from_int_rows(rows).unwrap()
    }

    fn far_pair() -> (Triangle, Triangle) {
        (
            tri([[0, 0, 0], [2, 0, 0], [0, 2, 0]]),
            tri([[100, 0, 0], [102, 0, 0], [100, 2, 0]]),
        )
    }

    /// One outline piercing the other hull exactly once.
    fn hopf_pair() -> (Triangle, Triangle) {
        let base = tri([[0, 0, 0], [2, 0, 0], [0, 2, 0]]);
        let needle = Triangle::new(
            Point3::new(ratio(1, 2), ratio(1, 2), integer(1)),
            Point3::new(ratio(1, 2), ratio(1, 2), integer(-1)),
            Point3::new(integer(5), ratio(1, 2), integer(1)),
        )
        .unwrap();
        (base, needle)
    }

    #[test]
    fn disjoint_hulls_have_parity_zero() {
        let (a, b) = far_pair();
        assert_eq!(linking_parity(&a, &b), Ok(0));
    }

    #[test]
    fn hopf_pair_has_parity_one_both_ways() {
        let (a, b) = hopf_pair();
        assert_eq!(linking_parity(&b, &a), Ok(1));
        assert_eq!(linking_parity(&a, &b), Ok(1));
    }

    #[test]
    fn pierced_twice_has_parity_zero() {
        let big = tri([[0, 0, 0], [4, 0, 0], [0, 4, 0]]);
        let small = Triangle::new(
            Point3::new(ratio(1, 4), ratio(1, 4), integer(-1)),
            Point3::new(ratio(3, 4), ratio(1, 4), integer(-1)),
            Point3::new(ratio(1, 2), ratio(1, 4), integer(1)),
        )
        .unwrap();
        assert_eq!(linking_parity(&small, &big), Ok(0));
    }

    #[test]
    fn vertex_in_plane_inside_hull_is_non_generic() {
        let big = tri([[0, 0, 0], [4, 0, 0], [0, 4, 0]]);
        let touching = tri([[1, 1, 0], [1, 0, -2], [2, 1, -2]]);
        let err = linking_parity(&touching, &big).unwrap_err();
        assert_eq!(err.kind, NonGenericKind::VertexOnPlane);
    }

    #[test]
    fn coplanar_edge_meeting_hull_is_non_generic() {
        let big = tri([[0, 0, 0], [8, 0, 0], [0, 8, 0]]);
        let t = tri([[1, 1, 0], [2, 1, 0], [1, 1, 3]]);
        let err = linking_parity(&t, &big).unwrap_err();
        assert_eq!(err.kind, NonGenericKind::CoplanarEdgeContact);
    }

    #[test]
    fn vertex_in_plane_outside_hull_stays_generic() {
        let big = tri([[0, 0, 0], [2, 0, 0], [0, 2, 0]]);
        // Vertex at z = 0 but far outside the hull; no other contact.
        let t = tri([[10, 10, 0], [10, 9, 3], [11, 10, 3]]);
        assert_eq!(linking_parity(&t, &big), Ok(0));
    }

    #[test]
    fn parity_agrees_with_profile_point_count() {
        // Whenever the profile is a clean set of transversal interior
        // points, the parity equals the point count mod 2.
        let (a, b) = hopf_pair();
        let profile = outline_hull_profile(&b, &a).unwrap();
        assert_eq!(profile.point_count(), Some(1));
        assert_eq!(linking_parity(&b, &a).unwrap() as usize, profile.point_count().unwrap() % 2);

        let big = tri([[0, 0, 0], [4, 0, 0], [0, 4, 0]]);
        let small = Triangle::new(
            Point3::new(ratio(1, 4), ratio(1, 4), integer(-1)),
            Point3::new(ratio(3, 4), ratio(1, 4), integer(-1)),
            Point3::new(ratio(1, 2), ratio(1, 4), integer(1)),
        )
        .unwrap();
        let profile = outline_hull_profile(&small, &big).unwrap();
        assert_eq!(profile.point_count(), Some(2));
        assert_eq!(linking_parity(&small, &big).unwrap() as usize, 2 % 2);
    }

    #[test]
    fn linking_rejects_wrong_count_and_intersecting_outlines() {
        let (a, b) = far_pair();
        assert_eq!(
            Linking::new(vec![a.clone()]).unwrap_err(),
            LinkingError::WrongCount(1)
        );
        let shifted = tri([[1, 0, 0], [3, 0, 0], [1, 2, 0]]); // crosses a's outline
        assert_eq!(
            Linking::pair(a, shifted).unwrap_err(),
            LinkingError::OutlinesIntersect(0, 1)
        );
        let _ = b;
    }

    #[test]
    fn parity_profile_is_reindexing_invariant() {
        assert_eq!(ParityProfile::new([0, 1, 1]), ParityProfile::new([1, 1, 0]));
        assert_eq!(ParityProfile::new([1, 0, 1]).to_string(), "{1,1,0}");
    }
}
