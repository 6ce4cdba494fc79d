//! Elementary moves: replace one vertex `C` of a triangle `ABC` by a new
//! apex `C'` off the line `AB`, provided the two swept filled triangles
//! `ACC'` and `BCC'` avoid every other outline. Sequences of such moves
//! generate combinatorial isotopy, so anything invariant under
//! [`validate_move`]-accepted moves is an isotopy invariant.

use std::fmt;

use num_traits::Zero;
use rand::Rng;
use thiserror::Error;

use crate::invariants::{linking_parity_symmetric, Linking};
use crate::kernel::intersect::{segment_filled_triangle, segment_segment};
use crate::kernel::point::{Point3, Segment, Triangle, Vec3};
use crate::kernel::predicates::collinear;
use crate::kernel::scalar::{integer, ratio, Scalar};

/// One elementary move: in triangle `target`, the vertex at `pivot` plays
/// the role of `C` and is replaced by `new_apex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveSpec {
    pub target: usize,
    pub pivot: usize,
    pub new_apex: Point3,
}

impl fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "move triangle {} vertex {} to {}", self.target, self.pivot, self.new_apex)
    }
}

/// Why a proposed move is rejected. Reasons are checked in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvalidReason {
    /// The new apex lies on the line through the two kept vertices.
    ApexOnLineAB,
    /// A swept filled triangle hits the outline of the named triangle.
    SweepHitsOutline(usize),
    /// The resulting linking would violate pairwise outline disjointness.
    ResultNotDisjoint,
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidReason::ApexOnLineAB => write!(f, "new apex lies on the line through the kept vertices"),
            InvalidReason::SweepHitsOutline(i) => write!(f, "swept face hits the outline of triangle {i}"),
            InvalidReason::ResultNotDisjoint => write!(f, "resulting outlines are not pairwise disjoint"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveVerdict {
    Valid,
    Invalid(InvalidReason),
}

impl MoveVerdict {
    pub fn is_valid(self) -> bool {
        self == MoveVerdict::Valid
    }
}

impl fmt::Display for MoveVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveVerdict::Valid => write!(f, "valid"),
            MoveVerdict::Invalid(r) => write!(f, "invalid: {r}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("move rejected: {0}")]
    InvalidMove(InvalidReason),
    #[error("no valid move found within {0} attempts")]
    ExhaustedAttempts(u32),
}

/// Default rejection-sampling budget for random moves.
pub const DEFAULT_ATTEMPTS: u32 = 256;

/// Denominator bound for random apex offsets; offsets are integer
/// multiples of `scale / 65536`, which keeps coordinate denominators
/// bounded across arbitrarily long move chains.
const OFFSET_STEPS: i64 = 1 << 16;

/// The hull swept between the old edge `XC` and the new edge `XC'`.
///
/// The three spanning points may be collinear (the move condition allows
/// the apex anywhere off line `AB`, including on line `XC`), in which
/// case the hull is a segment or a single old edge.
enum SweepFace {
    Face(Triangle),
    Flat(Segment),
}

fn sweep_face(kept: &Point3, old_apex: &Point3, new_apex: &Point3) -> SweepFace {
    match Triangle::new(kept.clone(), old_apex.clone(), new_apex.clone()) {
        Ok(t) => SweepFace::Face(t),
        Err(_) => {
            // Collinear: the hull is the extent of the three points.
            let dir = old_apex.sub(kept); // nonzero: kept and old apex are distinct vertices
            let params: [(Scalar, &Point3); 3] = [
                (Scalar::zero(), kept),
                (dir.dot(&dir), old_apex),
                (new_apex.sub(kept).dot(&dir), new_apex),
            ];
            let (mut lo, mut hi) = (&params[0], &params[0]);
            for p in &params[1..] {
                if p.0 < lo.0 {
                    lo = p;
                }
                if p.0 > hi.0 {
                    hi = p;
                }
            }
            SweepFace::Flat(Segment::new(lo.1.clone(), hi.1.clone()))
        }
    }
}

impl SweepFace {
    fn hits(&self, edge: &Segment) -> bool {
        match self {
            SweepFace::Face(t) => !segment_filled_triangle(edge, t).is_empty(),
            SweepFace::Flat(s) => !segment_segment(edge, s).is_empty(),
        }
    }
}

/// Check an elementary move against a linking.
///
/// Valid iff the new apex is off the line through the kept vertices and
/// both swept hulls avoid every other triangle's outline; the resulting
/// linking's disjointness invariant is then re-verified on every call.
/// Panics if `target` or `pivot` is out of range.
pub fn validate_move(l: &Linking, m: &MoveSpec) -> MoveVerdict {
    let tri = l.triangle(m.target);
    assert!(m.pivot < 3, "pivot index out of range");
    let old_apex = tri.vertex(m.pivot);
    let kept_a = tri.vertex((m.pivot + 1) % 3);
    let kept_b = tri.vertex((m.pivot + 2) % 3);

    if collinear(kept_a, kept_b, &m.new_apex) {
        return MoveVerdict::Invalid(InvalidReason::ApexOnLineAB);
    }

    let faces = [
        sweep_face(kept_a, old_apex, &m.new_apex),
        sweep_face(kept_b, old_apex, &m.new_apex),
    ];
    for (i, other) in l.triangles().iter().enumerate() {
        if i == m.target {
            continue;
        }
        for edge in other.edges() {
            if faces.iter().any(|f| f.hits(&edge)) {
                return MoveVerdict::Invalid(InvalidReason::SweepHitsOutline(i));
            }
        }
    }

    match moved_linking(l, m) {
        Ok(_) => MoveVerdict::Valid,
        Err(_) => MoveVerdict::Invalid(InvalidReason::ResultNotDisjoint),
    }
}

fn moved_linking(l: &Linking, m: &MoveSpec) -> Result<Linking, ()> {
    let mut triangles = l.triangles().to_vec();
    triangles[m.target] = triangles[m.target]
        .with_vertex_replaced(m.pivot, m.new_apex.clone())
        .map_err(|_| ())?;
    Linking::new(triangles).map_err(|_| ())
}

/// Apply a validated move, returning the new linking.
pub fn apply_move(l: &Linking, m: &MoveSpec) -> Result<Linking, MoveError> {
    match validate_move(l, m) {
        MoveVerdict::Valid => {
            Ok(moved_linking(l, m).expect("validated move produces a valid linking"))
        }
        MoveVerdict::Invalid(reason) => Err(MoveError::InvalidMove(reason)),
    }
}

/// The move that undoes `m` on `apply_move(l, m)`.
pub fn reverse_move(l: &Linking, m: &MoveSpec) -> MoveSpec {
    MoveSpec {
        target: m.target,
        pivot: m.pivot,
        new_apex: l.triangle(m.target).vertex(m.pivot).clone(),
    }
}

/// Draw a valid random move by rejection sampling.
///
/// Picks a uniform target triangle and pivot vertex, proposes
/// `new_apex = old apex + offset` with offset coordinates uniform
/// multiples of `scale / 65536` in `[-scale, scale]`, and retries until
/// [`validate_move`] accepts, up to `attempts` proposals. Deterministic
/// given the RNG state. With `scale = 0` the proposal is the identity
/// move `C' = C`, which is always valid.
pub fn random_move(
    l: &Linking,
    rng: &mut impl Rng,
    scale: &Scalar,
    attempts: u32,
) -> Result<MoveSpec, MoveError> {
    for _ in 0..attempts {
        let target = rng.gen_range(0..l.len());
        let pivot = rng.gen_range(0..3usize);
        let step = scale / integer(OFFSET_STEPS);
        let offset = Vec3 {
            x: &step * integer(rng.gen_range(-OFFSET_STEPS..=OFFSET_STEPS)),
            y: &step * integer(rng.gen_range(-OFFSET_STEPS..=OFFSET_STEPS)),
            z: &step * integer(rng.gen_range(-OFFSET_STEPS..=OFFSET_STEPS)),
        };
        let m = MoveSpec {
            target,
            pivot,
            new_apex: l.triangle(target).vertex(pivot).add(&offset),
        };
        if validate_move(l, &m).is_valid() {
            return Ok(m);
        }
    }
    Err(MoveError::ExhaustedAttempts(attempts))
}

/// Are all pairwise parities of `l` defined (in both directions)?
pub fn is_generic(l: &Linking) -> bool {
    l.index_pairs()
        .into_iter()
        .all(|(i, j)| linking_parity_symmetric(l.triangle(i), l.triangle(j)).is_ok())
}

/// Nudge a linking by valid elementary moves until every pairwise parity
/// evaluates. The output is combinatorially isotopic to the input by
/// construction; the returned move list replays the path from `l`.
/// Returns `(l, [])` unchanged if `l` is already generic.
pub fn perturb_to_generic(
    l: &Linking,
    rng: &mut impl Rng,
    scale: &Scalar,
    attempts: u32,
) -> Result<(Linking, Vec<MoveSpec>), MoveError> {
    if is_generic(l) {
        return Ok((l.clone(), Vec::new()));
    }
    let mut current = l.clone();
    let mut trail = Vec::new();
    for _ in 0..attempts {
        let m = random_move(&current, rng, scale, DEFAULT_ATTEMPTS)?;
        current = apply_move(&current, &m).expect("random_move returns only valid moves");
        trail.push(m);
        if is_generic(&current) {
            return Ok((current, trail));
        }
    }
    Err(MoveError::ExhaustedAttempts(attempts))
}

/// Default apex-offset scale used by the fuzz harness and the CLI.
pub fn default_move_scale() -> Scalar {
    ratio(1, 4)
}
