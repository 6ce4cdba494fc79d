//! Classification of `outline(a) ∩ hull(b)` for disjoint triangle outlines.

use std::fmt;

use thiserror::Error;

use super::intersect::{segment_filled_triangle, segment_segment, IntersectionSet};
use super::point::{Point3, Triangle};
use super::predicates::point_in_filled_triangle;

/// How one triangle's outline meets another triangle's closed convex hull.
///
/// With disjoint outlines the finite case has at most two points: isolated
/// contacts on the hull's own boundary would already be outline/outline
/// intersections, and a straight edge crosses the hull's plane at most once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntersectionProfile {
    Empty,
    /// Finitely many contact points (no duplicates).
    Points(Vec<Point3>),
    /// Some edge meets the hull in a positive-length segment.
    ContainsSegment,
    /// The whole outline lies inside the hull.
    WholeOutline,
}

impl IntersectionProfile {
    /// Number of isolated contact points, if the profile is finite.
    pub fn point_count(&self) -> Option<usize> {
        match self {
            IntersectionProfile::Empty => Some(0),
            IntersectionProfile::Points(pts) => Some(pts.len()),
            _ => None,
        }
    }
}

impl fmt::Display for IntersectionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntersectionProfile::Empty => write!(f, "empty"),
            IntersectionProfile::Points(pts) => write!(f, "{} point(s)", pts.len()),
            IntersectionProfile::ContainsSegment => write!(f, "contains a segment"),
            IntersectionProfile::WholeOutline => write!(f, "whole outline"),
        }
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("triangle outlines intersect; not a valid linking pair")]
pub struct DisjointnessViolated;

/// True iff no edge of `a` meets any edge of `b`.
pub fn outlines_disjoint(a: &Triangle, b: &Triangle) -> bool {
    let ea = a.edges();
    let eb = b.edges();
    ea.iter()
        .all(|x| eb.iter().all(|y| segment_segment(x, y).is_empty()))
}

/// Classify `outline(a) ∩ hull(b)` exactly.
///
/// The outlines must be disjoint (the linking invariant); this is checked
/// and violated input is rejected rather than misclassified. A contact
/// point shared by two edges of `a` (a vertex of `a` inside the hull)
/// counts once.
pub fn outline_hull_profile(
    a: &Triangle,
    b: &Triangle,
) -> Result<IntersectionProfile, DisjointnessViolated> {
    if !outlines_disjoint(a, b) {
        return Err(DisjointnessViolated);
    }
    if a.vertices().iter().all(|v| point_in_filled_triangle(v, b)) {
        // Hull is convex, so edges between inside vertices stay inside.
        return Ok(IntersectionProfile::WholeOutline);
    }
    let mut points: Vec<Point3> = Vec::new();
    for edge in a.edges() {
        match segment_filled_triangle(&edge, b) {
            IntersectionSet::Empty => {}
            IntersectionSet::SubSegment(_) => return Ok(IntersectionProfile::ContainsSegment),
            IntersectionSet::SinglePoint(p) => {
                if !points.contains(&p) {
                    points.push(p);
                }
            }
        }
    }
    if points.is_empty() {
        Ok(IntersectionProfile::Empty)
    } else {
        debug_assert!(points.len() <= 2, "disjoint outlines admit at most two contacts");
        Ok(IntersectionProfile::Points(points))
    }
}
