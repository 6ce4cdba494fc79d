//! Randomized cross-module properties, seeded for reproducibility.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trilink::canonical::CanonicalClass;
use trilink::fuzz::random_triple;
use trilink::invariants::{
    is_borromean, is_borromean_reduced, linking_parity, pairwise_parity_profile, Linking,
};
use trilink::kernel::convex::{filled_pair_intersection, ConvexSet};
use trilink::kernel::intersect::{segment_filled_triangle, IntersectionSet};
use trilink::kernel::point::{Point3, Segment, Triangle};
use trilink::kernel::predicates::point_in_filled_triangle;
use trilink::kernel::profile::{outline_hull_profile, IntersectionProfile};
use trilink::kernel::scalar::{ratio, Scalar};
use trilink::moves::{apply_move, random_move, reverse_move, validate_move, DEFAULT_ATTEMPTS};

fn coord(rng: &mut impl Rng) -> Scalar {
    ratio(rng.gen_range(-64i64..=64), 16)
}

fn point(rng: &mut impl Rng) -> Point3 {
    Point3::new(coord(rng), coord(rng), coord(rng))
}

fn triangle(rng: &mut impl Rng) -> Triangle {
    loop {
        if let Ok(t) = Triangle::new(point(rng), point(rng), point(rng)) {
            return t;
        }
    }
}

fn point_on_segment(x: &Point3, s: &Segment) -> bool {
    let d = s.direction();
    let v = x.sub(s.start());
    if !v.cross(&d).is_zero() {
        return false;
    }
    let t = v.dot(&d);
    !t.is_negative() && t <= d.dot(&d)
}

trait IsNegative {
    fn is_negative(&self) -> bool;
}
impl IsNegative for Scalar {
    fn is_negative(&self) -> bool {
        self < &Scalar::zero()
    }
}

#[test]
fn segment_triangle_results_satisfy_both_memberships() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut nonempty = 0;
    for _ in 0..1500 {
        let t = triangle(&mut rng);
        let (p, q) = (point(&mut rng), point(&mut rng));
        if p == q {
            continue;
        }
        let s = Segment::new(p, q);
        match segment_filled_triangle(&s, &t) {
            IntersectionSet::Empty => {}
            IntersectionSet::SinglePoint(x) => {
                nonempty += 1;
                assert!(point_in_filled_triangle(&x, &t), "{x} not in {t}");
                assert!(point_on_segment(&x, &s), "{x} not on {s}");
            }
            IntersectionSet::SubSegment(sub) => {
                nonempty += 1;
                for x in [sub.start(), sub.end()] {
                    assert!(point_in_filled_triangle(x, &t));
                    assert!(point_on_segment(x, &s));
                }
            }
        }
    }
    assert!(nonempty > 100, "intersecting cases underrepresented: {nonempty}");
}

#[test]
fn filled_pair_intersection_is_symmetric_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let mut nonempty = 0;
    for _ in 0..500 {
        let a = triangle(&mut rng);
        let b = triangle(&mut rng);
        let ab = filled_pair_intersection(&a, &b);
        let ba = filled_pair_intersection(&b, &a);
        assert!(ab.same_set(&ba), "asymmetric result:\n{a}\n{b}\n{ab:?}\n{ba:?}");
        // Extreme points of the intersection belong to both hulls.
        let pts: Vec<Point3> = match &ab {
            ConvexSet::Empty => vec![],
            ConvexSet::Point(p) => vec![p.clone()],
            ConvexSet::Segment(s) => vec![s.start().clone(), s.end().clone()],
            ConvexSet::Polygon(v) => v.clone(),
        };
        nonempty += usize::from(!pts.is_empty());
        for p in pts {
            assert!(point_in_filled_triangle(&p, &a));
            assert!(point_in_filled_triangle(&p, &b));
        }
    }
    assert!(nonempty > 50, "intersecting cases underrepresented: {nonempty}");
}

#[test]
fn parity_equals_profile_point_count_mod_2_when_clean() {
    // Whenever the outline/hull profile is a finite set of points and the
    // parity evaluates, the parity is the point count mod 2.
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let mut checked = 0;
    while checked < 400 {
        let a = triangle(&mut rng);
        let b = triangle(&mut rng);
        let Ok(profile) = outline_hull_profile(&a, &b) else {
            continue;
        };
        let Ok(parity) = linking_parity(&a, &b) else {
            continue;
        };
        match profile {
            IntersectionProfile::Empty => assert_eq!(parity, 0),
            IntersectionProfile::Points(pts) => {
                assert_eq!(parity as usize, pts.len() % 2);
            }
            other => panic!("generic pair cannot have profile {other:?}"),
        }
        checked += 1;
    }
}

#[test]
fn random_moves_are_exactly_reversible() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for class in CanonicalClass::ALL {
        let mut l = class.build();
        let scale = trilink::moves::default_move_scale();
        for _ in 0..20 {
            let m = random_move(&l, &mut rng, &scale, DEFAULT_ATTEMPTS).unwrap();
            let rev = reverse_move(&l, &m);
            let moved = apply_move(&l, &m).unwrap();
            assert!(validate_move(&moved, &rev).is_valid());
            assert_eq!(apply_move(&moved, &rev).unwrap(), l);
            l = moved;
        }
    }
}

#[test]
fn borromean_predicates_are_reindexing_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let perms = [[0usize, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut triples: Vec<Linking> = CanonicalClass::ALL.iter().map(|c| c.build()).collect();
    for _ in 0..40 {
        triples.push(random_triple(&mut rng));
    }
    for l in &triples {
        let bor = is_borromean(l);
        let red = is_borromean_reduced(l);
        let profile = pairwise_parity_profile(l).ok();
        for perm in perms {
            let p = Linking::triple(
                l.triangle(perm[0]).clone(),
                l.triangle(perm[1]).clone(),
                l.triangle(perm[2]).clone(),
            )
            .unwrap();
            assert_eq!(is_borromean(&p), bor);
            assert_eq!(is_borromean_reduced(&p), red);
            assert_eq!(pairwise_parity_profile(&p).ok(), profile);
        }
    }
}

#[test]
fn borromean_implies_reduced_conditions_hold() {
    // The reduced conditions are a subset of the full ones, so the full
    // predicate implies the reduced one; check on the certified triple
    // and a handful of its move descendants.
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut l = trilink::canonical::borromean_certified();
    let scale = trilink::moves::default_move_scale();
    for _ in 0..10 {
        assert!(is_borromean(&l));
        assert!(is_borromean_reduced(&l));
        let m = random_move(&l, &mut rng, &scale, DEFAULT_ATTEMPTS).unwrap();
        l = apply_move(&l, &m).unwrap();
    }
}
