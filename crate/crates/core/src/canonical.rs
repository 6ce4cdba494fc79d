//! Certified constructors for the five canonical linkings.
//!
//! Each constructor builds exact rational coordinates and then *verifies*
//! its defining properties with the exact kernel before returning, so a
//! returned linking carries a machine-checked guarantee rather than a
//! coordinate recipe. Where the classical coordinates are irrational
//! (square roots, a 60° rotation) they are replaced by close rational
//! approximations; the certified properties are open or discrete
//! conditions, so they survive the rounding and the exact check on the
//! rounded coordinates gives the same guarantee.
//!
//! Constructors are deterministic and panic with a `certification failed`
//! message if verification ever fails; shipped coordinates pass.

use std::fmt;

use num_traits::ToPrimitive;

use crate::invariants::{is_borromean, pairwise_parity_profile, Linking, ParityProfile};
use crate::kernel::convex::{filled_pair_intersection, ConvexSet};
use crate::kernel::point::{Point3, Triangle, Vec3};
use crate::kernel::profile::outline_hull_profile;
use crate::kernel::scalar::{integer, ratio, Scalar};

/// The five canonical isotopy classes with a certified constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalClass {
    Unlink3,
    Borromean,
    HopfSplit,
    Chain3,
    Necklace,
}

impl CanonicalClass {
    pub const ALL: [CanonicalClass; 5] = [
        CanonicalClass::Unlink3,
        CanonicalClass::Borromean,
        CanonicalClass::HopfSplit,
        CanonicalClass::Chain3,
        CanonicalClass::Necklace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CanonicalClass::Unlink3 => "unlink3",
            CanonicalClass::Borromean => "borromean",
            CanonicalClass::HopfSplit => "hopf-split",
            CanonicalClass::Chain3 => "chain3",
            CanonicalClass::Necklace => "necklace",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name.replace('_', "-").as_str() {
            "unlink3" => Some(CanonicalClass::Unlink3),
            "borromean" => Some(CanonicalClass::Borromean),
            "hopf-split" => Some(CanonicalClass::HopfSplit),
            "chain3" => Some(CanonicalClass::Chain3),
            "necklace" => Some(CanonicalClass::Necklace),
            _ => None,
        }
    }

    pub fn build(self) -> Linking {
        match self {
            CanonicalClass::Unlink3 => unlink3(),
            CanonicalClass::Borromean => borromean_certified(),
            CanonicalClass::HopfSplit => hopf_split(),
            CanonicalClass::Chain3 => chain3(),
            CanonicalClass::Necklace => necklace_rational(),
        }
    }
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn certify(cond: bool, what: &str) {
    assert!(cond, "certification failed: {what}");
}

fn profile_of(l: &Linking) -> ParityProfile {
    pairwise_parity_profile(l).expect("canonical coordinates are generic")
}

fn tri(rows: [[i64; 3]; 3]) -> Triangle {
    Triangle::from_int_rows(rows).expect("canonical triangle is non-degenerate")
}

fn translated(t: &Triangle, by: &Vec3) -> Triangle {
    let [a, b, c] = t.vertices();
    Triangle::new(a.add(by), b.add(by), c.add(by)).expect("translation preserves non-degeneracy")
}

/// Three congruent triangles with pairwise disjoint convex hulls.
pub fn unlink3() -> Linking {
    let base = tri([[0, 0, 0], [2, 0, 0], [0, 2, 0]]);
    let t1 = translated(&base, &Vec3 { x: integer(10), y: integer(0), z: integer(0) });
    let t2 = translated(&base, &Vec3 { x: integer(20), y: integer(0), z: integer(0) });
    let l = Linking::triple(base, t1, t2).expect("unlink3 outlines are disjoint");

    for (i, j) in l.index_pairs() {
        certify(
            filled_pair_intersection(l.triangle(i), l.triangle(j)) == ConvexSet::Empty,
            "unlink3 hulls must be pairwise disjoint",
        );
    }
    l
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// via continued-fraction convergents.
fn approx_rational(x: f64, max_den: i64) -> Scalar {
    assert!(x.is_finite());
    let sign = if x < 0.0 { -1 } else { 1 };
    let mut rest = x.abs();
    // Convergent recurrence p_k = a_k p_{k-1} + p_{k-2}, same for q.
    let (mut p0, mut q0) = (1i64, 0i64);
    let (mut p1, mut q1) = (rest.floor() as i64, 1i64);
    rest -= rest.floor();
    while rest > 1e-12 {
        rest = 1.0 / rest;
        let a = rest.floor();
        if a >= i64::MAX as f64 / 2.0 {
            break;
        }
        let a = a as i64;
        let p2 = match a.checked_mul(p1).and_then(|v| v.checked_add(p0)) {
            Some(v) => v,
            None => break,
        };
        let q2 = match a.checked_mul(q1).and_then(|v| v.checked_add(q0)) {
            Some(v) => v,
            None => break,
        };
        if q2 > max_den {
            break;
        }
        (p0, q0) = (p1, q1);
        (p1, q1) = (p2, q2);
        rest -= rest.floor();
    }
    ratio(sign * p1, q1)
}

/// Cyclic coordinate permutation `x -> y -> z -> x`, i.e. `(x, y, z)`
/// becomes `(z, x, y)`.
fn cycle_coords(p: &Point3) -> Point3 {
    Point3::new(p.z.clone(), p.x.clone(), p.y.clone())
}

fn cycle_triangle(t: &Triangle) -> Triangle {
    let [a, b, c] = t.vertices();
    Triangle::new(cycle_coords(a), cycle_coords(b), cycle_coords(c))
        .expect("coordinate permutation preserves non-degeneracy")
}

/// The Borromean (Valknut) triple, rationalized.
///
/// The first triangle lies in the `z = 0` plane with vertices `(1, 0, 0)`
/// and `(-2/sqrt(5), ±1/sqrt(10), 0)` rounded to rationals with
/// denominator at most 10^6; the other two are its images under the
/// cyclic coordinate permutation `x -> y -> z -> x`. The constructor
/// verifies exactly that the result is Borromean with all pairwise
/// parities zero.
pub fn borromean_certified() -> Linking {
    let a = approx_rational(-2.0 / 5.0_f64.sqrt(), 1_000_000);
    let b = approx_rational(1.0 / 10.0_f64.sqrt(), 1_000_000);
    let t1 = Triangle::new(
        Point3::from_ints(1, 0, 0),
        Point3::new(a.clone(), b.clone(), integer(0)),
        Point3::new(a, -b, integer(0)),
    )
    .expect("rounded vertices stay non-collinear");
    let t2 = cycle_triangle(&t1);
    let t3 = cycle_triangle(&t2);
    let l = Linking::triple(t1, t2, t3).expect("rounded outlines stay disjoint");

    certify(is_borromean(&l), "borromean triple must satisfy the Borromean property");
    certify(
        profile_of(&l) == ParityProfile::new([0, 0, 0]),
        "borromean triple must have all pairwise parities zero",
    );
    l
}

/// A Hopf-linked pair of triangles.
///
/// The needle's outline pierces the base's hull at exactly one interior
/// point, and symmetrically the base's outline pierces the needle's hull
/// once.
fn hopf_pair() -> (Triangle, Triangle) {
    let base = tri([[0, 0, 0], [2, 0, 0], [0, 2, 0]]);
    let needle = Triangle::new(
        Point3::new(ratio(1, 2), ratio(1, 2), integer(1)),
        Point3::new(ratio(1, 2), ratio(1, 2), integer(-1)),
        Point3::new(integer(5), ratio(1, 2), integer(1)),
    )
    .expect("needle is non-degenerate");
    (base, needle)
}

/// A Hopf linking of two triangles plus a third triangle whose hull is
/// disjoint from both.
pub fn hopf_split() -> Linking {
    let (base, needle) = hopf_pair();
    let far = tri([[100, 0, 0], [102, 0, 0], [100, 2, 0]]);
    let l = Linking::triple(base, needle, far).expect("hopf-split outlines are disjoint");

    let one_point = |a: usize, b: usize| {
        outline_hull_profile(l.triangle(a), l.triangle(b))
            .expect("disjoint outlines")
            .point_count()
            == Some(1)
    };
    certify(one_point(1, 0), "needle outline must pierce the base hull exactly once");
    certify(one_point(0, 1), "base outline must pierce the needle hull exactly once");
    for i in 0..2 {
        certify(
            filled_pair_intersection(l.triangle(2), l.triangle(i)) == ConvexSet::Empty,
            "third hull must be disjoint from the Hopf pair",
        );
    }
    certify(!is_borromean(&l), "hopf-split is not Borromean");
    certify(
        profile_of(&l) == ParityProfile::new([1, 0, 0]),
        "hopf-split parity profile must be {1,0,0}",
    );
    l
}

/// A central triangle Hopf-linked with two satellites whose hulls are
/// disjoint from each other.
pub fn chain3() -> Linking {
    let central = tri([[0, 0, 0], [4, 0, 0], [0, 4, 0]]);
    let left = Triangle::new(
        Point3::new(ratio(1, 2), ratio(1, 2), integer(1)),
        Point3::new(ratio(1, 2), ratio(1, 2), integer(-1)),
        Point3::new(integer(-5), ratio(1, 2), integer(1)),
    )
    .expect("left satellite is non-degenerate");
    let right = tri([[2, 1, 1], [2, 1, -1], [8, 1, 1]]);
    let l = Linking::triple(central, left, right).expect("chain3 outlines are disjoint");

    certify(
        filled_pair_intersection(l.triangle(1), l.triangle(2)) == ConvexSet::Empty,
        "satellite hulls must be disjoint",
    );
    for satellite in [1, 2] {
        let hits = outline_hull_profile(l.triangle(0), l.triangle(satellite))
            .expect("disjoint outlines")
            .point_count();
        certify(
            hits == Some(1),
            "central outline must meet each satellite hull at exactly one point",
        );
    }
    certify(!is_borromean(&l), "chain3 is not Borromean");
    certify(
        profile_of(&l) == ParityProfile::new([1, 1, 0]),
        "chain3 parity profile must be {1,1,0}",
    );
    l
}

/// Exact cosine/sine of a rational rotation within 10^-3 of 60°, from the
/// Pythagorean parametrization with tan(θ/2) = 56/97:
/// (6273/12545)^2 + (10864/12545)^2 = 1.
fn necklace_rotation() -> (Scalar, Scalar) {
    let c = ratio(6273, 12545);
    let s = ratio(10864, 12545);
    debug_assert!(&c * &c + &s * &s == integer(1));
    debug_assert!({
        let theta = (s.to_f64().unwrap()).atan2(c.to_f64().unwrap());
        (theta - std::f64::consts::FRAC_PI_3).abs() < 1e-3
    });
    (c, s)
}

/// The necklace linking: a near-equilateral triangle and two copies, each
/// obtained from the previous one by the rational ~60° rotation about its
/// altitude axis composed with a translation by one third of the altitude
/// vector. All three pairwise parities are 1.
pub fn necklace_rational() -> Linking {
    // Base triangle in the z = 0 plane; its altitude from the apex
    // (1/2, 84/97, 0) meets the base edge at (1/2, 0, 0), so the altitude
    // axis is the line {x = 1/2, z = 0} with direction +y. The rotation
    // fixes that axis and the translation slides along it, so all three
    // triangles share it — which leaves every apex exactly in the other
    // two planes. Tiny deterministic offsets of the second and third
    // triangles break those coincidences; a vertex contact resolves to
    // zero or two nearby crossings (tangential) or one (through-vertex),
    // so the certified parities are those of the unperturbed class.
    let height = ratio(84, 97);
    let base = Triangle::new(
        Point3::from_ints(0, 0, 0),
        Point3::from_ints(1, 0, 0),
        Point3::new(ratio(1, 2), height.clone(), integer(0)),
    )
    .expect("base triangle is non-degenerate");
    let (cos, sin) = necklace_rotation();
    let step = Vec3 { x: integer(0), y: height / integer(3), z: integer(0) };
    let half = ratio(1, 2);

    let rotate_and_lift = |p: &Point3| -> Point3 {
        let dx = &p.x - &half;
        Point3::new(
            &half + &cos * &dx + &sin * &p.z,
            p.y.clone(),
            -(&sin * &dx) + &cos * &p.z,
        )
        .add(&step)
    };
    let next = |t: &Triangle| -> Triangle {
        let [a, b, c] = t.vertices();
        Triangle::new(rotate_and_lift(a), rotate_and_lift(b), rotate_and_lift(c))
            .expect("rigid motion preserves non-degeneracy")
    };

    let second = next(&base);
    let third = next(&second);
    let nudge2 = Vec3 { x: ratio(1, 1024), y: integer(0), z: ratio(1, 8192) };
    let nudge3 = Vec3 { x: ratio(-1, 2048), y: integer(0), z: ratio(-1, 4096) };
    let l = Linking::triple(base, translated(&second, &nudge2), translated(&third, &nudge3))
        .expect("necklace outlines are disjoint");

    certify(
        profile_of(&l) == ParityProfile::new([1, 1, 1]),
        "necklace parity profile must be {1,1,1}",
    );
    certify(!is_borromean(&l), "necklace is not Borromean");
    l
}
