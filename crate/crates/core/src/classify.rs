//! Map a linking to its combinatorial-isotopy class label.
//!
//! The labels come from the two exact invariants alone. For three
//! triangles the parity profile separates everything except the unlink
//! from the Borromean triple, which the Borromean predicate decides. A
//! profile of `{0,0,0}` with the Borromean predicate false is labeled
//! honestly as [`ClassLabel3::ZeroProfileNonBorromean`]: such a linking
//! is an unlink exactly if the (open) completeness conjecture for the
//! five canonical classes holds, and this tool does not overclaim.

use std::fmt;

use crate::invariants::{is_borromean, linking_parity_symmetric, pairwise_parity_profile, Linking};
use crate::kernel::point::Triangle;

/// Isotopy class of a linking of two triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassLabel2 {
    /// Parity 0: isotopic to a pair with disjoint hulls.
    Split,
    /// Parity 1: the Hopf linking.
    Hopf,
    /// Parity undefined on this input; perturb and retry.
    NonGeneric,
}

impl fmt::Display for ClassLabel2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel2::Split => write!(f, "Split"),
            ClassLabel2::Hopf => write!(f, "Hopf"),
            ClassLabel2::NonGeneric => write!(f, "NonGeneric"),
        }
    }
}

/// Isotopy class label of a linking of three triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassLabel3 {
    Borromean,
    HopfSplit,
    Chain3,
    Necklace,
    /// All pairwise parities zero and not Borromean. Equal to the unlink
    /// class if and only if the completeness conjecture holds.
    ZeroProfileNonBorromean,
    NonGeneric,
}

impl fmt::Display for ClassLabel3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel3::Borromean => write!(f, "Borromean"),
            ClassLabel3::HopfSplit => write!(f, "HopfSplit"),
            ClassLabel3::Chain3 => write!(f, "Chain3"),
            ClassLabel3::Necklace => write!(f, "Necklace"),
            ClassLabel3::ZeroProfileNonBorromean => write!(f, "ZeroProfileNonBorromean"),
            ClassLabel3::NonGeneric => write!(f, "NonGeneric"),
        }
    }
}

/// Classify a disjoint pair of triangles by its mod-2 linking parity.
///
/// Two classes exhaust all linkings of two triangles, and the parity — an
/// isotopy invariant — decides between them, so the label is exact.
/// Symmetric in its arguments because the parity is.
pub fn classify2(a: &Triangle, b: &Triangle) -> ClassLabel2 {
    match linking_parity_symmetric(a, b) {
        Ok(0) => ClassLabel2::Split,
        Ok(_) => ClassLabel2::Hopf,
        Err(_) => ClassLabel2::NonGeneric,
    }
}

/// Classify a 3-linking by the decision tree over the two invariants.
pub fn classify3(l: &Linking) -> ClassLabel3 {
    let profile = match pairwise_parity_profile(l) {
        Ok(p) => p,
        Err(_) => return ClassLabel3::NonGeneric,
    };
    match profile.as_sorted() {
        [1, 0, 0] => ClassLabel3::HopfSplit,
        [1, 1, 0] => ClassLabel3::Chain3,
        [1, 1, 1] => ClassLabel3::Necklace,
        _ => {
            if is_borromean(l) {
                ClassLabel3::Borromean
            } else {
                ClassLabel3::ZeroProfileNonBorromean
            }
        }
    }
}
