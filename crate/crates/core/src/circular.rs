//! Parking on a circle of `M = T + 1` spots.
//!
//! On the circle no car can leave the lot, so the only failure is a
//! collision, and a successful run always leaves exactly one spot empty.
//! Rotating every preference by the same amount rotates the outcome, and
//! the runs whose empty spot is `M` are exactly the linear parking
//! sequences.

use crate::error::{Error, Result};
use crate::park::{simulate, Flavor, Layout, ParkResult, PrefSequence, SizeVector};

/// Maps any positive spot number (or 0) onto the representative in
/// `[1, m]`: residue 0 becomes `m`.
#[inline]
pub fn wrap_spot(x: usize, m: usize) -> usize {
    match x % m {
        0 => m,
        r => r,
    }
}

/// Parks the cars on the circle. Never returns `PastEnd`.
pub fn simulate_circular(sizes: &SizeVector, prefs: &PrefSequence) -> Result<ParkResult> {
    if prefs.flavor() != Flavor::Circular {
        return Err(Error::WrongFlavor {
            expected: Flavor::Circular,
        });
    }
    simulate(sizes, prefs)
}

/// Adds `a` to every preference modulo `M`. Negative shifts are allowed.
pub fn rotate(sizes: &SizeVector, prefs: &PrefSequence, a: i64) -> PrefSequence {
    let m = sizes.circle();
    let shift = a.rem_euclid(m as i64) as usize;
    PrefSequence::circular(
        prefs
            .as_slice()
            .iter()
            .map(|&c| wrap_spot(c % m + shift, m))
            .collect(),
    )
}

/// The single unoccupied spot of a complete circular layout.
pub fn empty_spot(layout: &Layout) -> Result<usize> {
    if layout.flavor() != Flavor::Circular || !layout.is_complete() {
        return Err(Error::IncompleteLayout);
    }
    match layout.empty_spots().as_slice() {
        [spot] => Ok(*spot),
        _ => Err(Error::IncompleteLayout),
    }
}

/// Returns the tuple as a linear sequence when every car parks on the
/// circle and spot `M` is the one left empty; `None` otherwise.
pub fn restrict_to_linear(
    sizes: &SizeVector,
    prefs: &PrefSequence,
) -> Result<Option<PrefSequence>> {
    let layout = match simulate_circular(sizes, prefs)? {
        ParkResult::Parked(layout) => layout,
        _ => return Ok(None),
    };
    if empty_spot(&layout)? != sizes.circle() {
        return Ok(None);
    }
    // No car can prefer spot M if it stays empty.
    debug_assert!(prefs.as_slice().iter().all(|&c| c <= sizes.total()));
    Ok(Some(PrefSequence::linear(prefs.as_slice().to_vec())))
}
