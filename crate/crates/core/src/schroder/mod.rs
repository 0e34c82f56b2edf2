//! Schröder paths, bounding staircases and the bijection φ from
//! {3214, 4213}-avoiders of length n to Schröder paths of size n − 1.

mod path;
mod staircase;

pub use path::{enumerate_paths, peak_census, PathStats, PeakCensus, SchroderPath, Step};
pub use staircase::{BoundingStaircase, StairStep};

use crate::classes::schroder_pair;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// φ(p): permutation → bounding staircase → Schröder path.
pub fn phi(p: &Permutation) -> Result<SchroderPath> {
    reject_occurrences(p)?;
    BoundingStaircase::of_permutation(p)?.to_schroder()
}

/// φ⁻¹: Schröder (n−1)-path → staircase → least permutation with it.
pub fn phi_inverse(path: &SchroderPath) -> Result<Permutation> {
    BoundingStaircase::from_schroder(path)?.to_permutation()
}

fn reject_occurrences(p: &Permutation) -> Result<()> {
    for tau in schroder_pair().iter() {
        if let Some(positions) = p.find_occurrence(tau) {
            return Err(Error::ContainsPattern {
                perm: p.to_string(),
                pattern: tau.compact(),
                positions,
            });
        }
    }
    Ok(())
}
