//! Enumeration and cross-verification toolkit for five triples of 4-letter
//! patterns whose avoiders are equinumerous with the weak sorting permutations.

pub mod checks;
pub mod class5;
pub mod classes;
pub mod enumerate;
pub mod error;
pub mod oeis;
pub mod perm;
pub mod recurrence;
pub mod schroder;
pub mod series;

pub use classes::PatternClass;
pub use enumerate::{CountingSequence, SizeGuard};
pub use error::{Error, Result};
pub use perm::{PatternSet, Permutation, Symmetry};
