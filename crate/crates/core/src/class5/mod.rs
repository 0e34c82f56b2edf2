//! Structure and direct enumeration of the class avoiding {3214, 3241, 4213}.
//!
//! Cutting a permutation just below its last entry splits it into A (the
//! entries at or above the cut) and B (the rest). The avoiders are exactly
//! the permutations where A avoids 213, B avoids 321, the part of B right of
//! A's first entry increases, and every run of B entries sits immediately
//! before a key entry of A.

mod construct;
mod counting;
mod decompose;

pub use construct::{construct, enumerate_constructions, Class5Construction, Class5Params};
pub use counting::{
    count_321_tail, count_321_tail_oracle, count_a_cases, count_a_cases_oracle, count_class5,
    count_class5_indec, count_key_213_oracle, key_count, prop15, prop15_oracle, w,
};
pub use decompose::{
    check_structure, decompose, has_component_form, Class5Decomposition, StructureCheck,
    StructureProperty,
};
