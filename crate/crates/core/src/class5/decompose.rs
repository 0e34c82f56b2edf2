use std::fmt;

use serde::Serialize;

use crate::perm::{standardize, PatternSet, Permutation};

/// The split of a permutation along a horizontal line just below its last
/// entry. All entry lists are values in left-to-right order; `key_positions`
/// are 1-based positions in the permutation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Class5Decomposition {
    pub n: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub a1: Vec<usize>,
    pub a2: Vec<usize>,
    pub b2: Vec<usize>,
    pub keys: Vec<usize>,
    pub key_positions: Vec<usize>,
    /// Maximal runs of B entries that are adjacent in the permutation.
    pub blocks: Vec<Vec<usize>>,
}

/// Indices into `a` of its key entries: everything weakly left of the
/// maximum, then the left-to-right minima of what follows.
pub(crate) fn key_indices(a: &[usize]) -> Vec<usize> {
    let Some(top) = a
        .iter()
        .enumerate()
        .max_by_key(|(_, v)| **v)
        .map(|(i, _)| i)
    else {
        return Vec::new();
    };
    let mut keys: Vec<usize> = (0..=top).collect();
    let mut low = usize::MAX;
    for (i, &v) in a.iter().enumerate().skip(top + 1) {
        if v < low {
            low = v;
            keys.push(i);
        }
    }
    keys
}

pub fn decompose(p: &Permutation) -> Class5Decomposition {
    let n = p.len();
    let values = p.values();
    let last = values.last().copied().unwrap_or(0);
    let in_a = |v: usize| v >= last;

    let a: Vec<usize> = values.iter().copied().filter(|&v| in_a(v)).collect();
    let b: Vec<usize> = values.iter().copied().filter(|&v| !in_a(v)).collect();
    let split = a.iter().position(|&v| v == n).map_or(0, |i| i + 1);
    let a1 = a[..split].to_vec();
    let a2 = a[split..].to_vec();

    let first_a = values.iter().position(|&v| in_a(v)).unwrap_or(n);
    let b2 = values[first_a..]
        .iter()
        .copied()
        .filter(|&v| !in_a(v))
        .collect();

    let keys: Vec<usize> = key_indices(&a).into_iter().map(|i| a[i]).collect();
    let mut key_positions: Vec<usize> = keys.iter().map(|&v| p.position_of(v)).collect();
    key_positions.sort_unstable();

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut open = false;
    for &v in values {
        if in_a(v) {
            open = false;
        } else if open {
            blocks.last_mut().expect("open block").push(v);
        } else {
            blocks.push(vec![v]);
            open = true;
        }
    }

    Class5Decomposition {
        n,
        a,
        b,
        a1,
        a2,
        b2,
        keys,
        key_positions,
        blocks,
    }
}

impl Class5Decomposition {
    pub fn is_key_position(&self, pos: usize) -> bool {
        self.key_positions.binary_search(&pos).is_ok()
    }

    /// Number of B entries to the right of the first key entry. The first
    /// key entry is the first entry of A, so this is |B₂|.
    pub fn i(&self) -> usize {
        self.b2.len()
    }
}

/// The four structural properties of a Π₅-avoider, in the order they are
/// checked.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum StructureProperty {
    /// A is 213-avoiding.
    AAvoids213,
    /// B is 321-avoiding.
    BAvoids321,
    /// B₂ is increasing.
    B2Increasing,
    /// Every B entry is followed by a B entry or a key entry.
    BlocksPrecedeKeys,
}

impl fmt::Display for StructureProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureProperty::AAvoids213 => "A avoids 213",
            StructureProperty::BAvoids321 => "B avoids 321",
            StructureProperty::B2Increasing => "B2 is increasing",
            StructureProperty::BlocksPrecedeKeys => {
                "each B entry is followed by a B entry or a key entry"
            }
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StructureCheck {
    Holds,
    Violates(StructureProperty),
}

impl StructureCheck {
    pub fn holds(self) -> bool {
        self == StructureCheck::Holds
    }
}

fn single(pattern: &str) -> PatternSet {
    PatternSet::from_compact(&[pattern]).expect("valid pattern")
}

pub fn check_structure(p: &Permutation) -> StructureCheck {
    use StructureProperty::*;
    let d = decompose(p);
    if !standardize(&d.a).avoids(&single("213")) {
        return StructureCheck::Violates(AAvoids213);
    }
    if !standardize(&d.b).avoids(&single("321")) {
        return StructureCheck::Violates(BAvoids321);
    }
    if d.b2.windows(2).any(|w| w[0] > w[1]) {
        return StructureCheck::Violates(B2Increasing);
    }
    let last = p.values().last().copied().unwrap_or(0);
    for (idx, w) in p.values().windows(2).enumerate() {
        let (x, y) = (w[0], w[1]);
        if x < last && y >= last && !d.is_key_position(idx + 2) {
            return StructureCheck::Violates(BlocksPrecedeKeys);
        }
    }
    StructureCheck::Holds
}

/// Whether p = p₁ ⊕ ⋯ ⊕ p_k with p₁, …, p_{k−1} avoiding 321 and p_k
/// avoiding Π₅. Components are indecomposable by construction.
pub fn has_component_form(p: &Permutation, pi5: &PatternSet) -> bool {
    let parts = p.components();
    let Some((last, init)) = parts.split_last() else {
        return true;
    };
    let s321 = single("321");
    init.iter().all(|c| c.avoids(&s321)) && last.avoids(pi5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::PatternClass;
    use crate::enumerate::enumerate_avoiders;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn figure_three() {
        let p = perm("3 5 1 6 10 2 13 18 4 7 14 15 17 16 8 11 12 9");
        let d = decompose(&p);
        assert_eq!(d.a1, [10, 13, 18]);
        assert_eq!(d.a2, [14, 15, 17, 16, 11, 12, 9]);
        assert_eq!(d.b2, [2, 4, 7, 8]);
        let mut keys = d.keys.clone();
        keys.sort_unstable();
        assert_eq!(keys, [9, 10, 11, 13, 14, 18]);
        assert_eq!(
            d.blocks,
            vec![vec![3, 5, 1, 6], vec![2], vec![4, 7], vec![8]]
        );
        assert!(check_structure(&p).holds());
        assert!(p.avoids(&PatternClass::Pi5.patterns()));
    }

    #[test]
    fn small_trace() {
        let d = decompose(&perm("3 1 4 2"));
        assert_eq!(d.a, [3, 4, 2]);
        assert_eq!(d.b, [1]);
        assert_eq!(d.a1, [3, 4]);
        assert_eq!(d.a2, [2]);
        assert_eq!(d.keys, [3, 4, 2]);
        assert_eq!(d.key_positions, [1, 3, 4]);
        assert_eq!(d.b2, [1]);
        assert_eq!(check_structure(&perm("3 1 4 2")), StructureCheck::Holds);

        let id = decompose(&Permutation::identity(5));
        assert_eq!(id.a, [5]);
        assert_eq!(id.a1, [5]);
        assert!(id.a2.is_empty());
    }

    #[test]
    fn violations_are_named() {
        use StructureProperty::*;
        // A = 3241 contains 324.
        assert_eq!(
            check_structure(&perm("3 2 4 1")),
            StructureCheck::Violates(AAvoids213)
        );
        assert_eq!(
            check_structure(&perm("3 2 1 4")),
            StructureCheck::Violates(BAvoids321)
        );
        assert_eq!(
            check_structure(&perm("4 2 1 3")),
            StructureCheck::Violates(B2Increasing)
        );
    }

    #[test]
    fn structure_matches_avoidance_small() {
        let pi5 = PatternClass::Pi5.patterns();
        for n in 1..=6 {
            for p in Permutation::all(n) {
                assert_eq!(check_structure(&p).holds(), p.avoids(&pi5), "{p}");
            }
        }
    }

    #[test]
    fn component_form_small() {
        let pi5 = PatternClass::Pi5.patterns();
        for p in enumerate_avoiders(6, &pi5) {
            assert!(has_component_form(&p, &pi5), "{p}");
        }
    }
}
