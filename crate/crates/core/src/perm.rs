//! Permutations in one-line notation, classical pattern containment and the
//! order-8 symmetry group generated by reverse, complement and inverse.
//!
//! Values and positions are 1-based throughout. The empty permutation is a
//! valid value of length 0.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Checks that `values` is a rearrangement of `1..=values.len()`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for (pos, &v) in values.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    len: n,
                    detail: format!("entry {v} at position {} is out of range", pos + 1),
                });
            }
            if seen[v] {
                return Err(Error::InvalidPermutation {
                    len: n,
                    detail: format!("entry {v} repeated at position {}", pos + 1),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// Parses digit strings such as `"1342"`. Only meaningful for n ≤ 9.
    pub fn from_compact(s: &str) -> Result<Self> {
        let values = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse {
                        what: "compact permutation",
                        input: s.to_string(),
                        detail: format!("{c:?} is not a digit"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }

    /// Digit-string form, e.g. `1342`. Falls back to the spaced form for n > 9.
    pub fn compact(&self) -> String {
        if self.len() > 9 {
            return self.to_string();
        }
        self.values.iter().map(|v| v.to_string()).collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    /// Entry at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> usize {
        self.values[pos - 1]
    }

    /// 1-based position of value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.values
            .iter()
            .position(|&x| x == v)
            .expect("value in range")
            + 1
    }

    pub fn reverse(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        Permutation {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0; self.len()];
        for (pos, &v) in self.values.iter().enumerate() {
            values[v - 1] = pos + 1;
        }
        Permutation { values }
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        self.find_occurrence(pattern).is_some()
    }

    /// 1-based positions of the leftmost-first occurrence of `pattern`, if any.
    pub fn find_occurrence(&self, pattern: &Permutation) -> Option<Vec<usize>> {
        find_occurrence(&self.values, &pattern.values, false)
            .map(|idx| idx.into_iter().map(|i| i + 1).collect())
    }

    pub fn avoids(&self, set: &PatternSet) -> bool {
        set.iter().all(|tau| !self.contains(tau))
    }

    /// `self ⊕ other`: `other` is shifted up by `self.len()` and appended.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let m = self.len();
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|v| v + m));
        Permutation { values }
    }

    /// The unique decomposition into ⊕-indecomposable blocks, left to right.
    /// The empty permutation has no components.
    pub fn components(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut running_max = 0;
        for (idx, &v) in self.values.iter().enumerate() {
            running_max = running_max.max(v);
            if running_max == idx + 1 {
                out.push(standardize(&self.values[start..=idx]));
                start = idx + 1;
            }
        }
        out
    }

    pub fn is_indecomposable(&self) -> bool {
        self.components().len() == 1
    }

    pub fn extrema(&self) -> Extrema {
        let mut lr_max = Vec::new();
        let mut lr_min = Vec::new();
        let mut hi = 0;
        let mut lo = usize::MAX;
        for (idx, &v) in self.values.iter().enumerate() {
            if v > hi {
                hi = v;
                lr_max.push(idx + 1);
            }
            if v < lo {
                lo = v;
                lr_min.push(idx + 1);
            }
        }
        let mut rl_max = Vec::new();
        let mut hi = 0;
        for (idx, &v) in self.values.iter().enumerate().rev() {
            if v > hi {
                hi = v;
                rl_max.push(idx + 1);
            }
        }
        rl_max.reverse();
        Extrema {
            lr_max,
            rl_max,
            lr_min,
        }
    }

    /// All of S_n in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n).collect()),
        }
    }
}

/// Positions (1-based, increasing) of the left-to-right maxima, right-to-left
/// maxima and left-to-right minima of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extrema {
    pub lr_max: Vec<usize>,
    pub rl_max: Vec<usize>,
    pub lr_min: Vec<usize>,
}

impl Extrema {
    pub fn values(positions: &[usize], p: &Permutation) -> Vec<usize> {
        positions.iter().map(|&pos| p.at(pos)).collect()
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { values: current })
    }
}

fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Relabels distinct entries by rank, giving the order-isomorphic permutation.
/// Equal entries (outside the intended domain) are ranked by position.
pub fn standardize(w: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&i| (w[i], i));
    let mut values = vec![0; w.len()];
    for (rank, &i) in order.iter().enumerate() {
        values[i] = rank + 1;
    }
    Permutation { values }
}

/// Backtracking search for an occurrence of `pattern` in `text` (0-based
/// indices). Each partial choice of text positions is kept only while it is
/// order-isomorphic to the corresponding pattern prefix. With `anchor_last`
/// the final pattern letter is pinned to the final text position.
pub(crate) fn find_occurrence(
    text: &[usize],
    pattern: &[usize],
    anchor_last: bool,
) -> Option<Vec<usize>> {
    let k = pattern.len();
    let n = text.len();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > n {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    if anchor_last {
        // positions 0..k-1 range over text[..n-1]; the last one is fixed
        let last = n - 1;
        if search(text, pattern, &mut chosen, 0, k - 1, n - 1, Some(last)) {
            chosen.push(last);
            return Some(chosen);
        }
        return None;
    }
    if search(text, pattern, &mut chosen, 0, k, n, None) {
        Some(chosen)
    } else {
        None
    }
}

fn consistent(text: &[usize], pattern: &[usize], chosen: &[usize], t: usize, idx: usize) -> bool {
    chosen
        .iter()
        .enumerate()
        .all(|(s, &i)| (pattern[s] < pattern[t]) == (text[i] < text[idx]))
}

fn search(
    text: &[usize],
    pattern: &[usize],
    chosen: &mut Vec<usize>,
    from: usize,
    free: usize,
    limit: usize,
    anchor: Option<usize>,
) -> bool {
    let t = chosen.len();
    if t == free {
        return match anchor {
            Some(last) => consistent(text, pattern, chosen, t, last),
            None => true,
        };
    }
    let remaining = free - t;
    for idx in from..=limit - remaining {
        if consistent(text, pattern, chosen, t, idx) {
            chosen.push(idx);
            if search(text, pattern, chosen, idx + 1, free, limit, anchor) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Space-separated one-line notation; the empty string is the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|e| Error::Parse {
                    what: "permutation",
                    input: s.to_string(),
                    detail: format!("{tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// A finite set of patterns with set semantics. Iteration order is sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PatternSet {
    patterns: BTreeSet<Permutation>,
}

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Self {
        PatternSet {
            patterns: patterns.into_iter().collect(),
        }
    }

    /// Builds a set from digit strings, e.g. `["1234", "1243", "1342"]`.
    pub fn from_compact<S: AsRef<str>>(patterns: &[S]) -> Result<Self> {
        patterns
            .iter()
            .map(|s| Permutation::from_compact(s.as_ref()))
            .collect::<Result<BTreeSet<_>>>()
            .map(|patterns| PatternSet { patterns })
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.patterns.iter()
    }

    pub fn contains_pattern(&self, p: &Permutation) -> bool {
        self.patterns.contains(p)
    }

    /// Every distinct image of this set under the eight symmetries.
    pub fn orbit(&self) -> BTreeSet<PatternSet> {
        Symmetry::all().iter().map(|g| g.apply_set(self)).collect()
    }

    /// Smallest member of the orbit (sets compare as sorted sequences).
    pub fn canonical(&self) -> PatternSet {
        self.orbit()
            .into_iter()
            .next()
            .expect("orbit contains self")
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&p.compact())?;
        }
        f.write_str("}")
    }
}

impl FromIterator<Permutation> for PatternSet {
    fn from_iter<I: IntoIterator<Item = Permutation>>(iter: I) -> Self {
        PatternSet::new(iter)
    }
}

/// An element of the dihedral group of order 8 acting on permutations:
/// inverse (if set) is applied first, then reverse, then complement.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symmetry {
    pub inverse: bool,
    pub reverse: bool,
    pub complement: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry {
        inverse: false,
        reverse: false,
        complement: false,
    };
    pub const REVERSE: Symmetry = Symmetry {
        inverse: false,
        reverse: true,
        complement: false,
    };
    pub const COMPLEMENT: Symmetry = Symmetry {
        inverse: false,
        reverse: false,
        complement: true,
    };
    pub const INVERSE: Symmetry = Symmetry {
        inverse: true,
        reverse: false,
        complement: false,
    };

    pub fn all() -> [Symmetry; 8] {
        let mut out = [Symmetry::IDENTITY; 8];
        for (bits, slot) in out.iter_mut().enumerate() {
            *slot = Symmetry {
                inverse: bits & 4 != 0,
                reverse: bits & 2 != 0,
                complement: bits & 1 != 0,
            };
        }
        out
    }

    pub fn apply(&self, p: &Permutation) -> Permutation {
        let mut q = if self.inverse { p.inverse() } else { p.clone() };
        if self.reverse {
            q = q.reverse();
        }
        if self.complement {
            q = q.complement();
        }
        q
    }

    pub fn apply_set(&self, set: &PatternSet) -> PatternSet {
        set.iter().map(|p| self.apply(p)).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Symmetry) -> Symmetry {
        composition_table()[self.index()][other.index()]
    }

    pub fn group_inverse(self) -> Symmetry {
        Symmetry::all()
            .into_iter()
            .find(|h| h.compose(self) == Symmetry::IDENTITY)
            .expect("group element has an inverse")
    }

    fn index(self) -> usize {
        (self.inverse as usize) << 2 | (self.reverse as usize) << 1 | self.complement as usize
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.complement {
            parts.push("complement");
        }
        if self.reverse {
            parts.push("reverse");
        }
        if self.inverse {
            parts.push("inverse");
        }
        if parts.is_empty() {
            f.write_str("identity")
        } else {
            f.write_str(&parts.join("∘"))
        }
    }
}

// The group acts faithfully on S_4, so an element is identified by its
// action there.
fn composition_table() -> &'static [[Symmetry; 8]; 8] {
    static TABLE: OnceLock<[[Symmetry; 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let witnesses: Vec<Permutation> = Permutation::all(4).collect();
        let action = |g: Symmetry| -> Vec<Permutation> {
            witnesses.iter().map(|p| g.apply(p)).collect::<Vec<_>>()
        };
        let mut table = [[Symmetry::IDENTITY; 8]; 8];
        for g in Symmetry::all() {
            for h in Symmetry::all() {
                let target: Vec<Permutation> =
                    witnesses.iter().map(|p| g.apply(&h.apply(p))).collect();
                table[g.index()][h.index()] = Symmetry::all()
                    .into_iter()
                    .find(|e| action(*e) == target)
                    .expect("group is closed under composition");
            }
        }
        table
    })
}
