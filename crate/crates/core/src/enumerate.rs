//! Brute-force generation of pattern avoiders and the exhaustive Wilf search
//! over triples of 4-letter patterns.
//!
//! Avoiders are generated by extending prefixes one entry at a time. A prefix
//! that contains a forbidden pattern is dropped together with all of its
//! extensions; since every extension still contains that occurrence, this is
//! exact. Only occurrences that use the newly appended entry need checking.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::classes::PatternClass;
use crate::error::{Error, Result};
use crate::perm::{find_occurrence, PatternSet, Permutation};

pub const DEFAULT_SIZE_LIMIT: usize = 10;

/// Refuses brute-force work beyond `limit` unless explicitly overridden.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    pub limit: usize,
    pub overridden: bool,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            limit: DEFAULT_SIZE_LIMIT,
            overridden: false,
        }
    }
}

impl SizeGuard {
    pub fn with_override(overridden: bool) -> Self {
        SizeGuard {
            overridden,
            ..SizeGuard::default()
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.limit && !self.overridden {
            return Err(Error::LimitExceeded {
                requested: n,
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// |S_n(T)| for n = 0, 1, ..., indexed from 0.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CountingSequence {
    pub values: Vec<BigUint>,
}

impl CountingSequence {
    pub fn from_u64s(values: &[u64]) -> Self {
        CountingSequence {
            values: values.iter().map(|&v| BigUint::from(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn prefix(&self, terms: usize) -> CountingSequence {
        CountingSequence {
            values: self.values[..terms.min(self.values.len())].to_vec(),
        }
    }

    pub fn starts_with(&self, other: &CountingSequence) -> bool {
        self.values.starts_with(&other.values)
    }
}

impl fmt::Display for CountingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

fn prefix_ok(prefix: &[usize], patterns: &[Vec<usize>]) -> bool {
    patterns
        .iter()
        .all(|tau| tau.len() > prefix.len() || find_occurrence(prefix, tau, true).is_none())
}

fn extend<F: FnMut(&[usize])>(
    n: usize,
    patterns: &[Vec<usize>],
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    emit: &mut F,
) {
    if prefix.len() == n {
        emit(prefix);
        return;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        prefix.push(v);
        if prefix_ok(prefix, patterns) {
            used[v] = true;
            extend(n, patterns, prefix, used, emit);
            used[v] = false;
        }
        prefix.pop();
    }
}

fn raw_patterns(set: &PatternSet) -> Vec<Vec<usize>> {
    set.iter().map(|p| p.values().to_vec()).collect()
}

/// All avoiders of length `n` whose first entry is `first`.
fn search_from<F: FnMut(&[usize])>(n: usize, first: usize, patterns: &[Vec<usize>], emit: &mut F) {
    let mut prefix = vec![first];
    if !prefix_ok(&prefix, patterns) {
        return;
    }
    let mut used = vec![false; n + 1];
    used[first] = true;
    extend(n, patterns, &mut prefix, &mut used, emit);
}

/// S_n(T) in lexicographic order.
pub fn enumerate_avoiders(n: usize, set: &PatternSet) -> Vec<Permutation> {
    if n == 0 {
        return if Permutation::empty().avoids(set) {
            vec![Permutation::empty()]
        } else {
            Vec::new()
        };
    }
    let patterns = raw_patterns(set);
    // split by first entry; collecting in index order keeps the output lexicographic
    (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            search_from(n, first, &patterns, &mut |p: &[usize]| {
                out.push(Permutation::from_vec_unchecked(p.to_vec()))
            });
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// |S_n(T)| without materializing the avoiders.
pub fn count_avoiders(n: usize, set: &PatternSet) -> u64 {
    if n == 0 {
        return Permutation::empty().avoids(set) as u64;
    }
    let patterns = raw_patterns(set);
    (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            search_from(n, first, &patterns, &mut |_: &[usize]| count += 1);
            count
        })
        .sum()
}

pub fn counting_sequence(
    set: &PatternSet,
    nmax: usize,
    guard: SizeGuard,
) -> Result<CountingSequence> {
    guard.check(nmax)?;
    Ok(CountingSequence {
        values: (0..=nmax)
            .map(|n| BigUint::from(count_avoiders(n, set)))
            .collect(),
    })
}

/// One symmetry class of triples in a [`WilfSearchReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitMatch {
    pub representative: PatternSet,
    pub orbit_size: usize,
    pub class: Option<PatternClass>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WilfSearchReport {
    pub nmax: usize,
    pub target: CountingSequence,
    pub matches: Vec<OrbitMatch>,
    pub orbits_examined: usize,
    pub orbit_size_total: usize,
}

impl WilfSearchReport {
    pub fn to_json(&self) -> Value {
        let target: Vec<Value> = self.target.values.iter().map(big_to_json).collect();
        let matches: Vec<Value> = self
            .matches
            .iter()
            .map(|m| {
                json!({
                    "representative": m.representative.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "orbit_size": m.orbit_size,
                    "class": m.class.map(|c| c.name()),
                })
            })
            .collect();
        json!({
            "nmax": self.nmax,
            "target": target,
            "matches": matches,
            "orbits_examined": self.orbits_examined,
            "orbit_size_total": self.orbit_size_total,
        })
    }
}

pub fn big_to_json(v: &BigUint) -> Value {
    serde_json::from_str(&v.to_string()).expect("decimal integer is valid JSON")
}

/// All C(24, 3) = 2024 triples of distinct 4-letter patterns, grouped by
/// their canonical orbit representative.
pub fn triple_orbits() -> BTreeMap<PatternSet, usize> {
    let s4: Vec<Permutation> = Permutation::all(4).collect();
    let mut orbits = BTreeMap::new();
    for i in 0..s4.len() {
        for j in i + 1..s4.len() {
            for k in j + 1..s4.len() {
                let triple = PatternSet::new([s4[i].clone(), s4[j].clone(), s4[k].clone()]);
                *orbits.entry(triple.canonical()).or_insert(0) += 1;
            }
        }
    }
    orbits
}

/// Finds every symmetry class of triples of 4-letter patterns whose counting
/// sequence agrees with `target` for n ≤ nmax.
pub fn wilf_search(nmax: usize, target: &CountingSequence) -> Result<WilfSearchReport> {
    if nmax < 6 {
        return Err(Error::Precondition(format!(
            "wilf search needs nmax >= 6 to discriminate, got {nmax}"
        )));
    }
    if target.len() < nmax + 1 {
        return Err(Error::Precondition(format!(
            "target has {} terms, need {} for nmax = {nmax}",
            target.len(),
            nmax + 1
        )));
    }
    let target = target.prefix(nmax + 1);
    let orbits: Vec<(PatternSet, usize)> = triple_orbits().into_iter().collect();
    let class_canon: Vec<(PatternClass, PatternSet)> = PatternClass::ALL
        .iter()
        .map(|&c| (c, c.patterns().canonical()))
        .collect();

    // Orbit order is fixed by the BTreeMap, so the collected output does not
    // depend on scheduling.
    let matches: Vec<OrbitMatch> = orbits
        .par_iter()
        .filter(|(rep, _)| {
            (0..=nmax).all(|n| BigUint::from(count_avoiders(n, rep)) == target.values[n])
        })
        .map(|(rep, size)| OrbitMatch {
            representative: rep.clone(),
            orbit_size: *size,
            class: class_canon
                .iter()
                .find(|(_, canon)| canon == rep)
                .map(|(c, _)| *c),
        })
        .collect();

    Ok(WilfSearchReport {
        nmax,
        target,
        matches,
        orbits_examined: orbits.len(),
        orbit_size_total: orbits.iter().map(|(_, s)| s).sum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::schroder_pair;

    fn set(ps: &[&str]) -> PatternSet {
        PatternSet::from_compact(ps).unwrap()
    }

    fn filter_all(n: usize, t: &PatternSet) -> Vec<Permutation> {
        Permutation::all(n).filter(|p| p.avoids(t)).collect()
    }

    #[test]
    fn small_examples() {
        let pi1 = PatternClass::Pi1.patterns();
        assert_eq!(enumerate_avoiders(4, &pi1).len(), 21);
        let two = enumerate_avoiders(2, &schroder_pair());
        assert_eq!(
            two.iter().map(|p| p.compact()).collect::<Vec<_>>(),
            ["12", "21"]
        );
        let pi5 = PatternClass::Pi5.patterns();
        let ending_in_two: Vec<String> = enumerate_avoiders(4, &pi5)
            .into_iter()
            .filter(|p| p.at(4) == 2)
            .map(|p| p.compact())
            .collect();
        assert_eq!(
            ending_in_two,
            ["1342", "1432", "3142", "3412", "4132", "4312"]
        );
    }

    #[test]
    fn counting_sequence_examples() {
        let seq =
            counting_sequence(&PatternClass::Pi1.patterns(), 8, SizeGuard::default()).unwrap();
        assert_eq!(
            seq,
            CountingSequence::from_u64s(&[1, 1, 2, 6, 21, 79, 309, 1237, 5026])
        );
        let seq = counting_sequence(&schroder_pair(), 6, SizeGuard::default()).unwrap();
        assert_eq!(seq, CountingSequence::from_u64s(&[1, 1, 2, 6, 22, 90, 394]));
        let seq = counting_sequence(&PatternSet::default(), 4, SizeGuard::default()).unwrap();
        assert_eq!(seq, CountingSequence::from_u64s(&[1, 1, 2, 6, 24]));
    }

    #[test]
    fn size_guard() {
        let t = PatternClass::Pi1.patterns();
        assert!(matches!(
            counting_sequence(&t, 11, SizeGuard::default()),
            Err(Error::LimitExceeded {
                requested: 11,
                limit: 10
            })
        ));
        assert!(SizeGuard::with_override(true).check(11).is_ok());
    }

    #[test]
    fn pruned_generation_matches_filtering() {
        for t in [
            set(&["1234", "1243", "1342"]),
            set(&["321"]),
            set(&["2413", "3142"]),
            set(&["12"]),
        ] {
            for n in 0..=6 {
                assert_eq!(enumerate_avoiders(n, &t), filter_all(n, &t), "{t} n={n}");
            }
        }
    }

    #[test]
    fn output_is_lexicographic() {
        let all = enumerate_avoiders(6, &PatternClass::Pi4.patterns());
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn orbit_bookkeeping() {
        let orbits = triple_orbits();
        assert_eq!(orbits.values().sum::<usize>(), 2024);
        assert!(orbits.values().all(|s| 8 % s == 0));
        for c in PatternClass::ALL {
            assert!(orbits.contains_key(&c.patterns().canonical()));
        }
    }

    #[test]
    fn search_rejects_short_prefixes() {
        let target = CountingSequence::from_u64s(&[1; 9]);
        assert!(wilf_search(5, &target).is_err());
        assert!(wilf_search(8, &target.prefix(5)).is_err());
    }

    #[test]
    fn search_for_all_ones_is_empty() {
        let report = wilf_search(6, &CountingSequence::from_u64s(&[1; 7])).unwrap();
        assert!(report.matches.is_empty());
        assert_eq!(report.orbit_size_total, 2024);
    }
}
