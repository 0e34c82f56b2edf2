use serde::Serialize;

use super::counting::ending_in_one_213;
use super::decompose::{decompose, key_indices};
use crate::enumerate::enumerate_avoiders;
use crate::error::{Error, Result};
use crate::perm::{standardize, PatternSet, Permutation};

/// Parameters of a Π₅-avoider with 3 ≤ a ≤ n−1: |A|, the number of key
/// entries, the number of B entries after the first key entry, and the
/// 1-based position of n among the keys.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Class5Params {
    pub n: usize,
    pub a: usize,
    pub k: usize,
    pub i: usize,
    pub j: usize,
}

impl Class5Params {
    pub fn b(&self) -> usize {
        self.n - self.a
    }
}

/// The independent choices that determine one avoider.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Class5Construction {
    pub params: Class5Params,
    /// St(A): a 213-avoider of length a ending in 1.
    pub a_choice: Permutation,
    /// St(B): a 321-avoider of length b whose last i entries increase.
    pub b_choice: Permutation,
    /// How many of the last i entries of B sit before each non-first key.
    pub distribution: Vec<usize>,
}

fn bad(msg: String) -> Error {
    Error::Precondition(msg)
}

fn single(pattern: &str) -> PatternSet {
    PatternSet::from_compact(&[pattern]).expect("valid pattern")
}

pub fn construct(
    params: &Class5Params,
    a_choice: &Permutation,
    b_choice: &Permutation,
    distribution: &[usize],
) -> Result<Permutation> {
    let Class5Params { n, a, k, i, j } = *params;
    if !(3 <= k && k <= a && a < n) {
        return Err(bad(format!(
            "need 3 <= k <= a <= n-1, got n = {n}, a = {a}, k = {k}"
        )));
    }
    let b = n - a;
    if i > b {
        return Err(bad(format!("need i <= b = {b}, got i = {i}")));
    }
    if a_choice.len() != a || a_choice.values().last() != Some(&1) {
        return Err(bad(format!(
            "A choice {a_choice} must have length {a} and end in 1"
        )));
    }
    if !a_choice.avoids(&single("213")) {
        return Err(bad(format!("A choice {a_choice} contains 213")));
    }
    let keys = key_indices(a_choice.values());
    if keys.len() != k {
        return Err(bad(format!(
            "A choice {a_choice} has {} key entries, not {k}",
            keys.len()
        )));
    }
    if a_choice.position_of(a) != j {
        return Err(bad(format!(
            "A choice {a_choice} has its maximum at {}, not {j}",
            a_choice.position_of(a)
        )));
    }
    if b_choice.len() != b || !b_choice.avoids(&single("321")) {
        return Err(bad(format!(
            "B choice {b_choice} must be a 321-avoider of length {b}"
        )));
    }
    let bv = b_choice.values();
    if bv[b - i..].windows(2).any(|w| w[0] > w[1]) {
        return Err(bad(format!(
            "last {i} entries of B choice {b_choice} are not increasing"
        )));
    }
    if distribution.len() != k - 1 || distribution.iter().sum::<usize>() != i {
        return Err(bad(format!(
            "distribution {distribution:?} must split {i} into {} parts",
            k - 1
        )));
    }

    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&bv[..b - i]);
    let mut tail = bv[b - i..].iter().copied();
    let mut parts = distribution.iter();
    for (t, &v) in a_choice.values().iter().enumerate() {
        if t > 0 && keys.contains(&t) {
            let take = *parts.next().expect("one part per non-first key");
            out.extend(tail.by_ref().take(take));
        }
        out.push(v + b);
    }
    Ok(Permutation::new(out).expect("assembled a permutation"))
}

impl Class5Construction {
    pub fn assemble(&self) -> Result<Permutation> {
        construct(
            &self.params,
            &self.a_choice,
            &self.b_choice,
            &self.distribution,
        )
    }

    /// Reads the choices back off a permutation with 3 ≤ a ≤ n−1. No
    /// avoidance check is made; `assemble` rejects whatever does not fit.
    pub fn from_permutation(p: &Permutation) -> Option<Class5Construction> {
        let n = p.len();
        let d = decompose(p);
        let a = d.a.len();
        if a < 3 || a >= n {
            return None;
        }
        let a_choice = standardize(&d.a);
        let j = a_choice.position_of(a);
        let values = p.values();
        let last = values[n - 1];
        let mut distribution = Vec::with_capacity(d.key_positions.len().saturating_sub(1));
        for &pos in &d.key_positions[1..] {
            let run = values[..pos - 1]
                .iter()
                .rev()
                .take_while(|&&v| v < last)
                .count();
            distribution.push(run);
        }
        Some(Class5Construction {
            params: Class5Params {
                n,
                a,
                k: d.keys.len(),
                i: d.i(),
                j,
            },
            a_choice,
            b_choice: standardize(&d.b),
            distribution,
        })
    }
}

fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every tuple of valid choices for length n, over 3 ≤ a ≤ n−1.
pub fn enumerate_constructions(n: usize) -> Vec<Class5Construction> {
    let mut out = Vec::new();
    for a in 3..n {
        let b = n - a;
        let b_choices = enumerate_avoiders(b, &single("321"));
        for a_choice in ending_in_one_213(a) {
            let k = key_indices(a_choice.values()).len();
            let j = a_choice.position_of(a);
            for i in 0..=b {
                let distributions = weak_compositions(i, k - 1);
                for b_choice in &b_choices {
                    let bv = b_choice.values();
                    if bv[b - i..].windows(2).any(|w| w[0] > w[1]) {
                        continue;
                    }
                    for distribution in &distributions {
                        out.push(Class5Construction {
                            params: Class5Params { n, a, k, i, j },
                            a_choice: a_choice.clone(),
                            b_choice: b_choice.clone(),
                            distribution: distribution.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}
