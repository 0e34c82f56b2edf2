//! Direct counts for Π₅-avoiders and the 213/321 ingredients they are built
//! from. Each closed form has a brute-force oracle beside it.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::decompose::key_indices;
use crate::classes::PatternClass;
use crate::enumerate::enumerate_avoiders;
use crate::error::{Error, Result};
use crate::perm::{PatternSet, Permutation};
use crate::series::{binomial, catalan, gen_catalan};

fn c(n: usize, k: i64) -> BigUint {
    gen_catalan(n as i64, k)
}

fn avoiders_of(n: usize, pattern: &str) -> Vec<Permutation> {
    enumerate_avoiders(
        n,
        &PatternSet::from_compact(&[pattern]).expect("valid pattern"),
    )
}

/// 213-avoiders of length n ending in 1.
pub(crate) fn ending_in_one_213(n: usize) -> Vec<Permutation> {
    avoiders_of(n, "213")
        .into_iter()
        .filter(|p| p.values().last() == Some(&1))
        .collect()
}

pub fn key_count(p: &Permutation) -> usize {
    key_indices(p.values()).len()
}

/// 213-avoiders on [n] ending in 1 with n in position j and k key entries:
/// binom(k−2, j−1)·C_{n−k, k−2−j}.
pub fn prop15(n: usize, j: usize, k: usize) -> BigUint {
    if j == 0 || k < 2 || j > k - 1 || k > n {
        return BigUint::zero();
    }
    binomial(k as i64 - 2, j as i64 - 1) * c(n - k, k as i64 - 2 - j as i64)
}

pub fn prop15_oracle(n: usize, j: usize, k: usize) -> u64 {
    ending_in_one_213(n)
        .iter()
        .filter(|p| p.position_of(n) == j && key_count(p) == k)
        .count() as u64
}

/// w(n,k) = Σ_{j=1}^{n−1} binom(k−2, j−1)·C_{n−k, k−2−j}.
pub fn w(n: usize, k: usize) -> BigUint {
    if k > n || k == 0 {
        return BigUint::zero();
    }
    (1..n)
        .map(|j| binomial(k as i64 - 2, j as i64 - 1) * c(n - k, k as i64 - 2 - j as i64))
        .sum()
}

pub fn count_key_213_oracle(n: usize, k: usize) -> u64 {
    ending_in_one_213(n)
        .iter()
        .filter(|p| key_count(p) == k)
        .count() as u64
}

fn tail_increasing(p: &Permutation, i: usize) -> bool {
    let v = p.values();
    v[v.len() - i..].windows(2).all(|w| w[0] < w[1])
}

/// 321-avoiders on [n] whose last i entries increase: C_{n−i, i}.
pub fn count_321_tail(n: usize, i: usize) -> Result<BigUint> {
    if i > n {
        return Err(Error::Precondition(format!(
            "need 0 <= i <= n, got i = {i}, n = {n}"
        )));
    }
    Ok(c(n - i, i as i64))
}

pub fn count_321_tail_oracle(n: usize, i: usize) -> u64 {
    avoiders_of(n, "321")
        .iter()
        .filter(|p| i <= n && tail_increasing(p, i))
        .count() as u64
}

/// |Sₙ(Π₅)| from the key-entry decomposition.
pub fn count_class5(n: usize) -> BigUint {
    if n <= 2 {
        return BigUint::from([1u32, 1, 2][n]);
    }
    let mut total = catalan(n as u64 - 1) * 3u32;
    for a in 3..n {
        for k in 3..=a {
            total += w(a, k) * c(n - a, k as i64 - 1);
        }
    }
    total
}

/// Avoiders of length n whose A part has length a, for a ∈ {1, 2, n}.
pub fn count_a_cases(n: usize, a: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "the a = 1, 2, n cases overlap for n < 3, got n = {n}"
        )));
    }
    if a != 1 && a != 2 && a != n {
        return Err(Error::Precondition(format!(
            "a must be 1, 2 or n = {n}, got {a}"
        )));
    }
    Ok(catalan(n as u64 - 1))
}

/// The same counts read off from the characterizations.
pub fn count_a_cases_oracle(n: usize, a: usize) -> u64 {
    let pi5 = PatternClass::Pi5.patterns();
    let last = n + 1 - a;
    enumerate_avoiders(n, &pi5)
        .iter()
        .filter(|p| p.values().last() == Some(&last))
        .count() as u64
}

/// Indecomposable Π₅-avoiders of length n.
pub fn count_class5_indec(n: usize) -> BigUint {
    match n {
        0 => return BigUint::zero(),
        1 | 2 => return BigUint::one(),
        _ => {}
    }
    let mut total = catalan(n as u64 - 2) + catalan(n as u64 - 1);
    for a in 3..n {
        let b = n - a;
        for k in 3..=a {
            let wk = w(a, k);
            for i in 0..=b {
                total += &wk * c(b - i, i as i64 - 1) * binomial((i + k - 2) as i64, i as i64);
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn w_examples() {
        assert_eq!(w(2, 2), big(1));
        assert_eq!(w(3, 3), big(2));
        assert_eq!(count_key_213_oracle(2, 2), 1);
        assert_eq!(count_key_213_oracle(3, 3), 2);
    }

    #[test]
    fn w_matches_oracle() {
        for n in 2..=7 {
            for k in 1..=n {
                assert_eq!(w(n, k), big(count_key_213_oracle(n, k)), "w({n},{k})");
            }
        }
    }

    #[test]
    fn prop15_matches_oracle() {
        for n in 2..=7 {
            for k in 2..=n {
                assert_eq!(prop15(n, 1, k), c(n - k, k as i64 - 3));
                for j in 1..=n {
                    assert_eq!(
                        prop15(n, j, k),
                        big(prop15_oracle(n, j, k)),
                        "({n},{j},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn printed_position_formula_drops_a_binomial() {
        // n = 5, k = 4, j = 2: two permutations, while C_{1,0} = 1
        assert_eq!(prop15_oracle(5, 2, 4), 2);
        assert_eq!(c(1, 0), big(1));
    }

    #[test]
    fn tail_counts() {
        for n in 0..=7 {
            assert_eq!(count_321_tail(n, 0).unwrap(), catalan(n as u64));
            assert_eq!(count_321_tail(n, n).unwrap(), big(1));
            for i in 0..=n {
                assert_eq!(
                    count_321_tail(n, i).unwrap(),
                    big(count_321_tail_oracle(n, i))
                );
            }
        }
        assert_eq!(count_321_tail(4, 2).unwrap(), big(9));
        assert!(count_321_tail(2, 3).is_err());
    }

    #[test]
    fn class5_counts() {
        let expected = [1u64, 1, 2, 6, 21, 79, 309, 1237, 5026];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(count_class5(n), big(e), "n = {n}");
        }
    }

    #[test]
    fn a_cases() {
        assert_eq!(count_a_cases(5, 1).unwrap(), big(14));
        assert_eq!(count_a_cases(4, 4).unwrap(), big(5));
        assert_eq!(count_a_cases(4, 2).unwrap(), big(5));
        assert!(count_a_cases(2, 1).is_err());
        assert!(count_a_cases(5, 3).is_err());
        for n in 3..=7 {
            for a in [1, 2, n] {
                assert_eq!(
                    count_a_cases(n, a).unwrap(),
                    big(count_a_cases_oracle(n, a))
                );
            }
        }
    }

    #[test]
    fn indecomposable_counts() {
        let got: Vec<BigUint> = (1..=7).map(count_class5_indec).collect();
        let want: Vec<BigUint> = [1u64, 1, 3, 11, 43, 173, 707]
            .into_iter()
            .map(big)
            .collect();
        assert_eq!(got, want);
        let pi5 = PatternClass::Pi5.patterns();
        let brute = enumerate_avoiders(3, &pi5)
            .iter()
            .filter(|p| p.is_indecomposable())
            .count();
        assert_eq!(brute, 3);
    }
}
