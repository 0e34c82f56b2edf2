//! Counting Π₁-, Π₂- and Π₃-avoiders by their first one or two entries.
//!
//! For a class Π, a_n(i) counts avoiders of length n starting with i and
//! b_n(i) counts those whose first two entries are
//!
//! * Π₁: (i, n−1)
//! * Π₂: (i, i+1)
//! * Π₃: (i, n)
//!
//! All three classes obey the same interior recurrence
//! a_n(i) = Σ_{j≤i} a_{n−1}(j) + b_n(i) and b_n(i) = Σ_{j≤i} b_{n−1}(j) for
//! 1 ≤ i ≤ n−3, and differ only in where the boundary values of b_n sit.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::classes::PatternClass;
use crate::enumerate::{enumerate_avoiders, CountingSequence};
use crate::error::{Error, Result};
use crate::series::{sqrt_one_minus_4x, PowerSeries};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecurrenceTable {
    pub n: usize,
    pub class: PatternClass,
    /// a_n(1..=n), stored 0-based.
    pub a: Vec<BigUint>,
    /// b_n(1..=n), stored 0-based.
    pub b: Vec<BigUint>,
}

fn check_class(class: PatternClass) -> Result<()> {
    match class {
        PatternClass::Pi1 | PatternClass::Pi2 | PatternClass::Pi3 => Ok(()),
        other => Err(Error::Precondition(format!(
            "the first-entry recurrence covers pi1, pi2 and pi3 only, not {other}"
        ))),
    }
}

fn prefix_sums(v: &[BigUint]) -> Vec<BigUint> {
    let mut acc = BigUint::zero();
    v.iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

fn to_big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

impl RecurrenceTable {
    /// The directly computed tables for n = 1 and n = 2.
    pub fn seed(class: PatternClass, n: usize) -> Result<Self> {
        check_class(class)?;
        let (a, b) = match (n, class) {
            (1, _) => (vec![1], vec![0]),
            (2, PatternClass::Pi1) => (vec![1, 1], vec![0, 1]),
            (2, _) => (vec![1, 1], vec![1, 0]),
            _ => {
                return Err(Error::Precondition(format!(
                    "seed tables exist for n = 1, 2 only, not {n}"
                )))
            }
        };
        Ok(RecurrenceTable {
            n,
            class,
            a: to_big(&a),
            b: to_big(&b),
        })
    }

    /// Σᵢ a_n(i) = |S_n(Π)|.
    pub fn total(&self) -> BigUint {
        self.a.iter().sum()
    }

    pub fn b_total(&self) -> BigUint {
        self.b.iter().sum()
    }

    /// The table for n+1, given this table (n) and the one before it (n−1).
    pub fn advance(&self, previous: &RecurrenceTable) -> Result<RecurrenceTable> {
        if self.n < 2 {
            return Err(Error::Precondition(format!(
                "advance produces n >= 3 from seeded tables; got a table for n = {}",
                self.n
            )));
        }
        if previous.n + 1 != self.n || previous.class != self.class {
            return Err(Error::Precondition(format!(
                "previous table must be {} at n = {}, got {} at n = {}",
                self.class,
                self.n - 1,
                previous.class,
                previous.n
            )));
        }
        let m = self.n + 1;
        let a_sums = prefix_sums(&self.a);
        let b_sums = prefix_sums(&self.b);
        let mut a = Vec::with_capacity(m);
        let mut b = Vec::with_capacity(m);
        for i in 0..m - 3 {
            b.push(b_sums[i].clone());
            a.push(&a_sums[i] + &b_sums[i]);
        }
        let total = self.total();
        let before = previous.total();
        a.extend([total.clone(), total.clone(), total]);
        match self.class {
            PatternClass::Pi1 => b.extend([before.clone(), BigUint::zero(), before]),
            _ => b.extend([before.clone(), before, BigUint::zero()]),
        }
        Ok(RecurrenceTable {
            n: m,
            class: self.class,
            a,
            b,
        })
    }

    /// Tables for n = 1..=nmax.
    pub fn tables(class: PatternClass, nmax: usize) -> Result<Vec<RecurrenceTable>> {
        let mut out = Vec::with_capacity(nmax);
        if nmax == 0 {
            check_class(class)?;
            return Ok(out);
        }
        out.push(RecurrenceTable::seed(class, 1)?);
        if nmax >= 2 {
            out.push(RecurrenceTable::seed(class, 2)?);
        }
        while out.len() < nmax {
            let len = out.len();
            let next = out[len - 1].advance(&out[len - 2])?;
            out.push(next);
        }
        Ok(out)
    }
}

/// |S_n(Π)| for n = 0..=nmax via the recurrence, using a two-level window.
pub fn count_via_recurrence(class: PatternClass, nmax: usize) -> Result<CountingSequence> {
    check_class(class)?;
    let mut values = vec![BigUint::one()];
    if nmax >= 1 {
        values.push(BigUint::one());
    }
    if nmax >= 2 {
        let mut previous = RecurrenceTable::seed(class, 1)?;
        let mut current = RecurrenceTable::seed(class, 2)?;
        values.push(current.total());
        for _ in 3..=nmax {
            let next = current.advance(&previous)?;
            values.push(next.total());
            previous = std::mem::replace(&mut current, next);
        }
    }
    Ok(CountingSequence { values })
}

/// The table read off from the avoiders themselves.
pub fn empirical_table(n: usize, class: PatternClass) -> Result<RecurrenceTable> {
    check_class(class)?;
    let mut a = vec![0u64; n];
    let mut b = vec![0u64; n];
    for p in enumerate_avoiders(n, &class.patterns()) {
        let first = p.at(1);
        a[first - 1] += 1;
        if n < 2 {
            continue;
        }
        let second = p.at(2);
        let marked = match class {
            PatternClass::Pi1 => second == n - 1,
            PatternClass::Pi2 => second == first + 1,
            _ => second == n,
        };
        if marked {
            b[first - 1] += 1;
        }
    }
    Ok(RecurrenceTable {
        n,
        class,
        a: to_big(&a),
        b: to_big(&b),
    })
}

#[derive(Clone, Debug)]
pub struct KernelIdentityCheck {
    pub holds: bool,
    /// A(x,1) = Σ a_n xⁿ for Π₁.
    pub a_series: PowerSeries,
    /// B(x,1) = Σ (Σᵢ b_n(i)) xⁿ for Π₁.
    pub b_series: PowerSeries,
    pub residual: PowerSeries,
}

/// Checks B(x,1) = x(√(1−4x) − 1)/2 + (2x² + x − x√(1−4x))/2 · A(x,1) to
/// order `nmax`, with both sides built from the Π₁ tables.
pub fn verify_kernel_identity(nmax: usize) -> Result<KernelIdentityCheck> {
    if nmax < 2 {
        return Err(Error::Precondition(format!(
            "kernel identity check needs nmax >= 2, got {nmax}"
        )));
    }
    let tables = RecurrenceTable::tables(PatternClass::Pi1, nmax)?;
    let mut a_coeffs = vec![BigRational::one()];
    let mut b_coeffs = vec![BigRational::zero()];
    for t in &tables {
        a_coeffs.push(BigRational::from_integer(t.total().into()));
        b_coeffs.push(BigRational::from_integer(t.b_total().into()));
    }
    let a_series = PowerSeries::from_coeffs(a_coeffs);
    let b_series = PowerSeries::from_coeffs(b_coeffs);

    let half = BigRational::new(1.into(), 2.into());
    let s = sqrt_one_minus_4x(nmax);
    let x = PowerSeries::polynomial(&[0, 1], nmax);
    let first = (&x * &(&s - &PowerSeries::one(nmax))).scale(&half);
    let factor = (&PowerSeries::polynomial(&[0, 1, 2], nmax) - &(&x * &s)).scale(&half);
    let rhs = &first + &(&factor * &a_series);
    let residual = &b_series - &rhs;
    let holds = residual.coeffs().iter().all(Zero::is_zero);
    Ok(KernelIdentityCheck {
        holds,
        a_series,
        b_series,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|x| u64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn seeds_and_first_steps_for_pi1() {
        let t = RecurrenceTable::tables(PatternClass::Pi1, 4).unwrap();
        assert_eq!(small(&t[1].a), [1, 1]);
        assert_eq!(small(&t[1].b), [0, 1]);
        assert_eq!(small(&t[2].b), [1, 0, 1]);
        assert_eq!(t[2].total(), BigUint::from(6u32));
        assert_eq!(small(&t[3].b), [1, 2, 0, 2]);
        assert_eq!(small(&t[3].a), [3, 6, 6, 6]);
    }

    #[test]
    fn advance_rejects_small_or_mismatched_inputs() {
        let t1 = RecurrenceTable::seed(PatternClass::Pi1, 1).unwrap();
        let t2 = RecurrenceTable::seed(PatternClass::Pi1, 2).unwrap();
        assert!(t1.advance(&t1).is_err());
        assert!(t2.advance(&t2).is_err());
        let other = RecurrenceTable::seed(PatternClass::Pi2, 1).unwrap();
        assert!(t2.advance(&other).is_err());
        assert!(RecurrenceTable::seed(PatternClass::Pi4, 1).is_err());
        assert!(count_via_recurrence(PatternClass::Pi5, 3).is_err());
    }

    #[test]
    fn recurrence_counts() {
        let seq = count_via_recurrence(PatternClass::Pi1, 8).unwrap();
        assert_eq!(
            seq,
            CountingSequence::from_u64s(&[1, 1, 2, 6, 21, 79, 309, 1237, 5026])
        );
        assert_eq!(count_via_recurrence(PatternClass::Pi1, 0).unwrap().len(), 1);
        assert_eq!(
            count_via_recurrence(PatternClass::Pi2, 100).unwrap(),
            count_via_recurrence(PatternClass::Pi3, 100).unwrap()
        );
    }

    #[test]
    fn empirical_small_cases() {
        let t = empirical_table(3, PatternClass::Pi1).unwrap();
        assert_eq!(small(&t.b), [1, 0, 1]);
        let t = empirical_table(4, PatternClass::Pi2).unwrap();
        assert_eq!(small(&t.a), [3, 6, 6, 6]);
        let rec = RecurrenceTable::tables(PatternClass::Pi3, 5).unwrap();
        assert_eq!(empirical_table(5, PatternClass::Pi3).unwrap(), rec[4]);
    }

    #[test]
    fn kernel_identity_low_order() {
        let check = verify_kernel_identity(2).unwrap();
        assert!(check.holds);
        assert!(verify_kernel_identity(1).is_err());
        let check = verify_kernel_identity(6).unwrap();
        let b: Vec<_> = check.b_series.integer_coefficients("B").unwrap();
        let b: Vec<i64> = b.into_iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(&b[..5], [0, 0, 1, 2, 5]);
        assert!(check.holds);
    }
}
