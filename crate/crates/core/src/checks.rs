//! The acceptance suite. Each criterion recomputes its claim from scratch by
//! at least two independent routes; `verify` and the integration tests both
//! run these.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;

use crate::class5::{
    check_structure, count_class5, count_class5_indec, enumerate_constructions, Class5Construction,
};
use crate::classes::{schroder_pair, PatternClass};
use crate::enumerate::{
    count_avoiders, counting_sequence, enumerate_avoiders, wilf_search, CountingSequence, SizeGuard,
};
use crate::perm::Permutation;
use crate::recurrence::{
    count_via_recurrence, empirical_table, verify_kernel_identity, RecurrenceTable,
};
use crate::schroder::{enumerate_paths, peak_census, phi, phi_inverse, SchroderPath};
use crate::series::{binomial, catalan, catalog, gen_catalan};

pub const TARGET: [u64; 9] = [1, 1, 2, 6, 21, 79, 309, 1237, 5026];

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl CheckOutcome {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed <= b)
    }

    pub fn ok(&self) -> bool {
        self.passed && self.within_budget()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        let budget = match self.budget {
            Some(b) => format!(" / budget {}s", b.as_secs()),
            None => String::new(),
        };
        write!(
            f,
            "[{status}] {:>2}. {} ({:.2}s{budget}): {}",
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type CheckFn = fn() -> Result<String, String>;

struct Criterion {
    name: &'static str,
    budget_secs: Option<u64>,
    run: CheckFn,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        name: "five-class agreement",
        budget_secs: Some(300),
        run: five_class_agreement,
    },
    Criterion {
        name: "generating-function agreement",
        budget_secs: Some(60),
        run: generating_function_agreement,
    },
    Criterion {
        name: "Wilf classification",
        budget_secs: Some(1800),
        run: wilf_classification,
    },
    Criterion {
        name: "recurrence fidelity",
        budget_secs: None,
        run: recurrence_fidelity,
    },
    Criterion {
        name: "kernel identity",
        budget_secs: None,
        run: kernel_identity,
    },
    Criterion {
        name: "bijection suite",
        budget_secs: Some(600),
        run: bijection_suite,
    },
    Criterion {
        name: "peak censuses",
        budget_secs: None,
        run: peak_censuses,
    },
    Criterion {
        name: "class-5 formula and structure",
        budget_secs: None,
        run: class5_formula,
    },
    Criterion {
        name: "indecomposable and bivariate checks",
        budget_secs: None,
        run: indecomposable_and_bivariate,
    },
    Criterion {
        name: "generalized Catalan identity",
        budget_secs: None,
        run: generalized_catalan_identity,
    },
];

pub fn count() -> usize {
    CRITERIA.len()
}

/// Runs criterion `id` (1-based).
pub fn run(id: usize) -> Option<CheckOutcome> {
    let c = CRITERIA.get(id.checked_sub(1)?)?;
    let start = Instant::now();
    let result = (c.run)();
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CheckOutcome {
        id,
        name: c.name,
        passed,
        detail,
        elapsed,
        budget: c.budget_secs.map(Duration::from_secs),
    })
}

pub fn run_all() -> Vec<CheckOutcome> {
    (1..=CRITERIA.len()).filter_map(run).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn target() -> CountingSequence {
    CountingSequence::from_u64s(&TARGET)
}

fn five_class_agreement() -> Result<String, String> {
    for class in PatternClass::ALL {
        let seq = counting_sequence(&class.patterns(), 8, SizeGuard::default())
            .map_err(|e| e.to_string())?;
        ensure(seq == target(), || format!("{class}: got {seq}"))?;
    }
    Ok(format!("all five classes give {}", target()))
}

fn series_integers(s: &crate::series::PowerSeries) -> Result<Vec<BigInt>, String> {
    s.integer_coefficients("series").map_err(|e| e.to_string())
}

fn generating_function_agreement() -> Result<String, String> {
    let coeffs = series_integers(&catalog::main(100))?;
    let brute: Vec<BigInt> = (0..=8)
        .map(|n| BigInt::from(count_avoiders(n, &PatternClass::Pi1.patterns())))
        .collect();
    ensure(coeffs[..=8] == brute[..], || {
        format!("series head {:?} vs brute force {:?}", &coeffs[..=8], brute)
    })?;
    for class in [PatternClass::Pi1, PatternClass::Pi2, PatternClass::Pi3] {
        let rec = count_via_recurrence(class, 100).map_err(|e| e.to_string())?;
        for (n, (c, r)) in coeffs.iter().zip(&rec.values).enumerate() {
            ensure(*c == BigInt::from(r.clone()), || {
                format!("{class} n = {n}: series {c}, recurrence {r}")
            })?;
        }
    }
    Ok("series = brute force for n <= 8 and = recurrence for n <= 100".into())
}

fn wilf_classification() -> Result<String, String> {
    let report = wilf_search(8, &target()).map_err(|e| e.to_string())?;
    ensure(report.orbit_size_total == 2024, || {
        format!("orbit sizes sum to {}", report.orbit_size_total)
    })?;
    let classes: BTreeSet<_> = report.matches.iter().filter_map(|m| m.class).collect();
    ensure(report.matches.len() == 5 && classes.len() == 5, || {
        let reps: Vec<String> = report
            .matches
            .iter()
            .map(|m| m.representative.to_string())
            .collect();
        format!("matching orbits: {}", reps.join(" "))
    })?;
    Ok(format!(
        "{} orbits over 2024 triples, exactly 5 match and they are the five classes",
        report.orbits_examined
    ))
}

fn recurrence_fidelity() -> Result<String, String> {
    for class in [PatternClass::Pi1, PatternClass::Pi2, PatternClass::Pi3] {
        let tables = RecurrenceTable::tables(class, 8).map_err(|e| e.to_string())?;
        for n in 3..=8 {
            let empirical = empirical_table(n, class).map_err(|e| e.to_string())?;
            ensure(tables[n - 1] == empirical, || {
                format!("{class} n = {n}: tables differ")
            })?;
        }
    }
    let t2 = RecurrenceTable::tables(PatternClass::Pi2, 50).map_err(|e| e.to_string())?;
    let t3 = RecurrenceTable::tables(PatternClass::Pi3, 50).map_err(|e| e.to_string())?;
    for (x, y) in t2.iter().zip(&t3) {
        ensure(x.a == y.a && x.b == y.b, || {
            format!("pi2 and pi3 tables differ at n = {}", x.n)
        })?;
    }
    Ok("tables match enumeration for 3 <= n <= 8; pi2 = pi3 for n <= 50".into())
}

fn kernel_identity() -> Result<String, String> {
    let check = verify_kernel_identity(40).map_err(|e| e.to_string())?;
    ensure(check.holds, || format!("residual {}", check.residual))?;
    Ok("residual vanishes to order 40".into())
}

fn bijection_suite() -> Result<String, String> {
    const R: [usize; 7] = [1, 2, 6, 22, 90, 394, 1806];
    let pi4 = PatternClass::Pi4.patterns();
    for n in 1..=7 {
        let avoiders = enumerate_avoiders(n, &schroder_pair());
        let mut images = BTreeSet::new();
        let mut pi4_images = BTreeSet::new();
        for p in &avoiders {
            let path = phi(p).map_err(|e| e.to_string())?;
            let back = phi_inverse(&path).map_err(|e| e.to_string())?;
            ensure(&back == p, || {
                format!("phi roundtrip failed: {p} -> {path} -> {back}")
            })?;
            if p.avoids(&pi4) {
                pi4_images.insert(path.clone());
            }
            images.insert(path);
        }
        ensure(
            images.len() == avoiders.len() && images.len() == R[n - 1],
            || {
                format!(
                    "n = {n}: {} avoiders, {} distinct images",
                    avoiders.len(),
                    images.len()
                )
            },
        )?;
        let all: BTreeSet<SchroderPath> = enumerate_paths(n - 1, SizeGuard::default())
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        ensure(images == all, || {
            format!("n = {n}: image is not all Schroder paths")
        })?;
        let le1: BTreeSet<SchroderPath> = all
            .into_iter()
            .filter(|p| p.at_most_one_peak_per_component())
            .collect();
        ensure(pi4_images == le1, || {
            format!(
                "n = {n}: pi4 image has {} paths, expected {}",
                pi4_images.len(),
                le1.len()
            )
        })?;
    }
    Ok("phi is a bijection onto Schroder (n-1)-paths and pi4 maps onto <=1 peak per component, n <= 7".into())
}

fn peak_censuses() -> Result<String, String> {
    for n in 1..=9usize {
        let census = peak_census(n, SizeGuard::default()).map_err(|e| e.to_string())?;
        let big = |v: u64| BigUint::from(v);
        ensure(big(census.with_peaks(0)) == catalan(n as u64), || {
            format!("n = {n}: no-peak count")
        })?;
        ensure(
            big(census.with_peaks(1)) == binomial(2 * n as i64 - 1, n as i64 - 1),
            || format!("n = {n}: one-peak count"),
        )?;
        if n >= 2 {
            ensure(
                big(census.indecomposable_with_peaks(0)) == catalan(n as u64 - 1),
                || format!("n = {n}: indecomposable no-peak count"),
            )?;
            ensure(
                big(census.indecomposable_with_peaks(1))
                    == binomial(2 * n as i64 - 3, n as i64 - 2),
                || format!("n = {n}: indecomposable one-peak count"),
            )?;
        }
    }
    Ok("censuses match C_n, binom(2n-1,n-1), C_(n-1), binom(2n-3,n-2) for n <= 9".into())
}

fn class5_formula() -> Result<String, String> {
    let pi5 = PatternClass::Pi5.patterns();
    for n in 3..=9 {
        let brute = BigUint::from(count_avoiders(n, &pi5));
        let formula = count_class5(n);
        ensure(brute == formula, || {
            format!("n = {n}: formula {formula}, brute force {brute}")
        })?;
    }
    for n in 1..=8 {
        let all: Vec<Permutation> = Permutation::all(n).collect();
        let bad = all
            .par_iter()
            .find_any(|p| check_structure(p).holds() != p.avoids(&pi5));
        ensure(bad.is_none(), || {
            format!(
                "structure test disagrees with avoidance at {}",
                bad.unwrap()
            )
        })?;
    }
    for n in 4..=7 {
        let mut seen = BTreeSet::new();
        for c in enumerate_constructions(n) {
            let p = c.assemble().map_err(|e| e.to_string())?;
            ensure(
                Class5Construction::from_permutation(&p).as_ref() == Some(&c),
                || format!("n = {n}: {p} does not decompose back to its choices"),
            )?;
            ensure(seen.insert(p.clone()), || {
                format!("n = {n}: {p} constructed twice")
            })?;
        }
        let stratum: BTreeSet<Permutation> = enumerate_avoiders(n, &pi5)
            .into_iter()
            .filter(|p| (2..=n - 2).contains(&p.at(n)))
            .collect();
        ensure(seen == stratum, || {
            format!(
                "n = {n}: constructed {} of {} avoiders with 3 <= a <= n-1",
                seen.len(),
                stratum.len()
            )
        })?;
    }
    Ok(
        "formula = brute force n <= 9, structure theorem n <= 8, construction bijective n <= 7"
            .into(),
    )
}

fn indecomposable_and_bivariate() -> Result<String, String> {
    let got: Vec<BigUint> = (1..=7).map(count_class5_indec).collect();
    let want: Vec<BigUint> = [1u64, 1, 3, 11, 43, 173, 707]
        .into_iter()
        .map(BigUint::from)
        .collect();
    ensure(got == want, || format!("indecomposable counts {got:?}"))?;

    let bivariate = catalog::class5_bivariate(40);
    let pi5 = PatternClass::Pi5.patterns();
    for n in 1..=8 {
        let mut census = vec![0u64; n + 1];
        for p in enumerate_avoiders(n, &pi5) {
            census[p.components().len()] += 1;
        }
        for (k, &count) in census.iter().enumerate() {
            let coeff = bivariate.coeff(n, k);
            ensure(coeff == BigRational::from_integer(count.into()), || {
                format!("x^{n} y^{k}: series {coeff}, census {count}")
            })?;
        }
    }
    ensure(bivariate.at_y_one() == catalog::pi4_nonempty(40), || {
        "bivariate at y = 1 differs".into()
    })?;
    Ok("1,1,3,11,43,173,707; component census n <= 8; y = 1 specialization to order 40".into())
}

fn generalized_catalan_identity() -> Result<String, String> {
    for b in 0..=12i64 {
        for k in 3..=12i64 {
            let lhs: BigUint = (0..=b)
                .map(|i| binomial(i + k - 2, i) * gen_catalan(b - i, i))
                .sum();
            let rhs = gen_catalan(b, k - 1);
            ensure(lhs == rhs, || format!("b = {b}, k = {k}: {lhs} vs {rhs}"))?;
        }
    }
    Ok("holds for 0 <= b <= 12, 3 <= k <= 12".into())
}
