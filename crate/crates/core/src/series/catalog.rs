//! Every generating function that appears in the enumeration results,
//! assembled from the exact primitives. Each entry is built independently of
//! the others so that identities between them are meaningful checks.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{catalan, catalan_series, sqrt_one_minus_4x, BivariateSeries, PowerSeries};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CatalogName {
    /// (1 − 5x + (1+x)√(1−4x)) / (1 − 5x + (1−x)√(1−4x))
    Main,
    /// indecomposable Schröder paths with at most one peak
    IndecLe1Peak,
    /// Schröder paths with at most one peak per component
    SchroderLe1PeakPerComp,
    /// nonempty Π₄-avoiders, 2x√(1−4x) / (1 − 5x + (1−x)√(1−4x))
    Pi4Nonempty,
    /// Π₅-avoiders assembled from the key-entry decomposition
    Class5F,
    /// 1 + (2x² + x(1−5x)C(x)) / (1 − 4x − x²)
    Class5FRationalized,
    /// indecomposable Π₅-avoiders, x / (1 − x/√(1−4x))
    Class5Indec,
    /// Π₅-avoiders by length (x) and number of components (y), nonempty only
    Class5Bivariate,
}

impl CatalogName {
    pub const ALL: [CatalogName; 8] = [
        CatalogName::Main,
        CatalogName::IndecLe1Peak,
        CatalogName::SchroderLe1PeakPerComp,
        CatalogName::Pi4Nonempty,
        CatalogName::Class5F,
        CatalogName::Class5FRationalized,
        CatalogName::Class5Indec,
        CatalogName::Class5Bivariate,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::Main => "main",
            CatalogName::IndecLe1Peak => "indec_le1peak",
            CatalogName::SchroderLe1PeakPerComp => "schroder_le1peak_per_comp",
            CatalogName::Pi4Nonempty => "pi4_nonempty",
            CatalogName::Class5F => "class5_F",
            CatalogName::Class5FRationalized => "class5_F_rationalized",
            CatalogName::Class5Indec => "class5_indec",
            CatalogName::Class5Bivariate => "class5_bivariate",
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CatalogSeries {
    Univariate(PowerSeries),
    Bivariate(BivariateSeries),
}

impl CatalogSeries {
    pub fn univariate(self) -> Option<PowerSeries> {
        match self {
            CatalogSeries::Univariate(s) => Some(s),
            CatalogSeries::Bivariate(_) => None,
        }
    }

    pub fn bivariate(self) -> Option<BivariateSeries> {
        match self {
            CatalogSeries::Bivariate(s) => Some(s),
            CatalogSeries::Univariate(_) => None,
        }
    }

    /// The univariate view; bivariate entries are evaluated at y = 1.
    pub fn at_y_one(&self) -> PowerSeries {
        match self {
            CatalogSeries::Univariate(s) => s.clone(),
            CatalogSeries::Bivariate(b) => b.at_y_one(),
        }
    }
}

pub fn gf_catalog(name: &str, order: usize) -> Result<CatalogSeries> {
    Ok(build(name.parse()?, order))
}

pub fn build(name: CatalogName, order: usize) -> CatalogSeries {
    use CatalogSeries::{Bivariate, Univariate};
    match name {
        CatalogName::Main => Univariate(main(order)),
        CatalogName::IndecLe1Peak => Univariate(indec_le1peak(order)),
        CatalogName::SchroderLe1PeakPerComp => Univariate(schroder_le1peak_per_comp(order)),
        CatalogName::Pi4Nonempty => Univariate(pi4_nonempty(order)),
        CatalogName::Class5F => Univariate(class5_f(order)),
        CatalogName::Class5FRationalized => Univariate(class5_f_rationalized(order)),
        CatalogName::Class5Indec => Univariate(class5_indec(order)),
        CatalogName::Class5Bivariate => Bivariate(class5_bivariate(order)),
    }
}

fn poly(c: &[i64], order: usize) -> PowerSeries {
    PowerSeries::polynomial(c, order)
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// 1 − 5x + (1 − x)√(1−4x), the shared denominator.
fn kernel_denominator(order: usize) -> PowerSeries {
    let s = sqrt_one_minus_4x(order);
    &poly(&[1, -5], order) + &(&poly(&[1, -1], order) * &s)
}

pub fn main(order: usize) -> PowerSeries {
    let s = sqrt_one_minus_4x(order);
    let numerator = &poly(&[1, -5], order) + &(&poly(&[1, 1], order) * &s);
    numerator
        .checked_div(&kernel_denominator(order), "1-5x+(1-x)sqrt(1-4x)")
        .expect("denominator has constant term 2")
}

pub fn indec_le1peak(order: usize) -> PowerSeries {
    let s = sqrt_one_minus_4x(order);
    let x_over_s = poly(&[0, 1], order)
        .checked_div(&s, "sqrt(1-4x)")
        .expect("sqrt(1-4x) has constant term 1");
    (&(&poly(&[1, 1], order) + &x_over_s) - &s).scale(&half())
}

pub fn schroder_le1peak_per_comp(order: usize) -> PowerSeries {
    sqrt_one_minus_4x(order)
        .scale_int(2)
        .checked_div(&kernel_denominator(order), "1-5x+(1-x)sqrt(1-4x)")
        .expect("denominator has constant term 2")
}

pub fn pi4_nonempty(order: usize) -> PowerSeries {
    let numerator = &poly(&[0, 2], order) * &sqrt_one_minus_4x(order);
    numerator
        .checked_div(&kernel_denominator(order), "1-5x+(1-x)sqrt(1-4x)")
        .expect("denominator has constant term 2")
}

/// 1 + x + 2x² + 3 Σ_{n≥3} C_{n−1} xⁿ + G(x), where
/// G(x) = Σ_{k≥3} x^k (C(x)^k − 1)(1 + C(x))^{k−2}.
pub fn class5_f(order: usize) -> PowerSeries {
    let mut base = vec![BigInt::zero(); order + 1];
    for (n, slot) in base.iter_mut().enumerate() {
        *slot = match n {
            0 | 1 => BigInt::from(1),
            2 => BigInt::from(2),
            _ => BigInt::from(catalan(n as u64 - 1)) * 3,
        };
    }
    let base = PowerSeries::from_integers(base);
    &base + &class5_g(order)
}

pub fn class5_g(order: usize) -> PowerSeries {
    let c = catalan_series(order);
    let one = PowerSeries::one(order);
    let one_plus_c = &one + &c;
    let mut g = PowerSeries::zero(order);
    // x^k kills everything past k > order
    for k in 3..=order {
        let term = &(&c.pow(k) - &one) * &one_plus_c.pow(k - 2);
        g = &g + &term.shift(k);
    }
    g
}

pub fn class5_f_rationalized(order: usize) -> PowerSeries {
    let c = catalan_series(order);
    let numerator = &poly(&[0, 0, 2], order) + &(&poly(&[0, 1, -5], order) * &c);
    let frac = numerator
        .checked_div(&poly(&[1, -4, -1], order), "1-4x-x^2")
        .expect("constant term 1");
    &PowerSeries::one(order) + &frac
}

pub fn class5_indec(order: usize) -> PowerSeries {
    let x_over_s = poly(&[0, 1], order)
        .checked_div(&sqrt_one_minus_4x(order), "sqrt(1-4x)")
        .expect("constant term 1");
    let denom = &PowerSeries::one(order) - &x_over_s;
    poly(&[0, 1], order)
        .checked_div(&denom, "1-x/sqrt(1-4x)")
        .expect("constant term 1")
}

/// 2xy√(1−4x) / (y − 2x − 3xy + (2 − xy − y)√(1−4x)).
pub fn class5_bivariate(order: usize) -> BivariateSeries {
    let lift = |s: &PowerSeries| BivariateSeries::from_series(s);
    let y = BivariateSeries::y(order);
    let s = lift(&sqrt_one_minus_4x(order));
    let x = lift(&poly(&[0, 1], order));
    let xy = &x * &y;
    let numerator = &xy.scale_int(2) * &s;
    let two = lift(&poly(&[2], order));
    let radical_coeff = &(&two - &xy) - &y;
    let rational_part = &(&y - &x.scale_int(2)) - &xy.scale_int(3);
    let denominator = &rational_part + &(&radical_coeff * &s);
    numerator
        .checked_div(&denominator, "y-2x-3xy+(2-xy-y)sqrt(1-4x)")
        .expect("x^0 coefficient of the denominator is the constant 2")
}

/// The same bivariate series built from the component structure:
/// F_indec(x)·y / (1 − x·y·C(x)).
pub fn class5_bivariate_by_components(order: usize) -> BivariateSeries {
    let indec = BivariateSeries::from_series(&class5_indec(order));
    let y = BivariateSeries::y(order);
    let xc = BivariateSeries::from_series(&catalan_series(order).shift(1));
    let one = BivariateSeries::from_series(&PowerSeries::one(order));
    let denom = &one - &(&xc * &y);
    (&indec * &y)
        .checked_div(&denom, "1-xyC(x)")
        .expect("constant term 1")
}

/// 1/(1 − f) for f with zero constant term.
pub fn invert_transform(f: &PowerSeries) -> Result<PowerSeries> {
    if !f.coeff(0).is_zero() {
        return Err(Error::Precondition(format!(
            "invert transform needs a zero constant term, got {}",
            f.coeff(0)
        )));
    }
    let one = PowerSeries::one(f.order());
    one.checked_div(&(&one - f), "1-f")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.integer_coefficients("s")
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn main_series_head() {
        assert_eq!(ints(&main(8)), [1, 1, 2, 6, 21, 79, 309, 1237, 5026]);
    }

    #[test]
    fn numerator_and_denominator_heads() {
        let s = sqrt_one_minus_4x(4);
        let num = &poly(&[1, -5], 4) + &(&poly(&[1, 1], 4) * &s);
        assert_eq!(&ints(&num)[..3], [2, -6, -4]);
        assert_eq!(&ints(&kernel_denominator(4))[..3], [2, -8, 0]);
    }

    #[test]
    fn indecomposable_class5_head() {
        assert_eq!(&ints(&class5_indec(7))[1..], [1, 1, 3, 11, 43, 173, 707]);
        assert_eq!(class5_indec(7).coeff(0), &BigRational::zero());
    }

    #[test]
    fn invert_transform_examples() {
        let x = poly(&[0, 1], 10);
        assert_eq!(ints(&invert_transform(&x).unwrap()), [1; 11]);
        let xc = catalan_series(40).shift(1);
        assert_eq!(invert_transform(&xc).unwrap(), catalan_series(40));
        assert!(invert_transform(&PowerSeries::one(3)).is_err());
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(
            gf_catalog("nope", 5),
            Err(Error::UnknownSeries(_))
        ));
        for name in CatalogName::ALL {
            assert_eq!(name.as_str().parse::<CatalogName>().unwrap(), name);
        }
    }

    #[test]
    fn bivariate_closed_form_matches_component_construction() {
        assert_eq!(class5_bivariate(20), class5_bivariate_by_components(20));
    }
}
