use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A power series truncated after the x^order term, with exact rational
/// coefficients. Binary operations keep the smaller of the two orders.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series keeps at least the constant term"
        );
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The polynomial with the given integer coefficients, truncated or
    /// zero-padded to `order`.
    pub fn polynomial(coeffs: &[i64], order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        for (i, &c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[i] = BigRational::from_integer(BigInt::from(c));
        }
        s
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        PowerSeries::from_coeffs(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Multiplies by x^k, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut s = PowerSeries::zero(self.order());
        for i in k..=self.order() {
            s.coeffs[i] = self.coeffs[i - k].clone();
        }
        s
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = PowerSeries::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self / divisor`; `divisor_name` identifies the divisor in the error.
    pub fn checked_div(&self, divisor: &PowerSeries, divisor_name: &str) -> Result<Self> {
        let d0 = divisor.coeff(0);
        if d0.is_zero() {
            return Err(Error::ZeroConstantTerm {
                name: divisor_name.to_string(),
            });
        }
        let order = self.order().min(divisor.order());
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..=n {
                acc -= &divisor.coeffs[i] * &q[n - i];
            }
            q.push(acc / d0);
        }
        Ok(PowerSeries { coeffs: q })
    }

    pub fn recip(&self, name: &str) -> Result<Self> {
        PowerSeries::one(self.order()).checked_div(self, name)
    }

    /// Coefficients as integers; fails at the first non-integral one.
    pub fn integer_coefficients(&self, name: &str) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral {
                        name: name.to_string(),
                        index,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.integer_coefficients("s")
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c.clone()).unwrap())
            .collect()
    }

    #[test]
    fn product_and_geometric_series() {
        let a = PowerSeries::polynomial(&[1, 1], 5);
        let b = PowerSeries::polynomial(&[1, -1], 5);
        assert_eq!(ints(&(&a * &b)), [1, 0, -1, 0, 0, 0]);
        let geo = b.recip("1-x").unwrap();
        assert_eq!(ints(&geo), [1; 6]);
    }

    #[test]
    fn division_by_zero_constant_term_names_the_divisor() {
        let x = PowerSeries::polynomial(&[0, 1], 4);
        let err = PowerSeries::one(4).checked_div(&x, "x").unwrap_err();
        assert!(matches!(err, Error::ZeroConstantTerm { ref name } if name == "x"));
    }

    #[test]
    fn orders_combine_to_the_minimum() {
        let a = PowerSeries::one(3);
        let b = PowerSeries::one(7);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!(b.checked_div(&a, "a").unwrap().order(), 3);
    }

    #[test]
    fn non_integral_coefficient_is_reported() {
        let half = PowerSeries::polynomial(&[1, 1], 3).scale(&BigRational::new(1.into(), 2.into()));
        assert!(matches!(
            half.integer_coefficients("half"),
            Err(Error::NonIntegral { index: 0, .. })
        ));
    }

    #[test]
    fn pow_and_shift() {
        let a = PowerSeries::polynomial(&[1, 1], 4);
        assert_eq!(ints(&a.pow(3)), [1, 3, 3, 1, 0]);
        assert_eq!(ints(&a.pow(0)), [1, 0, 0, 0, 0]);
        assert_eq!(ints(&a.shift(2)), [0, 0, 1, 1, 0]);
    }

    #[test]
    fn display() {
        let a = PowerSeries::polynomial(&[1, 0, -2], 3);
        assert_eq!(a.to_string(), "1 + -2*x^2 + O(x^4)");
    }
}
