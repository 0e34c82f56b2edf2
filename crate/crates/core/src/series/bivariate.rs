use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::PowerSeries;
use crate::error::{Error, Result};

/// A polynomial in y, lowest degree first, without trailing zeros.
pub type YPoly = Vec<BigRational>;

fn trim(mut p: YPoly) -> YPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_add(a: &[BigRational], b: &[BigRational]) -> YPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> YPoly {
    let neg: YPoly = b.iter().map(|c| -c).collect();
    poly_add(a, &neg)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> YPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// A series in x truncated after x^order whose coefficients are exact
/// polynomials in y.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariateSeries {
    rows: Vec<YPoly>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            rows: vec![Vec::new(); order + 1],
        }
    }

    pub fn from_rows(rows: Vec<YPoly>) -> Self {
        assert!(!rows.is_empty());
        BivariateSeries {
            rows: rows.into_iter().map(trim).collect(),
        }
    }

    /// Embeds a univariate series as the y^0 part.
    pub fn from_series(s: &PowerSeries) -> Self {
        BivariateSeries {
            rows: s.coeffs().iter().map(|c| trim(vec![c.clone()])).collect(),
        }
    }

    pub fn y(order: usize) -> Self {
        let mut s = BivariateSeries::zero(order);
        s.rows[0] = vec![BigRational::zero(), BigRational::one()];
        s
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[BigRational] {
        &self.rows[n]
    }

    /// Coefficient of x^n y^k.
    pub fn coeff(&self, n: usize, k: usize) -> BigRational {
        self.rows[n]
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale_int(&self, c: i64) -> Self {
        let c = BigRational::from_integer(BigInt::from(c));
        BivariateSeries {
            rows: self
                .rows
                .iter()
                .map(|r| trim(r.iter().map(|a| a * &c).collect()))
                .collect(),
        }
    }

    /// Sets y = 1.
    pub fn at_y_one(&self) -> PowerSeries {
        PowerSeries::from_coeffs(
            self.rows
                .iter()
                .map(|r| r.iter().fold(BigRational::zero(), |acc, c| acc + c))
                .collect(),
        )
    }

    /// Division is supported when the divisor's x^0 coefficient is a nonzero
    /// constant (degree 0 in y), which keeps every quotient row polynomial.
    pub fn checked_div(&self, divisor: &BivariateSeries, divisor_name: &str) -> Result<Self> {
        let lead = &divisor.rows[0];
        if lead.len() != 1 {
            return Err(Error::ZeroConstantTerm {
                name: format!("{divisor_name} (x^0 coefficient must be a nonzero constant in y)"),
            });
        }
        let inv = BigRational::one() / &lead[0];
        let order = self.order().min(divisor.order());
        let mut q: Vec<YPoly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.rows[n].clone();
            for i in 1..=n {
                acc = poly_sub(&acc, &poly_mul(&divisor.rows[i], &q[n - i]));
            }
            q.push(trim(acc.iter().map(|c| c * &inv).collect()));
        }
        Ok(BivariateSeries { rows: q })
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        let order = self.order().min(rhs.order());
        BivariateSeries {
            rows: (0..=order)
                .map(|i| poly_add(&self.rows[i], &rhs.rows[i]))
                .collect(),
        }
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;

    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        let order = self.order().min(rhs.order());
        BivariateSeries {
            rows: (0..=order)
                .map(|i| poly_sub(&self.rows[i], &rhs.rows[i]))
                .collect(),
        }
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;

    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        let order = self.order().min(rhs.order());
        let mut rows: Vec<YPoly> = vec![Vec::new(); order + 1];
        for i in 0..=order {
            if self.rows[i].is_empty() {
                continue;
            }
            for j in 0..=order - i {
                let prod = poly_mul(&self.rows[i], &rhs.rows[j]);
                rows[i + j] = poly_add(&rows[i + j], &prod);
            }
        }
        BivariateSeries { rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn geometric_series_in_xy() {
        // 1 / (1 - x*y) = Σ x^n y^n
        let order = 6;
        let x = BivariateSeries::from_series(&PowerSeries::polynomial(&[0, 1], order));
        let xy = &x * &BivariateSeries::y(order);
        let denom = &BivariateSeries::from_series(&PowerSeries::one(order)) - &xy;
        let q = BivariateSeries::from_series(&PowerSeries::one(order))
            .checked_div(&denom, "1-xy")
            .unwrap();
        for n in 0..=order {
            for k in 0..=order {
                assert_eq!(q.coeff(n, k), r((n == k) as i64));
            }
        }
        assert_eq!(q.at_y_one(), PowerSeries::polynomial(&[1; 7], order));
    }

    #[test]
    fn divisor_must_have_constant_leading_row() {
        let y = BivariateSeries::y(3);
        assert!(BivariateSeries::zero(3).checked_div(&y, "y").is_err());
    }
}
