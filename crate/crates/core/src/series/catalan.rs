//! Catalan numbers, the generalized Catalan family C_{n,k} and the series
//! √(1−4x) and C(x) built from them.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::PowerSeries;

/// binom(n, k), zero whenever n < 0, k < 0 or k > n.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

/// C_{n,k} = (k+1)/(2n+k+1)·binom(2n+k+1, n), the coefficient of x^n in
/// C(x)^{k+1}, with C_{0,-1} = 1 and C_{n,k} = 0 for n < 0, k < −1, or
/// k = −1 with n > 0.
pub fn gen_catalan(n: i64, k: i64) -> BigUint {
    if n < 0 || k < -1 {
        return BigUint::zero();
    }
    if k == -1 {
        return if n == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let top = 2 * n + k + 1;
    binomial(top, n) * BigUint::from((k + 1) as u64) / BigUint::from(top as u64)
}

/// √(1−4x) to order N: 1, then −2·C_{n−1}.
pub fn sqrt_one_minus_4x(order: usize) -> PowerSeries {
    PowerSeries::from_integers((0..=order as u64).map(|n| {
        if n == 0 {
            BigInt::one()
        } else {
            -BigInt::from(catalan(n - 1)) * 2
        }
    }))
}

/// C(x) = Σ C_n x^n.
pub fn catalan_series(order: usize) -> PowerSeries {
    PowerSeries::from_integers((0..=order as u64).map(|n| BigInt::from(catalan(n))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn catalan_values() {
        let expected = [
            1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
        ];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n as u64), u(c));
            assert_eq!(gen_catalan(n as i64, 0), u(c));
        }
    }

    #[test]
    fn generalized_catalan_conventions() {
        assert_eq!(gen_catalan(1, 2), u(3));
        assert_eq!(gen_catalan(0, -1), u(1));
        assert_eq!(gen_catalan(3, -1), u(0));
        assert_eq!(gen_catalan(-1, 4), u(0));
        assert_eq!(gen_catalan(2, -2), u(0));
        assert_eq!(gen_catalan(0, 7), u(1));
    }

    #[test]
    fn generalized_catalan_is_a_convolution_power() {
        let c = catalan_series(15);
        for k in 0..6i64 {
            let power = c.pow(k as usize + 1);
            for n in 0..=15 {
                assert_eq!(
                    power.coeff(n).to_integer(),
                    BigInt::from(gen_catalan(n as i64, k)),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn sqrt_leading_coefficients() {
        let s = sqrt_one_minus_4x(7);
        let got: Vec<i64> = s
            .integer_coefficients("s")
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(got, [1, -2, -2, -4, -10, -28, -84, -264]);
    }

    #[test]
    fn sqrt_squares_to_one_minus_4x() {
        let s = sqrt_one_minus_4x(50);
        assert_eq!(&s * &s, PowerSeries::polynomial(&[1, -4], 50));
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), u(10));
        assert_eq!(binomial(0, 0), u(1));
        assert_eq!(binomial(-1, 0), u(0));
        assert_eq!(binomial(3, 4), u(0));
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }
}
