//! Counts for classes `(1, n)` in any genus, and the series identity they
//! satisfy.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactmath::{compositions, divisors, quantum_integer, sigma1, LaurentHalf};

/// `g Σ_{a_1+..+a_{g-1}=n} Π_i Σ_{k|a_i} k (a_i/k)^2`; zero when `n < g - 1`.
pub fn closed_form_n_1n(g: usize, n: u64) -> BigInt {
    assert!(g >= 2, "genus must be at least 2");
    let total: BigInt = compositions(n, g - 1)
        .iter()
        .map(|parts| {
            parts
                .iter()
                .map(|&a| divisors(a).iter().map(|&k| BigInt::from(k * (a / k) * (a / k))).sum::<BigInt>())
                .product::<BigInt>()
        })
        .sum();
    total * BigInt::from(g)
}

/// Refined version: `(a/k)^2` becomes `[a/k]_q^2`.
pub fn closed_form_bg_1n(g: usize, n: u64) -> LaurentHalf {
    assert!(g >= 2, "genus must be at least 2");
    let factor = |a: u64| -> LaurentHalf {
        divisors(a)
            .iter()
            .map(|&k| {
                let qi = quantum_integer((a / k) as i64).expect("positive");
                (&qi * &qi).scale(&BigInt::from(k))
            })
            .sum()
    };
    let total: LaurentHalf = compositions(n, g - 1)
        .iter()
        .map(|parts| parts.iter().fold(LaurentHalf::one(), |acc, &a| &acc * &factor(a)))
        .sum();
    total.scale(&BigInt::from(g))
}

/// `g [y^n] (Σ_{m>=1} m σ(m) y^m)^{g-1}` for `n = 1..=n_max`, by truncated
/// power-series products.
pub fn series_coefficients(g: usize, n_max: usize, sigma: impl Fn(u64) -> u64) -> Vec<BigInt> {
    assert!(g >= 2, "genus must be at least 2");
    let base: Vec<BigInt> =
        (0..=n_max).map(|m| if m == 0 { BigInt::zero() } else { BigInt::from(m as u64 * sigma(m as u64)) }).collect();
    let mut acc = vec![BigInt::zero(); n_max + 1];
    acc[0] = BigInt::from(1);
    for _ in 0..g - 1 {
        let mut next = vec![BigInt::zero(); n_max + 1];
        for (i, a) in acc.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in base.iter().enumerate().take(n_max + 1 - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc.into_iter().skip(1).map(|c| c * BigInt::from(g)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinRow {
    pub n: u64,
    pub closed_form: BigInt,
    pub series: BigInt,
}

pub fn eisenstein_table(g: usize, n_max: usize) -> Vec<EisensteinRow> {
    let series = series_coefficients(g, n_max, |m| sigma1(m as i64).expect("positive"));
    series
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            let n = i as u64 + 1;
            EisensteinRow { n, closed_form: closed_form_n_1n(g, n), series: s }
        })
        .collect()
}

pub fn eisenstein_series_check(g: usize, n_max: usize) -> bool {
    eisenstein_series_check_with(g, n_max, |m| sigma1(m as i64).expect("positive"))
}

/// Same comparison with the divisor sum on the series side replaced.
pub fn eisenstein_series_check_with(g: usize, n_max: usize, sigma: impl Fn(u64) -> u64) -> bool {
    series_coefficients(g, n_max, sigma).iter().enumerate().all(|(i, s)| *s == closed_form_n_1n(g, i as u64 + 1))
}
