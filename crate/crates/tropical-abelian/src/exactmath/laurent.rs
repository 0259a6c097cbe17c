use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Laurent polynomial in `q^{1/2}` with integer coefficients.
///
/// Keys are doubled exponents: the key `3` stands for `q^{3/2}`. No zero
/// coefficient is ever stored, so structural equality is value equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentHalf {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentHalf {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, BigInt::from(c))
    }

    /// `c * q^{doubled_exp / 2}`.
    pub fn monomial(doubled_exp: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(doubled_exp, c);
        }
        LaurentHalf { terms }
    }

    /// Builds from `(doubled exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^{doubled_exp / 2}`.
    pub fn coeff(&self, doubled_exp: i64) -> BigInt {
        self.terms.get(&doubled_exp).cloned().unwrap_or_default()
    }

    /// `(doubled exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `coeff(k) == coeff(-k)` for every `k`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e, c * k)))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `q -> q^m`.
    pub fn substitute(&self, m: u64) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        let m = m as i64;
        LaurentHalf { terms: self.terms.iter().map(|(&e, c)| (e * m, c.clone())).collect() }
    }
}

impl Add for &LaurentHalf {
    type Output = LaurentHalf;
    fn add(self, rhs: &LaurentHalf) -> LaurentHalf {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Mul for &LaurentHalf {
    type Output = LaurentHalf;
    fn mul(self, rhs: &LaurentHalf) -> LaurentHalf {
        let mut out = LaurentHalf::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl std::iter::Sum for LaurentHalf {
    fn sum<I: Iterator<Item = LaurentHalf>>(iter: I) -> Self {
        iter.fold(LaurentHalf::zero(), |a, b| &a + &b)
    }
}

fn fmt_power(e: i64) -> String {
    match e {
        2 => "q".to_string(),
        _ if e % 2 == 0 => format!("q^{}", e / 2),
        _ => format!("q^({}/2)", e),
    }
}

/// Highest power first, e.g. `2q^3 + 4q^2 + 18q + 40 + 18q^-1`.
impl fmt::Display for LaurentHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", fmt_power(e))?;
            } else {
                write!(f, "{mag}{}", fmt_power(e))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentHalf({self})")
    }
}

/// `[a]_q = q^{(a-1)/2} + q^{(a-3)/2} + ... + q^{-(a-1)/2}`.
pub fn quantum_integer(a: i64) -> Result<LaurentHalf> {
    if a < 1 {
        return Err(Error::Domain(format!("quantum integer needs a >= 1, got {a}")));
    }
    Ok(LaurentHalf::from_terms((0..a).map(|i| (a - 1 - 2 * i, BigInt::one()))))
}

pub fn laurent_mul(p: &LaurentHalf, r: &LaurentHalf) -> LaurentHalf {
    p * r
}

pub fn laurent_eval_one(p: &LaurentHalf) -> BigInt {
    p.eval_one()
}

pub fn laurent_substitute(p: &LaurentHalf, m: u64) -> LaurentHalf {
    p.substitute(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Builds a polynomial in integer powers of q from (power, coeff).
    fn qpoly(terms: &[(i64, i64)]) -> LaurentHalf {
        LaurentHalf::from_terms(terms.iter().map(|&(e, c)| (2 * e, BigInt::from(c))))
    }

    fn qint(a: i64) -> LaurentHalf {
        quantum_integer(a).unwrap()
    }

    #[test]
    fn quantum_integers_small() {
        assert_eq!(qint(1), LaurentHalf::one());
        assert_eq!(qint(2), LaurentHalf::from_terms([(1, BigInt::one()), (-1, BigInt::one())]));
        let four: Vec<i64> = qint(4).terms().map(|(e, _)| e).collect();
        assert_eq!(four, vec![-3, -1, 1, 3]);
        assert!(quantum_integer(0).is_err());
        assert!(quantum_integer(-2).is_err());
    }

    #[test]
    fn quantum_integer_from_defining_quotient() {
        // (q^{a/2} - q^{-a/2}) = [a]_q * (q^{1/2} - q^{-1/2})
        let denom = LaurentHalf::from_terms([(1, BigInt::one()), (-1, -BigInt::one())]);
        for a in 1..30 {
            let numer = LaurentHalf::from_terms([(a, BigInt::one()), (-a, -BigInt::one())]);
            assert_eq!(&qint(a) * &denom, numer);
        }
    }

    #[test]
    fn products() {
        assert_eq!(&qint(2) * &qint(2), qpoly(&[(1, 1), (0, 2), (-1, 1)]));
        let p = qpoly(&[(3, -2), (0, 5)]);
        assert_eq!(laurent_mul(&p, &LaurentHalf::one()), p);
        assert_eq!(&qint(4) * &qint(4), qpoly(&[(3, 1), (2, 2), (1, 3), (0, 4), (-1, 3), (-2, 2), (-3, 1)]));
        assert!((&qint(4) * &qint(4)).is_symmetric());
    }

    #[test]
    fn evaluation_at_one() {
        for a in 1..=10 {
            assert_eq!(qint(a).eval_one(), BigInt::from(a));
        }
        assert_eq!(qpoly(&[(1, 1), (0, 2), (-1, 1)]).eval_one(), BigInt::from(4));
        assert_eq!(LaurentHalf::zero().eval_one(), BigInt::zero());
    }

    #[test]
    fn substitution() {
        assert_eq!(laurent_substitute(&qint(2), 4), qpoly(&[(2, 1), (-2, 1)]));
        let p = qpoly(&[(2, 3), (-1, 1)]);
        assert_eq!(p.substitute(1), p);
        // [4]^2 written as [2^2]^{2g-2} * m(q^4) with g = 2, m = 1
        let lhs = &qint(4).pow(2) * &LaurentHalf::one().substitute(4);
        assert_eq!(lhs, qpoly(&[(3, 1), (2, 2), (1, 3), (0, 4), (-1, 3), (-2, 2), (-3, 1)]));
    }

    #[test]
    fn display() {
        let bg = qpoly(&[(3, 2), (2, 4), (1, 18), (0, 40), (-1, 18), (-2, 4), (-3, 2)]);
        assert_eq!(bg.to_string(), "2q^3 + 4q^2 + 18q + 40 + 18q^-1 + 4q^-2 + 2q^-3");
        assert_eq!(qint(2).to_string(), "q^(1/2) + q^(-1/2)");
        assert_eq!(qpoly(&[(0, -1), (1, -3)]).to_string(), "-3q - 1");
        assert_eq!(LaurentHalf::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = qpoly(&[(1, 2), (0, 1)]);
        let m = p.scale(&BigInt::from(-1));
        let s = &p + &m;
        assert!(s.is_zero());
        assert_eq!(s.len(), 0);
    }
}
