//! Small exact vector helpers for the plane `N_R = Q^2`.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::exactmath::{int, Rational};

/// A point or vector with rational coordinates.
pub type Point = [Rational; 2];

/// An integer vector, used for slopes and windings.
pub type IVec = [i64; 2];

pub fn point(x: Rational, y: Rational) -> Point {
    [x, y]
}

pub fn ipoint(v: IVec) -> Point {
    [int(v[0]), int(v[1])]
}

pub fn add(a: &Point, b: &Point) -> Point {
    [&a[0] + &b[0], &a[1] + &b[1]]
}

pub fn sub(a: &Point, b: &Point) -> Point {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

pub fn scale(k: &Rational, a: &Point) -> Point {
    [k * &a[0], k * &a[1]]
}

pub fn neg(a: &Point) -> Point {
    [-&a[0], -&a[1]]
}

/// `det(a, b) = a_x b_y - a_y b_x`.
pub fn det(a: &Point, b: &Point) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

pub fn idet(a: IVec, b: IVec) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

pub fn iadd(a: IVec, b: IVec) -> IVec {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn isub(a: IVec, b: IVec) -> IVec {
    [a[0] - b[0], a[1] - b[1]]
}

pub fn ineg(a: IVec) -> IVec {
    [-a[0], -a[1]]
}

pub fn iscale(k: i64, a: IVec) -> IVec {
    [k * a[0], k * a[1]]
}

/// gcd of the two entries (0 for the zero vector).
pub fn content(a: IVec) -> i64 {
    a[0].gcd(&a[1])
}

/// Splits a nonzero integer vector as `w * u` with `u` primitive and `w >= 1`.
pub fn split_weight(a: IVec) -> Option<(i64, IVec)> {
    let w = content(a);
    (w != 0).then(|| (w, [a[0] / w, a[1] / w]))
}

pub fn is_integral(p: &Point) -> bool {
    p.iter().all(|x| x.is_integer())
}

pub fn to_ivec(p: &Point) -> Option<IVec> {
    use num_traits::ToPrimitive;
    if !is_integral(p) {
        return None;
    }
    Some([p[0].to_integer().to_i64()?, p[1].to_integer().to_i64()?])
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn weight_split() {
        assert_eq!(split_weight([4, -6]), Some((2, [2, -3])));
        assert_eq!(split_weight([0, -3]), Some((3, [0, -1])));
        assert_eq!(split_weight([0, 0]), None);
    }

    #[test]
    fn determinant_is_antisymmetric() {
        let a = [rat(1, 2), rat(3, 1)];
        let b = [rat(-2, 3), rat(5, 7)];
        assert_eq!(det(&a, &b), -det(&b, &a));
        assert_eq!(det(&a, &a), int(0));
    }
}
