//! Tropical tori `N_R / Λ` given by a rational period matrix, curve classes
//! and the half-open fundamental parallelogram.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmath::{int, IntMatrix, Rational};
use crate::plane::{self, Point};
use crate::{Error, Result};

/// Denominator of sampled point coordinates (a prime).
pub const SAMPLE_DENOMINATOR: i64 = 1_000_000_007;

/// Period matrix `S`; its columns are a basis of `Λ` in `N` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropicalTorus {
    period: [[Rational; 2]; 2],
    inverse: [[Rational; 2]; 2],
}

impl TropicalTorus {
    pub fn new(period: [[Rational; 2]; 2]) -> Result<Self> {
        let d = &period[0][0] * &period[1][1] - &period[0][1] * &period[1][0];
        if d.is_zero() {
            return Err(Error::Domain("period matrix is singular".into()));
        }
        let inverse = [[&period[1][1] / &d, -&period[0][1] / &d], [-&period[1][0] / &d, &period[0][0] / &d]];
        Ok(TropicalTorus { period, inverse })
    }

    pub fn from_i64(s: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(s.map(|row| row.map(int)))
    }

    pub fn period(&self) -> &[[Rational; 2]; 2] {
        &self.period
    }

    pub fn det(&self) -> Rational {
        let s = &self.period;
        &s[0][0] * &s[1][1] - &s[0][1] * &s[1][0]
    }

    /// `S x`: Λ-coordinates to N-coordinates.
    pub fn to_plane(&self, x: &Point) -> Point {
        mat_vec(&self.period, x)
    }

    /// `S^{-1} p`: N-coordinates to Λ-coordinates.
    pub fn to_lattice_coords(&self, p: &Point) -> Point {
        mat_vec(&self.inverse, p)
    }

    /// `S λ` for an integer winding.
    pub fn period_vector(&self, lambda: [i64; 2]) -> Point {
        self.to_plane(&plane::ipoint(lambda))
    }

    /// All entries integral.
    pub fn is_integral(&self) -> bool {
        self.period.iter().flatten().all(BigRational::is_integer)
    }
}

fn mat_vec(m: &[[Rational; 2]; 2], x: &Point) -> Point {
    [&m[0][0] * &x[0] + &m[0][1] * &x[1], &m[1][0] * &x[0] + &m[1][1] * &x[1]]
}

/// Integer 2x2 matrix, read as a map `Λ* -> N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    pub m: [[i64; 2]; 2],
}

impl CurveClass {
    pub fn new(m: [[i64; 2]; 2]) -> Self {
        CurveClass { m }
    }

    /// Row-major `a,b,c,d` for `[[a,b],[c,d]]`.
    pub fn from_flat(v: [i64; 4]) -> Self {
        CurveClass { m: [[v[0], v[1]], [v[2], v[3]]] }
    }

    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn scaled(&self, k: i64) -> Self {
        CurveClass { m: self.m.map(|r| r.map(|x| k * x)) }
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(|&x| x == 0)
    }

    /// Divides every entry by `k`, if exact.
    pub fn divided(&self, k: i64) -> Option<Self> {
        if k == 0 || self.m.iter().flatten().any(|x| x % k != 0) {
            return None;
        }
        Some(CurveClass { m: self.m.map(|r| r.map(|x| x / k)) })
    }

    /// `C S^T`, a rational 2x2 matrix, symmetric iff the class is realizable.
    pub fn gram(&self, t: &TropicalTorus) -> [[Rational; 2]; 2] {
        let s = t.period();
        let c = self.m.map(|r| r.map(int));
        let mut q: [[Rational; 2]; 2] = Default::default();
        for i in 0..2 {
            for j in 0..2 {
                q[i][j] = &c[i][0] * &s[j][0] + &c[i][1] * &s[j][1];
            }
        }
        q
    }

    /// Rational multiple of `other` (including zero multiples).
    pub fn is_proportional_to(&self, other: &CurveClass) -> bool {
        let a: Vec<i64> = self.m.iter().flatten().copied().collect();
        let b: Vec<i64> = other.m.iter().flatten().copied().collect();
        (0..4).all(|i| (0..4).all(|j| a[i] * b[j] == a[j] * b[i]))
    }
}

/// A point of the torus in Λ-coordinates, each in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    coords: Point,
}

impl TorusPoint {
    pub fn new(coords: Point) -> Result<Self> {
        let zero = int(0);
        let one = int(1);
        if coords.iter().any(|x| x < &zero || x >= &one) {
            return Err(Error::Domain("torus point coordinates must lie in [0, 1)".into()));
        }
        Ok(TorusPoint { coords })
    }

    pub fn coords(&self) -> &Point {
        &self.coords
    }

    /// Representative in the fundamental parallelogram, in N-coordinates.
    pub fn in_plane(&self, t: &TropicalTorus) -> Point {
        t.to_plane(&self.coords)
    }
}

pub fn is_realizable(c: &CurveClass, t: &TropicalTorus) -> bool {
    let q = c.gram(t);
    q[0][1] == q[1][0]
}

/// Largest integer dividing the class.
pub fn class_integral_length(c: &CurveClass) -> Result<i64> {
    if c.is_zero() {
        return Err(Error::Domain("the zero class has no integral length".into()));
    }
    Ok(c.m.iter().flatten().fold(0i64, |g, &x| g.gcd(&x)))
}

/// The symmetry defect `(C S^T)_{01} - (C S^T)_{10}` as an integer linear form
/// on `(c00, c01, c10, c11)`, denominators cleared.
fn realizability_form(t: &TropicalTorus) -> [BigInt; 4] {
    let s = t.period();
    let coeffs = [s[1][0].clone(), s[1][1].clone(), -&s[0][0], -&s[0][1]];
    let l = coeffs.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    coeffs.map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
}

/// Rank of the lattice of integer classes `C` with `C S^T` symmetric.
pub fn realizable_lattice_rank(t: &TropicalTorus) -> usize {
    let form = realizability_form(t);
    4 - IntMatrix::from_vec(1, 4, form.to_vec()).rank()
}

/// Realizable classes `C'` not proportional to `C` such that `C' S^T` and
/// `(C - C') S^T` are both nonzero and positive semidefinite.
///
/// Such a split is necessary for a reducible curve of class `C` to exist, so an
/// empty result means every curve in class `C` is irreducible.
pub fn splitting_classes(c: &CurveClass, t: &TropicalTorus) -> Vec<CurveClass> {
    let q = c.gram(t);
    let d = if q[0][0] > q[1][1] { q[0][0].clone() } else { q[1][1].clone() };
    // C' = Q' S^{-T} and |Q'_ij| <= max diag(Q) when 0 <= Q' <= Q
    let inv = {
        let s = t.period();
        let det = t.det();
        [[&s[1][1] / &det, -&s[1][0] / &det], [-&s[0][1] / &det, &s[0][0] / &det]]
    };
    let bound: Vec<i64> = (0..2)
        .map(|j| {
            let col: Rational = (0..2).map(|k| inv[k][j].abs()).sum();
            (&d * col).ceil().to_integer().to_i64().expect("bounded search box")
        })
        .collect();
    let psd_nonzero = |m: &[[Rational; 2]; 2]| {
        let zero = int(0);
        m[0][0] >= zero
            && m[1][1] >= zero
            && &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0] >= zero
            && m.iter().flatten().any(|x| !x.is_zero())
    };
    let mut out = Vec::new();
    for a in -bound[0]..=bound[0] {
        for b in -bound[1]..=bound[1] {
            for cc in -bound[0]..=bound[0] {
                for dd in -bound[1]..=bound[1] {
                    let part = CurveClass::new([[a, b], [cc, dd]]);
                    if part.is_proportional_to(c) || !is_realizable(&part, t) {
                        continue;
                    }
                    let qp = part.gram(t);
                    let rest =
                        [[&q[0][0] - &qp[0][0], &q[0][1] - &qp[0][1]], [&q[1][0] - &qp[1][0], &q[1][1] - &qp[1][1]]];
                    if psd_nonzero(&qp) && psd_nonzero(&rest) {
                        out.push(part);
                    }
                }
            }
        }
    }
    out
}

/// Realizable and with no splitting class.
pub fn is_generic_for(c: &CurveClass, t: &TropicalTorus) -> bool {
    is_realizable(c, t) && splitting_classes(c, t).is_empty()
}

/// Writes `p = S (coords + winding)` with `coords` in `[0, 1)^2`.
pub fn reduce_to_fundamental(p: &Point, t: &TropicalTorus) -> (TorusPoint, [i64; 2]) {
    let x = t.to_lattice_coords(p);
    let w = x.clone().map(|v| v.floor());
    let coords = [&x[0] - &w[0], &x[1] - &w[1]];
    let winding = w.map(|v| v.to_integer().to_i64().expect("winding fits in i64"));
    (TorusPoint { coords }, winding)
}

/// `g` pseudo-random points with coordinates `k / SAMPLE_DENOMINATOR`.
pub fn sample_generic_points(_t: &TropicalTorus, g: usize, seed: u64) -> Vec<TorusPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..g)
        .map(|_| {
            let mut coord = || {
                let k: i64 = rng.gen_range(0..SAMPLE_DENOMINATOR);
                BigRational::new(BigInt::from(k), BigInt::from(SAMPLE_DENOMINATOR))
            };
            let x = coord();
            let y = coord();
            TorusPoint { coords: [x, y] }
        })
        .collect()
}
