use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major, arbitrary precision.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds from nested rows; all rows must have the same length.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flat_map(|row| row.iter().map(|&x| x.into())).collect();
        IntMatrix { rows: r, cols: c, data }
    }

    /// Builds from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Negates row `i`.
    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Sub-matrix on the given rows, all columns.
    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(idx.len(), self.cols);
        for (a, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m[(a, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Determinant of a square matrix by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * q;
            self[(dst, j)] -= v;
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * q;
            self[(i, dst)] -= v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Nonzero elementary divisors `d_1 | d_2 | ...` and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub divisors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Product of the nonzero divisors: the order of the cokernel torsion.
    pub fn torsion_order(&self) -> BigInt {
        self.divisors.iter().product()
    }
}

fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
                if v.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Smith normal form by unimodular row and column moves.
///
/// The pivot is always the entry of least absolute value in the active block,
/// which keeps intermediate entries small.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let mut divisors = Vec::new();
    let steps = a.rows.min(a.cols);
    for t in 0..steps {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            // clear column t and row t by Euclidean steps
            let mut dirty = false;
            for i in t + 1..a.rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                a.row_axpy(i, t, &q);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..a.cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                a.col_axpy(j, t, &q);
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a remainder is now smaller than the pivot: re-pivot within row/col t
                let mut best = (t, t);
                for i in t..a.rows {
                    if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t..a.cols {
                    if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[best].abs() {
                        best = (t, j);
                    }
                }
                a.swap_rows(t, best.0);
                a.swap_cols(t, best.1);
                continue;
            }
            // row and column clear; enforce divisibility of the remaining block
            let p = a[(t, t)].clone();
            let offender = (t + 1..a.rows)
                .flat_map(|i| (t + 1..a.cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&p));
            match offender {
                Some((i, _)) => {
                    let neg = -BigInt::one();
                    a.row_axpy(t, i, &neg);
                }
                None => break,
            }
        }
        divisors.push(a[(t, t)].abs());
    }
    let rank = divisors.len();
    SmithForm { divisors, rank }
}

/// gcd of all maximal minors (transposing first when `rows < cols`).
///
/// Computed from the Smith form: the product of the divisors at full rank, else 0.
pub fn maximal_minor_gcd(m: &IntMatrix) -> BigInt {
    let k = m.rows.min(m.cols);
    let snf = smith_normal_form(m);
    if snf.rank < k {
        BigInt::zero()
    } else {
        snf.torsion_order()
    }
}

/// Same quantity by enumerating every maximal minor. Exponential; for
/// validation on small matrices only.
pub fn maximal_minor_gcd_bruteforce(m: &IntMatrix) -> BigInt {
    let m = if m.rows < m.cols { m.transpose() } else { m.clone() };
    let k = m.cols;
    if k == 0 {
        return BigInt::one();
    }
    let mut g = BigInt::zero();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let d = m.select_rows(&idx).determinant();
        g = g.gcd(&d);
        if g.is_one() {
            return g;
        }
        // next k-subset of 0..rows in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| idx[i] < m.rows - k + i) else {
            return g;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_fixed_cases() {
        let d = smith_normal_form(&IntMatrix::from_rows(&[vec![2i64, 0], vec![0, 6]]));
        assert_eq!((d.divisors, d.rank), (big(&[2, 6]), 2));
        let d = smith_normal_form(&IntMatrix::from_rows(&[vec![2i64, 4], vec![6, 8]]));
        assert_eq!((d.divisors, d.rank), (big(&[2, 4]), 2));
        let d = smith_normal_form(&IntMatrix::zeros(3, 2));
        assert_eq!((d.divisors.len(), d.rank), (0, 0));
        // diag(6, 4) is not in Smith form: divisors are 2, 12
        let d = smith_normal_form(&IntMatrix::from_rows(&[vec![6i64, 0], vec![0, 4]]));
        assert_eq!(d.divisors, big(&[2, 12]));
    }

    #[test]
    fn minor_gcd_fixed_cases() {
        assert_eq!(maximal_minor_gcd(&IntMatrix::identity(2)), BigInt::from(1));
        let v = IntMatrix::from_rows(&[vec![2i64], vec![4]]);
        assert_eq!(maximal_minor_gcd(&v), BigInt::from(2));
        assert_eq!(maximal_minor_gcd_bruteforce(&v), BigInt::from(2));
        let z = IntMatrix::from_rows(&[vec![1i64, 2], vec![2, 4], vec![3, 6]]);
        assert_eq!(maximal_minor_gcd(&z), BigInt::zero());
        assert_eq!(maximal_minor_gcd_bruteforce(&z), BigInt::zero());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        fn cofactor(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                        .collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * m[0][j] * cofactor(&minor)
                })
                .sum()
        }
        let rows = vec![vec![0i64, 3, -1, 2], vec![4, 0, 0, 5], vec![-2, 7, 1, 0], vec![1, 1, -3, 0]];
        assert_eq!(IntMatrix::from_rows(&rows).determinant(), BigInt::from(cofactor(&rows)));
        let sing = vec![vec![1i64, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(IntMatrix::from_rows(&sing).determinant(), BigInt::zero());
    }

    #[test]
    fn minor_enumeration_visits_all_subsets() {
        // 4x2 matrix whose only unimodular minor uses rows 2 and 3
        let m = IntMatrix::from_rows(&[vec![2i64, 0], vec![0, 2], vec![1, 0], vec![0, 1]]);
        assert_eq!(maximal_minor_gcd_bruteforce(&m), BigInt::from(1));
        let m = IntMatrix::from_rows(&[vec![2i64, 0], vec![0, 2], vec![2, 2], vec![4, 0]]);
        assert_eq!(maximal_minor_gcd_bruteforce(&m), BigInt::from(4));
        assert_eq!(maximal_minor_gcd(&m), BigInt::from(4));
    }
}
