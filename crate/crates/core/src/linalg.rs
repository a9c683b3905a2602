//! Exact linear algebra over the rationals.
//!
//! Every dimension, rank, and coordinate computed by this crate goes through
//! [`RatMatrix`] or [`RowEchelon`]; there is no floating point anywhere.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Self { rows, cols, entries }
    }

    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::from_vec(rows, cols, entries.iter().map(|&x| rat(x)).collect())
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            entries.extend(r);
        }
        Self::from_vec(n, cols, entries)
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_vec(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_vec(self.rows, self.cols, self.entries.iter().map(|x| x * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Self::from_vec(self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Self::from_vec(self.rows, self.cols, entries)
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut m = Self::zeros(self.rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        m
    }

    /// Places `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Self::from_vec(self.rows + other.rows, self.cols, entries)
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    /// Reduced row echelon form together with the pivot column of each nonzero row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).recip();
            for k in c..m.cols {
                let v = m.get(lead, k) * &inv;
                m.set(lead, k, v);
            }
            for r in 0..m.rows {
                if r == lead || m.get(r, c).is_zero() {
                    continue;
                }
                let f = m.get(r, c).clone();
                for k in c..m.cols {
                    let v = m.get(r, k) - &f * m.get(lead, k);
                    m.set(r, k, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one column vector per free column of the
    /// reduced echelon form, in increasing free-column order.
    pub fn kernel_basis(&self) -> Vec<RatMatrix> {
        self.kernel_vectors()
            .into_iter()
            .map(|v| RatMatrix::from_vec(self.cols, 1, v))
            .collect()
    }

    /// Same as [`kernel_basis`](Self::kernel_basis) but as plain vectors.
    pub fn kernel_vectors(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free).clone();
            }
            out.push(v);
        }
        out
    }

    /// Kernel basis packed as the columns of a matrix (`cols × nullity`).
    pub fn kernel_matrix(&self) -> RatMatrix {
        let vs = self.kernel_vectors();
        RatMatrix::from_columns(self.cols, &vs)
    }

    /// Some `x` with `self · x = b`, free variables set to zero; `None` if inconsistent.
    pub fn solve(&self, b: &RatMatrix) -> Option<RatMatrix> {
        assert_eq!(b.rows, self.rows, "right-hand side must have matching rows");
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = RatMatrix::zeros(self.cols, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(p, c, r.get(row, self.cols + c).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&RatMatrix::identity(self.rows))?;
        (self * &x == RatMatrix::identity(self.rows)).then_some(x)
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            for r in c + 1..n {
                if m.get(r, c).is_zero() {
                    continue;
                }
                let f = m.get(r, c) / &pivot;
                for k in c..n {
                    let v = m.get(r, k) - &f * m.get(c, k);
                    m.set(r, k, v);
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(tI - A)`, coefficients in ascending degree.
    pub fn charpoly(&self) -> Vec<Rational> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        // Faddeev-LeVerrier
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = RatMatrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                let v = next.get(i, i) + &coeffs[n - k + 1];
                next.set(i, i, v);
            }
            let am = self * &next;
            let trace: Rational = (0..n).map(|i| am.get(i, i).clone()).sum();
            coeffs[n - k] = -trace / rat(k as i64);
            m = next;
        }
        coeffs
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| dot(self.row(r), v))
            .collect()
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c) + a * b;
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// A subspace of `Q^width` kept in reduced row echelon form.
///
/// `reduce` returns the unique representative of `v + span` that vanishes on
/// every pivot column, which is what makes quotient coordinates canonical.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    width: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(width: usize) -> Self {
        Self { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<'a>(width: usize, vs: impl IntoIterator<Item = &'a Vec<Rational>>) -> Self {
        let mut e = Self::new(width);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.width);
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o -= &f * x;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    /// Coordinates of `v` (assumed to lie in the span) w.r.t. the echelon rows.
    pub fn coordinates(&self, v: &[Rational]) -> Vec<Rational> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }
}

/// Rank-greedy selection: indices of the vectors in `candidates` that extend
/// the span of `base`, scanned in order.
pub fn extend_basis(base: &RowEchelon, candidates: &[Vec<Rational>]) -> Vec<usize> {
    let mut span = base.clone();
    candidates
        .iter()
        .enumerate()
        .filter_map(|(i, v)| span.insert(v).then_some(i))
        .collect()
}

pub fn is_integral(x: &Rational) -> bool {
    x.is_integer()
}

pub fn to_i64(x: &Rational) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    let n = x.to_integer();
    i64::try_from(n).ok()
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
        assert_eq!(RatMatrix::zeros(2, 2).rank(), 0);
        assert_eq!(RatMatrix::from_ints(2, 2, &[1, 2, 2, 4]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(2).kernel_basis().is_empty());
        let k = RatMatrix::from_ints(1, 2, &[1, -1]).kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], RatMatrix::from_ints(2, 1, &[1, 1]));
        assert_eq!(RatMatrix::zeros(2, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn solve_examples() {
        let b = RatMatrix::from_ints(2, 1, &[3, -5]);
        assert_eq!(RatMatrix::identity(2).solve(&b), Some(b.clone()));

        let m = RatMatrix::from_ints(1, 2, &[1, -1]);
        let x = m.solve(&RatMatrix::zeros(1, 1)).unwrap();
        assert!((&m * &x).is_zero());
        assert_eq!(x, m.solve(&RatMatrix::zeros(1, 1)).unwrap());

        let m = RatMatrix::from_ints(2, 1, &[1, 0]);
        assert_eq!(m.solve(&RatMatrix::from_ints(2, 1, &[0, 1])), None);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = RatMatrix::from_ints(3, 3, &[2, 0, 1, 1, 1, 0, 0, 3, 1]);
        assert_eq!(m.determinant(), rat(5));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, RatMatrix::identity(3));
        assert_eq!(RatMatrix::from_ints(2, 2, &[1, 2, 2, 4]).inverse(), None);
    }

    #[test]
    fn charpoly_of_companion() {
        // companion matrix of t^2 + t + 1
        let m = RatMatrix::from_ints(2, 2, &[-1, -1, 1, 0]);
        assert_eq!(m.charpoly(), vec![rat(1), rat(1), rat(1)]);
        assert_eq!(RatMatrix::from_ints(1, 1, &[-1]).charpoly(), vec![rat(1), rat(1)]);
    }

    #[test]
    fn echelon_normal_form() {
        let mut e = RowEchelon::new(3);
        assert!(e.insert(&[rat(1), rat(1), rat(0)]));
        assert!(!e.insert(&[rat(2), rat(2), rat(0)]));
        let nf = e.reduce(&[rat(3), rat(1), rat(5)]);
        assert_eq!(nf, vec![rat(0), rat(-2), rat(5)]);
        assert!(e.contains(&[rat(-1), rat(-1), rat(0)]));
    }
}
