use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::qarith::{format_rational, Rational};

pub type Vector = Vec<Rational>;

/// Dense matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    /// `None` if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are `cols`, each of length `n`.
    pub fn from_columns(n: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        (0..k).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |s, (a, b)| s + a * b)
            })
            .collect()
    }

    /// `[self, other] = self·other - other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let x = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self·v = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.scale(&-Rational::one())
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let x = out.get(i, j) + a * b;
                    out.set(i, j, x);
                }
            }
        }
        out
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

/// Subspace of `Q^n`, stored as the nonzero rows of a reduced row echelon
/// form of any spanning set, so equal subspaces have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &ExactMatrix::identity(ambient).rows())
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = ExactMatrix::from_rows(vectors.to_vec()).expect("equal lengths");
        assert_eq!(m.ncols(), ambient, "vector length");
        let (r, pivots) = m.rref();
        Subspace {
            ambient,
            rows: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span, keeping the reduced echelon form; returns
    /// whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Self::span(self.ambient, &all)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // x lies in `other` iff every annihilating functional of `other` kills it
        let ann = ExactMatrix::from_rows(other.rows.clone()).expect("rows").kernel();
        if ann.is_empty() {
            return self.clone();
        }
        let n = ExactMatrix::from_rows(ann).expect("rows");
        let basis = ExactMatrix::from_columns(self.ambient, &self.rows);
        let coeffs = (&n * &basis).kernel();
        let vecs: Vec<Vector> = coeffs.iter().map(|c| basis.apply(c)).collect();
        Self::span(self.ambient, &vecs)
    }

    /// `M·self`.
    pub fn image(&self, m: &ExactMatrix) -> Subspace {
        let vecs: Vec<Vector> = self.rows.iter().map(|v| m.apply(v)).collect();
        Self::span(m.nrows(), &vecs)
    }

    /// Kernel of `M` as a subspace.
    pub fn kernel_of(m: &ExactMatrix) -> Subspace {
        Self::span(m.ncols(), &m.kernel())
    }

    pub fn column_space(m: &ExactMatrix) -> Subspace {
        Self::span(m.nrows(), &m.columns())
    }
}

pub fn rank_of(vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    ExactMatrix::from_rows(vectors.to_vec()).expect("equal lengths").rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::rational::{int, rat};

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn rank_kernel_inverse() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).iter().all(Zero::is_zero));
        assert!(a.inverse().is_none());
        let b = m(&[&[2, 1], &[1, 1]]);
        let bi = b.inverse().unwrap();
        assert_eq!(&b * &bi, ExactMatrix::identity(2));
        assert_eq!(bi.get(0, 1), &int(-1));
        let h = ExactMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 3), rat(1, 4)]]).unwrap();
        assert_eq!(&h.inverse().unwrap() * &h, ExactMatrix::identity(2));
    }

    #[test]
    fn subspace_algebra() {
        let e = |i: usize| {
            let mut v = vec![int(0); 3];
            v[i] = int(1);
            v
        };
        let xy = Subspace::span(3, &[e(0), e(1)]);
        let yz = Subspace::span(3, &[e(1), e(2)]);
        let y = xy.intersect(&yz);
        assert_eq!(y, Subspace::span(3, &[e(1)]));
        assert_eq!(xy.sum(&yz), Subspace::full(3));
        assert!(xy.contains(&[int(3), int(-1), int(0)]));
        assert!(!xy.contains(&[int(0), int(0), int(1)]));
        assert_eq!(Subspace::span(3, &[vec![int(1), int(1), int(0)], e(0)]), xy);
        assert!(xy.intersect(&Subspace::zero(3)).is_zero());
        let mut grown = Subspace::zero(3);
        assert!(grown.insert(&[int(0), int(2), int(0)]));
        assert!(grown.insert(&[int(1), int(1), int(0)]));
        assert!(!grown.insert(&[int(5), int(0), int(0)]));
        assert_eq!(grown, xy);
    }

    #[test]
    fn products_and_powers() {
        let n = m(&[&[0, 1], &[0, 0]]);
        assert!(n.pow(2).is_zero());
        assert_eq!(n.pow(0), ExactMatrix::identity(2));
        assert_eq!(n.commutator(&n.transpose()), m(&[&[1, 0], &[0, -1]]));
    }
}
