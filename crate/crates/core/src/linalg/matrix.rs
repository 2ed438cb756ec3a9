use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{axpy, int, Rational, Subspace, Vector};
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Reduced row-echelon form of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Result of a consistent linear solve: one particular solution plus the
/// homogeneous solution space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vector,
    pub homogeneous: Subspace,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| int(x))
            })
            .collect();
        Self::from_entries(rows.len(), cols, entries)
    }

    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Self {
        let n = rows.len();
        let entries: Vec<Rational> = rows
            .into_iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r
            })
            .collect();
        Self::from_entries(n, cols, entries)
    }

    pub fn from_columns(columns: &[Vector], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
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

    pub fn scale(&self, alpha: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| alpha * x).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows).map(|i| super::dot(self.row(i), v)).collect()
    }

    /// `self * rhs`, checked.
    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let out_row = &mut out.entries[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                axpy(a, rhs.row(k), out_row);
            }
        }
        Ok(out)
    }

    /// Commutator `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        &(self * rhs) - &(rhs * self)
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "vertical stack",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix::from_entries(
            self.rows + other.rows,
            self.cols,
            entries,
        ))
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    pub fn rref(&self) -> Rref {
        let mut rows: Vec<Vector> = self.row_vectors().map(<[Rational]>::to_vec).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = Rational::one() / &rows[r][c];
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            let pivot_row = std::mem::take(&mut rows[r]);
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = -row[c].clone();
                axpy(&f, &pivot_row, row);
            }
            rows[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: Matrix::from_rows(rows, self.cols),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// All `v` with `self * v = 0`.
    pub fn nullspace(&self) -> Subspace {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        let vectors: Vec<Vector> = (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = super::zero_vector(self.cols);
                v[free] = Rational::one();
                for (r, &p) in rref.pivots.iter().enumerate() {
                    v[p] = -rref.matrix[(r, free)].clone();
                }
                v
            })
            .collect();
        Subspace::span(self.cols, &vectors)
    }

    /// Solves `self * x = b`. `Ok(None)` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Solution>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "solve right-hand side",
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut augmented = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                augmented[(i, j)] = self[(i, j)].clone();
            }
            augmented[(i, self.cols)] = b[i].clone();
        }
        let rref = augmented.rref();
        if rref.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut particular = super::zero_vector(self.cols);
        let mut is_pivot = vec![false; self.cols];
        for (r, &p) in rref.pivots.iter().enumerate() {
            particular[p] = rref.matrix[(r, self.cols)].clone();
            is_pivot[p] = true;
        }
        let homogeneous: Vec<Vector> = (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = super::zero_vector(self.cols);
                v[free] = Rational::one();
                for (r, &p) in rref.pivots.iter().enumerate() {
                    v[p] = -rref.matrix[(r, free)].clone();
                }
                v
            })
            .collect();
        Ok(Some(Solution {
            particular,
            homogeneous: Subspace::span(self.cols, &homogeneous),
        }))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut augmented = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                augmented[(i, j)] = self[(i, j)].clone();
            }
            augmented[(i, n + i)] = Rational::one();
        }
        let rref = augmented.rref();
        if rref.rank() < n || rref.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = rref.matrix[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, unit_vector};

    #[test]
    fn rref_identity() {
        let r = Matrix::identity(2).rref();
        assert_eq!(r.matrix, Matrix::identity(2));
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank(), 2);
    }

    #[test]
    fn rref_rank_one() {
        let r = Matrix::from_i64(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r.matrix, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_zero() {
        let r = Matrix::zeros(2, 3).rref();
        assert!(r.matrix.is_zero());
        assert_eq!(r.rank(), 0);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::identity(3).nullspace().dim(), 0);
        assert_eq!(Matrix::zeros(3, 3).nullspace(), Subspace::full(3));
        let ns = Matrix::from_i64(&[&[1, 1]]).nullspace();
        assert_eq!(ns.dim(), 1);
        assert_eq!(ns.basis().row(0), &[int(1), int(-1)]);
    }

    #[test]
    fn solve_examples() {
        let s = Matrix::identity(2)
            .solve(&[int(1), int(2)])
            .unwrap()
            .unwrap();
        assert_eq!(s.particular, vec![int(1), int(2)]);
        assert_eq!(s.homogeneous.dim(), 0);

        let s = Matrix::from_i64(&[&[1, 1]])
            .solve(&[int(0)])
            .unwrap()
            .unwrap();
        assert_eq!(s.particular, vec![int(0), int(0)]);
        assert_eq!(s.homogeneous, Subspace::span(2, &[vec![int(1), int(-1)]]));

        assert_eq!(Matrix::from_i64(&[&[0]]).solve(&[int(1)]).unwrap(), None);
        assert!(matches!(
            Matrix::identity(2).solve(&[int(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let half = Matrix::diagonal(&[frac(1, 2)]);
        assert_eq!(half.inverse().unwrap(), Matrix::from_i64(&[&[2]]));
    }

    #[test]
    fn mul_vec_matches_columns() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.mul_vec(&unit_vector(2, 1)), a.column(1));
    }
}
