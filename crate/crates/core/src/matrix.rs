//! Dense row-major integer matrices.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;

use crate::num::{Exact, ExactInt, Overflow};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: ExactInt> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_columns(columns: &[Vec<T>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix columns");
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn column_vector(v: &[T]) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn try_mul(&self, rhs: &Self) -> Exact<Self> {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not compose");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul_exact(b)?;
                    let cell = &mut out[(i, j)];
                    *cell = cell.add_exact(&prod)?;
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Self) -> Exact<Self> {
        assert_eq!(self.shape(), rhs.shape(), "matrix shapes differ");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_exact(b)).collect::<Exact<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_sub(&self, rhs: &Self) -> Exact<Self> {
        assert_eq!(self.shape(), rhs.shape(), "matrix shapes differ");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_exact(b)).collect::<Exact<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_scale(&self, c: &T) -> Exact<Self> {
        let data = self.data.iter().map(|a| a.mul_exact(c)).collect::<Exact<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_mul_vec(&self, v: &[T]) -> Exact<Vec<T>> {
        assert_eq!(self.cols, v.len(), "vector length does not match matrix");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add_exact(&a.mul_exact(b)?)?;
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    /// Kronecker product; row index `i * rhs.rows + k`, column `j * rhs.cols + l`.
    pub fn try_kron(&self, rhs: &Self) -> Exact<Self> {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out[(i * rhs.rows + k, j * rhs.cols + l)] = a.mul_exact(&rhs[(k, l)])?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, rhs);
        out
    }

    /// Stacks matrices vertically. All parts must share a column count.
    pub fn vstack(parts: &[Self], cols: usize) -> Self {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            data.extend(p.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }

    /// Concatenates matrices horizontally. All parts must share a row count.
    pub fn hstack(parts: &[Self], rows: usize) -> Self {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut offset = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            out.set_block(0, offset, p);
            offset += p.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows.start + i, cols.start + j)].clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |i, j| self[(rows[i], j)].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    pub fn row_sub_mul(&mut self, dst: usize, q: &T, src: usize) -> Exact<()> {
        if q.is_zero() {
            return Ok(());
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let v = self.data[dst * self.cols + j].sub_mul_exact(q, s)?;
            self.data[dst * self.cols + j] = v;
        }
        Ok(())
    }

    /// col[dst] -= q * col[src]
    pub fn col_sub_mul(&mut self, dst: usize, q: &T, src: usize) -> Exact<()> {
        if q.is_zero() {
            return Ok(());
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if s.is_zero() {
                continue;
            }
            let v = self.data[i * self.cols + dst].sub_mul_exact(q, s)?;
            self.data[i * self.cols + dst] = v;
        }
        Ok(())
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.data[i * self.cols + j].clone();
            self.data[i * self.cols + j] = v;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.data[i * self.cols + j].clone();
            self.data[i * self.cols + j] = v;
        }
    }

    /// Replaces rows (a, b) by (x*a + y*b, u*a + v*b).
    pub fn combine_rows(&mut self, a: usize, b: usize, x: &T, y: &T, u: &T, v: &T) -> Exact<()> {
        for j in 0..self.cols {
            let ra = self.data[a * self.cols + j].clone();
            let rb = self.data[b * self.cols + j].clone();
            if ra.is_zero() && rb.is_zero() {
                continue;
            }
            let na = x.mul_exact(&ra)?.add_exact(&y.mul_exact(&rb)?)?;
            let nb = u.mul_exact(&ra)?.add_exact(&v.mul_exact(&rb)?)?;
            self.data[a * self.cols + j] = na;
            self.data[b * self.cols + j] = nb;
        }
        Ok(())
    }

    /// Replaces columns (a, b) by (x*a + y*b, u*a + v*b).
    pub fn combine_cols(&mut self, a: usize, b: usize, x: &T, y: &T, u: &T, v: &T) -> Exact<()> {
        for i in 0..self.rows {
            let ca = self.data[i * self.cols + a].clone();
            let cb = self.data[i * self.cols + b].clone();
            if ca.is_zero() && cb.is_zero() {
                continue;
            }
            let na = x.mul_exact(&ca)?.add_exact(&y.mul_exact(&cb)?)?;
            let nb = u.mul_exact(&ca)?.add_exact(&v.mul_exact(&cb)?)?;
            self.data[i * self.cols + a] = na;
            self.data[i * self.cols + b] = nb;
        }
        Ok(())
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().map(|v| v.abs()).max().unwrap_or_else(T::zero)
    }

    pub fn to_big(&self) -> Matrix<BigInt> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v.to_bigint()).collect() }
    }

    /// Converts between scalar types; fails if an entry does not fit.
    pub fn convert<U: ExactInt>(&self) -> Exact<Matrix<U>> {
        let data = self.data.iter().map(|v| U::from_bigint(&v.to_bigint()).ok_or(Overflow)).collect::<Exact<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Exact<T> {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[(i, j)].mul_exact(&a[(k, k)])?.sub_exact(&a[(i, k)].mul_exact(&a[(k, j)])?)?;
                    a[(i, j)] = num / prev.clone();
                }
                a[(i, k)] = T::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign.mul_exact(&a[(n - 1, n - 1)])
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_layout_is_row_major() {
        let a = Matrix::<i64>::from_rows(vec![vec![1, 2], vec![3, 4]], 2);
        let b = Matrix::<i64>::from_rows(vec![vec![0, 1], vec![1, 0]], 2);
        let k = a.try_kron(&b).unwrap();
        assert_eq!(k.row(0), &[0, 1, 0, 2]);
        assert_eq!(k.row(3), &[3, 0, 4, 0]);
    }

    #[test]
    fn bareiss_determinant() {
        let a = Matrix::<i64>::from_rows(vec![vec![2, -1, 0], vec![1, 3, 4], vec![0, 5, -2]], 3);
        // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) = -52 - 2 = -54
        assert_eq!(a.determinant().unwrap(), -54);
        let sing = Matrix::<i64>::from_rows(vec![vec![1, 2], vec![2, 4]], 2);
        assert_eq!(sing.determinant().unwrap(), 0);
        assert_eq!(Matrix::<i64>::zeros(0, 0).determinant().unwrap(), 1);
    }

    #[test]
    fn overflow_is_reported() {
        let a = Matrix::<i64>::from_rows(vec![vec![i64::MAX / 2 + 1]], 1);
        assert_eq!(a.try_add(&a), Err(Overflow));
        let big = a.to_big();
        assert_eq!(big.try_add(&big).unwrap()[(0, 0)], BigInt::from(i64::MAX / 2 + 1) * 2);
    }
}
