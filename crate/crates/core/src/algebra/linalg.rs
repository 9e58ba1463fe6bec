//! Small dense matrices over a finite field.

use std::fmt;
use std::ops::Mul;

use crate::algebra::field::{Field, FieldElem};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat<'f> {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem<'f>>,
}

impl fmt::Debug for Mat<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        write!(f, "{rows:?}")
    }
}

impl<'f> Mat<'f> {
    pub fn zeros(field: &'f Field, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &'f Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Panics if the rows have different lengths or there are none.
    pub fn from_rows(rows: Vec<Vec<FieldElem<'f>>>) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_ints(field: &'f Field, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| field.int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElem<'f>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn field(&self) -> &'f Field {
        self.data[0].field()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)]);
            }
        }
        Mat {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scale(&self, s: FieldElem<'f>) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[FieldElem<'f>]) -> Vec<FieldElem<'f>> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field().zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }

    /// `u^T M v`.
    pub fn bilinear(&self, u: &[FieldElem<'f>], v: &[FieldElem<'f>]) -> FieldElem<'f> {
        let mv = self.mul_vec(v);
        u.iter()
            .zip(&mv)
            .fold(self.field().zero(), |acc, (&a, &b)| acc + a * b)
    }

    /// Row echelon form; returns the pivot columns.
    fn echelon(&mut self) -> (Vec<usize>, FieldElem<'f>) {
        let field = self.field();
        let mut sign = field.one();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
                sign = -sign;
            }
            let inv = self[(r, c)].inv().expect("pivot is nonzero");
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)] * inv;
                for j in c..self.cols {
                    let v = self[(r, j)];
                    self[(i, j)] -= factor * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, sign)
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().0.len()
    }

    pub fn det(&self) -> FieldElem<'f> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let (pivots, sign) = m.echelon();
        if pivots.len() < self.rows {
            return self.field().zero();
        }
        (0..self.rows).fold(sign, |acc, i| acc * m[(i, i)])
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.rows;
        assert_eq!(n, self.cols);
        let field = self.field();
        let mut aug = Mat::zeros(field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = field.one();
        }
        let (pivots, _) = aug.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Mat::zeros(field, n, n);
        for i in 0..n {
            let d = aug[(i, i)].inv().expect("pivot is nonzero");
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)] * d;
            }
        }
        Ok(inv)
    }

    /// Basis of `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<FieldElem<'f>>> {
        let field = self.field();
        let mut m = self.clone();
        let (pivots, _) = m.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![field.zero(); self.cols];
                v[fc] = field.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -(m[(r, fc)] / m[(r, pc)]);
                }
                v
            })
            .collect()
    }
}

impl<'f> std::ops::Index<(usize, usize)> for Mat<'f> {
    type Output = FieldElem<'f>;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElem<'f> {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat<'_> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Self::Output {
        &mut self.data[i * self.cols + j]
    }
}

impl<'f> Mul for &Mat<'f> {
    type Output = Mat<'f>;
    fn mul(self, rhs: Self) -> Mat<'f> {
        assert_eq!(self.cols, rhs.rows);
        let field = self.field();
        let mut out = Mat::zeros(field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let f = Field::prime(11).unwrap();
        let m = Mat::from_ints(&f, &[&[2, 3, 1], &[0, 1, 4], &[5, 6, 0]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(&f, 3));
        // 2(0-24) - 3(0-20) + 1(0-5) = -48 + 60 - 5 = 7
        assert_eq!(m.det(), f.int(7));
    }

    #[test]
    fn singular_matrix() {
        let f = Field::prime(7).unwrap();
        let m = Mat::from_ints(&f, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.det(), f.zero());
        assert_eq!(m.inverse(), Err(Error::SingularMatrix));
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(|x| x.is_zero()));
    }
}
