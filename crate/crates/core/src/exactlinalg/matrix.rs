use std::fmt::Write as _;

use super::field::Field;
use super::subspace::SubspaceBasis;
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
///
/// Acting as an operator, a matrix multiplies row vectors from the right:
/// `v ↦ v·M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from explicit rows; every row must have `cols` entries.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedMatrix { row: i, expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { field: field.clone(), rows: n, cols, data })
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Ok(Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    /// Adds `c·I` in place; the matrix must be square.
    pub fn add_scalar_diag(&mut self, c: &F::Elem) {
        let f = self.field.clone();
        for i in 0..self.rows.min(self.cols) {
            let idx = i * self.cols + i;
            self.data[idx] = f.add(&self.data[idx], c);
        }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(o, &f.mul(a, self.get(i, j)));
            }
        }
        out
    }

    /// Determinant by Gaussian elimination; the matrix must be square.
    pub fn det(&self) -> Result<F::Elem> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !f.is_zero(&a[r * n + c])) else {
                return Ok(f.zero());
            };
            if p != c {
                for k in 0..n {
                    a.swap(p * n + k, c * n + k);
                }
                det = f.neg(&det);
            }
            let pivot = a[c * n + c].clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("nonzero pivot");
            for r in c + 1..n {
                let factor = f.mul(&a[r * n + c], &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for k in c..n {
                    let t = f.mul(&factor, &a[c * n + k]);
                    a[r * n + k] = f.sub(&a[r * n + k], &t);
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut b = Self::identity(f, n).data;
        for c in 0..n {
            let p = (c..n).find(|&r| !f.is_zero(&a[r * n + c]))?;
            for k in 0..n {
                a.swap(p * n + k, c * n + k);
                b.swap(p * n + k, c * n + k);
            }
            let inv = f.inv(&a[c * n + c]).expect("nonzero pivot");
            for k in 0..n {
                a[c * n + k] = f.mul(&a[c * n + k], &inv);
                b[c * n + k] = f.mul(&b[c * n + k], &inv);
            }
            for r in (0..n).filter(|&r| r != c) {
                let factor = a[r * n + c].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for k in 0..n {
                    let ta = f.mul(&factor, &a[c * n + k]);
                    a[r * n + k] = f.sub(&a[r * n + k], &ta);
                    let tb = f.mul(&factor, &b[c * n + k]);
                    b[r * n + k] = f.sub(&b[r * n + k], &tb);
                }
            }
        }
        Some(Matrix { field: f.clone(), rows: n, cols: n, data: b })
    }

    /// Row space in reduced row-echelon form.
    pub fn row_space(&self) -> SubspaceBasis<F> {
        let mut s = SubspaceBasis::new(&self.field, self.cols);
        for i in 0..self.rows {
            s.insert(self.row(i));
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.row_space().dim()
    }

    /// Basis of `{x : M·xᵀ = 0}`.
    pub fn right_nullspace(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let rs = self.row_space();
        let pivots = rs.pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![f.zero(); self.cols];
            x[free] = f.one();
            for (row, &p) in rs.rows().iter().zip(pivots) {
                x[p] = f.neg(&row[free]);
            }
            out.push(x);
        }
        out
    }

    /// Basis of `{v : v·M = 0}`.
    pub fn left_nullspace(&self) -> Vec<Vec<F::Elem>> {
        self.transpose().right_nullspace()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    /// Plain text: a `rows cols` header line followed by one line per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|a| self.field.format(a)).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    pub fn from_text(field: &F, text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|e| Error::Parse(format!("header `{header}`: {e}"))))
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(Error::Parse(format!("header `{header}` must be `rows cols`")));
        };
        let body: Vec<Vec<F::Elem>> = lines
            .map(|l| l.split_whitespace().map(|t| field.parse(t)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        if body.len() != rows {
            return Err(Error::DimensionMismatch { expected: rows, found: body.len() });
        }
        Self::from_rows(field, cols, body)
    }
}

/// Canonical reduced row-echelon form of the rows.
pub fn rref<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> Result<SubspaceBasis<F>> {
    let cols = rows.first().map_or(0, Vec::len);
    let m = Matrix::from_rows(field, cols, rows.to_vec())?;
    Ok(m.row_space())
}
