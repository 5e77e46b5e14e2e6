use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::par;

/// A subspace of `k^n` stored as a reduced row-echelon basis.
///
/// Rows are sorted by pivot column, every pivot entry is 1 and every pivot
/// column is zero outside its own row, so membership and coordinates are
/// exact and read off directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis<F: Field> {
    field: F,
    ambient_dim: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> SubspaceBasis<F> {
    pub fn new(field: &F, ambient_dim: usize) -> Self {
        SubspaceBasis { field: field.clone(), ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &F, ambient_dim: usize) -> Self {
        let mut s = Self::new(field, ambient_dim);
        for i in 0..ambient_dim {
            let mut e = vec![field.zero(); ambient_dim];
            e[i] = field.one();
            s.insert(&e);
        }
        s
    }

    pub fn from_vectors(field: &F, ambient_dim: usize, vectors: &[Vec<F::Elem>]) -> Result<Self> {
        let mut s = Self::new(field, ambient_dim);
        for v in vectors {
            s.check_len(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    /// Columns that carry no pivot; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    fn check_len(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: v.len() });
        }
        Ok(())
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&out[p]) {
                continue;
            }
            let c = out[p].clone();
            for (o, r) in out.iter_mut().zip(row).skip(p) {
                if !f.is_zero(r) {
                    *o = f.sub(o, &f.mul(&c, r));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        v.len() == self.ambient_dim && self.reduce(v).iter().all(|a| self.field.is_zero(a))
    }

    /// Coefficients of `v` in terms of [`rows`](Self::rows), if `v` lies in the span.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span. Returns the normalised remainder when the
    /// dimension grows, `None` when `v` was already inside.
    pub fn insert(&mut self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let p = r.iter().position(|a| !f.is_zero(a))?;
        let inv = f.inv(&r[p]).expect("nonzero pivot");
        for a in r.iter_mut().skip(p) {
            *a = f.mul(a, &inv);
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (a, b) in row.iter_mut().zip(&r).skip(p) {
                if !f.is_zero(b) {
                    *a = f.sub(a, &f.mul(&c, b));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r.clone());
        Some(r)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        Ok(s)
    }

    /// Zassenhaus: the rows `(a | a)` and `(b | 0)` reduce to a basis whose
    /// rows with vanishing left half span `A ∩ B` in their right half.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        let n = self.ambient_dim;
        if n != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: n, found: other.ambient_dim });
        }
        let f = &self.field;
        let mut big = SubspaceBasis::new(f, 2 * n);
        for a in &self.rows {
            let mut v = a.clone();
            v.extend(a.iter().cloned());
            big.insert(&v);
        }
        for b in &other.rows {
            let mut v = b.clone();
            v.extend(std::iter::repeat_n(f.zero(), n));
            big.insert(&v);
        }
        let mut out = SubspaceBasis::new(f, n);
        for (row, &p) in big.rows.iter().zip(&big.pivots) {
            if p >= n {
                out.insert(&row[n..]);
            }
        }
        Ok(out)
    }

    /// Basis rows as a matrix.
    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(&self.field, self.ambient_dim, self.rows.clone()).expect("rows have ambient length")
    }

    /// Matrices of the operators restricted to this subspace, in the basis
    /// [`rows`](Self::rows), for the row-vector convention.
    pub fn restrict<O: LinearOperator<F>>(&self, ops: &[O]) -> Result<Vec<Matrix<F>>> {
        ops.iter()
            .map(|op| {
                let images: Vec<Vec<F::Elem>> = par::map(&self.rows, |r| op.apply(&self.field, r));
                let coords = images
                    .iter()
                    .map(|img| self.coordinates(img).ok_or(Error::NotInvariant))
                    .collect::<Result<Vec<_>>>()?;
                Matrix::from_rows(&self.field, self.dim(), coords)
            })
            .collect()
    }

    /// Largest representation size of any stored entry (ℚ diagnostics).
    pub fn max_bit_size(&self) -> u64 {
        self.rows.iter().flatten().map(|a| self.field.bit_size(a)).max().unwrap_or(0)
    }
}

/// A linear map on `k^n`, possibly matrix-free.
pub trait LinearOperator<F: Field>: Send + Sync {
    fn dim(&self) -> usize;
    fn apply(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem>;
}

impl<F: Field> LinearOperator<F> for Matrix<F> {
    fn dim(&self) -> usize {
        self.rows()
    }
    fn apply(&self, _field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        self.vec_mul(v)
    }
}

impl<F: Field, O: LinearOperator<F>> LinearOperator<F> for &O {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn apply(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        (**self).apply(field, v)
    }
}

/// A permutation of basis vectors: `e_k ↦ e_{images[k]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Fails unless `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize).ok_or(Error::Internal(format!("image {i} out of range")))?;
            if *slot {
                return Err(Error::Internal(format!("image {i} repeated; not a permutation")));
            }
            *slot = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn image(&self, k: usize) -> usize {
        self.images[k] as usize
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&k| self.images[k as usize]).collect() }
    }

    pub fn to_matrix<F: Field>(&self, field: &F) -> Matrix<F> {
        let n = self.len();
        let mut m = Matrix::zeros(field, n, n);
        for (k, &img) in self.images.iter().enumerate() {
            m.set(k, img as usize, field.one());
        }
        m
    }
}

impl<F: Field> LinearOperator<F> for Permutation {
    fn dim(&self) -> usize {
        self.images.len()
    }
    fn apply(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); v.len()];
        for (k, a) in v.iter().enumerate() {
            out[self.images[k] as usize] = a.clone();
        }
        out
    }
}

/// Smallest subspace containing `seeds` and closed under every operator.
///
/// Newly found vectors are processed in breadth-first batches: operator
/// images of a batch are computed in parallel, then inserted in a fixed
/// order, so the result does not depend on scheduling.
pub fn spin<F: Field, O: LinearOperator<F>>(
    field: &F,
    ambient_dim: usize,
    seeds: &[Vec<F::Elem>],
    operators: &[O],
) -> Result<SubspaceBasis<F>> {
    for op in operators {
        if op.dim() != ambient_dim {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: op.dim() });
        }
    }
    let mut basis = SubspaceBasis::new(field, ambient_dim);
    let mut frontier = Vec::new();
    for s in seeds {
        basis.check_len(s)?;
        if let Some(r) = basis.insert(s) {
            frontier.push(r);
        }
    }
    while !frontier.is_empty() && !basis.is_full() {
        let jobs: Vec<(usize, usize)> =
            (0..frontier.len()).flat_map(|i| (0..operators.len()).map(move |j| (i, j))).collect();
        let images = par::map(&jobs, |&(i, j)| operators[j].apply(field, &frontier[i]));
        frontier.clear();
        for img in images {
            if let Some(r) = basis.insert(&img) {
                frontier.push(r);
            }
        }
    }
    let closed = par::all(basis.rows(), |r| operators.iter().all(|op| basis.contains(&op.apply(field, r))));
    if !closed {
        return Err(Error::Internal("spin-up result is not closed under the operators".into()));
    }
    Ok(basis)
}
