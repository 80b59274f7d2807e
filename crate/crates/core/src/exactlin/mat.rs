use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub type Vector = Vec<Scalar>;

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Mat {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Mat { field, rows, cols, data }
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vector>) -> Mat {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Mat { field, rows: n, cols, data }
    }

    /// Matrix with the given columns; `rows` fixes the shape when `cols` is empty.
    pub fn from_cols(field: Field, rows: usize, cols: &[Vector]) -> Mat {
        let mut m = Mat::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(field, cols, rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect())
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape {:?} * {:?}", self.shape(), other.shape());
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(orow) {
                    if !b.is_zero() {
                        *d = d.add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Mat {
        self.scale(&self.field.from_i64(-1))
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Adds `s * other` into `self`.
    pub fn axpy(&mut self, s: &Scalar, other: &Mat) {
        assert_eq!(self.shape(), other.shape());
        if s.is_zero() {
            return;
        }
        for (d, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *d = d.add(&s.mul(b));
            }
        }
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack rows");
        let mut m = Mat::zeros(self.field, self.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(0, self.cols, other);
        m
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(field: Field, blocks: &[Mat]) -> Mat {
        let r: usize = blocks.iter().map(Mat::rows).sum();
        let c: usize = blocks.iter().map(Mat::cols).sum();
        let mut m = Mat::zeros(field, r, c);
        let (mut i, mut j) = (0, 0);
        for b in blocks {
            m.paste(i, j, b);
            i += b.rows;
            j += b.cols;
        }
        m
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Mat) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn submatrix(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Mat {
        let mut m = Mat::zeros(self.field, nr, nc);
        for r in 0..nr {
            for c in 0..nc {
                m.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend(self.row(r).iter().cloned());
        }
        Mat { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    /// Gauss-Jordan elimination with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref { mat: m, rank, pivots }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.get(r, c).inv();
            if !inv.is_one() {
                for j in c..cols {
                    let v = self.get(r, j).mul(&inv);
                    self.set(r, j, v);
                }
            }
            let pivot_row: Vec<Scalar> = self.row(r)[c..].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                let base = i * cols;
                for (k, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        let cur = &self.data[base + c + k];
                        self.data[base + c + k] = cur.sub(&f.mul(pv));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.clone().rref_in_place().len()
    }

    /// Basis of the right null space.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Rref { mat, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = mat.get(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Null space as the columns of a matrix.
    pub fn kernel(&self) -> Mat {
        Mat::from_cols(self.field, self.cols, &self.kernel_basis())
    }

    /// Some `x` with `self * x = b`, or `None` if `b` is outside the column space.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "system has {} rows but right-hand side has {}",
                self.rows,
                b.len()
            )));
        }
        let aug = self.hstack(&Mat::from_cols(self.field, self.rows, &[b.to_vec()]));
        let Rref { mat, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = mat.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Some `X` with `self * X = b`, or `None` if no solution exists.
    pub fn solve_mat(&self, b: &Mat) -> Result<Option<Mat>> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "system has {} rows but right-hand side has {}",
                self.rows, b.rows
            )));
        }
        let aug = self.hstack(b);
        let Rref { mat, pivots, .. } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.field, self.cols, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, mat.get(row, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve_mat(&Mat::identity(self.field, self.rows)).ok()??;
        Some(x)
    }

    /// Indices of a maximal independent set of columns, chosen greedily left to right.
    pub fn independent_cols(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// Columns spanning the column space (a subset of the original columns).
    pub fn column_basis(&self) -> Mat {
        self.select_cols(&self.independent_cols())
    }

    /// Indices of columns of `cands` that extend the column space of `sub` to `sub + span(cands)`.
    pub fn extend_basis(sub: &Mat, cands: &Mat) -> Vec<usize> {
        let k = sub.cols;
        sub.hstack(cands).rref().pivots.into_iter().filter(|&p| p >= k).map(|p| p - k).collect()
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Coordinates relative to a fixed basis (the columns of a matrix with independent columns).
#[derive(Clone, Debug)]
pub struct Coordinates {
    basis: Mat,
    rows: Vec<usize>,
    inv: Mat,
}

impl Coordinates {
    pub fn new(basis: &Mat) -> Coordinates {
        let rows = basis.transpose().independent_cols();
        assert_eq!(rows.len(), basis.cols(), "basis columns must be independent");
        let inv = basis.select_rows(&rows).inverse().expect("square independent block");
        Coordinates { basis: basis.clone(), rows, inv }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Coordinates of `v`, assuming it lies in the span.
    pub fn coords_unchecked(&self, v: &[Scalar]) -> Vector {
        let picked: Vector = self.rows.iter().map(|&r| v[r].clone()).collect();
        self.inv.mul_vec(&picked)
    }

    /// Coordinates of `v`, or `None` if it is not in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let c = self.coords_unchecked(v);
        if self.basis.mul_vec(&c) == v {
            Some(c)
        } else {
            None
        }
    }

    /// Coordinates of each column of `m` (assumed in the span), as columns.
    pub fn coords_mat_unchecked(&self, m: &Mat) -> Mat {
        self.inv.mul(&m.select_rows(&self.rows))
    }
}

/// Incremental row echelon form for testing linear independence one vector at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    pub fn new(len: usize) -> Echelon {
        Echelon { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.len, "vector length");
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.sub(&c.mul(r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` if it is independent of the stored rows; returns whether it was added.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = r[p].inv();
                let r: Vector = r.iter().map(|x| x.mul(&inv)).collect();
                self.rows.push((p, r));
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn rref_identity_and_zero() {
        let r = Mat::identity(Q, 2).rref();
        assert_eq!(r.mat, Mat::identity(Q, 2));
        assert_eq!((r.rank, r.pivots), (2, vec![0, 1]));
        let z = Mat::zeros(Q, 3, 2).rref();
        assert_eq!((z.rank, z.pivots.len()), (0, 0));
        assert!(z.mat.is_zero());
    }

    #[test]
    fn rref_rank_one() {
        let r = Mat::from_i64(Q, &[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.mat, Mat::from_i64(Q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        assert!(Mat::identity(Q, 3).kernel_basis().is_empty());
        assert_eq!(Mat::zeros(Q, 2, 3).kernel_basis().len(), 3);
        let k = Mat::from_i64(Q, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![Q.from_i64(-1), Q.from_i64(1)]]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![Q.from_i64(3), Q.from_i64(-4)];
        assert_eq!(Mat::identity(Q, 2).solve(&b).unwrap(), Some(b.clone()));
        let a = Mat::from_i64(Q, &[&[1], &[0]]);
        assert_eq!(a.solve(&[Q.zero(), Q.one()]).unwrap(), None);
        let two = Mat::from_i64(Q, &[&[2]]);
        let half = Scalar::Q(super::super::Rat::new(1, 2));
        assert_eq!(two.solve(&[Q.one()]).unwrap(), Some(vec![half]));
        assert!(two.solve(&[Q.one(), Q.one()]).is_err());
    }

    #[test]
    fn coordinates_detect_membership() {
        let b = Mat::from_i64(Q, &[&[1, 0], &[1, 1], &[0, 1]]);
        let c = Coordinates::new(&b);
        let v = vec![Q.from_i64(2), Q.from_i64(5), Q.from_i64(3)];
        assert_eq!(c.coords(&v), Some(vec![Q.from_i64(2), Q.from_i64(3)]));
        assert_eq!(c.coords(&[Q.one(), Q.zero(), Q.zero()]), None);
    }

    #[test]
    fn display_rows() {
        let m = Mat::from_i64(Q, &[&[1, 0], &[-2, 3]]);
        assert_eq!(m.to_string(), "[[1,0],[-2,3]]");
    }
}
