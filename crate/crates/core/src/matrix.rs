//! Dense matrices and subspaces over a finite field.
//!
//! Matrices act on column vectors.

use crate::error::{Error, Result};
use crate::field::{Field, F};
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    /// Matrix with the given vectors as columns.
    pub fn from_cols(n: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m.data[i * cols.len() + j] = c[i];
            }
        }
        m
    }

    /// Permutation matrix sending basis vector `e_i` to `e_{images[i]}`.
    pub fn permutation(images: &[u32]) -> Self {
        let n = images.len();
        let mut m = Self::zeros(n, n);
        for (i, &j) in images.iter().enumerate() {
            m.data[j as usize * n + i] = 1;
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

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> F {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, f: &Field, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        let (n, m) = (self.rows, other.cols);
        let mut out = Mat::zeros(n, m);
        for i in 0..n {
            let orow = &mut out.data[i * m..(i + 1) * m];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * m..(k + 1) * m];
                if a == 1 {
                    for (o, &b) in orow.iter_mut().zip(brow) {
                        *o = f.add(*o, b);
                    }
                } else {
                    for (o, &b) in orow.iter_mut().zip(brow) {
                        if b != 0 {
                            *o = f.add(*o, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &Field, v: &[F]) -> Vec<F> {
        (0..self.rows)
            .map(|i| {
                let mut s = 0;
                for (&a, &b) in self.row(i).iter().zip(v) {
                    if a != 0 && b != 0 {
                        s = f.add(s, f.mul(a, b));
                    }
                }
                s
            })
            .collect()
    }

    /// `v^T M` as a vector, i.e. `M^T v`.
    pub fn vec_mul(&self, f: &Field, v: &[F]) -> Vec<F> {
        let mut out = vec![0; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(i)) {
                if b != 0 {
                    *o = f.add(*o, f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, f: &Field, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, f: &Field, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, f: &Field, c: F) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// `self + c * other`
    pub fn add_scaled(&self, f: &Field, c: F, other: &Mat) -> Mat {
        self.add(f, &other.scale(f, c))
    }

    pub fn pow(&self, f: &Field, mut e: u64) -> Mat {
        let mut r = Mat::identity(self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(f, &b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(f, &b);
            }
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar() == Some(1)
    }

    /// The scalar `c` if this is `c * I`.
    pub fn as_scalar(&self) -> Option<F> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(1);
        }
        let c = self.get(0, 0);
        for i in 0..n {
            for j in 0..n {
                let v = self.get(i, j);
                if (i == j && v != c) || (i != j && v != 0) {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn trace(&self, f: &Field) -> F {
        (0..self.rows.min(self.cols)).fold(0, |s, i| f.add(s, self.get(i, i)))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, f: &Field) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            m.scale_row(f, r, inv);
            for i in 0..m.rows {
                if i != r {
                    let x = m.get(i, c);
                    if x != 0 {
                        m.axpy_row(f, i, r, f.neg(x));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, f: &Field, r: usize, c: F) {
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x = f.mul(*x, c);
        }
    }

    /// row[dst] += c * row[src]
    fn axpy_row(&mut self, f: &Field, dst: usize, src: usize, c: F) {
        let n = self.cols;
        for j in 0..n {
            let s = self.data[src * n + j];
            if s != 0 {
                let d = &mut self.data[dst * n + j];
                *d = f.add(*d, f.mul(c, s));
            }
        }
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn nullspace(&self, f: &Field) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref(f);
        let mut is_pivot = vec![usize::MAX; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            is_pivot[c] = i;
        }
        let mut out = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] != usize::MAX {
                continue;
            }
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(r.get(i, free));
            }
            out.push(v);
        }
        out
    }

    /// Basis of `{x : x^T M = 0}`.
    pub fn left_nullspace(&self, f: &Field) -> Vec<Vec<F>> {
        self.transpose().nullspace(f)
    }

    pub fn inverse(&self, f: &Field) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular("matrix is not invertible".into()));
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self, f: &Field) -> bool {
        self.is_square() && self.rank(f) == self.rows
    }

    pub fn det(&self, f: &Field) -> F {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut d = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if p != c {
                m.swap_rows(p, c);
                d = f.neg(d);
            }
            let piv = m.get(c, c);
            d = f.mul(d, piv);
            let inv = f.inv(piv).unwrap();
            for i in c + 1..n {
                let x = m.get(i, c);
                if x != 0 {
                    m.axpy_row(f, i, c, f.neg(f.mul(x, inv)));
                }
            }
        }
        d
    }

    /// Characteristic polynomial `det(xI - M)` via Hessenberg reduction.
    pub fn charpoly(&self, f: &Field) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n {
            let Some(i) = (m..n).find(|&i| h.get(i, m - 1) != 0) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let inv = f.inv(h.get(m, m - 1)).unwrap();
            for i in m + 1..n {
                let u = f.mul(h.get(i, m - 1), inv);
                if u == 0 {
                    continue;
                }
                h.axpy_row(f, i, m, f.neg(u));
                for r in 0..n {
                    let add = f.mul(u, h.get(r, i));
                    let v = h.get(r, m);
                    h.set(r, m, f.add(v, add));
                }
            }
        }
        // p[m] = char poly of leading m x m block
        let mut p: Vec<Poly> = vec![Poly::one()];
        for m in 1..=n {
            let hmm = h.get(m - 1, m - 1);
            let mut cur = p[m - 1].mul(f, &Poly::from_coeffs(vec![f.neg(hmm), 1]));
            let mut prod = 1;
            for i in 1..m {
                prod = f.mul(prod, h.get(m - i, m - i - 1));
                let c = f.mul(h.get(m - i - 1, m - 1), prod);
                if c != 0 {
                    cur = cur.sub(f, &p[m - i - 1].scale(f, c));
                }
            }
            p.push(cur);
        }
        p.pop().unwrap()
    }

    /// `poly(M)` by Horner's rule.
    pub fn eval_poly(&self, f: &Field, poly: &Poly) -> Mat {
        let n = self.rows;
        let mut r = Mat::zeros(n, n);
        for &c in poly.coeffs().iter().rev() {
            r = r.mul(f, self);
            for i in 0..n {
                let v = r.get(i, i);
                r.set(i, i, f.add(v, c));
            }
        }
        r
    }

    /// Kronecker product.
    pub fn kron(&self, f: &Field, other: &Mat) -> Mat {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Mat::zeros(r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        out.set(i * r2 + k, j * c2 + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<F> {
        self.data.iter().copied().find(|&a| a != 0)
    }
}

/// A subspace held as a semi-echelon basis: every basis vector has a pivot
/// entry equal to 1, and later vectors vanish at earlier pivots.
#[derive(Clone, Debug)]
pub struct Subspace {
    n: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(n: usize) -> Self {
        Subspace {
            n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by(f: &Field, n: usize, vs: &[Vec<F>]) -> Self {
        let mut s = Self::new(n);
        for v in vs {
            s.insert(f, v.clone());
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place; returns the coefficients used.
    pub fn reduce(&self, f: &Field, v: &mut [F]) -> Vec<F> {
        let mut coeffs = vec![0; self.basis.len()];
        for (i, (b, &p)) in self.basis.iter().zip(&self.pivots).enumerate() {
            let c = v[p];
            if c == 0 {
                continue;
            }
            coeffs[i] = c;
            let nc = f.neg(c);
            for (x, &y) in v.iter_mut().zip(b) {
                if y != 0 {
                    *x = f.add(*x, f.mul(nc, y));
                }
            }
        }
        coeffs
    }

    /// Adds `v` to the space; returns false if it was already contained.
    pub fn insert(&mut self, f: &Field, mut v: Vec<F>) -> bool {
        self.reduce(f, &mut v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[p]).unwrap();
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        self.basis.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, f: &Field, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(f, &mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the basis, if `v` lies in the space.
    pub fn coords(&self, f: &Field, v: &[F]) -> Option<Vec<F>> {
        let mut w = v.to_vec();
        let c = self.reduce(f, &mut w);
        w.iter().all(|&x| x == 0).then_some(c)
    }

    /// Smallest subspace containing this one and stable under `mats`.
    pub fn close_under(&mut self, f: &Field, mats: &[Mat]) {
        let mut k = 0;
        while k < self.basis.len() && self.basis.len() < self.n {
            let v = self.basis[k].clone();
            for m in mats {
                self.insert(f, m.mul_vec(f, &v));
            }
            k += 1;
        }
    }

    /// Basis vectors as columns of a matrix.
    pub fn as_columns(&self) -> Mat {
        Mat::from_cols(self.n, &self.basis)
    }

    /// `{x : b . x = 0 for all basis vectors b}`.
    pub fn annihilator(&self, f: &Field) -> Subspace {
        if self.basis.is_empty() {
            let mut s = Subspace::new(self.n);
            for i in 0..self.n {
                let mut e = vec![0; self.n];
                e[i] = 1;
                s.insert(f, e);
            }
            return s;
        }
        let m = Mat::from_rows(self.basis.clone()).unwrap();
        Subspace::spanned_by(f, self.n, &m.nullspace(f))
    }

    pub fn intersect(&self, f: &Field, other: &Subspace) -> Subspace {
        // x in both iff x in self and annihilated by other's annihilator
        let ann = other.annihilator(f);
        if ann.dim() == 0 {
            return self.clone();
        }
        if self.dim() == 0 {
            return self.clone();
        }
        let b = self.as_columns();
        let a = Mat::from_rows(ann.basis.clone()).unwrap();
        let coeffs = a.mul(f, &b).nullspace(f);
        let vs: Vec<Vec<F>> = coeffs.iter().map(|c| b.mul_vec(f, c)).collect();
        Subspace::spanned_by(f, self.n, &vs)
    }
}

/// Spin `seeds` under `mats`: the smallest stable subspace containing them.
pub fn spin(f: &Field, n: usize, mats: &[Mat], seeds: &[Vec<F>]) -> Subspace {
    let mut s = Subspace::spanned_by(f, n, seeds);
    s.close_under(f, mats);
    s
}
