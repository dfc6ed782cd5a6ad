//! Dense exact linear algebra over the rationals.
//!
//! A morphism `f: V -> W` is stored as a `dim W x dim V` matrix acting on
//! column vectors, so composition `g ∘ f` is the product `g * f`. The basis of
//! `V ⊗ W` is ordered `(v, w) -> v * dim W + w`, which makes the Kronecker
//! product the tensor product of morphisms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn scalar(value: Rational) -> Self {
        Self { rows: 1, cols: 1, data: vec![value] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Integer matrix from rows; panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| Rational::from_integer(rows[i][j]))
    }

    pub fn column(v: &[Rational]) -> Self {
        Self { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn row_vector(v: &[Rational]) -> Self {
        Self { rows: 1, cols: v.len(), data: v.to_vec() }
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j { v.is_one() } else { v.is_zero() }
                })
            })
    }

    /// `Some(c)` when the matrix equals `c · I`.
    pub fn as_scalar(&self) -> Option<Rational> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { Rational::one() } else { self.get(0, 0).clone() };
        let ok = (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let v = self.get(i, j);
                if i == j { *v == c } else { v.is_zero() }
            })
        });
        ok.then_some(c)
    }

    /// First `(row, col)` at which two equally shaped matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((usize::MAX, usize::MAX));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Checked product.
    pub fn multiply(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Matrix) -> Matrix {
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut out = Matrix::zeros(n, m);
        // Sparse row lists of `other` pay off because most operands here are
        // Kronecker products with identities.
        let other_rows: Vec<Vec<(usize, &Rational)>> = (0..k)
            .map(|r| {
                other.row(r).iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        for i in 0..n {
            let out_row = &mut out.data[i * m..(i + 1) * m];
            for (l, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in &other_rows[l] {
                    out_row[*j].add_mul(a, b);
                }
            }
        }
        out
    }

    /// Kronecker product; block `(i, j)` equals `self[i][j] · other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let b = other.get(p, q);
                        if !b.is_zero() {
                            out.set(i * other.rows + p, j * other.cols + q, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// `(I_p ⊗ f ⊗ I_q) · x` without forming the Kronecker product.
    pub fn apply_middle(p: usize, f: &Matrix, q: usize, x: &Matrix) -> Matrix {
        assert_eq!(x.rows, p * f.cols * q, "apply_middle: shape mismatch");
        let cols = x.cols;
        let mut out = Matrix::zeros(p * f.rows * q, cols);
        for a in 0..p {
            for i in 0..f.rows {
                for (j, fv) in f.row(i).iter().enumerate() {
                    if fv.is_zero() {
                        continue;
                    }
                    for b in 0..q {
                        let src = (a * f.cols + j) * q + b;
                        let dst = (a * f.rows + i) * q + b;
                        for c in 0..cols {
                            let xv = x.get(src, c);
                            if !xv.is_zero() {
                                out.entry_mut(dst, c).add_mul(fv, xv);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `x · (I_p ⊗ f ⊗ I_q)` without forming the Kronecker product.
    pub fn right_apply_middle(x: &Matrix, p: usize, f: &Matrix, q: usize) -> Matrix {
        Matrix::apply_middle(p, &f.transpose(), q, &x.transpose()).transpose()
    }

    pub fn hstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::Shape("hstack: row counts differ".into()));
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            out.set_block(0, off, b);
            off += b.cols;
        }
        Ok(out)
    }

    pub fn vstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::Shape("vstack: column counts differ".into()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend_from_slice(&b.data);
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn add_block(&mut self, r0: usize, c0: usize, b: &Matrix, scale: &Rational) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                let v = b.get(i, j);
                if !v.is_zero() {
                    self.entry_mut(r0 + i, c0 + j).add_mul(scale, v);
                }
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Gauss–Jordan elimination; the pivot in each column is the topmost
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
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
            let inv = rows[r][c].recip().expect("nonzero pivot");
            if !inv.is_one() {
                for v in rows[r][c..].iter_mut() {
                    if !v.is_zero() {
                        *v = &*v * &inv;
                    }
                }
            }
            let support: Vec<usize> = (c..self.cols).filter(|&j| !rows[r][j].is_zero()).collect();
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = -&row[c];
                for &j in &support {
                    row[j].add_mul(&factor, &pivot_row[j]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let data = rows.into_iter().flatten().collect();
        Rref { matrix: Matrix { rows: self.rows, cols: self.cols, data }, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Null-space basis read off the reduced row echelon form: one vector per
    /// free column, with a `1` in that column. Empty when injective.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let Rref { matrix: r, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        let basis = self.kernel_basis();
        Matrix::from_fn(self.cols, basis.len(), |i, j| basis[j][i].clone())
    }

    /// Solves `self · x = b` for square invertible `self`.
    pub fn solve(&self, b: &Matrix) -> Result<Matrix> {
        if !self.is_square() || b.rows != self.rows {
            return Err(Error::Shape(format!(
                "solve: {}x{} system with {}x{} right-hand side",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let n = self.rows;
        let aug = Matrix::hstack(&[self, b])?;
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Rank(format!("{n}x{n} matrix is singular")));
        }
        Ok(matrix.block(0, n, n, b.cols))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.solve(&Matrix::identity(self.rows))
    }

    /// Deterministic right inverse of a surjective matrix: invert the
    /// pivot-column submatrix and embed it at the pivot rows.
    pub fn right_inverse(&self) -> Result<Matrix> {
        let pivots = self.rref().pivots;
        if pivots.len() != self.rows {
            return Err(Error::Rank(format!(
                "{}x{} matrix has rank {} < {}, not surjective",
                self.rows,
                self.cols,
                pivots.len(),
                self.rows
            )));
        }
        let inv = self.select_cols(&pivots).inverse()?;
        let mut out = Matrix::zeros(self.cols, self.rows);
        for (k, &p) in pivots.iter().enumerate() {
            for j in 0..self.rows {
                out.set(p, j, inv.get(k, j).clone());
            }
        }
        Ok(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Swap map `V ⊗ W -> W ⊗ V`.
    pub fn flip(dim_v: usize, dim_w: usize) -> Matrix {
        let n = dim_v * dim_w;
        let mut m = Matrix::zeros(n, n);
        for v in 0..dim_v {
            for w in 0..dim_w {
                m.set(w * dim_v + v, v * dim_w + w, Rational::one());
            }
        }
        m
    }
}

/// Checked product `a · b`.
pub fn multiply(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.multiply(b)
}

pub fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

pub fn kernel_basis(a: &Matrix) -> Vec<Vec<Rational>> {
    a.kernel_basis()
}

pub fn right_inverse(a: &Matrix) -> Result<Matrix> {
    a.right_inverse()
}

/// The unique `x` with `x · e = m` for surjective `e`, re-verified exactly.
pub fn solve_against_epi(m: &Matrix, e: &Matrix) -> Result<Matrix> {
    if m.cols != e.cols {
        return Err(Error::Shape(format!(
            "solve_against_epi: m has {} columns, e has {}",
            m.cols, e.cols
        )));
    }
    let x = m * &e.right_inverse()?;
    if &x * e != *m {
        return Err(Error::Inconsistent(
            "m does not factor through the epimorphism".into(),
        ));
    }
    Ok(x)
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        self.mul_unchecked(rhs)
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&Rational::from_integer(-1))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(rows)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn multiply_examples() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(multiply(&Matrix::identity(2), &a).unwrap(), a);
        assert_eq!(multiply(&a, &m(&[&[0, 1], &[1, 0]])).unwrap(), m(&[&[2, 1], &[4, 3]]));
        let s = multiply(&Matrix::scalar(q(2, 3)), &Matrix::scalar(q(3, 4))).unwrap();
        assert_eq!(s, Matrix::scalar(q(1, 2)));
        assert!(matches!(multiply(&a, &Matrix::identity(3)), Err(Error::Shape(_))));
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(&Matrix::identity(2), &Matrix::identity(3)), Matrix::identity(6));
        let swap = m(&[&[0, 1], &[1, 0]]);
        let k = kronecker(&swap, &Matrix::identity(2));
        let expected = m(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(k, expected);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(3)).is_empty());
        assert_eq!(kernel_basis(&Matrix::zeros(2, 2)).len(), 2);
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k, vec![vec![q(-1, 1), q(1, 1)]]);
    }

    #[test]
    fn right_inverse_examples() {
        assert_eq!(right_inverse(&Matrix::identity(2)).unwrap(), Matrix::identity(2));
        let p = m(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(right_inverse(&p).unwrap(), m(&[&[1, 0], &[0, 1], &[0, 0]]));
        assert!(matches!(right_inverse(&m(&[&[1, 1], &[2, 2]])), Err(Error::Rank(_))));
    }

    #[test]
    fn solve_against_epi_examples() {
        let e = m(&[&[1, 2, 0], &[0, 1, 1]]);
        assert_eq!(solve_against_epi(&e, &e).unwrap(), Matrix::identity(2));
        let x = m(&[&[3, 1], &[0, 2]]);
        assert_eq!(solve_against_epi(&x, &Matrix::identity(2)).unwrap(), x);
        // m not in the row space of e.
        let bad = m(&[&[1, 0, 0]]);
        assert!(matches!(solve_against_epi(&bad, &e), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn middle_application_matches_kron() {
        let f = m(&[&[1, 2, 0], &[0, -1, 3]]);
        let x = Matrix::from_fn(2 * 3 * 2, 3, |i, j| Rational::from_integer((i * 7 + j * 3) as i64 % 5 - 2));
        let direct = &Matrix::identity(2).kron(&f).kron(&Matrix::identity(2)) * &x;
        assert_eq!(Matrix::apply_middle(2, &f, 2, &x), direct);
        let y = Matrix::from_fn(3, 2 * 2 * 2, |i, j| Rational::from_integer((i + 2 * j) as i64 % 3 - 1));
        let direct = &y * &Matrix::identity(2).kron(&f).kron(&Matrix::identity(2));
        assert_eq!(Matrix::right_apply_middle(&y, 2, &f, 2), direct);
    }

    #[test]
    fn flip_is_involution() {
        let f = Matrix::flip(2, 3);
        assert_eq!(&Matrix::flip(3, 2) * &f, Matrix::identity(6));
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = Matrix::identity(3).scale(&q(5, 1));
        assert_eq!(&f * &a.kron(&b), &b.kron(&a) * &f);
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
            Matrix::from_fn(rows, cols, |i, j| Rational::from_integer(v[i * cols + j]))
        })
    }

    proptest! {
        #[test]
        fn product_is_associative(a in small_matrix(2, 3), b in small_matrix(3, 2), c in small_matrix(2, 4)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        /// Oracle: entrywise expansion of both sides of the interchange law.
        #[test]
        fn kron_interchange(a in small_matrix(2, 2), b in small_matrix(2, 2), c in small_matrix(2, 2), d in small_matrix(2, 2)) {
            let lhs = &a.kron(&b) * &c.kron(&d);
            let expanded = Matrix::from_fn(4, 4, |i, j| {
                let (i1, i2, j1, j2) = (i / 2, i % 2, j / 2, j % 2);
                let mut s = Rational::zero();
                for k1 in 0..2 {
                    for k2 in 0..2 {
                        s += &(&(a.get(i1, k1) * b.get(i2, k2)) * &(c.get(k1, j1) * d.get(k2, j2)));
                    }
                }
                s
            });
            prop_assert_eq!(&lhs, &expanded);
            prop_assert_eq!(lhs, (&a * &c).kron(&(&b * &d)));
        }

        #[test]
        fn kernel_vectors_are_independent_and_annihilated(a in small_matrix(3, 5)) {
            let k = a.kernel_matrix();
            prop_assert_eq!(k.cols(), 5 - a.rank());
            prop_assert!((&a * &k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn right_inverse_of_full_row_rank(a in small_matrix(2, 4)) {
            prop_assume!(a.rank() == 2);
            prop_assert_eq!(&a * &a.right_inverse().unwrap(), Matrix::identity(2));
        }

        /// Round-trip oracle: build m := x0 · e, recover x0.
        #[test]
        fn solve_against_epi_round_trip(e in small_matrix(2, 4), x0 in small_matrix(3, 2)) {
            prop_assume!(e.rank() == 2);
            let m = &x0 * &e;
            prop_assert_eq!(solve_against_epi(&m, &e).unwrap(), x0);
        }

        #[test]
        fn inverse_is_two_sided(a in small_matrix(3, 3)) {
            prop_assume!(a.rank() == 3);
            let inv = a.inverse().unwrap();
            prop_assert!((&a * &inv).is_identity());
            prop_assert!((&inv * &a).is_identity());
        }
    }
}
