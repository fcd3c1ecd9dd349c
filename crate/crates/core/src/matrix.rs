//! Dense exact matrices and deterministic Gaussian elimination.
//!
//! Pivoting is fixed left-to-right with no heuristics, so the reduced
//! row-echelon form (and everything derived from it) is bit-stable
//! across runs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{FieldSpec, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            for e in r {
                assert_eq!(e.field(), field, "entry from a different field");
                entries.push(e.clone());
            }
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry from a different field");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j) * s)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        Matrix::from_fn(self.field, self.rows, other.cols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                let t = self.get(i, k) * other.get(k, j);
                if !t.is_zero() {
                    acc = &acc + &t;
                }
            }
            acc
        })
    }

    /// Matrix applied to a coordinate (column) vector.
    pub fn matvec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length differs from columns");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = &acc + &(self.get(i, k) * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// self^k for square matrices; k = 0 yields the identity.
    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square(), "matrix power requires a square matrix");
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Stack matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let field = parts[0].field;
        let cols = parts[0].cols;
        let mut rows = Vec::new();
        for p in parts {
            assert_eq!(p.cols, cols);
            assert_eq!(p.field, field);
            rows.extend(p.row_vectors());
        }
        Matrix::from_rows(field, cols, &rows)
    }

    /// Reduced row-echelon form and its pivot columns. Idempotent; zero
    /// rows are kept at the bottom so the shape is preserved.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // first nonzero entry in column c at or below row r
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &(&f * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// {v : self · v = 0}, canonically; ambient dimension = cols.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, &basis)
    }

    /// Column space; ambient dimension = rows.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vec<Scalar>> = (0..self.cols).map(|c| self.column(c)).collect();
        Subspace::from_vectors(self.field, self.rows, &cols)
    }

    /// Row space; ambient dimension = cols.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.cols, &self.row_vectors())
    }

    /// (ker self^n, im self^n) for square self and n >= dimension, i.e.
    /// the Fitting decomposition of the operator.
    pub fn operator_power_stable(&self, n: usize) -> (Subspace, Subspace) {
        assert!(self.is_square(), "Fitting decomposition requires a square operator");
        assert!(n >= self.rows, "power must be at least the ambient dimension");
        let p = self.pow(n);
        (p.kernel(), p.image())
    }

    /// One solution x of self · x = rhs, if any.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Monic minimal polynomial, coefficients lowest degree first
    /// (last coefficient is 1).
    pub fn min_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let mut powers: Vec<Matrix> = vec![Matrix::identity(self.field, n)];
        loop {
            let k = powers.len();
            let next = powers[k - 1].mul(self);
            // is `next` a combination of the previous powers?
            let mut stacked = Matrix::zeros(self.field, n * n, k);
            for (col, pw) in powers.iter().enumerate() {
                for i in 0..n {
                    for j in 0..n {
                        stacked.set(i * n + j, col, pw.get(i, j).clone());
                    }
                }
            }
            let mut rhs = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    rhs.push(next.get(i, j).clone());
                }
            }
            if let Some(sol) = stacked.solve(&rhs) {
                // x^k - sum sol_i x^i
                let mut coeffs: Vec<Scalar> = sol.iter().map(|c| -c).collect();
                coeffs.push(self.field.one());
                return coeffs;
            }
            powers.push(next);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
