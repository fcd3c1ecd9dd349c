//! Canonical subspaces of F^n.
//!
//! A subspace is stored as its reduced row-echelon basis with zero rows
//! dropped. That form is unique, so equality, ordering and deduplication
//! are structural. Lattice operations (sum, intersection, quotient
//! representatives) all preserve canonical form.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix, // dim x ambient, RREF, full row rank
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors, canonicalized.
    pub fn from_vectors(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length differs from ambient dimension");
        }
        let m = Matrix::from_rows(field, ambient, vectors);
        Self::from_matrix_rows(&m)
    }

    /// Row space of a matrix, canonicalized.
    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let rows: Vec<Vec<Scalar>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.field(), m.cols(), &rows),
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Proper means strictly below the full ambient space.
    pub fn is_proper(&self) -> bool {
        !self.is_full()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    /// v reduced modulo the subspace: pivot coordinates are eliminated.
    /// The result is zero iff v lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let f = out[p].clone();
                for (j, o) in out.iter_mut().enumerate() {
                    *o = &*o - &(&f * self.basis.get(row, j));
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Matrix of the linear map v ↦ v reduced mod this subspace; its
    /// kernel is exactly the subspace.
    pub fn reduction_matrix(&self) -> Matrix {
        let field = self.field();
        let mut cols = Vec::with_capacity(self.ambient);
        for j in 0..self.ambient {
            let mut e = vec![field.zero(); self.ambient];
            e[j] = field.one();
            cols.push(self.reduce(&e));
        }
        Matrix::from_fn(field, self.ambient, self.ambient, |i, j| cols[j][i].clone())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimensions differ");
        (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    /// Coefficients of v in this basis, when v lies in the subspace.
    /// Because the basis is RREF, the coefficient of row i is v[pivot_i].
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the basis rows by the given coefficients.
    pub fn vector_from_coordinates(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let field = self.field();
        let mut out = vec![field.zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = &*o + &(c * self.basis.get(i, j));
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimensions differ");
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::from_vectors(self.field(), self.ambient, &rows)
    }

    /// {x : b · x = 0 for every basis row b} under the standard bilinear
    /// pairing. The pairing is perfect over any field, so the double
    /// annihilator recovers the subspace.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient);
        }
        self.basis.kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimensions differ");
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Coset representatives for self modulo `sub` (requires sub ⊆ self):
    /// the RREF basis rows of self whose pivot columns are not pivot
    /// columns of sub. For self = F^n these are exactly the non-pivot
    /// standard basis vectors of sub.
    pub fn coset_reps_mod(&self, sub: &Subspace) -> Vec<Vec<Scalar>> {
        assert!(self.contains(sub), "coset representatives need sub ⊆ self");
        let mut reps = Vec::with_capacity(self.dim() - sub.dim());
        for (row, &p) in self.pivots.iter().enumerate() {
            if !sub.pivots.contains(&p) {
                reps.push(self.basis.row(row).to_vec());
            }
        }
        debug_assert_eq!(reps.len(), self.dim() - sub.dim());
        reps
    }

    /// Intersection of a family, with the empty family defaulting to the
    /// full space.
    pub fn intersect_all<'a>(
        field: FieldSpec,
        ambient: usize,
        spaces: impl IntoIterator<Item = &'a Subspace>,
    ) -> Subspace {
        let mut acc = Subspace::full(field, ambient);
        for s in spaces {
            acc = acc.intersect(s);
        }
        acc
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Deterministic report order: by dimension, then lexicographically on the
/// canonical basis entries.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| {
                for i in 0..self.dim() {
                    for j in 0..self.ambient {
                        let c = self.basis.get(i, j).cmp(other.basis.get(i, j));
                        if c != Ordering::Equal {
                            return c;
                        }
                    }
                }
                Ordering::Equal
            })
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim() == 0 {
            return write!(f, "0");
        }
        write!(f, "span{{")?;
        for i in 0..self.dim() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for j in 0..self.ambient {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.basis.get(i, j))?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}
