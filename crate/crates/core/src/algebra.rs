//! Structure-constant Leibniz algebras.
//!
//! The left Leibniz convention is used throughout: left multiplications
//! are derivations, i.e. x(yz) = (xy)z + y(xz), and the constructor
//! validates this identity on every basis triple.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{format_combination, FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// One sparse product: (i, j, terms) states e_i · e_j = Σ c_k e_k.
pub type Product = (usize, usize, Vec<(usize, Scalar)>);

#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizAlgebra {
    field: FieldSpec,
    dim: usize,
    basis_names: Vec<String>,
    /// tensor[i][j] = coordinates of e_i · e_j
    tensor: Vec<Vec<Vec<Scalar>>>,
}

/// Lower central, derived and upper central series of an algebra,
/// together with the flags they decide.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesReport {
    /// A = A^1 ⊇ A^2 ⊇ …, listed up to (and including) the stable term.
    pub lower_central: Vec<Subspace>,
    /// The stable term A^ω of the lower central series.
    pub omega: Subspace,
    /// A = A^(1) ⊇ A^(2) ⊇ … with A^(k+1) = A^(k)·A^(k).
    pub derived: Vec<Subspace>,
    /// Z_1 ⊆ Z_2 ⊆ … up to the stable term.
    pub upper_central: Vec<Subspace>,
    /// Final term Z*(A) of the upper central series.
    pub z_star: Subspace,
    pub nilpotent: bool,
    pub solvable: bool,
    pub nilpotency_class: Option<usize>,
}

/// Basic structural invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantsReport {
    /// Two-sided center {x : x·a = a·x = 0 for all a}.
    pub center: Subspace,
    /// Left annihilating center {x : x·a = 0 for all a}, reported so a
    /// reader can see when the one-sided reading would differ.
    pub left_center: Subspace,
    /// Leib(A) = span of all squares; zero exactly when A is Lie.
    pub leib: Subspace,
    /// A² = A·A.
    pub square: Subspace,
    pub is_lie: bool,
}

/// A quotient A/I with its projection and a linear section.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LeibnizAlgebra,
    /// (dim A/I) × (dim A) matrix sending v to the coordinates of v + I.
    pub projection: Matrix,
    /// (dim A) × (dim A/I) matrix choosing coset representatives;
    /// projection ∘ section is the identity.
    pub section: Matrix,
    ideal: Subspace,
}

impl Quotient {
    pub fn project_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.matvec(v)
    }

    pub fn lift_vector(&self, w: &[Scalar]) -> Vec<Scalar> {
        self.section.matvec(w)
    }

    pub fn project_subspace(&self, s: &Subspace) -> Subspace {
        let rows: Vec<Vec<Scalar>> = s
            .basis_vectors()
            .iter()
            .map(|v| self.project_vector(v))
            .collect();
        Subspace::from_vectors(self.algebra.field, self.algebra.dim, &rows)
    }

    /// Full preimage of a subspace of A/I, i.e. lift + I.
    pub fn preimage_subspace(&self, w: &Subspace) -> Subspace {
        let mut rows: Vec<Vec<Scalar>> = w
            .basis_vectors()
            .iter()
            .map(|v| self.lift_vector(v))
            .collect();
        rows.extend(self.ideal.basis_vectors());
        Subspace::from_vectors(self.ideal.field(), self.ideal.ambient(), &rows)
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }
}

/// A subalgebra re-expressed as an algebra in its own right.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub algebra: LeibnizAlgebra,
    carrier: Subspace,
}

impl Restriction {
    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    /// Subspace of the restricted algebra → subspace of the ambient one.
    pub fn to_ambient(&self, s: &Subspace) -> Subspace {
        let rows: Vec<Vec<Scalar>> = s
            .basis_vectors()
            .iter()
            .map(|c| self.carrier.vector_from_coordinates(c))
            .collect();
        Subspace::from_vectors(self.carrier.field(), self.carrier.ambient(), &rows)
    }

    /// Subspace of the ambient algebra contained in the carrier →
    /// subspace in restricted coordinates.
    pub fn from_ambient(&self, s: &Subspace) -> Subspace {
        let rows: Vec<Vec<Scalar>> = s
            .basis_vectors()
            .iter()
            .map(|v| {
                self.carrier
                    .coordinates_of(v)
                    .expect("subspace not inside the carrier")
            })
            .collect();
        Subspace::from_vectors(self.carrier.field(), self.carrier.dim(), &rows)
    }

    pub fn to_ambient_vector(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.carrier.vector_from_coordinates(coords)
    }
}

impl LeibnizAlgebra {
    /// Build from a sparse products list; omitted products are zero.
    /// `products` entries are (i, j, [(k, coefficient)]) meaning
    /// e_i · e_j = Σ coefficient · e_k.
    pub fn from_products(
        field: FieldSpec,
        dim: usize,
        basis_names: Option<Vec<String>>,
        products: &[Product],
    ) -> Result<Self> {
        let mut tensor = vec![vec![vec![field.zero(); dim]; dim]; dim];
        for (i, j, terms) in products {
            for idx in [*i, *j] {
                if idx >= dim {
                    return Err(Error::BadIndex { index: idx, dim });
                }
            }
            for (k, c) in terms {
                if *k >= dim {
                    return Err(Error::BadIndex { index: *k, dim });
                }
                if c.field() != field {
                    return Err(Error::FieldMismatch);
                }
                tensor[*i][*j][*k] = &tensor[*i][*j][*k] + c;
            }
        }
        Self::from_tensor(field, dim, basis_names, tensor)
    }

    /// Build from a full structure-constant tensor, validating the left
    /// Leibniz identity on all dim³ basis triples.
    pub fn from_tensor(
        field: FieldSpec,
        dim: usize,
        basis_names: Option<Vec<String>>,
        tensor: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self> {
        let basis_names =
            basis_names.unwrap_or_else(|| (1..=dim).map(|i| format!("e{i}")).collect());
        assert_eq!(basis_names.len(), dim, "one name per basis element");
        let alg = LeibnizAlgebra {
            field,
            dim,
            basis_names,
            tensor,
        };
        alg.validate_identity()?;
        Ok(alg)
    }

    fn validate_identity(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // e_i (e_j e_k)
                    let lhs = self.expand_left(i, &self.tensor[j][k]);
                    // (e_i e_j) e_k + e_j (e_i e_k)
                    let mut rhs = self.expand_right(&self.tensor[i][j], k);
                    let t2 = self.expand_left(j, &self.tensor[i][k]);
                    for (r, t) in rhs.iter_mut().zip(&t2) {
                        *r = &*r + t;
                    }
                    if lhs != rhs {
                        return Err(Error::LeibnizIdentityViolation { i, j, k, lhs, rhs });
                    }
                }
            }
        }
        Ok(())
    }

    /// e_i · v for a coordinate vector v.
    fn expand_left(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (m, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                let t = &self.tensor[i][m][k];
                if !t.is_zero() {
                    *o = &*o + &(c * t);
                }
            }
        }
        out
    }

    /// v · e_k for a coordinate vector v.
    fn expand_right(&self, v: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (m, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, o) in out.iter_mut().enumerate() {
                let s = &self.tensor[m][k][t];
                if !s.is_zero() {
                    *o = &*o + &(c * s);
                }
            }
        }
        out
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn tensor_entry(&self, i: usize, j: usize) -> &[Scalar] {
        &self.tensor[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    pub fn span(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        Subspace::from_vectors(self.field, self.dim, vectors)
    }

    /// Pretty form of a coordinate vector in the algebra's basis names.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        format_combination(v, &self.basis_names)
    }

    /// u · v by bilinear expansion of the structure constants.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec![self.field.zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    let t = &self.tensor[i][j][k];
                    if !t.is_zero() {
                        *o = &*o + &(&ab * t);
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication L_x : v ↦ x·v.
    pub fn left_op(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_fn(self.field, self.dim, self.dim, |k, j| {
            let mut acc = self.field.zero();
            for (i, a) in x.iter().enumerate() {
                if !a.is_zero() {
                    acc = &acc + &(a * &self.tensor[i][j][k]);
                }
            }
            acc
        })
    }

    /// Matrix of right multiplication R_x : v ↦ v·x.
    pub fn right_op(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_fn(self.field, self.dim, self.dim, |k, i| {
            let mut acc = self.field.zero();
            for (j, a) in x.iter().enumerate() {
                if !a.is_zero() {
                    acc = &acc + &(a * &self.tensor[i][j][k]);
                }
            }
            acc
        })
    }

    /// span{u·v : u over basis(U), v over basis(V)}.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for a in u.basis_vectors() {
            for b in v.basis_vectors() {
                rows.push(self.multiply(&a, &b));
            }
        }
        self.span(&rows)
    }

    /// A² = A·A.
    pub fn square(&self) -> Subspace {
        let full = self.full_space();
        self.product_space(&full, &full)
    }

    /// Least subspace containing the generators and closed under the
    /// product; reached in at most dim steps.
    pub fn subalgebra_closure(&self, generators: &[Vec<Scalar>]) -> Subspace {
        let mut w = self.span(generators);
        loop {
            let grown = w.sum(&self.product_space(&w, &w));
            if grown == w {
                return w;
            }
            w = grown;
        }
    }

    /// Smallest ideal containing the generators (X^A).
    pub fn ideal_closure(&self, generators: &[Vec<Scalar>]) -> Subspace {
        let full = self.full_space();
        let mut w = self.span(generators);
        loop {
            let grown = w
                .sum(&self.product_space(&full, &w))
                .sum(&self.product_space(&w, &full));
            if grown == w {
                return w;
            }
            w = grown;
        }
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> bool {
        u.contains(&self.product_space(u, u))
    }

    /// Two-sided: A·U ⊆ U and U·A ⊆ U.
    pub fn is_ideal(&self, u: &Subspace) -> bool {
        let full = self.full_space();
        u.contains(&self.product_space(&full, u)) && u.contains(&self.product_space(u, &full))
    }

    /// Two-sided center Z(A) = {x : x·a = a·x = 0 for all a}; always an
    /// ideal, unlike the one-sided readings.
    pub fn center(&self) -> Subspace {
        if self.dim == 0 {
            return self.zero_space();
        }
        let mut parts = Vec::with_capacity(2 * self.dim);
        for j in 0..self.dim {
            let e = self.basis_vector(j);
            parts.push(self.right_op(&e)); // x ↦ x·e_j
            parts.push(self.left_op(&e)); // x ↦ e_j·x
        }
        let refs: Vec<&Matrix> = parts.iter().collect();
        Matrix::vstack(&refs).kernel()
    }

    /// {x : x·a = 0 for all a}.
    pub fn left_center(&self) -> Subspace {
        if self.dim == 0 {
            return self.zero_space();
        }
        let parts: Vec<Matrix> = (0..self.dim)
            .map(|j| self.right_op(&self.basis_vector(j)))
            .collect();
        let refs: Vec<&Matrix> = parts.iter().collect();
        Matrix::vstack(&refs).kernel()
    }

    /// Leib(A): span of all squares x·x. Generated by e_i·e_i together
    /// with e_i·e_j + e_j·e_i, which spans the same space over any field.
    pub fn leib(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            rows.push(self.tensor[i][i].clone());
            for j in (i + 1)..self.dim {
                let sym: Vec<Scalar> = self.tensor[i][j]
                    .iter()
                    .zip(&self.tensor[j][i])
                    .map(|(a, b)| a + b)
                    .collect();
                rows.push(sym);
            }
        }
        self.span(&rows)
    }

    pub fn is_lie(&self) -> bool {
        self.leib().is_zero()
    }

    pub fn invariants(&self) -> InvariantsReport {
        InvariantsReport {
            center: self.center(),
            left_center: self.left_center(),
            leib: self.leib(),
            square: self.square(),
            is_lie: self.is_lie(),
        }
    }

    /// Lower central (two-sided recursion A^{k+1} = A·A^k + A^k·A),
    /// derived and upper central series with their flags.
    pub fn series(&self) -> SeriesReport {
        let full = self.full_space();

        let mut lower_central = vec![full.clone()];
        loop {
            let w = lower_central.last().unwrap();
            let next = self
                .product_space(&full, w)
                .sum(&self.product_space(w, &full));
            if &next == w {
                break;
            }
            lower_central.push(next);
        }
        let omega = lower_central.last().unwrap().clone();
        let nilpotent = omega.is_zero();
        let nilpotency_class = nilpotent.then(|| lower_central.len().saturating_sub(1));

        let mut derived = vec![full.clone()];
        loop {
            let w = derived.last().unwrap();
            let next = self.product_space(w, w);
            if &next == w {
                break;
            }
            derived.push(next);
        }
        let solvable = derived.last().unwrap().is_zero();

        let mut upper_central = Vec::new();
        let mut z = self.zero_space();
        loop {
            let q = self.quotient(&z).expect("Z_i is an ideal");
            let next = q.preimage_subspace(&q.algebra.center());
            if next == z && !upper_central.is_empty() {
                break;
            }
            let stable = next == z;
            z = next;
            upper_central.push(z.clone());
            if stable {
                break;
            }
        }
        let z_star = z;

        SeriesReport {
            lower_central,
            omega,
            derived,
            upper_central,
            z_star,
            nilpotent,
            solvable,
            nilpotency_class,
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        let full = self.full_space();
        let mut w = full.clone();
        loop {
            let next = self
                .product_space(&full, &w)
                .sum(&self.product_space(&w, &full));
            if next == w {
                return w.is_zero();
            }
            w = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        let mut w = self.full_space();
        loop {
            let next = self.product_space(&w, &w);
            if next == w {
                return w.is_zero();
            }
            w = next;
        }
    }

    /// Quotient by a two-sided ideal. Coset representatives are the
    /// standard basis vectors at the non-pivot columns of the ideal's
    /// RREF basis, making the quotient constants deterministic.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if ideal.ambient() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: ideal.ambient(),
            });
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let reps = self.full_space().coset_reps_mod(ideal);
        let m = reps.len();
        // rep s is the standard basis vector at column rep_cols[s]
        let rep_cols: Vec<usize> = reps
            .iter()
            .map(|r| r.iter().position(|c| !c.is_zero()).unwrap())
            .collect();
        let mut section = Matrix::zeros(self.field, self.dim, m);
        for (s, &col) in rep_cols.iter().enumerate() {
            section.set(col, s, self.field.one());
        }
        let mut projection = Matrix::zeros(self.field, m, self.dim);
        for j in 0..self.dim {
            let reduced = ideal.reduce(&self.basis_vector(j));
            for (s, &col) in rep_cols.iter().enumerate() {
                projection.set(s, j, reduced[col].clone());
            }
        }
        let mut tensor = vec![vec![vec![self.field.zero(); m]; m]; m];
        for s in 0..m {
            for t in 0..m {
                let prod = self.multiply(&reps[s], &reps[t]);
                tensor[s][t] = projection.matvec(&prod);
            }
        }
        let names: Vec<String> = reps.iter().map(|r| self.format_element(r)).collect();
        // the quotient of a valid algebra is valid; re-validate anyway
        let algebra = LeibnizAlgebra::from_tensor(self.field, m, Some(names), tensor)?;
        Ok(Quotient {
            algebra,
            projection,
            section,
            ideal: ideal.clone(),
        })
    }

    /// N_A(U) = {x : x·U ⊆ U and U·x ⊆ U}, computed as the kernel of the
    /// reduction-mod-U of the multiplication maps.
    pub fn normalizer(&self, u: &Subspace) -> Subspace {
        if u.dim() == 0 {
            return self.full_space();
        }
        let reduction = u.reduction_matrix();
        let mut parts = Vec::new();
        for b in u.basis_vectors() {
            parts.push(reduction.mul(&self.right_op(&b))); // x ↦ x·b mod U
            parts.push(reduction.mul(&self.left_op(&b))); // x ↦ b·x mod U
        }
        let refs: Vec<&Matrix> = parts.iter().collect();
        Matrix::vstack(&refs).kernel()
    }

    /// Solution space of D(uv) = D(u)v + uD(v) on n² unknowns; basis
    /// vectors are matrices stacked column-major (entry (i,j) at j·n+i).
    pub fn derivations(&self) -> Subspace {
        let n = self.dim;
        if n == 0 {
            return Subspace::zero(self.field, 0);
        }
        let mut system = Matrix::zeros(self.field, n * n * n, n * n);
        for a in 0..n {
            let l_a = self.left_op(&self.basis_vector(a));
            for b in 0..n {
                let row_base = (a * n + b) * n;
                let r_b = self.right_op(&self.basis_vector(b));
                // sum_m tensor[a][b][m] d_m - R_b d_a - L_a d_b = 0
                for m in 0..n {
                    let c = &self.tensor[a][b][m];
                    if !c.is_zero() {
                        for i in 0..n {
                            let col = m * n + i;
                            let cur = system.get(row_base + i, col) + c;
                            system.set(row_base + i, col, cur);
                        }
                    }
                }
                for i in 0..n {
                    for k in 0..n {
                        let col_a = a * n + k;
                        let cur = system.get(row_base + i, col_a) - r_b.get(i, k);
                        system.set(row_base + i, col_a, cur);
                        let col_b = b * n + k;
                        let cur = system.get(row_base + i, col_b) - l_a.get(i, k);
                        system.set(row_base + i, col_b, cur);
                    }
                }
            }
        }
        system.kernel()
    }

    /// Reshape a stacked derivation-space vector into an n×n matrix.
    pub fn derivation_matrix(&self, stacked: &[Scalar]) -> Matrix {
        let n = self.dim;
        assert_eq!(stacked.len(), n * n);
        Matrix::from_fn(self.field, n, n, |i, j| stacked[j * n + i].clone())
    }

    /// Re-express a subalgebra as an algebra on its RREF basis.
    pub fn restrict(&self, u: &Subspace) -> Result<Restriction> {
        if !self.is_subalgebra(u) {
            return Err(Error::NotASubalgebra);
        }
        let k = u.dim();
        let basis = u.basis_vectors();
        let mut tensor = vec![vec![vec![self.field.zero(); k]; k]; k];
        for s in 0..k {
            for t in 0..k {
                let prod = self.multiply(&basis[s], &basis[t]);
                tensor[s][t] = u
                    .coordinates_of(&prod)
                    .expect("subalgebra is closed under the product");
            }
        }
        let names: Vec<String> = basis.iter().map(|b| self.format_element(b)).collect();
        // the identity is inherited by subalgebras, so skip re-validation
        // (restriction sits inside the exhaustive nilpotency sweeps)
        let algebra = LeibnizAlgebra {
            field: self.field,
            dim: k,
            basis_names: names,
            tensor,
        };
        Ok(Restriction {
            algebra,
            carrier: u.clone(),
        })
    }

    /// Is the subspace, viewed as an algebra, nilpotent? Requires a
    /// subalgebra.
    pub fn is_nilpotent_subspace(&self, u: &Subspace) -> Result<bool> {
        Ok(self.restrict(u)?.algebra.is_nilpotent())
    }

    pub fn is_solvable_subspace(&self, u: &Subspace) -> Result<bool> {
        Ok(self.restrict(u)?.algebra.is_solvable())
    }

    /// All p^dim coordinate vectors, in odometer order (first coordinate
    /// fastest). `None` over the rationals.
    pub fn all_elements(&self) -> Option<Vec<Vec<Scalar>>> {
        let FieldSpec::PrimeField(p) = self.field else {
            return None;
        };
        let p = u64::from(p);
        let total = p.checked_pow(self.dim as u32)?;
        let mut out = Vec::with_capacity(total as usize);
        for idx in 0..total {
            let mut v = Vec::with_capacity(self.dim);
            let mut rest = idx;
            for _ in 0..self.dim {
                v.push(self.field.element(rest % p).unwrap());
                rest /= p;
            }
            out.push(v);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::prime_field(p).unwrap()
    }

    fn vec_of(field: FieldSpec, data: &[i64]) -> Vec<Scalar> {
        data.iter().map(|&v| field.scalar_from_i64(v)).collect()
    }

    fn span_of(field: FieldSpec, ambient: usize, data: &[&[i64]]) -> Subspace {
        let rows: Vec<Vec<Scalar>> = data.iter().map(|r| vec_of(field, r)).collect();
        Subspace::from_vectors(field, ambient, &rows)
    }

    fn example8(field: FieldSpec) -> LeibnizAlgebra {
        catalog::example8(field).algebra
    }

    fn example17(field: FieldSpec) -> LeibnizAlgebra {
        catalog::cyclic_leibniz(field, 3, &[0, 1, 0]).unwrap().algebra
    }

    #[test]
    fn example8_is_valid_and_lie() {
        assert!(example8(gf(5)).is_lie());
        assert!(example8(q()).is_lie());
    }

    #[test]
    fn abelian_is_valid() {
        let a = LeibnizAlgebra::from_products(q(), 3, None, &[]).unwrap();
        assert!(a.is_lie());
        assert_eq!(a.center(), a.full_space());
    }

    #[test]
    fn non_leibniz_table_is_rejected() {
        // dim 2 over GF(2) with e1·e1 = e1: the triple (0,0,0) gives
        // e1(e1e1) = e1 but (e1e1)e1 + e1(e1e1) = 2e1 = 0.
        let f = gf(2);
        let r = LeibnizAlgebra::from_products(f, 2, None, &[(0, 0, vec![(0, f.one())])]);
        match r {
            Err(Error::LeibnizIdentityViolation { i: 0, j: 0, k: 0, lhs, rhs }) => {
                assert_eq!(lhs, vec_of(f, &[1, 0]));
                assert_eq!(rhs, vec_of(f, &[0, 0]));
            }
            other => panic!("expected identity violation, got {other:?}"),
        }
    }

    #[test]
    fn bad_index_is_rejected() {
        let f = q();
        let r = LeibnizAlgebra::from_products(f, 2, None, &[(0, 5, vec![(0, f.one())])]);
        assert_eq!(r.unwrap_err(), Error::BadIndex { index: 5, dim: 2 });
    }

    #[test]
    fn example17_products() {
        let a = example17(q());
        // a · a³ = a²
        let got = a.multiply(&a.basis_vector(0), &a.basis_vector(2));
        assert_eq!(got, vec_of(q(), &[0, 1, 0]));
        // 0 · v = 0
        assert_eq!(a.multiply(&a.zero_vector(), &a.basis_vector(0)), a.zero_vector());
    }

    #[test]
    fn example8_left_op_of_z() {
        let a = example8(q());
        let lz = a.left_op(&a.basis_vector(2));
        // L_z: x ↦ -x, y ↦ y, z ↦ 0
        assert_eq!(lz.matvec(&vec_of(q(), &[1, 0, 0])), vec_of(q(), &[-1, 0, 0]));
        assert_eq!(lz.matvec(&vec_of(q(), &[0, 1, 0])), vec_of(q(), &[0, 1, 0]));
        assert_eq!(lz.matvec(&vec_of(q(), &[0, 0, 1])), vec_of(q(), &[0, 0, 0]));
    }

    #[test]
    fn kernel_of_generator_left_multiplication() {
        // (c1 + c3)a² + c2 a³ = 0 forces c2 = 0, c3 = -c1
        let a = example17(q());
        let la = a.left_op(&a.basis_vector(0));
        assert_eq!(la.kernel(), span_of(q(), 3, &[&[1, 0, -1]]));
    }

    #[test]
    fn left_op_agrees_with_multiply() {
        let a = example17(gf(5));
        let x = vec_of(gf(5), &[1, 2, 3]);
        let v = vec_of(gf(5), &[4, 0, 1]);
        assert_eq!(a.left_op(&x).matvec(&v), a.multiply(&x, &v));
        assert_eq!(a.right_op(&x).matvec(&v), a.multiply(&v, &x));
    }

    #[test]
    fn product_space_examples() {
        let a = example8(q());
        let full = a.full_space();
        assert_eq!(
            a.product_space(&full, &full),
            span_of(q(), 3, &[&[1, 0, 0], &[0, 1, 0]])
        );
        let zero = a.zero_space();
        assert!(a.product_space(&zero, &full).is_zero());

        // squares left-annihilate in Example 17: A²·A = 0
        let c = example17(q());
        let sq = c.square();
        assert!(c.product_space(&sq, &c.full_space()).is_zero());
    }

    #[test]
    fn closures() {
        let a = example17(q());
        // the generator a generates the whole cyclic algebra
        assert_eq!(a.subalgebra_closure(&[a.basis_vector(0)]), a.full_space());
        // ideal closure of the empty set is zero
        assert!(a.ideal_closure(&[]).is_zero());
        // Example 8: the ideal generated by x is span{x}
        let b = example8(q());
        assert_eq!(
            b.ideal_closure(&[b.basis_vector(0)]),
            span_of(q(), 3, &[&[1, 0, 0]])
        );
    }

    #[test]
    fn subalgebra_and_ideal_tests() {
        let a = example17(q());
        // span{a² + a³} is an ideal
        let k = span_of(q(), 3, &[&[0, 1, 1]]);
        assert!(a.is_ideal(&k));
        assert!(a.is_ideal(&a.full_space()));
        assert!(a.is_ideal(&a.zero_space()));

        // in A/K, span{ā + ā²} is a subalgebra but not an ideal
        let quot = a.quotient(&k).unwrap();
        let aq = &quot.algebra;
        let abar = quot.project_vector(&a.basis_vector(0));
        let a2bar = quot.project_vector(&vec_of(q(), &[0, 1, 0]));
        let w: Vec<Scalar> = abar.iter().zip(&a2bar).map(|(x, y)| x + y).collect();
        let line = aq.span(&[w]);
        assert!(aq.is_subalgebra(&line));
        assert!(!aq.is_ideal(&line));
    }

    #[test]
    fn series_of_example17() {
        let a = example17(q());
        let s = a.series();
        let sq = span_of(q(), 3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(s.lower_central[1], sq);
        assert_eq!(s.omega, sq);
        assert!(!s.nilpotent);
        assert!(s.solvable);
    }

    #[test]
    fn series_of_example8() {
        let a = example8(q());
        let s = a.series();
        let sq = span_of(q(), 3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(s.lower_central[1], sq);
        // derived: A ⊇ A² ⊇ 0
        assert_eq!(s.derived.len(), 3);
        assert_eq!(s.derived[1], sq);
        assert!(s.derived[2].is_zero());
        assert!(!s.nilpotent);
        assert!(s.solvable);
    }

    #[test]
    fn series_of_abelian() {
        let a = LeibnizAlgebra::from_products(gf(3), 2, None, &[]).unwrap();
        let s = a.series();
        assert!(s.nilpotent);
        assert_eq!(s.nilpotency_class, Some(1));
        assert_eq!(s.z_star, a.full_space());
    }

    #[test]
    fn center_examples() {
        let a = example8(q());
        assert!(a.center().is_zero());
        let ab = LeibnizAlgebra::from_products(q(), 2, None, &[]).unwrap();
        assert_eq!(ab.center(), ab.full_space());
    }

    #[test]
    fn left_center_differs_on_example17() {
        // squares annihilate on the left, so the left center is A²,
        // while the two-sided center is zero.
        let a = example17(q());
        assert_eq!(a.left_center(), span_of(q(), 3, &[&[0, 1, 0], &[0, 0, 1]]));
        assert!(a.center().is_zero());
    }

    #[test]
    fn quotient_of_example17_by_k() {
        let a = example17(q());
        let k = span_of(q(), 3, &[&[0, 1, 1]]);
        let quot = a.quotient(&k).unwrap();
        assert_eq!(quot.algebra.dim(), 2);
        // ā·ā = ā² and ā·ā² = -ā² hold in the quotient
        let abar = quot.project_vector(&a.basis_vector(0));
        let a2bar = quot.project_vector(&vec_of(q(), &[0, 1, 0]));
        assert_eq!(quot.algebra.multiply(&abar, &abar), a2bar);
        let neg: Vec<Scalar> = a2bar.iter().map(|c| -c).collect();
        assert_eq!(quot.algebra.multiply(&abar, &a2bar), neg);
        // projection ∘ section = identity
        let ps = quot.projection.mul(&quot.section);
        assert_eq!(ps, Matrix::identity(q(), 2));
    }

    #[test]
    fn quotient_by_zero_is_isomorphic_copy() {
        let a = example8(gf(3));
        let quot = a.quotient(&a.zero_space()).unwrap();
        assert_eq!(quot.algebra.dim(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(quot.algebra.tensor_entry(i, j), a.tensor_entry(i, j));
            }
        }
    }

    #[test]
    fn quotient_of_example8_by_x() {
        let a = example8(q());
        let i = span_of(q(), 3, &[&[1, 0, 0]]);
        let quot = a.quotient(&i).unwrap();
        // z̄·ȳ = ȳ and ȳ·z̄ = -ȳ
        let ybar = quot.project_vector(&a.basis_vector(1));
        let zbar = quot.project_vector(&a.basis_vector(2));
        assert_eq!(quot.algebra.multiply(&zbar, &ybar), ybar);
        let neg: Vec<Scalar> = ybar.iter().map(|c| -c).collect();
        assert_eq!(quot.algebra.multiply(&ybar, &zbar), neg);
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let a = example8(q());
        let u = span_of(q(), 3, &[&[0, 0, 1]]); // span{z} is not an ideal
        assert_eq!(a.quotient(&u).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn normalizer_examples() {
        let a = example8(q());
        // an ideal is normalized by everything
        let ideal = span_of(q(), 3, &[&[1, 0, 0]]);
        assert_eq!(a.normalizer(&ideal), a.full_space());
        // span{z} is self-normalizing
        let z = span_of(q(), 3, &[&[0, 0, 1]]);
        assert_eq!(a.normalizer(&z), z);

        let c = example17(q());
        let cart = span_of(q(), 3, &[&[1, 0, -1]]);
        assert_eq!(c.normalizer(&cart), cart);
    }

    #[test]
    fn derivations_of_abelian_and_example8() {
        let ab = LeibnizAlgebra::from_products(q(), 3, None, &[]).unwrap();
        assert_eq!(ab.derivations().dim(), 9);

        // left multiplications are derivations in a left Leibniz algebra;
        // check L_z for Example 8 explicitly
        let a = example8(q());
        let der = a.derivations();
        let lz = a.left_op(&a.basis_vector(2));
        let mut stacked = Vec::new();
        for j in 0..3 {
            for i in 0..3 {
                stacked.push(lz.get(i, j).clone());
            }
        }
        assert!(der.contains_vector(&stacked));
    }

    #[test]
    fn heisenberg_grading_derivation() {
        // D(e) = e, D(f) = f, D(h) = 2h is a derivation of the Heisenberg
        // algebra: D(ef) = D(h) = 2h = D(e)f + eD(f).
        let a = catalog::heisenberg(gf(3)).algebra;
        let der = a.derivations();
        let f = gf(3);
        let d = Matrix::from_rows(
            f,
            3,
            &[
                vec_of(f, &[1, 0, 0]),
                vec_of(f, &[0, 1, 0]),
                vec_of(f, &[0, 0, 2]),
            ],
        );
        let mut stacked = Vec::new();
        for j in 0..3 {
            for i in 0..3 {
                stacked.push(d.get(i, j).clone());
            }
        }
        assert!(der.contains_vector(&stacked));
    }

    #[test]
    fn restriction_round_trip() {
        let a = example17(q());
        let sq = a.square();
        let r = a.restrict(&sq).unwrap();
        assert_eq!(r.algebra.dim(), 2);
        assert!(r.algebra.is_nilpotent()); // A² is abelian here
        let back = r.to_ambient(&r.algebra.full_space());
        assert_eq!(back, sq);
    }

    #[test]
    fn squares_left_annihilate_everywhere() {
        for alg in [example8(q()), example17(q()), example17(gf(2))] {
            for i in 0..alg.dim() {
                let sq = alg.multiply(&alg.basis_vector(i), &alg.basis_vector(i));
                for j in 0..alg.dim() {
                    let prod = alg.multiply(&sq, &alg.basis_vector(j));
                    assert!(prod.iter().all(Scalar::is_zero));
                }
            }
        }
    }

    #[test]
    fn series_terms_are_ideals() {
        for alg in [example8(gf(3)), example17(gf(5))] {
            let s = alg.series();
            for t in s.lower_central.iter().chain(&s.derived).chain(&s.upper_central) {
                assert!(alg.is_ideal(t));
            }
        }
    }

    #[test]
    fn left_only_lower_central_recursion_agrees_on_catalog() {
        for alg in [example8(q()), example8(gf(2)), example17(q()), example17(gf(3))] {
            let full = alg.full_space();
            let two_sided = alg.series().lower_central;
            let mut left_only = vec![full.clone()];
            loop {
                let w = left_only.last().unwrap();
                let next = alg.product_space(&full, w);
                if &next == w {
                    break;
                }
                left_only.push(next);
            }
            assert_eq!(two_sided, left_only);
        }
    }
}
