//! Exhaustive enumeration of subspaces, subalgebras and ideals over
//! prime fields.
//!
//! Enumeration walks canonical RREF shapes (choose pivot columns, fill
//! free entries), so every subspace appears exactly once and the order is
//! deterministic. Everything the rest of the crate computes over a prime
//! field can be checked against these lists; above the budget the
//! operations refuse rather than sample.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::subspace::Subspace;

/// Budgets gating exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_subspaces: u64,
    pub max_elements: u64,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_subspaces: 200_000,
            max_elements: 100_000,
        }
    }
}

/// Gaussian binomial: the number of k-dimensional subspaces of F_p^n,
/// via the recurrence G(n,k) = p^k G(n-1,k) + G(n-1,k-1).
pub fn gaussian_binomial(p: u32, n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let p = BigUint::from(p);
    let mut row = vec![BigUint::one()]; // G(0, ·)
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let mut v = BigUint::zero();
            if j < row.len() {
                v += p.pow(j as u32) * &row[j];
            }
            if j > 0 {
                v += &row[j - 1];
            }
            next.push(v);
        }
        row = next;
    }
    row[k].clone()
}

/// Total number of subspaces of F_p^n (all dimensions).
pub fn count_subspaces(p: u32, n: usize) -> BigUint {
    (0..=n).map(|k| gaussian_binomial(p, n, k)).sum()
}

fn check_subspace_budget(p: u32, n: usize, budget: &EnumBudget) -> Result<u64> {
    let count = count_subspaces(p, n);
    if count > BigUint::from(budget.max_subspaces) {
        return Err(Error::BudgetExceeded {
            required: count.to_u128().unwrap_or(u128::MAX),
            budget: budget.max_subspaces,
        });
    }
    Ok(count.to_u64().expect("count fits below the u64 budget"))
}

fn pivot_shapes(n: usize) -> Vec<Vec<usize>> {
    // all subsets of {0..n-1} ordered by (size, lexicographic)
    let mut shapes: Vec<Vec<usize>> = Vec::new();
    for k in 0..=n {
        if k == 0 {
            shapes.push(Vec::new());
            continue;
        }
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            shapes.push(combo.clone());
            // advance to the next k-combination in lexicographic order
            let mut advanced = false;
            for i in (0..k).rev() {
                if combo[i] < n - k + i {
                    combo[i] += 1;
                    for j in (i + 1)..k {
                        combo[j] = combo[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    shapes
}

fn free_positions_of(pivots: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut free = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for j in (p + 1)..n {
            if !pivots.contains(&j) {
                free.push((i, j));
            }
        }
    }
    free
}

/// Iterator over every subspace of F_p^n, each exactly once, in a fixed
/// order: dimension ascending, pivot sets lexicographic, free entries in
/// odometer order.
pub struct SubspaceEnumerator {
    field: FieldSpec,
    p: u64,
    n: usize,
    shapes: Vec<Vec<usize>>,
    shape_idx: usize,
    free_positions: Vec<(usize, usize)>,
    at: u64,
    shape_size: u64,
}

impl SubspaceEnumerator {
    fn new(field: FieldSpec, p: u32, n: usize) -> Self {
        let shapes = pivot_shapes(n);
        let mut e = SubspaceEnumerator {
            field,
            p: u64::from(p),
            n,
            shapes,
            shape_idx: 0,
            free_positions: Vec::new(),
            at: 0,
            shape_size: 0,
        };
        e.load_shape();
        e
    }

    fn load_shape(&mut self) {
        if self.shape_idx < self.shapes.len() {
            self.free_positions = free_positions_of(&self.shapes[self.shape_idx], self.n);
            self.shape_size = self.p.pow(self.free_positions.len() as u32);
            self.at = 0;
        }
    }
}

impl Iterator for SubspaceEnumerator {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        while self.shape_idx < self.shapes.len() && self.at == self.shape_size {
            self.shape_idx += 1;
            self.load_shape();
        }
        if self.shape_idx >= self.shapes.len() {
            return None;
        }
        let pivots = &self.shapes[self.shape_idx];
        let mut rows = vec![vec![self.field.zero(); self.n]; pivots.len()];
        for (i, &pc) in pivots.iter().enumerate() {
            rows[i][pc] = self.field.one();
        }
        let mut rest = self.at;
        for &(i, j) in &self.free_positions {
            rows[i][j] = self.field.element(rest % self.p).unwrap();
            rest /= self.p;
        }
        self.at += 1;
        Some(Subspace::from_vectors(self.field, self.n, &rows))
    }
}

/// Every subspace of F_p^n exactly once; refuses above budget.
pub fn enumerate_subspaces(
    field: FieldSpec,
    n: usize,
    budget: &EnumBudget,
) -> Result<SubspaceEnumerator> {
    let FieldSpec::PrimeField(p) = field else {
        return Err(Error::WrongField);
    };
    check_subspace_budget(p, n, budget)?;
    Ok(SubspaceEnumerator::new(field, p, n))
}

/// All p^dim coordinate vectors of F_p^dim in odometer order (first
/// coordinate fastest); refuses above the element budget.
pub fn enumerate_elements(
    field: FieldSpec,
    dim: usize,
    budget: &EnumBudget,
) -> Result<Vec<Vec<Scalar>>> {
    let FieldSpec::PrimeField(p) = field else {
        return Err(Error::WrongField);
    };
    let p = u64::from(p);
    let total = p.checked_pow(dim as u32).ok_or(Error::BudgetExceeded {
        required: u128::MAX,
        budget: budget.max_elements,
    })?;
    if total > budget.max_elements {
        return Err(Error::BudgetExceeded {
            required: u128::from(total),
            budget: budget.max_elements,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut v = Vec::with_capacity(dim);
        let mut rest = idx;
        for _ in 0..dim {
            v.push(field.element(rest % p).unwrap());
            rest /= p;
        }
        out.push(v);
    }
    Ok(out)
}

/// The complete subalgebra/ideal landscape of an algebra over a prime
/// field.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeReport {
    pub subspace_count: u64,
    pub element_count: u128,
    pub subalgebras: Vec<Subspace>,
    pub ideals: Vec<Subspace>,
    pub maximal_subalgebras: Vec<Subspace>,
    pub maximal_ideals: Vec<Subspace>,
    pub minimal_ideals: Vec<Subspace>,
}

/// Maximal elements of a family under inclusion.
pub fn maximal_members(family: &[Subspace]) -> Vec<Subspace> {
    family
        .iter()
        .filter(|m| !family.iter().any(|other| *other != **m && other.contains(m)))
        .cloned()
        .collect()
}

/// Minimal elements of a family under inclusion.
pub fn minimal_members(family: &[Subspace]) -> Vec<Subspace> {
    family
        .iter()
        .filter(|m| !family.iter().any(|other| *other != **m && m.contains(other)))
        .cloned()
        .collect()
}

pub fn lattice_report(a: &LeibnizAlgebra, budget: &EnumBudget) -> Result<LatticeReport> {
    let FieldSpec::PrimeField(p) = a.field() else {
        return Err(Error::WrongField);
    };
    let count = check_subspace_budget(p, a.dim(), budget)?;
    let mut subalgebras = Vec::new();
    let mut ideals = Vec::new();
    for s in SubspaceEnumerator::new(a.field(), p, a.dim()) {
        if a.is_subalgebra(&s) {
            if a.is_ideal(&s) {
                ideals.push(s.clone());
            }
            subalgebras.push(s);
        }
    }
    subalgebras.sort();
    ideals.sort();
    let proper_subalgebras: Vec<Subspace> = subalgebras
        .iter()
        .filter(|s| s.is_proper())
        .cloned()
        .collect();
    let proper_ideals: Vec<Subspace> = ideals.iter().filter(|s| s.is_proper()).cloned().collect();
    let nonzero_ideals: Vec<Subspace> = ideals.iter().filter(|s| !s.is_zero()).cloned().collect();
    let mut maximal_subalgebras = maximal_members(&proper_subalgebras);
    let mut maximal_ideals = maximal_members(&proper_ideals);
    let mut minimal_ideals = minimal_members(&nonzero_ideals);
    maximal_subalgebras.sort();
    maximal_ideals.sort();
    minimal_ideals.sort();
    Ok(LatticeReport {
        subspace_count: count,
        element_count: u128::from(p).saturating_pow(a.dim() as u32),
        subalgebras,
        ideals,
        maximal_subalgebras,
        maximal_ideals,
        minimal_ideals,
    })
}

/// All Cartan subalgebras of the ideal K: subalgebras C ⊆ K that are
/// nilpotent as algebras and self-normalizing inside K.
pub fn cartan_subalgebras_of(
    a: &LeibnizAlgebra,
    k: &Subspace,
    budget: &EnumBudget,
) -> Result<Vec<Subspace>> {
    let FieldSpec::PrimeField(p) = a.field() else {
        return Err(Error::WrongField);
    };
    if !a.is_ideal(k) {
        return Err(Error::NotAnIdeal);
    }
    check_subspace_budget(p, k.dim(), budget)?;
    let mut out = Vec::new();
    for coords in SubspaceEnumerator::new(a.field(), p, k.dim()) {
        // embed the subspace of K-coordinates into the ambient space
        let rows: Vec<Vec<Scalar>> = coords
            .basis_vectors()
            .iter()
            .map(|c| k.vector_from_coordinates(c))
            .collect();
        let c = Subspace::from_vectors(a.field(), a.dim(), &rows);
        if !a.is_subalgebra(&c) {
            continue;
        }
        if !a.is_nilpotent_subspace(&c)? {
            continue;
        }
        // N_K(C) = N_A(C) ∩ K
        if a.normalizer(&c).intersect(k) == c {
            out.push(c);
        }
    }
    out.sort();
    Ok(out)
}
