//! Engel subalgebras, Fitting decompositions and Cartan subalgebra
//! search.
//!
//! Over the rationals a Cartan subalgebra is found by minimal-Engel
//! descent from a seeded candidate pool and then verified against the
//! definition (nilpotent and self-normalizing), so a returned result is
//! always correct and a failed search is reported, never guessed. Over
//! prime fields the same descent runs, with an exhaustive element sweep
//! as fallback; `lattice::cartan_subalgebras_of` is the ground truth.

use alloc::vec::Vec;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::lattice;
use crate::rng::SplitMix64;
use crate::subspace::Subspace;

/// Default number of Engel-subalgebra computations a search may spend.
pub const DEFAULT_ENGEL_BUDGET: usize = 500;

/// Height bound for random rational coefficients in the candidate pool.
const RATIONAL_HEIGHT: i64 = 7;

#[derive(Clone, Debug)]
pub struct CartanResult {
    pub cartan: Subspace,
    /// Elements whose Engel subalgebras descended to the result.
    pub witness_chain: Vec<Vec<Scalar>>,
    /// True iff the result passed both definitional checks.
    pub verified: bool,
}

/// E_A(a): the Fitting null component of left multiplication by a,
/// i.e. ker(L_a^dim). Always a subalgebra; that is asserted here and a
/// failure signals a structure-constant bug.
pub fn engel_subalgebra(a: &LeibnizAlgebra, x: &[Scalar]) -> Result<Subspace> {
    let (kernel, _) = a.left_op(x).operator_power_stable(a.dim());
    if !a.is_subalgebra(&kernel) {
        return Err(Error::EngelNotSubalgebra);
    }
    Ok(kernel)
}

/// Fitting decomposition of L_x: (A_0(x), A_1(x)) with
/// A_0(x) = ker L_x^dim the Engel subalgebra and A_1(x) = im L_x^dim;
/// their direct sum is A.
pub fn fitting(a: &LeibnizAlgebra, x: &[Scalar]) -> (Subspace, Subspace) {
    let n = a.dim();
    a.left_op(x).operator_power_stable(n)
}

fn scaled_sum(a: &Scalar, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(x, y)| &(a * x) + y).collect()
}

/// Deterministic candidate elements inside a subspace: basis vectors,
/// pairwise sums, then seeded random coordinate combinations (height
/// bounded over the rationals, uniform over GF(p)).
fn candidates_in(
    space: &Subspace,
    rng: &mut SplitMix64,
    random_draws: usize,
) -> Vec<Vec<Scalar>> {
    let field = space.field();
    let k = space.dim();
    let mut out = Vec::new();
    let basis = space.basis_vectors();
    out.extend(basis.iter().cloned());
    for i in 0..k {
        for j in (i + 1)..k {
            out.push(scaled_sum(&field.one(), &basis[i], &basis[j]));
        }
    }
    for _ in 0..random_draws {
        let coords: Vec<Scalar> = (0..k)
            .map(|_| match field {
                FieldSpec::Rationals => {
                    field.scalar_from_i64(rng.int_in(-RATIONAL_HEIGHT, RATIONAL_HEIGHT))
                }
                FieldSpec::PrimeField(p) => field.element(rng.below(u64::from(p))).unwrap(),
            })
            .collect();
        let v = space.vector_from_coordinates(&coords);
        if v.iter().any(|c| !c.is_zero()) {
            out.push(v);
        }
    }
    out
}

/// A Cartan subalgebra is nilpotent and self-normalizing; both checks are
/// definitional, no search involved.
pub fn is_cartan_subalgebra(a: &LeibnizAlgebra, c: &Subspace) -> Result<bool> {
    if !a.is_subalgebra(c) {
        return Ok(false);
    }
    Ok(a.is_nilpotent_subspace(c)? && a.normalizer(c) == *c)
}

/// Minimal-Engel descent: repeatedly replace the current Engel subalgebra
/// E by some E_A(c) ⊊ E with c drawn from E, then verify the fixed point.
pub fn find_cartan(a: &LeibnizAlgebra, seed: u64, engel_budget: usize) -> Result<CartanResult> {
    let mut rng = SplitMix64::new(seed);
    let mut evals = 0usize;
    let mut current = a.full_space();
    let mut chain: Vec<Vec<Scalar>> = Vec::new();
    'descend: loop {
        let draws = 4 * a.dim() + 8;
        for cand in candidates_in(&current, &mut rng, draws) {
            if evals >= engel_budget {
                break 'descend;
            }
            let e = engel_subalgebra(a, &cand)?;
            evals += 1;
            if current.contains(&e) && e != current {
                chain.push(cand);
                current = e;
                continue 'descend;
            }
        }
        break;
    }
    if is_cartan_subalgebra(a, &current)? {
        return Ok(CartanResult {
            cartan: current,
            witness_chain: chain,
            verified: true,
        });
    }
    // over a prime field, sweep all elements for globally minimal Engel
    // subalgebras and verify those
    if a.field().is_finite() {
        let elems = lattice::enumerate_elements(
            a.field(),
            a.dim(),
            &lattice::EnumBudget {
                max_subspaces: u64::MAX,
                max_elements: engel_budget.saturating_sub(evals) as u64,
            },
        );
        if let Ok(elems) = elems {
            let mut engels: Vec<(Vec<Scalar>, Subspace)> = Vec::new();
            for x in elems {
                engels.push((x.clone(), engel_subalgebra(a, &x)?));
            }
            let spaces: Vec<Subspace> = engels.iter().map(|(_, e)| e.clone()).collect();
            for (x, e) in &engels {
                let minimal = !spaces.iter().any(|other| other != e && e.contains(other));
                if minimal && is_cartan_subalgebra(a, e)? {
                    return Ok(CartanResult {
                        cartan: e.clone(),
                        witness_chain: alloc::vec![x.clone()],
                        verified: true,
                    });
                }
            }
        }
    }
    Err(Error::CartanSearchFailed { best: current })
}

/// A Cartan subalgebra of the ideal K (restricted search inside K),
/// returned in ambient coordinates.
pub fn find_cartan_of_ideal(
    a: &LeibnizAlgebra,
    k: &Subspace,
    seed: u64,
    engel_budget: usize,
) -> Result<CartanResult> {
    if !a.is_ideal(k) {
        return Err(Error::NotAnIdeal);
    }
    let restriction = a.restrict(k)?;
    let inner = find_cartan(&restriction.algebra, seed, engel_budget)?;
    Ok(CartanResult {
        cartan: restriction.to_ambient(&inner.cartan),
        witness_chain: inner
            .witness_chain
            .iter()
            .map(|c| restriction.to_ambient_vector(c))
            .collect(),
        verified: inner.verified,
    })
}

/// Some b in E_A(a) with E_A(b) = E_A(a). Exhaustive over prime fields;
/// bounded-height coordinate search over the rationals.
pub fn engel_internal_witness(
    a: &LeibnizAlgebra,
    x: &[Scalar],
    seed: u64,
    engel_budget: usize,
) -> Result<Vec<Scalar>> {
    let e = engel_subalgebra(a, x)?;
    if e.contains_vector(x) {
        return Ok(x.to_vec());
    }
    match a.field() {
        FieldSpec::PrimeField(p) => {
            let p = u64::from(p);
            let total = p.pow(e.dim() as u32);
            for idx in 0..total {
                let mut coords = Vec::with_capacity(e.dim());
                let mut rest = idx;
                for _ in 0..e.dim() {
                    coords.push(a.field().element(rest % p).unwrap());
                    rest /= p;
                }
                let b = e.vector_from_coordinates(&coords);
                if engel_subalgebra(a, &b)? == e {
                    return Ok(b);
                }
            }
            Err(Error::WitnessNotFound)
        }
        FieldSpec::Rationals => {
            let mut rng = SplitMix64::new(seed);
            for b in candidates_in(&e, &mut rng, engel_budget) {
                if engel_subalgebra(a, &b)? == e {
                    return Ok(b);
                }
            }
            Err(Error::WitnessNotFound)
        }
    }
}

/// Barnes supplement: A = K + N_A(C) for a Cartan subalgebra C of the
/// ideal K. Checked empirically where the crate relies on it.
pub fn barnes_supplement_holds(a: &LeibnizAlgebra, k: &Subspace, c: &Subspace) -> bool {
    k.sum(&a.normalizer(c)) == a.full_space()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lattice::EnumBudget;

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
    fn engel_of_zero_is_everything() {
        let a = example8(q());
        assert_eq!(engel_subalgebra(&a, &a.zero_vector()).unwrap(), a.full_space());
    }

    #[test]
    fn engel_of_example17_generator() {
        let a = example17(q());
        let e = engel_subalgebra(&a, &a.basis_vector(0)).unwrap();
        assert_eq!(e, span_of(q(), 3, &[&[1, 0, -1]]));
        // the defining element need not lie in its own Engel subalgebra
        assert!(!e.contains_vector(&a.basis_vector(0)));
    }

    #[test]
    fn engel_of_example8_z() {
        let a = example8(q());
        let e = engel_subalgebra(&a, &a.basis_vector(2)).unwrap();
        assert_eq!(e, span_of(q(), 3, &[&[0, 0, 1]]));
    }

    #[test]
    fn fitting_components_of_example17() {
        let a = example17(q());
        let (zero_part, one_part) = fitting(&a, &a.basis_vector(0));
        assert_eq!(zero_part, span_of(q(), 3, &[&[1, 0, -1]]));
        assert_eq!(one_part, span_of(q(), 3, &[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(zero_part.sum(&one_part), a.full_space());
        assert!(zero_part.intersect(&one_part).is_zero());
    }

    #[test]
    fn fitting_of_nilpotent_is_trivial() {
        let h = catalog::heisenberg(q()).algebra;
        for i in 0..3 {
            let (zero_part, one_part) = fitting(&h, &h.basis_vector(i));
            assert_eq!(zero_part, h.full_space());
            assert!(one_part.is_zero());
        }
    }

    #[test]
    fn fitting_of_example8_z() {
        let a = example8(q());
        let (zero_part, one_part) = fitting(&a, &a.basis_vector(2));
        assert_eq!(zero_part, span_of(q(), 3, &[&[0, 0, 1]]));
        assert_eq!(one_part, span_of(q(), 3, &[&[1, 0, 0], &[0, 1, 0]]));
    }

    #[test]
    fn internal_witness_examples() {
        let a = example17(q());
        // a - a³ reproduces E_A(a) from inside
        let b = engel_internal_witness(&a, &a.basis_vector(0), 0, DEFAULT_ENGEL_BUDGET).unwrap();
        let e = engel_subalgebra(&a, &a.basis_vector(0)).unwrap();
        assert!(e.contains_vector(&b));
        assert_eq!(engel_subalgebra(&a, &b).unwrap(), e);

        // when a ∈ E_A(a) the witness is a itself
        let ab = catalog::abelian(q(), 2).algebra;
        let x = vec_of(q(), &[1, 1]);
        assert_eq!(engel_internal_witness(&ab, &x, 0, 10).unwrap(), x);
    }

    #[test]
    fn internal_witness_over_prime_field() {
        let a = example17(gf(5));
        let b = engel_internal_witness(&a, &a.basis_vector(0), 0, DEFAULT_ENGEL_BUDGET).unwrap();
        let e = engel_subalgebra(&a, &a.basis_vector(0)).unwrap();
        assert!(e.contains_vector(&b));
        assert_eq!(engel_subalgebra(&a, &b).unwrap(), e);
    }

    #[test]
    fn cartan_of_nilpotent_is_whole_algebra() {
        let h = catalog::heisenberg(q()).algebra;
        let r = find_cartan(&h, 0, DEFAULT_ENGEL_BUDGET).unwrap();
        assert!(r.verified);
        assert_eq!(r.cartan, h.full_space());
    }

    #[test]
    fn cartan_of_example17_over_q() {
        let a = example17(q());
        let r = find_cartan(&a, 0, DEFAULT_ENGEL_BUDGET).unwrap();
        assert!(r.verified);
        assert_eq!(r.cartan, span_of(q(), 3, &[&[1, 0, -1]]));
    }

    #[test]
    fn cartan_of_example8_over_q() {
        let a = example8(q());
        let r = find_cartan(&a, 0, DEFAULT_ENGEL_BUDGET).unwrap();
        assert!(r.verified);
        assert_eq!(r.cartan, span_of(q(), 3, &[&[0, 0, 1]]));
    }

    #[test]
    fn cartan_over_prime_fields_is_in_the_lattice_list() {
        for p in [3u32, 5] {
            let a = example8(gf(p));
            let r = find_cartan(&a, 0, DEFAULT_ENGEL_BUDGET).unwrap();
            assert!(r.verified);
            let all =
                lattice::cartan_subalgebras_of(&a, &a.full_space(), &EnumBudget::default())
                    .unwrap();
            assert!(all.contains(&r.cartan));
        }
    }

    #[test]
    fn cartan_of_ideal_and_barnes_supplement() {
        let a = example17(q());
        // K = A² is abelian, so its unique Cartan subalgebra is K itself
        let k = a.square();
        let r = find_cartan_of_ideal(&a, &k, 0, DEFAULT_ENGEL_BUDGET).unwrap();
        assert!(r.verified);
        assert_eq!(r.cartan, k);
        assert!(barnes_supplement_holds(&a, &k, &r.cartan));

        // K = A: the Cartan found for the full algebra supplements too
        let full = a.full_space();
        let r = find_cartan_of_ideal(&a, &full, 0, DEFAULT_ENGEL_BUDGET).unwrap();
        assert!(barnes_supplement_holds(&a, &full, &r.cartan));
    }
}

