//! Property tests for the linear-algebra substrate and the algebraic
//! invariants, over generated matrices, subspaces and algebras.

use proptest::prelude::*;

use leibniz_core::catalog;
use leibniz_core::frattini::{self, GenFratMethod};
use leibniz_core::lattice::EnumBudget;
use leibniz_core::matrix::Matrix;
use leibniz_core::subspace::Subspace;
use leibniz_core::{FieldSpec, LeibnizAlgebra, Scalar};

fn gf(p: u32) -> FieldSpec {
    FieldSpec::prime_field(p).unwrap()
}

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(gf(2)),
        Just(gf(3)),
        Just(gf(5)),
    ]
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    (field_strategy(), proptest::collection::vec(-6i64..=6, rows * cols)).prop_map(
        move |(field, data)| {
            Matrix::from_fn(field, rows, cols, |i, j| {
                field.scalar_from_i64(data[i * cols + j])
            })
        },
    )
}

fn subspace_strategy(field: FieldSpec, ambient: usize) -> impl Strategy<Value = Subspace> {
    proptest::collection::vec(
        proptest::collection::vec(-4i64..=4, ambient),
        0..=ambient,
    )
    .prop_map(move |rows| {
        let vecs: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.scalar_from_i64(v)).collect())
            .collect();
        Subspace::from_vectors(field, ambient, &vecs)
    })
}

/// A deterministic small algebra: either a dim-2 tensor from the
/// exhaustive sweep or a seeded derivation extension of a nilpotent base.
fn small_algebra_strategy() -> impl Strategy<Value = LeibnizAlgebra> {
    prop_oneof![
        (0usize..13).prop_map(|i| catalog::exhaustive_dim2(2).unwrap()[i].algebra.clone()),
        (0usize..41).prop_map(|i| catalog::exhaustive_dim2(3).unwrap()[i].algebra.clone()),
        (0u64..64).prop_map(|seed| {
            let base = if seed % 2 == 0 {
                catalog::abelian(gf((seed as u32 % 4) / 2 + 2), 2)
            } else {
                catalog::heisenberg(gf(if seed % 4 == 1 { 2 } else { 3 }))
            };
            catalog::random_extension(&base, seed).unwrap().algebra
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_canonical_and_rank_nullity_holds(m in matrix_strategy(3, 4)) {
        let (r, pivots) = m.rref();
        let (r2, pivots2) = r.rref();
        prop_assert_eq!(&r, &r2);
        prop_assert_eq!(&pivots, &pivots2);
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        // the row space is unchanged by reduction
        prop_assert_eq!(m.row_space(), r.row_space());
    }

    #[test]
    fn subspace_dimension_formula(
        (u, v) in field_strategy().prop_flat_map(|f| (subspace_strategy(f, 4), subspace_strategy(f, 4)))
    ) {
        let sum = u.sum(&v);
        let meet = u.intersect(&v);
        prop_assert_eq!(u.dim() + v.dim(), sum.dim() + meet.dim());
        prop_assert!(sum.contains(&u) && sum.contains(&v));
        prop_assert!(u.contains(&meet) && v.contains(&meet));
    }

    #[test]
    fn modular_law_holds(
        (a, b, c) in field_strategy().prop_flat_map(|f| (
            subspace_strategy(f, 3),
            subspace_strategy(f, 3),
            subspace_strategy(f, 3),
        ))
    ) {
        // a' = a ∩ c is contained in c; then a' + (b ∩ c) = (a' + b) ∩ c
        let a = a.intersect(&c);
        let lhs = a.sum(&b.intersect(&c));
        let rhs = a.sum(&b).intersect(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fitting_decomposition_is_direct(m in matrix_strategy(4, 4)) {
        let (ker, im) = m.operator_power_stable(4);
        prop_assert_eq!(ker.intersect(&im).dim(), 0);
        prop_assert_eq!(ker.sum(&im), Subspace::full(m.field(), 4));
    }

    #[test]
    fn squares_left_annihilate(a in small_algebra_strategy(), coords in proptest::collection::vec(-3i64..=3, 8)) {
        let n = a.dim();
        let x: Vec<Scalar> = (0..n).map(|i| a.field().scalar_from_i64(coords[i % coords.len()])).collect();
        let sq = a.multiply(&x, &x);
        for j in 0..n {
            let prod = a.multiply(&sq, &a.basis_vector(j));
            prop_assert!(prod.iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn series_terms_are_ideals_and_flags_are_consistent(a in small_algebra_strategy()) {
        let s = a.series();
        for t in s.lower_central.iter().chain(&s.derived).chain(&s.upper_central) {
            prop_assert!(a.is_ideal(t));
        }
        // monotone chains
        for w in s.lower_central.windows(2) {
            prop_assert!(w[0].contains(&w[1]));
        }
        for w in s.derived.windows(2) {
            prop_assert!(w[0].contains(&w[1]));
        }
        for w in s.upper_central.windows(2) {
            prop_assert!(w[1].contains(&w[0]));
        }
        prop_assert_eq!(s.nilpotent, s.omega.is_zero());
        if s.nilpotent {
            prop_assert!(s.solvable);
            prop_assert_eq!(&s.z_star, &a.full_space());
        }
        // Leib(A) left-annihilates and the quotient by it is Lie
        let leib = a.leib();
        prop_assert!(a.product_space(&leib, &a.full_space()).is_zero());
        prop_assert!(a.is_ideal(&leib));
        let q = a.quotient(&leib).unwrap();
        prop_assert!(q.algebra.is_lie());
    }

    #[test]
    fn closures_are_idempotent_and_nested(a in small_algebra_strategy(), coords in proptest::collection::vec(-3i64..=3, 8)) {
        let n = a.dim();
        let x: Vec<Scalar> = (0..n).map(|i| a.field().scalar_from_i64(coords[i % coords.len()])).collect();
        let sub = a.subalgebra_closure(core::slice::from_ref(&x));
        let ideal = a.ideal_closure(core::slice::from_ref(&x));
        prop_assert!(a.is_subalgebra(&sub));
        prop_assert!(a.is_ideal(&ideal));
        prop_assert!(ideal.contains(&sub));
        prop_assert_eq!(a.subalgebra_closure(&sub.basis_vectors()), sub);
        prop_assert_eq!(a.ideal_closure(&ideal.basis_vectors()), ideal);
    }

    #[test]
    fn genfrat_methods_agree_on_small_algebras(a in small_algebra_strategy()) {
        let budget = EnumBudget::default();
        let rep = leibniz_core::lattice::lattice_report(&a, &budget).unwrap();
        for h in rep.ideals.iter().filter(|i| i.is_proper()) {
            let p = frattini::is_generalized_frattini(&a, h, GenFratMethod::NilPullback, &budget, 0).unwrap();
            let t = frattini::is_generalized_frattini(&a, h, GenFratMethod::Theorem7Exhaustive, &budget, 0).unwrap();
            prop_assert_eq!(p.holds, t.holds);
            prop_assert!(!p.partial);
        }
    }

    #[test]
    fn lemma37_routes_agree_on_random_samples(
        a in small_algebra_strategy(),
        xc in proptest::collection::vec(-2i64..=2, 8),
        yc in proptest::collection::vec(-2i64..=2, 8),
    ) {
        let n = a.dim();
        let field = a.field();
        let x: Vec<Scalar> = (0..n).map(|i| field.scalar_from_i64(xc[i % xc.len()])).collect();
        let y: Vec<Scalar> = (0..n).map(|i| field.scalar_from_i64(yc[i % yc.len()])).collect();
        prop_assert!(frattini::lemma37_check(&a, &x, &[y]));
    }
}
