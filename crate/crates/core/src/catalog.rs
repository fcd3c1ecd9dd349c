//! Built-in algebras with known invariants, plus seeded generators for
//! fuzz corpora.
//!
//! Each entry can carry asserted facts. A fact records whether it comes
//! from the literature or was computed here, and every fact passes its
//! definitional re-verification in `verify_assertions` (a nilpotent
//! ideal really is a nilpotent ideal, a Cartan subalgebra really is
//! nilpotent and self-normalizing, and so on); maximality-style claims
//! beyond the definitional check are cross-checked elsewhere against the
//! lattice oracle.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{LeibnizAlgebra, Product};
use crate::engel;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::frattini::{self, GenFratMethod};
use crate::lattice::EnumBudget;
use crate::rng::SplitMix64;
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Asserted by the source material.
    Literature,
    /// Derived by hand or by an independent computation.
    Computed,
}

#[derive(Clone, Debug)]
pub enum Fact {
    Nilradical(Subspace),
    Radical(Subspace),
    FrattiniIdeal(Subspace),
    Center(Subspace),
    CartanSubalgebra(Subspace),
    GeneralizedFrattini { ideal: Subspace, holds: bool },
    PrimitiveIdeal(Subspace),
    Simple,
    IsLie(bool),
    /// Minimal polynomial of left multiplication by `generator` on the
    /// quotient A/ideal; coefficients lowest degree first, monic.
    QuotientGeneratorMinPoly {
        ideal: Subspace,
        generator: Vec<Scalar>,
        poly: Vec<Scalar>,
    },
}

#[derive(Clone, Debug)]
pub struct AssertedFact {
    pub label: String,
    pub source: Provenance,
    pub fact: Fact,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LeibnizAlgebra,
    pub asserted: Vec<AssertedFact>,
    pub notes: Vec<String>,
}

impl CatalogEntry {
    fn plain(name: &str, algebra: LeibnizAlgebra) -> Self {
        CatalogEntry {
            name: name.to_string(),
            algebra,
            asserted: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Re-verify every asserted fact definitionally. Returns the list of
    /// verified fact labels.
    pub fn verify_assertions(&self, budget: &EnumBudget) -> Result<Vec<String>> {
        let a = &self.algebra;
        let mut verified = Vec::new();
        for fact in &self.asserted {
            let ok = match &fact.fact {
                Fact::Nilradical(n) => a.is_ideal(n) && a.is_nilpotent_subspace(n)?,
                Fact::Radical(r) => a.is_ideal(r) && a.is_solvable_subspace(r)?,
                Fact::FrattiniIdeal(p) => frattini::frattini_report(a, budget)?.phi == *p,
                Fact::Center(z) => a.center() == *z,
                Fact::CartanSubalgebra(c) => engel::is_cartan_subalgebra(a, c)?,
                Fact::GeneralizedFrattini { ideal, holds } => {
                    let v = frattini::is_generalized_frattini(
                        a,
                        ideal,
                        GenFratMethod::NilPullback,
                        budget,
                        0,
                    )?;
                    v.holds == *holds
                }
                Fact::PrimitiveIdeal(k) => {
                    frattini::is_primitive_ideal(a, k, budget)?.is_primitive
                }
                Fact::Simple => frattini::certify_simple(a) == Some(true),
                Fact::IsLie(expected) => a.is_lie() == *expected,
                Fact::QuotientGeneratorMinPoly {
                    ideal,
                    generator,
                    poly,
                } => {
                    let q = a.quotient(ideal)?;
                    let lbar = q.algebra.left_op(&q.project_vector(generator));
                    lbar.min_poly() == *poly
                }
            };
            if !ok {
                return Err(Error::CandidateRejected(format!(
                    "asserted fact failed verification: {} ({})",
                    fact.label, self.name
                )));
            }
            verified.push(fact.label.clone());
        }
        Ok(verified)
    }
}

fn vec_of(field: FieldSpec, data: &[i64]) -> Vec<Scalar> {
    data.iter().map(|&v| field.scalar_from_i64(v)).collect()
}

fn span_of(field: FieldSpec, ambient: usize, data: &[&[i64]]) -> Subspace {
    let rows: Vec<Vec<Scalar>> = data.iter().map(|r| vec_of(field, r)).collect();
    Subspace::from_vectors(field, ambient, &rows)
}

fn names(list: &[&str]) -> Option<Vec<String>> {
    Some(list.iter().map(|s| s.to_string()).collect())
}

/// Basis x, y, z with xz = x = -zx, zy = y = -yz and xy = yx = 0.
pub fn example8(field: FieldSpec) -> CatalogEntry {
    let one = field.one();
    let neg = -&one;
    let algebra = LeibnizAlgebra::from_products(
        field,
        3,
        names(&["x", "y", "z"]),
        &[
            (0, 2, vec![(0, one.clone())]),
            (2, 0, vec![(0, neg.clone())]),
            (2, 1, vec![(1, one.clone())]),
            (1, 2, vec![(1, neg)]),
        ],
    )
    .expect("the product table satisfies the Leibniz identity");
    let h = span_of(field, 3, &[&[1, 0, 0]]);
    let k = span_of(field, 3, &[&[0, 1, 0]]);
    let hk = span_of(field, 3, &[&[1, 0, 0], &[0, 1, 0]]);
    let mut entry = CatalogEntry::plain("example8", algebra);
    entry.asserted = vec![
        AssertedFact {
            label: String::from("the algebra is Lie"),
            source: Provenance::Literature,
            fact: Fact::IsLie(true),
        },
        AssertedFact {
            label: String::from("H = (x) is generalized Frattini"),
            source: Provenance::Literature,
            fact: Fact::GeneralizedFrattini {
                ideal: h,
                holds: true,
            },
        },
        AssertedFact {
            label: String::from("K = (y) is generalized Frattini"),
            source: Provenance::Literature,
            fact: Fact::GeneralizedFrattini {
                ideal: k,
                holds: true,
            },
        },
        AssertedFact {
            label: String::from("H + K is not generalized Frattini"),
            source: Provenance::Literature,
            fact: Fact::GeneralizedFrattini {
                ideal: hk.clone(),
                holds: false,
            },
        },
        AssertedFact {
            label: String::from("Nil(A) = H + K"),
            source: Provenance::Literature,
            fact: Fact::Nilradical(hk),
        },
    ];
    if field.characteristic() == 2 {
        entry
            .notes
            .push(String::from("characteristic 2: the defining signs collapse"));
    }
    entry
}

/// Cyclic Leibniz algebra on basis a, a², …, aⁿ with a·aⁱ = a^(i+1) for
/// i < n and a·aⁿ given by `coeffs` (coefficient of aⁱ at position i-1;
/// the a-coefficient must be zero). All left multiplications by higher
/// powers vanish.
pub fn cyclic_leibniz(field: FieldSpec, n: usize, coeffs: &[i64]) -> Result<CatalogEntry> {
    assert!(n >= 1, "cyclic algebras need at least the generator");
    assert_eq!(coeffs.len(), n, "one coefficient per basis element");
    let mut products: Vec<Product> = Vec::new();
    for i in 0..(n - 1) {
        products.push((0, i, vec![(i + 1, field.one())]));
    }
    let top: Vec<(usize, Scalar)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| (k, field.scalar_from_i64(c)))
        .collect();
    products.push((0, n - 1, top));
    let name_list: Vec<String> = (1..=n)
        .map(|i| if i == 1 { String::from("a") } else { format!("a{i}") })
        .collect();
    let algebra = LeibnizAlgebra::from_products(field, n, Some(name_list), &products)?;
    let mut entry = CatalogEntry::plain("cyclic", algebra);
    if n == 3 && coeffs == [0, 1, 0] {
        // the worked three-dimensional cyclic example: a·a³ = a²
        entry.name = String::from("example17");
        let k = span_of(field, 3, &[&[0, 1, 1]]);
        let nil = span_of(field, 3, &[&[0, 1, 0], &[0, 0, 1]]);
        let cartan = span_of(field, 3, &[&[1, 0, -1]]);
        let x = field.zero();
        let min_poly = vec![x.clone(), field.one(), field.one()]; // x(x+1) = x + x²
        entry.asserted = vec![
            AssertedFact {
                label: String::from("K = (a²+a³) is a primitive ideal"),
                source: Provenance::Literature,
                fact: Fact::PrimitiveIdeal(k.clone()),
            },
            AssertedFact {
                label: String::from("K = (a²+a³) is generalized Frattini"),
                source: Provenance::Literature,
                fact: Fact::GeneralizedFrattini {
                    ideal: k.clone(),
                    holds: true,
                },
            },
            AssertedFact {
                label: String::from("Nil(A) = (a², a³)"),
                source: Provenance::Computed,
                fact: Fact::Nilradical(nil),
            },
            AssertedFact {
                label: String::from("span{a - a³} is a Cartan subalgebra"),
                source: Provenance::Literature,
                fact: Fact::CartanSubalgebra(cartan),
            },
            AssertedFact {
                label: String::from("minimal polynomial of L_a on A/K is x(x+1)"),
                source: Provenance::Literature,
                fact: Fact::QuotientGeneratorMinPoly {
                    ideal: k,
                    generator: vec_of(field, &[1, 0, 0]),
                    poly: min_poly,
                },
            },
        ];
    }
    Ok(entry)
}

/// Heisenberg algebra: ef = h = -fe, h central.
pub fn heisenberg(field: FieldSpec) -> CatalogEntry {
    let one = field.one();
    let neg = -&one;
    let algebra = LeibnizAlgebra::from_products(
        field,
        3,
        names(&["e", "f", "h"]),
        &[(0, 1, vec![(2, one)]), (1, 0, vec![(2, neg)])],
    )
    .expect("the Heisenberg table satisfies the Leibniz identity");
    let h = span_of(field, 3, &[&[0, 0, 1]]);
    let mut entry = CatalogEntry::plain("heisenberg", algebra);
    entry.asserted = vec![
        AssertedFact {
            label: String::from("Φ(A) = A² = span{h}"),
            source: Provenance::Computed,
            fact: Fact::FrattiniIdeal(h.clone()),
        },
        AssertedFact {
            label: String::from("Z(A) = span{h}"),
            source: Provenance::Computed,
            fact: Fact::Center(h),
        },
    ];
    entry
}

pub fn abelian(field: FieldSpec, n: usize) -> CatalogEntry {
    let algebra =
        LeibnizAlgebra::from_products(field, n, None, &[]).expect("abelian tables always validate");
    CatalogEntry::plain("abelian", algebra)
}

/// Direct sum with block-diagonal structure constants. Names from the
/// right summand are primed on collision.
pub fn direct_sum(left: &CatalogEntry, right: &CatalogEntry) -> Result<CatalogEntry> {
    let la = &left.algebra;
    let ra = &right.algebra;
    if la.field() != ra.field() {
        return Err(Error::FieldMismatch);
    }
    let field = la.field();
    let (n1, n2) = (la.dim(), ra.dim());
    let n = n1 + n2;
    let mut tensor = vec![vec![vec![field.zero(); n]; n]; n];
    for i in 0..n1 {
        for j in 0..n1 {
            for k in 0..n1 {
                tensor[i][j][k] = la.tensor_entry(i, j)[k].clone();
            }
        }
    }
    for i in 0..n2 {
        for j in 0..n2 {
            for k in 0..n2 {
                tensor[n1 + i][n1 + j][n1 + k] = ra.tensor_entry(i, j)[k].clone();
            }
        }
    }
    let mut name_list: Vec<String> = la.basis_names().to_vec();
    for base in ra.basis_names() {
        let mut candidate = base.clone();
        while name_list.contains(&candidate) {
            candidate.push('\'');
        }
        name_list.push(candidate);
    }
    let algebra = LeibnizAlgebra::from_tensor(field, n, Some(name_list), tensor)?;
    Ok(CatalogEntry::plain(
        &format!("{}_plus_{}", left.name, right.name),
        algebra,
    ))
}

/// gl(n) and sl(n) under the commutator bracket on the elementary-matrix
/// basis.
pub fn matrix_algebras(field: FieldSpec, n: usize) -> (CatalogEntry, CatalogEntry) {
    assert!(n >= 2);
    // gl(n): basis E_{rc} indexed r*n + c
    let dim = n * n;
    let mut tensor = vec![vec![vec![field.zero(); dim]; dim]; dim];
    let mut gl_names = Vec::with_capacity(dim);
    for r in 0..n {
        for c in 0..n {
            gl_names.push(format!("E{}{}", r + 1, c + 1));
        }
    }
    for a in 0..dim {
        let (i, j) = (a / n, a % n);
        for b in 0..dim {
            let (k, l) = (b / n, b % n);
            // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
            if j == k {
                let t = &tensor[a][b][i * n + l] + &field.one();
                tensor[a][b][i * n + l] = t;
            }
            if l == i {
                let t = &tensor[a][b][k * n + j] - &field.one();
                tensor[a][b][k * n + j] = t;
            }
        }
    }
    let gl_algebra = LeibnizAlgebra::from_tensor(field, dim, Some(gl_names), tensor)
        .expect("the commutator bracket satisfies the Leibniz identity");
    let mut gl_entry = CatalogEntry::plain(&format!("gl{n}"), gl_algebra);
    if field.characteristic() == 0 {
        // scalars: identity matrix in the E-basis
        let mut id = vec![0i64; dim];
        for r in 0..n {
            id[r * n + r] = 1;
        }
        let scalars = span_of(field, dim, &[&id]);
        gl_entry.asserted = vec![
            AssertedFact {
                label: String::from("Z(gl) is the scalar matrices"),
                source: Provenance::Literature,
                fact: Fact::Center(scalars.clone()),
            },
            AssertedFact {
                label: String::from("the scalars form a nilpotent ideal (Nil candidate)"),
                source: Provenance::Literature,
                fact: Fact::Nilradical(scalars.clone()),
            },
            AssertedFact {
                label: String::from("the scalars form a solvable ideal (Rad candidate)"),
                source: Provenance::Literature,
                fact: Fact::Radical(scalars),
            },
        ];
    }

    // sl(n): off-diagonal E_ij plus H_r = E_rr − E_(r+1)(r+1)
    let sdim = dim - 1;
    let mut basis_mats: Vec<Vec<i64>> = Vec::with_capacity(sdim);
    let mut sl_names = Vec::with_capacity(sdim);
    for r in 0..n {
        for c in 0..n {
            if r != c {
                let mut m = vec![0i64; dim];
                m[r * n + c] = 1;
                basis_mats.push(m);
                sl_names.push(format!("E{}{}", r + 1, c + 1));
            }
        }
    }
    for r in 0..(n - 1) {
        let mut m = vec![0i64; dim];
        m[r * n + r] = 1;
        m[(r + 1) * n + (r + 1)] = -1;
        basis_mats.push(m);
        sl_names.push(format!("H{}", r + 1));
    }
    let gl = &gl_entry.algebra;
    let mut sl_tensor = vec![vec![vec![field.zero(); sdim]; sdim]; sdim];
    let coords = |v: &[Scalar]| -> Vec<Scalar> {
        // solve for coefficients in the chosen (non-RREF) basis
        let mut m = crate::matrix::Matrix::zeros(field, dim, sdim);
        for (col, bm) in basis_mats.iter().enumerate() {
            for (row, &val) in bm.iter().enumerate() {
                m.set(row, col, field.scalar_from_i64(val));
            }
        }
        m.solve(v).expect("product of sl elements stays in sl")
    };
    for (s, bs) in basis_mats.iter().enumerate() {
        for (t, bt) in basis_mats.iter().enumerate() {
            let prod = gl.multiply(&vec_of(field, bs), &vec_of(field, bt));
            sl_tensor[s][t] = coords(&prod);
        }
    }
    let sl_algebra = LeibnizAlgebra::from_tensor(field, sdim, Some(sl_names), sl_tensor)
        .expect("sl is closed under the bracket");
    let mut sl_entry = CatalogEntry::plain(&format!("sl{n}"), sl_algebra);
    if field.characteristic() == 0 && n == 2 {
        sl_entry.asserted = vec![AssertedFact {
            label: String::from("sl(2) is simple"),
            source: Provenance::Literature,
            fact: Fact::Simple,
        }];
    }
    if field.characteristic() == 2 && n == 2 {
        sl_entry.notes.push(String::from(
            "characteristic 2: sl(2) degenerates to the Heisenberg algebra",
        ));
    }
    (gl_entry, sl_entry)
}

/// One-dimensional extension of a nilpotent algebra by a derivation D:
/// z·b = D(b), b·z = -D(b), z·z = 0. D is a seeded combination of the
/// derivation space; invalid draws are retried.
pub fn random_extension(base: &CatalogEntry, seed: u64) -> Result<CatalogEntry> {
    let b = &base.algebra;
    if !b.is_nilpotent() {
        return Err(Error::CandidateRejected(String::from(
            "extension base must be nilpotent",
        )));
    }
    let field = b.field();
    let k = b.dim();
    let der = b.derivations();
    let mut rng = SplitMix64::new(seed);
    for _attempt in 0..32 {
        let coords: Vec<Scalar> = (0..der.dim())
            .map(|_| match field {
                FieldSpec::Rationals => field.scalar_from_i64(rng.int_in(-3, 3)),
                FieldSpec::PrimeField(p) => field.element(rng.below(u64::from(p))).unwrap(),
            })
            .collect();
        let stacked = der.vector_from_coordinates(&coords);
        let d = b.derivation_matrix(&stacked);
        let n = k + 1;
        let mut tensor = vec![vec![vec![field.zero(); n]; n]; n];
        for i in 0..k {
            for j in 0..k {
                for t in 0..k {
                    tensor[i][j][t] = b.tensor_entry(i, j)[t].clone();
                }
            }
        }
        for j in 0..k {
            let col = d.column(j);
            for (t, val) in col.iter().enumerate() {
                tensor[k][j][t] = val.clone();
                tensor[j][k][t] = -val;
            }
        }
        let mut name_list: Vec<String> = b.basis_names().to_vec();
        let mut zname = String::from("z");
        while name_list.contains(&zname) {
            zname.push('\'');
        }
        name_list.push(zname);
        if let Ok(algebra) = LeibnizAlgebra::from_tensor(field, n, Some(name_list), tensor) {
            let mut entry =
                CatalogEntry::plain(&format!("{}_ext{}", base.name, seed), algebra);
            entry
                .notes
                .push(format!("derivation extension of {} with seed {}", base.name, seed));
            return Ok(entry);
        }
    }
    Err(Error::GenerationFailed)
}

/// Every valid dim-2 structure tensor over GF(p), p ∈ {2, 3}, filtered by
/// the identity validator; deduplication is by tensor equality, not
/// isomorphism.
pub fn exhaustive_dim2(p: u32) -> Result<Vec<CatalogEntry>> {
    assert!(p == 2 || p == 3, "exhaustive scan is sized for p in {{2, 3}}");
    let field = FieldSpec::prime_field(p)?;
    let total = u64::from(p).pow(8);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut digits = [0u64; 8];
        let mut rest = idx;
        for d in digits.iter_mut() {
            *d = rest % u64::from(p);
            rest /= u64::from(p);
        }
        let mut tensor = vec![vec![vec![field.zero(); 2]; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    tensor[i][j][k] = field.element(digits[(i * 2 + j) * 2 + k]).unwrap();
                }
            }
        }
        if let Ok(algebra) = LeibnizAlgebra::from_tensor(field, 2, None, tensor) {
            out.push(CatalogEntry::plain(&format!("dim2_p{p}_{idx:04}"), algebra));
        }
    }
    Ok(out)
}

/// Catalog builder families available by name.
pub fn families() -> Vec<&'static str> {
    vec![
        "example8",
        "example17",
        "cyclic_nilpotent",
        "cyclic_dim2",
        "heisenberg",
        "abelian1",
        "abelian2",
        "abelian3",
        "gl2",
        "sl2",
        "example8_plus_line",
    ]
}

/// Build a family over the given field.
pub fn build(family: &str, field: FieldSpec) -> Option<Result<CatalogEntry>> {
    match family {
        "example8" => Some(Ok(example8(field))),
        "example17" => Some(cyclic_leibniz(field, 3, &[0, 1, 0])),
        "cyclic_nilpotent" => Some(cyclic_leibniz(field, 3, &[0, 0, 0])),
        "cyclic_dim2" => Some(cyclic_leibniz(field, 2, &[0, 1])),
        "heisenberg" => Some(Ok(heisenberg(field))),
        "abelian1" => Some(Ok(abelian(field, 1))),
        "abelian2" => Some(Ok(abelian(field, 2))),
        "abelian3" => Some(Ok(abelian(field, 3))),
        "gl2" => Some(Ok(matrix_algebras(field, 2).0)),
        "sl2" => Some(Ok(matrix_algebras(field, 2).1)),
        "example8_plus_line" => Some(direct_sum(&example8(field), &abelian(field, 1))),
        _ => None,
    }
}

/// The fixed catalog grid used by the verification suite.
pub fn standard_entries() -> Vec<(String, CatalogEntry)> {
    let q = FieldSpec::Rationals;
    let gf = |p: u32| FieldSpec::prime_field(p).unwrap();
    let mut out = Vec::new();
    let grid: Vec<(&str, Vec<FieldSpec>)> = vec![
        ("example8", vec![q, gf(2), gf(3), gf(5)]),
        ("example17", vec![q, gf(2), gf(3), gf(5)]),
        ("cyclic_nilpotent", vec![q, gf(2)]),
        ("cyclic_dim2", vec![q, gf(3)]),
        ("heisenberg", vec![q, gf(2), gf(3)]),
        ("abelian1", vec![q]),
        ("abelian2", vec![gf(2)]),
        ("abelian3", vec![gf(3)]),
        ("gl2", vec![q, gf(2), gf(3)]),
        ("sl2", vec![q, gf(3), gf(5)]),
        ("example8_plus_line", vec![gf(3)]),
    ];
    for (family, fields) in grid {
        for field in fields {
            let entry = build(family, field)
                .expect("family exists")
                .expect("catalog entries validate");
            out.push((format!("{family}[{field}]"), entry));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::prime_field(p).unwrap()
    }

    #[test]
    fn example8_assertions_verify_over_all_fields() {
        let budget = EnumBudget::default();
        for field in [q(), gf(2), gf(3), gf(5)] {
            let entry = example8(field);
            let labels = entry.verify_assertions(&budget).unwrap();
            assert_eq!(labels.len(), 5, "all facts verified over {field}");
        }
    }

    #[test]
    fn example17_assertions_verify_over_all_fields() {
        let budget = EnumBudget::default();
        for field in [q(), gf(2), gf(3), gf(5)] {
            let entry = cyclic_leibniz(field, 3, &[0, 1, 0]).unwrap();
            assert_eq!(entry.name, "example17");
            let labels = entry.verify_assertions(&budget).unwrap();
            assert_eq!(labels.len(), 5, "all facts verified over {field}");
        }
    }

    #[test]
    fn cyclic_with_linear_term_is_rejected() {
        assert!(matches!(
            cyclic_leibniz(q(), 3, &[1, 1, 0]),
            Err(Error::LeibnizIdentityViolation { .. })
        ));
    }

    #[test]
    fn nilpotent_cyclic_has_phi_a_squared() {
        let entry = cyclic_leibniz(q(), 3, &[0, 0, 0]).unwrap();
        let a = &entry.algebra;
        assert!(a.is_nilpotent());
        let rep = frattini::frattini_report(a, &EnumBudget::default()).unwrap();
        assert_eq!(rep.phi, a.square());
    }

    #[test]
    fn cyclic_dim2_is_solvable_not_nilpotent() {
        let entry = cyclic_leibniz(gf(3), 2, &[0, 1]).unwrap();
        let a = &entry.algebra;
        assert!(a.is_solvable());
        assert!(!a.is_nilpotent());
        assert_eq!(a.square().dim(), 1);
    }

    #[test]
    fn heisenberg_assertions_verify() {
        let budget = EnumBudget::default();
        for field in [q(), gf(2), gf(3)] {
            heisenberg(field).verify_assertions(&budget).unwrap();
        }
        assert!(heisenberg(gf(2)).algebra.is_nilpotent());
        assert_eq!(
            heisenberg(gf(2)).algebra.series().nilpotency_class,
            Some(2)
        );
    }

    #[test]
    fn abelian_properties() {
        let e = abelian(q(), 1);
        assert_eq!(e.algebra.center(), e.algebra.full_space());
        let rep = frattini::frattini_report(&e.algebra, &EnumBudget::default()).unwrap();
        assert!(rep.phi.is_zero());
    }

    #[test]
    fn direct_sum_center_is_the_abelian_summand_plus_factor_center() {
        let left = example8(gf(3));
        let right = abelian(gf(3), 1);
        let sum = direct_sum(&left, &right).unwrap();
        assert_eq!(sum.algebra.dim(), 4);
        // Z(example8) = 0, so the center is the added line
        let z = sum.algebra.center();
        assert_eq!(z, span_of(gf(3), 4, &[&[0, 0, 0, 1]]));
    }

    #[test]
    fn direct_sum_rejects_mixed_fields() {
        let left = example8(gf(3));
        let right = abelian(gf(5), 1);
        assert!(matches!(
            direct_sum(&left, &right),
            Err(Error::FieldMismatch)
        ));
    }

    #[test]
    fn gl2_and_sl2_assertions_verify_over_q() {
        let budget = EnumBudget::default();
        let (gl, sl) = matrix_algebras(q(), 2);
        gl.verify_assertions(&budget).unwrap();
        sl.verify_assertions(&budget).unwrap();
        assert_eq!(gl.algebra.dim(), 4);
        assert_eq!(sl.algebra.dim(), 3);
        assert!(gl.algebra.is_lie());
        assert!(sl.algebra.is_lie());
    }

    #[test]
    fn sl2_gf2_is_nilpotent() {
        let (_, sl) = matrix_algebras(gf(2), 2);
        assert!(sl.algebra.is_nilpotent());
        assert_eq!(sl.algebra.series().nilpotency_class, Some(2));
    }

    #[test]
    fn random_extension_is_seed_deterministic() {
        let base = abelian(gf(2), 2);
        let a = random_extension(&base, 7).unwrap();
        let b = random_extension(&base, 7).unwrap();
        assert_eq!(a.algebra, b.algebra);
        assert_eq!(a.algebra.dim(), 3);
    }

    #[test]
    fn random_extension_identity_derivation_is_solvable_non_nilpotent() {
        // find a seed whose derivation is invertible on the abelian base
        let base = abelian(gf(2), 2);
        let mut saw_non_nilpotent = false;
        for seed in 0..16 {
            let e = random_extension(&base, seed).unwrap();
            assert!(e.algebra.is_solvable());
            if !e.algebra.is_nilpotent() {
                saw_non_nilpotent = true;
            }
        }
        assert!(saw_non_nilpotent);
    }

    #[test]
    fn random_extension_of_heisenberg_validates() {
        let base = heisenberg(gf(3));
        let e = random_extension(&base, 1).unwrap();
        assert_eq!(e.algebra.dim(), 4);
        assert!(e.algebra.is_solvable());
    }

    #[test]
    fn exhaustive_dim2_counts() {
        let two = exhaustive_dim2(2).unwrap();
        assert_eq!(two.len(), 13);
        let three = exhaustive_dim2(3).unwrap();
        assert_eq!(three.len(), 41);
        // determinism across runs
        let again = exhaustive_dim2(2).unwrap();
        for (a, b) in two.iter().zip(&again) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.algebra, b.algebra);
        }
        // the abelian tensor is present
        assert!(two.iter().any(|e| e.name == "dim2_p2_0000"));
    }

    #[test]
    fn standard_entries_build_and_verify() {
        let budget = EnumBudget::default();
        for (name, entry) in standard_entries() {
            entry
                .verify_assertions(&budget)
                .unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}
