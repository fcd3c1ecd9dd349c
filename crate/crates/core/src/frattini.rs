//! Frattini-type invariants: F(A), Φ(A), R(A), T(A), τ(A), nFrat(A),
//! Nil(A), Rad(A), generalized-Frattini testing, primitive ideals and
//! the non-generator characterizations.
//!
//! Every value is computed in a certified mode or refused:
//! * prime field within budget: exhaustive lattice enumeration;
//! * dimension ≤ 2: complete subalgebra/ideal lattice by exact root
//!   finding, over any field;
//! * nilpotent algebras: every maximal subalgebra is an ideal of
//!   codimension one containing A², which pins all eight subspaces;
//! * certified simple algebras: the ideal lattice is {0, A}.
//!
//! The only non-certified path is the greedy nilradical heuristic for
//! solvable algebras in characteristic zero, and results that depend on
//! it are flagged.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::LeibnizAlgebra;
use crate::engel;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::lattice::{self, EnumBudget};
use crate::roots;
use crate::subspace::Subspace;

/// Largest ideal of A contained in S, by iterating
/// W ← {w ∈ W : A·w ⊆ W and w·A ⊆ W} to a fixed point.
pub fn ideal_core(a: &LeibnizAlgebra, s: &Subspace) -> Subspace {
    let mut w = s.clone();
    loop {
        if w.dim() == 0 {
            return w;
        }
        let basis_t = w.basis().transpose(); // n × k, columns span W
        let reduction = w.reduction_matrix();
        let mut parts = Vec::new();
        for i in 0..a.dim() {
            let e = a.basis_vector(i);
            parts.push(reduction.mul(&a.left_op(&e)).mul(&basis_t));
            parts.push(reduction.mul(&a.right_op(&e)).mul(&basis_t));
        }
        let refs: Vec<&crate::matrix::Matrix> = parts.iter().collect();
        let kept = crate::matrix::Matrix::vstack(&refs).kernel();
        if kept.dim() == w.dim() {
            return w;
        }
        let rows: Vec<Vec<Scalar>> = kept
            .basis_vectors()
            .iter()
            .map(|t| w.vector_from_coordinates(t))
            .collect();
        w = Subspace::from_vectors(a.field(), a.dim(), &rows);
    }
}

/// How a report was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportMode {
    /// Exhaustive subspace enumeration over a prime field.
    ExhaustiveLattice,
    /// Complete dim ≤ 2 lattice via exact root finding.
    SmallDimExact,
    /// Nilpotent algebra: maximal subalgebras are the hyperplanes over A².
    NilpotentExact,
    /// Certified simple algebra: the ideal lattice is {0, A}.
    SimpleExact,
}

/// Provenance of a nilradical/radical value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilMode {
    Exhaustive,
    Asserted,
    Heuristic,
}

#[derive(Clone, Debug)]
pub struct FrattiniReport {
    pub mode: ReportMode,
    /// F(A): intersection of all maximal subalgebras. `None` when the
    /// mode cannot list maximal subalgebras (simple algebras over Q).
    pub f: Option<Subspace>,
    /// Φ(A): largest ideal inside F(A).
    pub phi: Subspace,
    /// R(A): intersection of the maximal subalgebras that are ideals
    /// (A when there are none).
    pub r: Subspace,
    /// T(A): intersection of the maximal subalgebras that are not ideals.
    pub t: Option<Subspace>,
    /// τ(A): largest ideal inside T(A).
    pub tau: Subspace,
    /// nFrat(A): intersection of all maximal ideals.
    pub nfrat: Subspace,
    pub nil: Subspace,
    pub nil_mode: NilMode,
    pub rad: Subspace,
    pub rad_mode: NilMode,
    pub maximal_subalgebras: Option<Vec<Subspace>>,
    pub maximal_ideals: Option<Vec<Subspace>>,
    pub minimal_ideals: Option<Vec<Subspace>>,
}

/// All projective points of the line P¹(GF(p)), as (1, t) and (0, 1).
fn all_projective_points(field: FieldSpec) -> Option<Vec<(Scalar, Scalar)>> {
    let FieldSpec::PrimeField(p) = field else {
        return None;
    };
    let mut pts = Vec::new();
    for t in 0..u64::from(p) {
        pts.push((field.one(), field.element(t).unwrap()));
    }
    pts.push((field.zero(), field.one()));
    Some(pts)
}

/// det(v·v | v) as a binary cubic in the coordinates (s, t) of a
/// 2-dimensional algebra; its roots are the subalgebra lines.
fn subalgebra_line_cubic(a: &LeibnizAlgebra) -> Vec<Scalar> {
    let t00 = a.tensor_entry(0, 0);
    let t01 = a.tensor_entry(0, 1);
    let t10 = a.tensor_entry(1, 0);
    let t11 = a.tensor_entry(1, 1);
    let ax = [t00[0].clone(), &t01[0] + &t10[0], t11[0].clone()];
    let ay = [t00[1].clone(), &t01[1] + &t10[1], t11[1].clone()];
    vec![-&ay[0], &ax[0] - &ay[1], &ax[1] - &ay[2], ax[2].clone()]
}

/// det(Tv | v) for each basis multiplication operator T of a
/// 2-dimensional algebra; a line is an ideal iff it zeroes all four.
fn operator_parallel_forms(a: &LeibnizAlgebra) -> Vec<Vec<Scalar>> {
    let mut forms = Vec::new();
    for i in 0..2 {
        let e = a.basis_vector(i);
        for m in [a.left_op(&e), a.right_op(&e)] {
            forms.push(vec![
                -m.get(1, 0),
                m.get(0, 0) - m.get(1, 1),
                m.get(0, 1).clone(),
            ]);
        }
    }
    forms
}

fn lines_from_points(
    a: &LeibnizAlgebra,
    points: Vec<(Scalar, Scalar)>,
    keep: impl Fn(&LeibnizAlgebra, &Subspace) -> bool,
) -> Vec<Subspace> {
    let mut lines = Vec::new();
    for (s, t) in points {
        let line = a.span(&[vec![s, t]]);
        if line.dim() == 1 && !lines.contains(&line) && keep(a, &line) {
            lines.push(line);
        }
    }
    lines
}

/// The complete ideal list of an algebra of dimension ≤ 2, over any
/// field. An ideal line must be stable under every basis multiplication
/// operator, so over Q it is a common projective root of the nonzero
/// parallel forms; `None` only when every form vanishes (every line is an
/// ideal, which cannot be listed over an infinite field) or a root bound
/// is exceeded.
pub fn small_dim_ideals(a: &LeibnizAlgebra) -> Option<Vec<Subspace>> {
    let field = a.field();
    let n = a.dim();
    if n > 2 {
        return None;
    }
    if n == 0 {
        return Some(vec![a.zero_space()]);
    }
    if n == 1 {
        return Some(vec![a.zero_space(), a.full_space()]);
    }
    let points = match all_projective_points(field) {
        Some(pts) => pts,
        None => {
            let mut pts: Vec<(Scalar, Scalar)> = Vec::new();
            let mut saw_nonzero = false;
            for form in operator_parallel_forms(a) {
                if form.iter().all(Scalar::is_zero) {
                    continue;
                }
                saw_nonzero = true;
                for pt in roots::binary_form_projective_roots(&form)? {
                    if !pts.contains(&pt) {
                        pts.push(pt);
                    }
                }
            }
            if !saw_nonzero {
                return None;
            }
            pts
        }
    };
    let mut ideals = vec![a.zero_space()];
    ideals.extend(lines_from_points(a, points, LeibnizAlgebra::is_ideal));
    ideals.push(a.full_space());
    ideals.sort();
    Some(ideals)
}

/// Complete subalgebra and ideal lists for algebras of dimension ≤ 2.
///
/// A line span{v} is a subalgebra iff v·v is parallel to v, a cubic
/// condition whose roots are a complete candidate list (ideals are
/// subalgebras). Over prime fields all p + 1 lines are scanned. `None`
/// when the cubic vanishes identically over Q, where every line is a
/// subalgebra and the subalgebra side cannot be listed, though
/// `small_dim_ideals` may still succeed.
pub fn small_dim_lattice(a: &LeibnizAlgebra) -> Option<(Vec<Subspace>, Vec<Subspace>)> {
    let field = a.field();
    let n = a.dim();
    if n > 2 {
        return None;
    }
    if n == 0 {
        let z = a.zero_space();
        return Some((vec![z.clone()], vec![z]));
    }
    if n == 1 {
        let both = vec![a.zero_space(), a.full_space()];
        return Some((both.clone(), both));
    }
    let points = match all_projective_points(field) {
        Some(pts) => pts,
        None => roots::binary_form_projective_roots(&subalgebra_line_cubic(a))?,
    };
    let mut subalgebras = vec![a.zero_space()];
    let mut ideals = vec![a.zero_space()];
    for line in lines_from_points(a, points, LeibnizAlgebra::is_subalgebra) {
        if a.is_ideal(&line) {
            ideals.push(line.clone());
        }
        subalgebras.push(line);
    }
    subalgebras.push(a.full_space());
    ideals.push(a.full_space());
    subalgebras.sort();
    ideals.sort();
    Some((subalgebras, ideals))
}

/// Sound, incomplete simplicity certificate.
///
/// `Some(false)`: a proper nonzero ideal provably exists (A² proper, or a
/// common eigenvector line). `Some(true)`: certified simple, possible
/// when A² = A and dim ≤ 3, where the only candidate ideals have
/// dimension 1 (excluded by the common-eigenvector search) or codimension
/// 1 (excluded by A² = A). `None`: undecided.
pub fn certify_simple(a: &LeibnizAlgebra) -> Option<bool> {
    let n = a.dim();
    if n == 0 {
        return Some(false);
    }
    if a.square() != a.full_space() {
        return Some(false);
    }
    // search for a line invariant under every multiplication operator
    let mut cands = vec![a.full_space()];
    for i in 0..n {
        let e = a.basis_vector(i);
        for op in [a.left_op(&e), a.right_op(&e)] {
            let mp = op.min_poly();
            let eigenvalues: Vec<Scalar> = match a.field() {
                FieldSpec::Rationals => roots::rational_roots(&mp)?,
                FieldSpec::PrimeField(p) => (0..u64::from(p))
                    .map(|v| a.field().element(v).unwrap())
                    .filter(|lambda| roots::eval_poly(&mp, lambda).is_zero())
                    .collect(),
            };
            let mut next = Vec::new();
            for lambda in &eigenvalues {
                let shifted = op.sub(&crate::matrix::Matrix::identity(a.field(), n).scale(lambda));
                let eig = shifted.kernel();
                for w in &cands {
                    let meet = w.intersect(&eig);
                    if !meet.is_zero() && !next.contains(&meet) {
                        next.push(meet);
                    }
                }
            }
            cands = next;
            if cands.is_empty() {
                break;
            }
        }
        if cands.is_empty() {
            break;
        }
    }
    if !cands.is_empty() {
        return Some(false); // a common eigenvector spans a 1-dim ideal
    }
    if n <= 3 {
        Some(true)
    } else {
        None
    }
}

/// A proper nonzero subalgebra, if one is quickly found (used to certify
/// that 0 is not a maximal subalgebra).
fn probe_proper_nonzero_subalgebra(a: &LeibnizAlgebra) -> Option<Subspace> {
    for i in 0..a.dim() {
        let line = a.span(&[a.basis_vector(i)]);
        if a.is_subalgebra(&line) {
            return Some(line);
        }
    }
    for i in 0..a.dim() {
        let closure = a.subalgebra_closure(&[a.basis_vector(i)]);
        if !closure.is_zero() && closure.is_proper() {
            return Some(closure);
        }
    }
    None
}

struct Landscape {
    f: Subspace,
    r: Subspace,
    t: Subspace,
    nfrat: Subspace,
    nil: Subspace,
    rad: Subspace,
    maximal_subalgebras: Vec<Subspace>,
    maximal_ideals: Vec<Subspace>,
    minimal_ideals: Vec<Subspace>,
}

/// Nil and Rad as verified sums over a complete ideal list.
fn nil_rad_from_ideals(a: &LeibnizAlgebra, ideals: &[Subspace]) -> Result<(Subspace, Subspace)> {
    let mut nil = a.zero_space();
    let mut rad = a.zero_space();
    for i in ideals {
        if a.is_nilpotent_subspace(i)? {
            nil = nil.sum(i);
        }
        if a.is_solvable_subspace(i)? {
            rad = rad.sum(i);
        }
    }
    if !a.is_nilpotent_subspace(&nil)? {
        return Err(Error::CandidateRejected(String::from(
            "sum of nilpotent ideals failed the nilpotency check",
        )));
    }
    if !a.is_solvable_subspace(&rad)? {
        return Err(Error::CandidateRejected(String::from(
            "sum of solvable ideals failed the solvability check",
        )));
    }
    Ok((nil, rad))
}

fn landscape_from_lists(
    a: &LeibnizAlgebra,
    subalgebras: &[Subspace],
    ideals: &[Subspace],
) -> Result<Landscape> {
    let field = a.field();
    let n = a.dim();
    let proper_sub: Vec<Subspace> = subalgebras.iter().filter(|s| s.is_proper()).cloned().collect();
    let proper_ideals: Vec<Subspace> = ideals.iter().filter(|s| s.is_proper()).cloned().collect();
    let nonzero_ideals: Vec<Subspace> = ideals.iter().filter(|s| !s.is_zero()).cloned().collect();
    let mut maximal_subalgebras = lattice::maximal_members(&proper_sub);
    let mut maximal_ideals = lattice::maximal_members(&proper_ideals);
    let mut minimal_ideals = lattice::minimal_members(&nonzero_ideals);
    maximal_subalgebras.sort();
    maximal_ideals.sort();
    minimal_ideals.sort();

    let f = Subspace::intersect_all(field, n, &maximal_subalgebras);
    let ideal_maximals: Vec<Subspace> = maximal_subalgebras
        .iter()
        .filter(|m| a.is_ideal(m))
        .cloned()
        .collect();
    let non_ideal_maximals: Vec<Subspace> = maximal_subalgebras
        .iter()
        .filter(|m| !a.is_ideal(m))
        .cloned()
        .collect();
    let r = Subspace::intersect_all(field, n, &ideal_maximals);
    let t = Subspace::intersect_all(field, n, &non_ideal_maximals);
    let nfrat = Subspace::intersect_all(field, n, &maximal_ideals);
    let (nil, rad) = nil_rad_from_ideals(a, ideals)?;
    Ok(Landscape {
        f,
        r,
        t,
        nfrat,
        nil,
        rad,
        maximal_subalgebras,
        maximal_ideals,
        minimal_ideals,
    })
}

/// The full Frattini-theoretic report, in the strongest certified mode
/// available for this algebra and field.
pub fn frattini_report(a: &LeibnizAlgebra, budget: &EnumBudget) -> Result<FrattiniReport> {
    // exhaustive enumeration is the preferred mode over prime fields
    if a.field().is_finite() {
        match lattice::lattice_report(a, budget) {
            Ok(rep) => {
                let l = landscape_from_lists(a, &rep.subalgebras, &rep.ideals)?;
                return Ok(report_from_landscape(a, ReportMode::ExhaustiveLattice, l));
            }
            Err(Error::BudgetExceeded { required, budget: b }) => {
                if !a.is_nilpotent() {
                    return Err(Error::BudgetExceeded { required, budget: b });
                }
                // fall through to the nilpotent mode
            }
            Err(e) => return Err(e),
        }
    }
    if a.is_nilpotent() {
        return Ok(nilpotent_report(a));
    }
    if let Some((subalgebras, ideals)) = small_dim_lattice(a) {
        let l = landscape_from_lists(a, &subalgebras, &ideals)?;
        return Ok(report_from_landscape(a, ReportMode::SmallDimExact, l));
    }
    if a.dim() == 2 && subalgebra_line_cubic(a).iter().all(Scalar::is_zero) {
        // every line is a subalgebra (any 2-dimensional Lie algebra, for
        // instance); the ideal side may still be completely listable
        if let Some(ideals) = small_dim_ideals(a) {
            return all_lines_report(a, ideals);
        }
    }
    if certify_simple(a) == Some(true) {
        if let Some(_witness) = probe_proper_nonzero_subalgebra(a) {
            return Ok(simple_report(a));
        }
        return Err(Error::UnsupportedField(
            "simple algebra without a proper nonzero subalgebra witness",
        ));
    }
    Err(Error::UnsupportedField(
        "no exhaustive, small-dimension, nilpotent or simple mode applies",
    ))
}

fn report_from_landscape(a: &LeibnizAlgebra, mode: ReportMode, l: Landscape) -> FrattiniReport {
    let phi = ideal_core(a, &l.f);
    let tau = ideal_core(a, &l.t);
    FrattiniReport {
        mode,
        f: Some(l.f),
        phi,
        r: l.r,
        t: Some(l.t),
        tau,
        nfrat: l.nfrat,
        nil: l.nil,
        nil_mode: NilMode::Exhaustive,
        rad: l.rad,
        rad_mode: NilMode::Exhaustive,
        maximal_subalgebras: Some(l.maximal_subalgebras),
        maximal_ideals: Some(l.maximal_ideals),
        minimal_ideals: Some(l.minimal_ideals),
    }
}

/// In a nilpotent algebra every maximal subalgebra is an ideal of
/// codimension 1 containing A², so F = Φ = R = nFrat = A² and T = τ = A.
fn nilpotent_report(a: &LeibnizAlgebra) -> FrattiniReport {
    let sq = a.square();
    let full = a.full_space();
    FrattiniReport {
        mode: ReportMode::NilpotentExact,
        f: Some(sq.clone()),
        phi: sq.clone(),
        r: sq.clone(),
        t: Some(full.clone()),
        tau: full.clone(),
        nfrat: sq,
        nil: full.clone(),
        nil_mode: NilMode::Exhaustive,
        rad: full,
        rad_mode: NilMode::Exhaustive,
        maximal_subalgebras: None,
        maximal_ideals: None,
        minimal_ideals: None,
    }
}

/// Over the rationals, a non-nilpotent 2-dimensional algebra in which
/// every line is a subalgebra: the lines are exactly the maximal
/// subalgebras, so F = 0, and only finitely many lines are ideals, so
/// T = 0 as well; the complete ideal list pins everything else.
fn all_lines_report(a: &LeibnizAlgebra, ideals: Vec<Subspace>) -> Result<FrattiniReport> {
    debug_assert_eq!(a.field(), FieldSpec::Rationals);
    let zero = a.zero_space();
    let ideal_lines: Vec<Subspace> = ideals.iter().filter(|i| i.dim() == 1).cloned().collect();
    let r = Subspace::intersect_all(a.field(), 2, &ideal_lines);
    let proper: Vec<Subspace> = ideals.iter().filter(|i| i.is_proper()).cloned().collect();
    let nonzero: Vec<Subspace> = ideals.iter().filter(|i| !i.is_zero()).cloned().collect();
    let mut maximal_ideals = lattice::maximal_members(&proper);
    let mut minimal_ideals = lattice::minimal_members(&nonzero);
    maximal_ideals.sort();
    minimal_ideals.sort();
    let nfrat = Subspace::intersect_all(a.field(), 2, &maximal_ideals);
    let (nil, rad) = nil_rad_from_ideals(a, &ideals)?;
    Ok(FrattiniReport {
        mode: ReportMode::SmallDimExact,
        f: Some(zero.clone()),
        phi: zero.clone(),
        r,
        t: Some(zero.clone()),
        tau: zero,
        nfrat,
        nil,
        nil_mode: NilMode::Exhaustive,
        rad,
        rad_mode: NilMode::Exhaustive,
        maximal_subalgebras: None, // infinitely many lines
        maximal_ideals: Some(maximal_ideals),
        minimal_ideals: Some(minimal_ideals),
    })
}

/// For certified simple A (dim ≥ 2, with a proper nonzero subalgebra):
/// the proper ideals are exactly {0}, which is not a maximal subalgebra,
/// so R = A, nFrat = 0, and every maximal subalgebra is a non-ideal,
/// forcing τ = Φ = 0. F and T themselves are not computable without
/// enumerating maximal subalgebras.
fn simple_report(a: &LeibnizAlgebra) -> FrattiniReport {
    let zero = a.zero_space();
    FrattiniReport {
        mode: ReportMode::SimpleExact,
        f: None,
        phi: zero.clone(),
        r: a.full_space(),
        t: None,
        tau: zero.clone(),
        nfrat: zero.clone(),
        nil: zero.clone(),
        nil_mode: NilMode::Exhaustive,
        rad: zero.clone(),
        rad_mode: NilMode::Exhaustive,
        maximal_subalgebras: None,
        maximal_ideals: Some(vec![zero]),
        minimal_ideals: Some(vec![a.full_space()]),
    }
}

/// Request for the nilradical/radical computation.
pub enum RadicalRequest<'a> {
    Exhaustive,
    Asserted(&'a Subspace),
    Heuristic,
}

#[derive(Clone, Debug)]
pub struct RadicalResult {
    pub space: Subspace,
    pub mode: NilMode,
}

/// Nil(A) under the requested mode. Exhaustive covers prime fields in
/// budget, dim ≤ 2, nilpotent and certified-simple algebras; asserted
/// verifies a candidate is a nilpotent ideal (maximality not certified);
/// heuristic greedily grows a nilpotent ideal of a solvable algebra in
/// characteristic 0.
pub fn nil(a: &LeibnizAlgebra, request: RadicalRequest, budget: &EnumBudget) -> Result<RadicalResult> {
    match request {
        RadicalRequest::Exhaustive => certified_nil(a, budget),
        RadicalRequest::Asserted(cand) => {
            if !a.is_ideal(cand) {
                return Err(Error::CandidateRejected(String::from("not an ideal")));
            }
            if !a.is_nilpotent_subspace(cand)? {
                return Err(Error::CandidateRejected(String::from("not nilpotent")));
            }
            Ok(RadicalResult {
                space: cand.clone(),
                mode: NilMode::Asserted,
            })
        }
        RadicalRequest::Heuristic => heuristic_nil(a),
    }
}

/// Rad(A) under the requested mode. A solvable algebra certifies
/// Rad = A directly over any field.
pub fn rad(a: &LeibnizAlgebra, request: RadicalRequest, budget: &EnumBudget) -> Result<RadicalResult> {
    match request {
        RadicalRequest::Exhaustive => {
            if a.is_solvable() {
                return Ok(RadicalResult {
                    space: a.full_space(),
                    mode: NilMode::Exhaustive,
                });
            }
            let rep = frattini_report(a, budget)?;
            Ok(RadicalResult {
                space: rep.rad,
                mode: rep.rad_mode,
            })
        }
        RadicalRequest::Asserted(cand) => {
            if !a.is_ideal(cand) {
                return Err(Error::CandidateRejected(String::from("not an ideal")));
            }
            if !a.is_solvable_subspace(cand)? {
                return Err(Error::CandidateRejected(String::from("not solvable")));
            }
            Ok(RadicalResult {
                space: cand.clone(),
                mode: NilMode::Asserted,
            })
        }
        RadicalRequest::Heuristic => {
            if a.field().characteristic() == 0 && a.is_solvable() {
                Ok(RadicalResult {
                    space: a.full_space(),
                    mode: NilMode::Exhaustive,
                })
            } else {
                Err(Error::NilUnavailable)
            }
        }
    }
}

/// Nil(A) by a certified-exhaustive path only.
fn certified_nil(a: &LeibnizAlgebra, budget: &EnumBudget) -> Result<RadicalResult> {
    if a.is_nilpotent() {
        return Ok(RadicalResult {
            space: a.full_space(),
            mode: NilMode::Exhaustive,
        });
    }
    if a.field().is_finite() {
        if let Ok(rep) = lattice::lattice_report(a, budget) {
            let mut acc = a.zero_space();
            for i in &rep.ideals {
                if a.is_nilpotent_subspace(i)? {
                    acc = acc.sum(i);
                }
            }
            if !a.is_nilpotent_subspace(&acc)? {
                return Err(Error::CandidateRejected(String::from(
                    "sum of nilpotent ideals failed the nilpotency check",
                )));
            }
            return Ok(RadicalResult {
                space: acc,
                mode: NilMode::Exhaustive,
            });
        }
    }
    if let Some(ideals) = small_dim_ideals(a) {
        let mut acc = a.zero_space();
        for i in &ideals {
            if a.is_nilpotent_subspace(i)? {
                acc = acc.sum(i);
            }
        }
        if !a.is_nilpotent_subspace(&acc)? {
            return Err(Error::CandidateRejected(String::from(
                "sum of nilpotent ideals failed the nilpotency check",
            )));
        }
        return Ok(RadicalResult {
            space: acc,
            mode: NilMode::Exhaustive,
        });
    }
    if certify_simple(a) == Some(true) {
        return Ok(RadicalResult {
            space: a.zero_space(),
            mode: NilMode::Exhaustive,
        });
    }
    Err(Error::NilUnavailable)
}

/// Greedy nilradical for solvable algebras in characteristic 0: start
/// from A² and extend by small-height coset candidates while the ideal
/// closure stays nilpotent. Always a nilpotent ideal; maximality is not
/// certified.
fn heuristic_nil(a: &LeibnizAlgebra) -> Result<RadicalResult> {
    if a.field().characteristic() != 0 || !a.is_solvable() {
        return Err(Error::NilUnavailable);
    }
    let sq = a.square();
    let mut n = if a.is_nilpotent_subspace(&sq)? {
        sq.clone()
    } else {
        a.zero_space()
    };
    let reps = a.full_space().coset_reps_mod(&sq);
    let field = a.field();
    let mut candidates: Vec<Vec<Scalar>> = reps.clone();
    for (i, u) in reps.iter().enumerate() {
        for v in reps.iter().skip(i + 1) {
            for (cu, cv) in [(1i64, 1i64), (1, -1), (1, 2), (2, 1), (1, 3), (3, 1)] {
                let su = field.scalar_from_i64(cu);
                let sv = field.scalar_from_i64(cv);
                let w: Vec<Scalar> = u
                    .iter()
                    .zip(v)
                    .map(|(x, y)| &(&su * x) + &(&sv * y))
                    .collect();
                candidates.push(w);
            }
        }
    }
    loop {
        let mut grew = false;
        for c in &candidates {
            if n.contains_vector(c) {
                continue;
            }
            let mut gens = n.basis_vectors();
            gens.push(c.clone());
            let bigger = a.ideal_closure(&gens);
            if a.is_nilpotent_subspace(&bigger)? {
                n = bigger;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    Ok(RadicalResult {
        space: n,
        mode: NilMode::Heuristic,
    })
}

/// Nil(A/?) with the strongest mode available, falling back to the
/// heuristic; the bool is true when the value is certified.
fn nil_best_effort(a: &LeibnizAlgebra, budget: &EnumBudget) -> Result<(Subspace, bool)> {
    match certified_nil(a, budget) {
        Ok(r) => Ok((r.space, true)),
        Err(Error::NilUnavailable) => {
            let r = heuristic_nil(a)?;
            Ok((r.space, false))
        }
        Err(e) => Err(e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenFratMethod {
    /// B = preimage of Nil(A/H); H is generalized Frattini iff B is
    /// nilpotent. Certified whenever Nil(A/H) is.
    NilPullback,
    /// Enumerate every ideal J ⊇ H over a prime field and test the
    /// nilpotency implication directly.
    Theorem7Exhaustive,
    /// Test A = H + N_A(C) ⇒ A = N_A(C) over Cartan subalgebras C of
    /// ideals K (exhaustive over prime fields, found Cartans over Q).
    DefinitionCartan,
    /// Test A = H + E_A(c) ⇒ A = E_A(c) for elements c of found Cartan
    /// subalgebras; always search-based.
    Theorem16Engel,
}

#[derive(Clone, Debug)]
pub enum GenFratWitness {
    /// An ideal J ⊇ H with J/H nilpotent but J not nilpotent.
    IdealJ(Subspace),
    /// An ideal K and Cartan subalgebra C of K with A = H + N_A(C) but
    /// A ≠ N_A(C).
    CartanPair { k: Subspace, c: Subspace },
    /// An ideal K and element c of a Cartan subalgebra of K with
    /// A = H + E_A(c) but A ≠ E_A(c).
    EngelElement { k: Subspace, c: Vec<Scalar> },
}

impl GenFratWitness {
    /// Re-validate the witness through public operations.
    pub fn revalidate(&self, a: &LeibnizAlgebra, h: &Subspace) -> bool {
        match self {
            GenFratWitness::IdealJ(j) => {
                if !a.is_ideal(j) || !j.contains(h) {
                    return false;
                }
                let Ok(q) = a.quotient(h) else { return false };
                let jbar = q.project_subspace(j);
                matches!(q.algebra.is_nilpotent_subspace(&jbar), Ok(true))
                    && matches!(a.is_nilpotent_subspace(j), Ok(false))
            }
            GenFratWitness::CartanPair { k, c } => {
                if !a.is_ideal(k) || !k.contains(c) {
                    return false;
                }
                let nilp = matches!(a.is_nilpotent_subspace(c), Ok(true));
                let self_norm_in_k = a.normalizer(c).intersect(k) == *c;
                let n = a.normalizer(c);
                nilp && self_norm_in_k && h.sum(&n) == a.full_space() && !n.is_full()
            }
            GenFratWitness::EngelElement { k, c } => {
                if !a.is_ideal(k) {
                    return false;
                }
                let Ok(e) = engel::engel_subalgebra(a, c) else {
                    return false;
                };
                h.sum(&e) == a.full_space() && !e.is_full()
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenFratVerdict {
    pub holds: bool,
    pub method: GenFratMethod,
    /// True when the verdict rests on a search (found Cartan subalgebras,
    /// heuristic nilradical) rather than an exhaustive or certified mode.
    pub partial: bool,
    pub witness: Option<GenFratWitness>,
    pub notes: Vec<String>,
}

/// A deterministic pool of ideals computable over any field: series
/// terms, center, Leib(A), basis-vector ideal closures.
pub fn computable_ideal_pool(a: &LeibnizAlgebra, budget: &EnumBudget) -> Vec<Subspace> {
    if a.field().is_finite() {
        if let Ok(rep) = lattice::lattice_report(a, budget) {
            return rep.ideals;
        }
    }
    let mut pool: Vec<Subspace> = vec![a.zero_space(), a.full_space()];
    let series = a.series();
    pool.extend(series.lower_central);
    pool.extend(series.derived);
    pool.extend(series.upper_central);
    pool.push(a.center());
    pool.push(a.leib());
    for i in 0..a.dim() {
        pool.push(a.ideal_closure(&[a.basis_vector(i)]));
    }
    pool.retain(|s| a.is_ideal(s));
    pool.sort();
    pool.dedup();
    pool
}

/// Is H a generalized Frattini ideal of A, by the requested method.
/// H must be a proper ideal; H = A is rejected, never vacuously accepted.
pub fn is_generalized_frattini(
    a: &LeibnizAlgebra,
    h: &Subspace,
    method: GenFratMethod,
    budget: &EnumBudget,
    seed: u64,
) -> Result<GenFratVerdict> {
    if !a.is_ideal(h) {
        return Err(Error::NotAnIdeal);
    }
    if !h.is_proper() {
        return Err(Error::NotProperIdeal);
    }
    match method {
        GenFratMethod::NilPullback => {
            let q = a.quotient(h)?;
            let (nil_q, certified) = nil_best_effort(&q.algebra, budget)?;
            let b = q.preimage_subspace(&nil_q);
            let holds = a.is_nilpotent_subspace(&b)?;
            Ok(GenFratVerdict {
                holds,
                method,
                partial: !certified,
                witness: (!holds).then_some(GenFratWitness::IdealJ(b)),
                notes: if certified {
                    Vec::new()
                } else {
                    vec![String::from("nilradical of the quotient is heuristic")]
                },
            })
        }
        GenFratMethod::Theorem7Exhaustive => {
            let rep = lattice::lattice_report(a, budget)?;
            let q = a.quotient(h)?;
            for j in &rep.ideals {
                if !j.contains(h) {
                    continue;
                }
                let jbar = q.project_subspace(j);
                if q.algebra.is_nilpotent_subspace(&jbar)? && !a.is_nilpotent_subspace(j)? {
                    return Ok(GenFratVerdict {
                        holds: false,
                        method,
                        partial: false,
                        witness: Some(GenFratWitness::IdealJ(j.clone())),
                        notes: Vec::new(),
                    });
                }
            }
            Ok(GenFratVerdict {
                holds: true,
                method,
                partial: false,
                witness: None,
                notes: Vec::new(),
            })
        }
        GenFratMethod::DefinitionCartan => {
            if a.field().is_finite() {
                let rep = lattice::lattice_report(a, budget)?;
                for k in &rep.ideals {
                    for c in lattice::cartan_subalgebras_of(a, k, budget)? {
                        let n = a.normalizer(&c);
                        if h.sum(&n) == a.full_space() && !n.is_full() {
                            return Ok(GenFratVerdict {
                                holds: false,
                                method,
                                partial: false,
                                witness: Some(GenFratWitness::CartanPair { k: k.clone(), c }),
                                notes: Vec::new(),
                            });
                        }
                    }
                }
                return Ok(GenFratVerdict {
                    holds: true,
                    method,
                    partial: false,
                    witness: None,
                    notes: Vec::new(),
                });
            }
            let mut notes = Vec::new();
            for (idx, k) in computable_ideal_pool(a, budget).into_iter().enumerate() {
                match engel::find_cartan_of_ideal(a, &k, seed.wrapping_add(idx as u64), engel::DEFAULT_ENGEL_BUDGET)
                {
                    Ok(res) => {
                        let n = a.normalizer(&res.cartan);
                        if h.sum(&n) == a.full_space() && !n.is_full() {
                            return Ok(GenFratVerdict {
                                holds: false,
                                method,
                                partial: true,
                                witness: Some(GenFratWitness::CartanPair {
                                    k,
                                    c: res.cartan,
                                }),
                                notes,
                            });
                        }
                    }
                    Err(Error::CartanSearchFailed { .. }) => {
                        notes.push(String::from("Cartan search failed for a pool ideal"));
                    }
                    Err(e) => return Err(e),
                }
            }
            notes.push(String::from(
                "found Cartan subalgebras only; ideals drawn from the computable pool",
            ));
            Ok(GenFratVerdict {
                holds: true,
                method,
                partial: true,
                witness: None,
                notes,
            })
        }
        GenFratMethod::Theorem16Engel => {
            let mut rng = crate::rng::SplitMix64::new(seed);
            let mut notes = Vec::new();
            let pool = computable_ideal_pool(a, budget);
            for (idx, k) in pool.into_iter().enumerate() {
                let cartans: Vec<Subspace> = if a.field().is_finite() {
                    lattice::cartan_subalgebras_of(a, &k, budget)?
                } else {
                    match engel::find_cartan_of_ideal(
                        a,
                        &k,
                        seed.wrapping_add(idx as u64),
                        engel::DEFAULT_ENGEL_BUDGET,
                    ) {
                        Ok(res) => vec![res.cartan],
                        Err(Error::CartanSearchFailed { .. }) => {
                            notes.push(String::from("Cartan search failed for a pool ideal"));
                            continue;
                        }
                        Err(e) => return Err(e),
                    }
                };
                for c in cartans {
                    let elems: Vec<Vec<Scalar>> = if let FieldSpec::PrimeField(p) = a.field() {
                        let p = u64::from(p);
                        let total = p.pow(c.dim() as u32).min(4096);
                        (0..total)
                            .map(|i| {
                                let mut coords = Vec::with_capacity(c.dim());
                                let mut rest = i;
                                for _ in 0..c.dim() {
                                    coords.push(a.field().element(rest % p).unwrap());
                                    rest /= p;
                                }
                                c.vector_from_coordinates(&coords)
                            })
                            .collect()
                    } else {
                        let mut v = c.basis_vectors();
                        for _ in 0..16 {
                            let coords: Vec<Scalar> = (0..c.dim())
                                .map(|_| a.field().scalar_from_i64(rng.int_in(-7, 7)))
                                .collect();
                            v.push(c.vector_from_coordinates(&coords));
                        }
                        v
                    };
                    for x in elems {
                        let e = engel::engel_subalgebra(a, &x)?;
                        if h.sum(&e) == a.full_space() && !e.is_full() {
                            return Ok(GenFratVerdict {
                                holds: false,
                                method,
                                partial: true,
                                witness: Some(GenFratWitness::EngelElement { k, c: x }),
                                notes,
                            });
                        }
                    }
                }
            }
            notes.push(String::from("element candidates are search-based"));
            Ok(GenFratVerdict {
                holds: true,
                method,
                partial: true,
                witness: None,
                notes,
            })
        }
    }
}

#[derive(Clone, Debug)]
pub struct PrimitiveVerdict {
    pub is_primitive: bool,
    pub phi_quotient_zero: bool,
    pub unique_minimal: bool,
    pub dim_ok: bool,
    /// Preimage in A of the unique minimal ideal of A/K, when unique.
    pub minimal_ideal_preimage: Option<Subspace>,
}

/// Exactly one minimal nonzero ideal? `Ok(None)` when there are zero or
/// several; an error when no certified mode can decide.
pub fn unique_minimal_ideal(a: &LeibnizAlgebra, budget: &EnumBudget) -> Result<Option<Subspace>> {
    if a.field().is_finite() {
        if let Ok(rep) = lattice::lattice_report(a, budget) {
            return Ok(match rep.minimal_ideals.as_slice() {
                [only] => Some(only.clone()),
                _ => None,
            });
        }
    }
    if let Some(ideals) = small_dim_ideals(a) {
        let nonzero: Vec<Subspace> = ideals.into_iter().filter(|s| !s.is_zero()).collect();
        let minimal = lattice::minimal_members(&nonzero);
        return Ok(match minimal.as_slice() {
            [only] => Some(only.clone()),
            _ => None,
        });
    }
    if a.is_nilpotent() {
        // minimal ideals of a nilpotent algebra are the lines in Z(A)
        let z = a.center();
        return Ok(if z.dim() == 1 { Some(z) } else { None });
    }
    if certify_simple(a) == Some(true) {
        return Ok(Some(a.full_space()));
    }
    Err(Error::UnsupportedField(
        "minimal ideals are not decidable in any certified mode",
    ))
}

/// The three defining conditions for K to be a primitive ideal:
/// Φ(A/K) = 0, a unique minimal ideal in A/K, and dim(A/K) > 1.
pub fn is_primitive_ideal(
    a: &LeibnizAlgebra,
    k: &Subspace,
    budget: &EnumBudget,
) -> Result<PrimitiveVerdict> {
    if !a.is_ideal(k) {
        return Err(Error::NotAnIdeal);
    }
    if !k.is_proper() {
        return Err(Error::NotProperIdeal);
    }
    let q = a.quotient(k)?;
    let dim_ok = q.algebra.dim() > 1;
    let rep = frattini_report(&q.algebra, budget)?;
    let phi_quotient_zero = rep.phi.is_zero();
    let minimal = unique_minimal_ideal(&q.algebra, budget)?;
    let unique_minimal = minimal.is_some();
    let minimal_ideal_preimage = minimal.map(|m| q.preimage_subspace(&m));
    Ok(PrimitiveVerdict {
        is_primitive: phi_quotient_zero && unique_minimal && dim_ok,
        phi_quotient_zero,
        unique_minimal,
        dim_ok,
        minimal_ideal_preimage,
    })
}

/// The three non-generator element sets of an algebra over a prime
/// field, computed exhaustively.
#[derive(Clone, Debug, PartialEq)]
pub struct NonGeneratorSets {
    pub non_generators: Vec<Vec<Scalar>>,
    pub normal_non_generators: Vec<Vec<Scalar>>,
    pub n_non_generators: Vec<Vec<Scalar>>,
}

pub fn nongenerator_sets(a: &LeibnizAlgebra, budget: &EnumBudget) -> Result<NonGeneratorSets> {
    let elements = lattice::enumerate_elements(a.field(), a.dim(), budget)?;
    let rep = lattice::lattice_report(a, budget)?;
    let proper_subalgebras: Vec<&Subspace> =
        rep.subalgebras.iter().filter(|s| s.is_proper()).collect();
    let proper_ideals: Vec<&Subspace> = rep.ideals.iter().filter(|s| s.is_proper()).collect();
    let full = a.full_space();

    let mut non_generators = Vec::new();
    let mut normal_non_generators = Vec::new();
    let mut n_non_generators = Vec::new();
    for x in &elements {
        let x_closure = a.ideal_closure(core::slice::from_ref(x));

        let mut non_gen = true;
        for s in &proper_subalgebras {
            let mut gens = s.basis_vectors();
            gens.push(x.clone());
            if a.subalgebra_closure(&gens) == full {
                non_gen = false;
                break;
            }
        }
        if non_gen {
            non_generators.push(x.clone());
        }

        let mut normal_non_gen = true;
        for i in &proper_ideals {
            let mut gens = i.basis_vectors();
            gens.push(x.clone());
            if a.subalgebra_closure(&gens) == full {
                normal_non_gen = false;
                break;
            }
        }
        if normal_non_gen {
            normal_non_generators.push(x.clone());
        }

        let mut n_non_gen = true;
        for i in &proper_ideals {
            if x_closure.sum(i) == full {
                n_non_gen = false;
                break;
            }
        }
        if n_non_gen {
            n_non_generators.push(x.clone());
        }
    }
    Ok(NonGeneratorSets {
        non_generators,
        normal_non_generators,
        n_non_generators,
    })
}

/// The element set of a subspace over a prime field, in the same
/// odometer order as `lattice::enumerate_elements`.
pub fn element_set(s: &Subspace, budget: &EnumBudget) -> Result<Vec<Vec<Scalar>>> {
    let all = lattice::enumerate_elements(s.field(), s.ambient(), budget)?;
    Ok(all.into_iter().filter(|v| s.contains_vector(v)).collect())
}

/// ⟨x, X⟩^A = ⟨x^A, X^A⟩ = x^A + X^A, each side computed independently.
pub fn lemma37_check(a: &LeibnizAlgebra, x: &[Scalar], xs: &[Vec<Scalar>]) -> bool {
    let mut gens: Vec<Vec<Scalar>> = vec![x.to_vec()];
    gens.extend(xs.iter().cloned());
    let joint = a.ideal_closure(&gens);

    let x_ideal = a.ideal_closure(core::slice::from_ref(&gens[0]));
    let xs_ideal = a.ideal_closure(xs);

    let mut sub_gens = x_ideal.basis_vectors();
    sub_gens.extend(xs_ideal.basis_vectors());
    let generated = a.subalgebra_closure(&sub_gens);

    let sum = x_ideal.sum(&xs_ideal);
    joint == generated && generated == sum
}

pub fn format_genfrat_witness(a: &LeibnizAlgebra, w: &GenFratWitness) -> String {
    match w {
        GenFratWitness::IdealJ(j) => format!("J = {}", describe_subspace(a, j)),
        GenFratWitness::CartanPair { k, c } => format!(
            "K = {}, C = {}",
            describe_subspace(a, k),
            describe_subspace(a, c)
        ),
        GenFratWitness::EngelElement { k, c } => format!(
            "K = {}, c = {}",
            describe_subspace(a, k),
            a.format_element(c)
        ),
    }
}

/// Pretty description of a subspace as combinations of basis names.
pub fn describe_subspace(a: &LeibnizAlgebra, s: &Subspace) -> String {
    if s.is_zero() {
        return String::from("0");
    }
    if s.is_full() {
        return String::from("A");
    }
    let combos: Vec<String> = s
        .basis_vectors()
        .iter()
        .map(|v| a.format_element(v))
        .collect();
    format!("span{{{}}}", combos.join(", "))
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

    fn budget() -> EnumBudget {
        EnumBudget::default()
    }

    fn vec_of(field: FieldSpec, data: &[i64]) -> Vec<Scalar> {
        data.iter().map(|&v| field.scalar_from_i64(v)).collect()
    }

    fn span_of(field: FieldSpec, ambient: usize, data: &[&[i64]]) -> Subspace {
        let rows: Vec<Vec<Scalar>> = data.iter().map(|r| vec_of(field, r)).collect();
        Subspace::from_vectors(field, ambient, &rows)
    }

    #[test]
    fn ideal_core_examples() {
        let a = catalog::example8(q()).algebra;
        // an ideal is its own core
        let xy = span_of(q(), 3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(ideal_core(&a, &xy), xy);
        // z·x = -x escapes every subspace of span{z}
        let z = span_of(q(), 3, &[&[0, 0, 1]]);
        assert!(ideal_core(&a, &z).is_zero());
        assert!(ideal_core(&a, &a.zero_space()).is_zero());
    }

    #[test]
    fn example8_report_over_gf5() {
        let a = catalog::example8(gf(5)).algebra;
        let rep = frattini_report(&a, &budget()).unwrap();
        let xy = span_of(gf(5), 3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(rep.mode, ReportMode::ExhaustiveLattice);
        assert!(rep.phi.is_zero());
        assert_eq!(rep.nil, xy);
        assert_eq!(rep.rad, a.full_space());
        assert_eq!(rep.r, rep.nfrat); // solvable: R = nFrat
        assert_eq!(rep.r, xy);
        assert_eq!(rep.maximal_subalgebras.as_ref().unwrap().len(), 11);
    }

    #[test]
    fn heisenberg_report_over_gf3() {
        let a = catalog::heisenberg(gf(3)).algebra;
        let rep = frattini_report(&a, &budget()).unwrap();
        let h = span_of(gf(3), 3, &[&[0, 0, 1]]);
        assert_eq!(rep.f, Some(h.clone()));
        assert_eq!(rep.phi, h.clone());
        assert_eq!(rep.r, h);
        assert_eq!(rep.t, Some(a.full_space()));
        assert_eq!(rep.tau, a.full_space());
    }

    #[test]
    fn sl2_report_over_q() {
        let a = catalog::matrix_algebras(q(), 2).1.algebra;
        let rep = frattini_report(&a, &budget()).unwrap();
        assert_eq!(rep.mode, ReportMode::SimpleExact);
        assert!(rep.nfrat.is_zero());
        assert_eq!(rep.r, a.full_space());
        assert!(rep.f.is_none()); // not enumerable over Q
        assert!(rep.nil.is_zero());
    }

    #[test]
    fn nil_modes() {
        // nilpotent: Nil = A
        let h = catalog::heisenberg(q()).algebra;
        let r = nil(&h, RadicalRequest::Exhaustive, &budget()).unwrap();
        assert_eq!(r.space, h.full_space());

        // exhaustive over GF(5)
        let a = catalog::cyclic_leibniz(gf(5), 3, &[0, 1, 0]).unwrap().algebra;
        let r = nil(&a, RadicalRequest::Exhaustive, &budget()).unwrap();
        assert_eq!(r.space, span_of(gf(5), 3, &[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(r.mode, NilMode::Exhaustive);

        // asserted: verified and flagged; bad candidates rejected
        let gl = catalog::matrix_algebras(q(), 2).0.algebra;
        let scalars = span_of(q(), 4, &[&[1, 0, 0, 1]]);
        let r = nil(&gl, RadicalRequest::Asserted(&scalars), &budget()).unwrap();
        assert_eq!(r.mode, NilMode::Asserted);
        let not_ideal = span_of(q(), 4, &[&[0, 1, 0, 0]]);
        assert!(matches!(
            nil(&gl, RadicalRequest::Asserted(&not_ideal), &budget()),
            Err(Error::CandidateRejected(_))
        ));

        // heuristic on a solvable char-0 algebra finds the right space
        let a = catalog::example8(q()).algebra;
        let r = nil(&a, RadicalRequest::Heuristic, &budget()).unwrap();
        assert_eq!(r.space, span_of(q(), 3, &[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(r.mode, NilMode::Heuristic);
    }

    #[test]
    fn genfrat_rejects_improper_input() {
        let a = catalog::example8(q()).algebra;
        let full = a.full_space();
        assert_eq!(
            is_generalized_frattini(&a, &full, GenFratMethod::NilPullback, &budget(), 0)
                .unwrap_err(),
            Error::NotProperIdeal
        );
        let z = span_of(q(), 3, &[&[0, 0, 1]]);
        assert_eq!(
            is_generalized_frattini(&a, &z, GenFratMethod::NilPullback, &budget(), 0)
                .unwrap_err(),
            Error::NotAnIdeal
        );
    }

    #[test]
    fn genfrat_pullback_is_certified_over_q_for_example8() {
        let a = catalog::example8(q()).algebra;
        let h = span_of(q(), 3, &[&[1, 0, 0]]);
        let v = is_generalized_frattini(&a, &h, GenFratMethod::NilPullback, &budget(), 0).unwrap();
        assert!(v.holds && !v.partial);
        // Example 17 over Q: K is generalized Frattini, certified
        let c = catalog::cyclic_leibniz(q(), 3, &[0, 1, 0]).unwrap().algebra;
        let k = span_of(q(), 3, &[&[0, 1, 1]]);
        let v = is_generalized_frattini(&c, &k, GenFratMethod::NilPullback, &budget(), 0).unwrap();
        assert!(v.holds && !v.partial);
    }

    #[test]
    fn heisenberg_zero_ideal_is_not_primitive() {
        let a = catalog::heisenberg(gf(2)).algebra;
        let v = is_primitive_ideal(&a, &a.zero_space(), &budget()).unwrap();
        assert!(!v.is_primitive);
        assert!(!v.phi_quotient_zero); // Φ(A/0) = span{h} ≠ 0
        assert!(v.unique_minimal);
        assert!(v.dim_ok);
    }

    #[test]
    fn nongenerator_sets_match_the_subspaces_on_gl2_gf2() {
        let a = catalog::matrix_algebras(gf(2), 2).0.algebra;
        let sets = nongenerator_sets(&a, &budget()).unwrap();
        let rep = frattini_report(&a, &budget()).unwrap();
        assert_eq!(
            sets.non_generators,
            element_set(rep.f.as_ref().unwrap(), &budget()).unwrap()
        );
        assert_eq!(
            sets.normal_non_generators,
            element_set(&rep.r, &budget()).unwrap()
        );
        assert_eq!(
            sets.n_non_generators,
            element_set(&rep.nfrat, &budget()).unwrap()
        );
        // nFrat has dimension 3 over GF(2): 8 n-nongenerators
        assert_eq!(sets.n_non_generators.len(), 8);
    }

    #[test]
    fn nongenerator_sets_require_a_finite_field() {
        let a = catalog::example8(q()).algebra;
        assert!(matches!(
            nongenerator_sets(&a, &budget()),
            Err(Error::WrongField)
        ));
    }

    #[test]
    fn lemma37_examples() {
        let a = catalog::cyclic_leibniz(q(), 3, &[0, 1, 0]).unwrap().algebra;
        // X = ∅: all three routes give x^A
        let x = a.basis_vector(0);
        assert!(lemma37_check(&a, &x, &[]));
        // x = a, X = {a²}: everything is A
        let a2 = a.basis_vector(1);
        assert!(lemma37_check(&a, &x, &[a2.clone()]));
        let joint = a.ideal_closure(&[x, a2]);
        assert_eq!(joint, a.full_space());
    }

    #[test]
    fn dim_zero_algebra_reports_trivially() {
        let a = catalog::abelian(gf(2), 0).algebra;
        let rep = frattini_report(&a, &budget()).unwrap();
        assert!(rep.phi.is_zero());
        assert!(rep.nil.is_zero());
        assert!(a.is_nilpotent());
    }

    #[test]
    fn all_lines_report_for_two_dimensional_lie_quotient() {
        // A/H for Example 8 over Q is a 2-dim Lie algebra: every line is
        // a subalgebra, yet the report is still exact
        let a = catalog::example8(q()).algebra;
        let h = span_of(q(), 3, &[&[1, 0, 0]]);
        let quot = a.quotient(&h).unwrap();
        let rep = frattini_report(&quot.algebra, &budget()).unwrap();
        assert_eq!(rep.mode, ReportMode::SmallDimExact);
        assert!(rep.f.is_some() && rep.f.as_ref().unwrap().is_zero());
        assert!(rep.phi.is_zero());
        assert_eq!(rep.nil.dim(), 1);
        assert!(rep.maximal_subalgebras.is_none()); // infinitely many lines
        assert_eq!(rep.maximal_ideals.as_ref().unwrap().len(), 1);
    }
}
