//! Exact root finding for small polynomials.
//!
//! Two consumers: locating one-dimensional subalgebras/ideals of
//! two-dimensional algebras (projective roots of binary forms), and the
//! common-eigenvector search behind the simplicity certificate (rational
//! roots of minimal polynomials). Everything either returns a provably
//! complete list or `None`; no approximation.


use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::field::{FieldSpec, Scalar};

/// Evaluate a polynomial (coefficients lowest degree first) at x.
pub fn eval_poly(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let field = x.field();
    let mut acc = field.zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn positive_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let m = n.abs().to_u64()?;
    if m == 0 {
        return None;
    }
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= m) {
        if m % d == 0 {
            divs.push(d);
            if d != m / d {
                divs.push(m / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    Some(divs)
}

/// All rational roots of a nonzero polynomial with rational coefficients,
/// sorted, each listed once. Completeness follows from the rational root
/// theorem; returns `None` when a coefficient bound exceeds what we can
/// factor (64-bit magnitudes) or when the polynomial is zero.
pub fn rational_roots(coeffs: &[Scalar]) -> Option<Vec<Scalar>> {
    let field = FieldSpec::Rationals;
    let mut cs: Vec<&Scalar> = coeffs.iter().collect();
    while cs.last().is_some_and(|c| c.is_zero()) {
        cs.pop();
    }
    if cs.is_empty() {
        return None; // zero polynomial: every rational is a root
    }
    let mut roots = Vec::new();
    // factor out powers of x
    let mut low = 0usize;
    while cs[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(field.zero());
    }
    let cs = &cs[low..];
    if cs.len() == 1 {
        roots.sort();
        return Some(roots);
    }
    // clear denominators
    let mut lcm = BigInt::from(1);
    for c in cs {
        let r = c.as_rational().expect("rational coefficients");
        lcm = lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = cs
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            (r.numer() * &lcm) / r.denom()
        })
        .collect();
    let a0 = &ints[0];
    let lead = ints.last().unwrap();
    debug_assert!(!a0.is_zero() && !lead.is_zero());
    let ps = positive_divisors(a0)?;
    let qs = positive_divisors(lead)?;
    for &p in &ps {
        for &q in &qs {
            if p.gcd(&q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = field
                    .scalar_from_fraction(sign * p as i64, q as i64)
                    .unwrap();
                if eval_poly(coeffs, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

/// Projective roots (s : t) of a nonzero homogeneous binary form
/// sum_k c_k s^(d-k) t^k, normalized to (1, t) or (0, 1). Over GF(p) all
/// p + 1 projective points are scanned; over the rationals the rational
/// root theorem is used. `None` means the form is identically zero or a
/// coefficient was out of factoring range.
pub fn binary_form_projective_roots(coeffs: &[Scalar]) -> Option<Vec<(Scalar, Scalar)>> {
    assert!(!coeffs.is_empty());
    let field = coeffs[0].field();
    if coeffs.iter().all(Scalar::is_zero) {
        return None;
    }
    let one = field.one();
    let mut out = Vec::new();
    match field {
        FieldSpec::PrimeField(p) => {
            for t in 0..u64::from(p) {
                let tv = field.element(t).unwrap();
                if eval_poly(coeffs, &tv).is_zero() {
                    out.push((one.clone(), tv));
                }
            }
        }
        FieldSpec::Rationals => {
            // dehomogenize at s = 1: roots t of sum_k c_k t^k give (1, t)
            for r in rational_roots(coeffs)? {
                out.push((one.clone(), r));
            }
        }
    }
    // (0 : 1) is a root iff the t^d coefficient vanishes
    if coeffs.last().unwrap().is_zero() {
        out.push((field.zero(), one));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn poly(cs: &[i64]) -> Vec<Scalar> {
        cs.iter().map(|&c| q().scalar_from_i64(c)).collect()
    }

    #[test]
    fn roots_of_factored_cubic() {
        // x(x-2)(x+2) = x^3 - 4x
        let got = rational_roots(&poly(&[0, -4, 0, 1])).unwrap();
        assert_eq!(got, vec![
            q().scalar_from_i64(-2),
            q().scalar_from_i64(0),
            q().scalar_from_i64(2),
        ]);
    }

    #[test]
    fn roots_with_fractions() {
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let got = rational_roots(&poly(&[-3, 5, 2])).unwrap();
        assert_eq!(got, vec![
            q().scalar_from_i64(-3),
            q().scalar_from_fraction(1, 2).unwrap(),
        ]);
    }

    #[test]
    fn irrational_roots_are_absent() {
        // x^2 - 2 has no rational roots
        assert!(rational_roots(&poly(&[-2, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn binary_form_over_q() {
        // s^2 (s + t): roots (1,0) double... as a set: t-root of dehomog
        // s=1: 1 + t -> wait, form c_0 s^3 + c_1 s^2 t: coeffs [1,1,0,0]
        // g(t) = 1 + t, root t = -1; plus (0,1) since c_3 = 0.
        let form = poly(&[1, 1, 0, 0]);
        let got = binary_form_projective_roots(&form).unwrap();
        assert_eq!(got, vec![
            (q().one(), q().scalar_from_i64(-1)),
            (q().zero(), q().one()),
        ]);
    }

    #[test]
    fn binary_form_over_gf5() {
        let f = FieldSpec::prime_field(5).unwrap();
        // s*t: coeffs of s^2, st, t^2 = [0, 1, 0]
        let form: Vec<Scalar> = [0i64, 1, 0].iter().map(|&c| f.scalar_from_i64(c)).collect();
        let got = binary_form_projective_roots(&form).unwrap();
        assert_eq!(got, vec![(f.one(), f.zero()), (f.zero(), f.one())]);
    }

    #[test]
    fn zero_form_is_rejected() {
        assert!(binary_form_projective_roots(&poly(&[0, 0, 0])).is_none());
        assert!(rational_roots(&poly(&[0])).is_none());
    }
}
