//! Exact scalars: arbitrary-precision rationals and prime fields GF(p).
//!
//! Every scalar is kept in canonical form (a gcd-reduced fraction with
//! positive denominator, or the least non-negative residue mod p), so
//! scalar equality is structural equality.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field: the rationals, or GF(p) for a 16-bit prime p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// GF(p). Fails unless p is prime and p < 2^16.
    pub fn prime_field(p: u32) -> Result<Self> {
        if p >= (1 << 16) {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::PrimeField(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Mod { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Mod { value: 1, modulus: *p },
        }
    }

    pub fn scalar_from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let m = i64::from(*p);
                Scalar::Mod {
                    value: n.rem_euclid(m) as u32,
                    modulus: *p,
                }
            }
        }
    }

    /// num/den as a field element. Over GF(p) the denominator must be
    /// invertible mod p.
    pub fn scalar_from_fraction(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::PrimeField(_) => {
                let d = self.scalar_from_i64(den);
                let n = self.scalar_from_i64(num);
                n.div(&d)
            }
        }
    }

    /// The idx-th field element, for iterating GF(p) exhaustively.
    /// Returns `None` over the rationals or when idx >= p.
    pub fn element(&self, idx: u64) -> Option<Scalar> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => {
                if idx < u64::from(*p) {
                    Some(Scalar::Mod {
                        value: idx as u32,
                        modulus: *p,
                    })
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// A field element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u32, modulus: u32 },
}

fn mod_inv(a: u32, p: u32) -> Option<u32> {
    // extended Euclid on i64; p < 2^16 so no overflow anywhere
    if a.is_multiple_of(p) {
        return None;
    }
    let (mut r0, mut r1) = (i64::from(p), i64::from(a % p));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Some(t0.rem_euclid(i64::from(p)) as u32)
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Mod { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Mod { value, modulus } => match mod_inv(*value, *modulus) {
                Some(v) => Ok(Scalar::Mod {
                    value: v,
                    modulus: *modulus,
                }),
                None => Err(Error::DivisionByZero),
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    /// For GF(p) scalars, the canonical residue in [0, p).
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Mod { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    /// The underlying reduced fraction, over the rationals.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }
}

fn expect_same_mod(a: u32, b: u32) -> u32 {
    assert_eq!(a, b, "scalar arithmetic across different fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Mod { value: a, modulus: p },
                Scalar::Mod { value: b, modulus: q },
            ) => {
                let p = expect_same_mod(*p, *q);
                Scalar::Mod {
                    value: ((u64::from(*a) + u64::from(*b)) % u64::from(p)) as u32,
                    modulus: p,
                }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Mod { value: a, modulus: p },
                Scalar::Mod { value: b, modulus: q },
            ) => {
                let p = expect_same_mod(*p, *q);
                Scalar::Mod {
                    value: ((u64::from(*a) * u64::from(*b)) % u64::from(p)) as u32,
                    modulus: p,
                }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only for deterministic sorting of outputs; scalars of
/// distinct fields never meet in practice.
impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (
                Scalar::Mod { value: a, modulus: p },
                Scalar::Mod { value: b, modulus: q },
            ) => p.cmp(q).then(a.cmp(b)),
            (Scalar::Rational(_), Scalar::Mod { .. }) => Ordering::Less,
            (Scalar::Mod { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Parse "num" or "num/den" into a scalar of the given field.
pub fn scalar_from_str(field: FieldSpec, text: &str) -> Result<Scalar> {
    let text = text.trim();
    let (num_s, den_s) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: i64 = num_s.parse().map_err(|_| Error::DivisionByZero)?;
    match den_s {
        None => Ok(field.scalar_from_i64(num)),
        Some(d) => {
            let den: i64 = d.parse().map_err(|_| Error::DivisionByZero)?;
            field.scalar_from_fraction(num, den)
        }
    }
}

/// Render a vector of scalars as a linear combination of named basis
/// elements, e.g. "a2 + 4*a3" or "0".
pub fn format_combination(coords: &[Scalar], names: &[String]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    let mut first = true;
    for (c, name) in coords.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = match c {
            Scalar::Rational(r) => (r.is_negative(), Scalar::Rational(r.abs())),
            Scalar::Mod { .. } => (false, c.clone()),
        };
        if first {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if mag.is_one() {
            let _ = write!(out, "{name}");
        } else {
            let _ = write!(out, "{mag}*{name}");
        }
        first = false;
    }
    if first {
        out.push('0');
    }
    out
}
