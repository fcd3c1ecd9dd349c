//! Crate-wide error type.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::field::Scalar;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Modulus passed to `FieldSpec::prime_field` is not prime.
    NotPrime(u32),
    /// Prime moduli are limited to 16 bits.
    ModulusTooLarge(u32),
    /// Inversion or division by zero.
    DivisionByZero,
    /// Structure-constant index out of range.
    BadIndex { index: usize, dim: usize },
    /// The left Leibniz identity fails on the basis triple (i, j, k);
    /// `lhs` is e_i(e_j e_k), `rhs` is (e_i e_j)e_k + e_j(e_i e_k).
    LeibnizIdentityViolation {
        i: usize,
        j: usize,
        k: usize,
        lhs: Vec<Scalar>,
        rhs: Vec<Scalar>,
    },
    /// Operands live over different fields.
    FieldMismatch,
    /// Vector or subspace has the wrong ambient dimension.
    DimensionMismatch { expected: usize, found: usize },
    /// The given subspace is not a two-sided ideal.
    NotAnIdeal,
    /// The given subspace is not closed under the product.
    NotASubalgebra,
    /// A proper ideal was required (H = A is rejected, never vacuously accepted).
    NotProperIdeal,
    /// Exhaustive enumeration would exceed the configured budget.
    BudgetExceeded { required: u128, budget: u64 },
    /// Operation needs a finite field.
    WrongField,
    /// No certified computation mode applies to this algebra/field.
    UnsupportedField(&'static str),
    /// No certified nilradical mode is available for this field.
    NilUnavailable,
    /// A caller-supplied candidate failed its definitional verification.
    CandidateRejected(String),
    /// Seeded generation kept producing invalid draws.
    GenerationFailed,
    /// Cartan search exhausted its budget; carries the best Engel
    /// subalgebra found (not verified Cartan).
    CartanSearchFailed { best: Subspace },
    /// No internal Engel witness found within the search budget.
    WitnessNotFound,
    /// An Engel subalgebra failed the subalgebra check. This signals a
    /// structure-constant validation bug and should be unreachable.
    EngelNotSubalgebra,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ModulusTooLarge(p) => write!(f, "modulus {p} exceeds 2^16"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::BadIndex { index, dim } => {
                write!(f, "basis index {index} out of range for dimension {dim}")
            }
            Error::LeibnizIdentityViolation { i, j, k, .. } => write!(
                f,
                "left Leibniz identity fails on basis triple ({i}, {j}, {k})"
            ),
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotAnIdeal => write!(f, "subspace is not a two-sided ideal"),
            Error::NotASubalgebra => write!(f, "subspace is not a subalgebra"),
            Error::NotProperIdeal => write!(f, "a proper ideal is required"),
            Error::BudgetExceeded { required, budget } => {
                write!(f, "enumeration needs {required} objects, budget is {budget}")
            }
            Error::WrongField => write!(f, "operation requires a finite field"),
            Error::UnsupportedField(what) => {
                write!(f, "no certified mode applies: {what}")
            }
            Error::NilUnavailable => {
                write!(f, "no certified nilradical mode for this field")
            }
            Error::CandidateRejected(why) => write!(f, "candidate rejected: {why}"),
            Error::GenerationFailed => write!(f, "random generation failed after retries"),
            Error::CartanSearchFailed { .. } => {
                write!(f, "Cartan search exhausted its budget without a verified result")
            }
            Error::WitnessNotFound => write!(f, "no internal Engel witness found within budget"),
            Error::EngelNotSubalgebra => {
                write!(f, "Engel subalgebra check failed (internal invariant violated)")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
