//! Exact computation of Frattini-type invariants of finite-dimensional
//! Leibniz algebras given by structure constants.
//!
//! The crate is organized in layers:
//!
//! * [`field`], [`matrix`], [`subspace`]: exact scalars (rationals with
//!   unbounded integers, prime fields GF(p)) and deterministic linear
//!   algebra over them. Subspaces are kept in reduced row-echelon form,
//!   which is the unique canonical representative, so subspace equality
//!   is plain structural equality.
//! * [`algebra`]: structure-constant Leibniz algebras: products,
//!   multiplication operators, series, centers, quotients, normalizers,
//!   derivations.
//! * [`lattice`]: exhaustive enumeration of subspaces, subalgebras and
//!   ideals over prime fields; the ground-truth oracle for everything else.
//! * [`engel`]: Engel subalgebras, Fitting decompositions and Cartan
//!   subalgebra search.
//! * [`frattini`]: F(A), Φ(A), R(A), T(A), τ(A), nFrat(A), Nil(A),
//!   Rad(A), generalized-Frattini testing, primitive ideals and the
//!   non-generator characterizations.
//! * [`catalog`]: built-in algebras with known invariants plus seeded
//!   generators for fuzzing.
//! * [`verify`]: a named check for every numbered statement the library
//!   is able to test on a concrete algebra.
//!
//! The core is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `leibniz-cli` crate.

#![cfg_attr(not(test), no_std)]
// structure-constant code is clearest with explicit tensor indices
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod engel;
pub mod error;
pub mod field;
pub mod frattini;
pub mod lattice;
pub mod matrix;
pub mod rng;
pub mod roots;
pub mod subspace;
pub mod verify;

pub use algebra::LeibnizAlgebra;
pub use error::Error;
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use subspace::Subspace;
