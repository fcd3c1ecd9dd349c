//! IO companion for `leibniz-core`: the `.lal` structure-constant file
//! format and the report renderers used by the `leibniz` binary.

pub mod format;
pub mod report;

/// Exit codes shared by every subcommand.
pub mod exit_code {
    /// Success, or every requested check passed.
    pub const OK: i32 = 0;
    /// A mathematical check failed (a counterexample was found).
    pub const MATH_FAIL: i32 = 1;
    /// Usage or parse error, including structure-constant validation.
    pub const USAGE: i32 = 2;
    /// Budget exceeded or no certified mode for this field.
    pub const SKIP: i32 = 3;
}
