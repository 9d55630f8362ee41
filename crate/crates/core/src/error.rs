use thiserror::Error;

/// Errors surfaced by the engine. Verification failures are never errors —
/// they are reported as `Fail` with counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The exact integer path for `floor(n*phi)` would overflow.
    #[error("index {n} is outside the exact-arithmetic range")]
    IndexRange { n: u64 },

    /// 0 belongs to both sequences (index 0), so it has no unique class.
    #[error("cannot classify 0: both sequences start at 0")]
    ClassifyZero,

    /// Position lookup outside the stored table.
    #[error("position ({a},{b}) is outside the table (rows <= {a_max}, columns <= {b_max})")]
    OutOfBounds { a: u64, b: u64, a_max: u64, b_max: u64 },

    /// No closed form is defined for this rule (e.g. the value-1 set).
    #[error("no closed-form set for game '{rule}'")]
    FormulaUnavailable { rule: String },

    /// Additive-period mining needs a minimal window.
    #[error("window too small: need at least 4 columns, got {got}")]
    WindowTooSmall { got: u64 },

    /// Band tables must satisfy `a_max <= b_max`.
    #[error("invalid band: a_max {a_max} exceeds b_max {b_max}")]
    BadBand { a_max: u64, b_max: u64 },

    /// Upfront allocation for the requested bound failed; no partial table
    /// is ever returned.
    #[error("cannot allocate a table of {cells} cells (rows <= {a_max}, columns <= {b_max})")]
    TableAlloc { cells: u64, a_max: u64, b_max: u64 },

    /// Malformed rule configuration or CLI input.
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
