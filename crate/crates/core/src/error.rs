//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when building or transforming codes and ideals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects that must live in the same ambient space do not.
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    /// An enumeration would exceed its documented desk-scale cap.
    #[error("length {len} exceeds the cap of {cap} for {what}")]
    OverCap {
        len: usize,
        cap: usize,
        what: &'static str,
    },

    /// A 1-based coordinate index fell outside `1..=len`.
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    /// A motif family that must be an antichain has a comparable pair.
    #[error("not an antichain: {low} <= {high}")]
    NotAntichain { low: String, high: String },

    /// A motif expected to be polar (entries in {{0,*}} plus inactive marks) has a 1.
    #[error("motif {motif} is not polar: entry 1 at position {position}")]
    NotPolar { motif: String, position: usize },

    /// Depolarization found a coordinate pair outside the polarization image.
    #[error("motif {motif} is not in the polarization image at pair {pair}")]
    NotPolarizationImage { motif: String, pair: usize },

    /// An operation on a doubled space was handed an odd length.
    #[error("length {len} is odd; a doubled space has even length")]
    OddLength { len: usize },

    /// Polarization applies only to undoubled inputs.
    #[error("input already lives in a doubled space")]
    AlreadyDoubled,

    /// A partial motif's inactive positions must match the partial code's.
    #[error("inactive positions {motif_inactive} do not match the code's {code_inactive}")]
    InactiveMismatch {
        motif_inactive: String,
        code_inactive: String,
    },

    /// The operation is undefined on the empty code.
    #[error("undefined for the empty code")]
    EmptyCode,

    /// A pseudo-monomial may not mention the same variable plainly and complemented.
    #[error("variable {index} appears in both factor sets")]
    OverlappingFactors { index: usize },

    /// Two objects that must share a variable space do not.
    #[error("variable space mismatch: {left} vs {right}")]
    SpaceMismatch { left: String, right: String },

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
