//! Shared error type for the computational kernel.

use thiserror::Error;

/// Errors surfaced by construction, parsing and computation routines.
///
/// Resource exhaustion is deliberately a *distinguished* variant: a capped
/// Groebner run must never degrade into a silently truncated (wrong) answer.
#[derive(Debug, Error)]
pub enum Error {
    /// The requested characteristic is not a prime in the supported range.
    #[error("unsupported field characteristic {0}: need a prime below 2^16")]
    BadCharacteristic(u64),

    /// Two objects built over different rings (or fields) were combined.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// Matrix shapes do not allow the requested operation.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A text payload (matrix exchange file, polynomial, ring file) is malformed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An embedded data asset failed its checksum or structural audit.
    #[error("data asset integrity failure: {0}")]
    AssetIntegrity(String),

    /// A stated precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A computation exceeded its configured budget. Carries enough context
    /// to report the run as resource-capped rather than failed.
    #[error("resource budget exceeded: {what} reached {reached}, limit {limit}")]
    Resource {
        what: &'static str,
        reached: u64,
        limit: u64,
    },

    /// A quotient expected to be finite dimensional is not.
    #[error("quotient is not finite length: {0}")]
    InfiniteLength(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True when the error reports a budget cap rather than a hard failure.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}
