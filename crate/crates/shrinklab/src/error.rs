//! Crate-wide error type.
//!
//! Every failure mode named by an operation contract has its own variant so
//! callers (and the CLI exit-code mapping) can distinguish precision
//! exhaustion, budget limits and genuine verification failures.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A comparison or quotient could not be decided at the current working
    /// precision. Raised instead of silently guessing.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    /// Continued-fraction expansion of an exactly rational input terminated
    /// before the requested number of quotients. Carries the partial
    /// expansion (integer part, then quotients).
    #[error("rational input: expansion terminated after {} quotients", partial_quotients.len())]
    RationalInput {
        integer_part: num_bigint::BigInt,
        partial_quotients: Vec<num_bigint::BigInt>,
    },

    /// A search or orbit scan would exceed the configured budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// An inequality chain or certified check failed. `check` names the
    /// violated inequality.
    #[error("verification failure [{check}]: {detail}")]
    VerificationFailure { check: String, detail: String },

    /// A certificate does not satisfy its structural invariants.
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),

    /// A covering-lemma instance violates the lemma hypothesis.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// Grid escalation hit its cap before the decision margin cleared the
    /// error bound.
    #[error("resolution insufficient: {0}")]
    ResolutionInsufficient(String),

    /// A grid or scan would exceed the configured resource budget.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("nonmonotone schedule: {0}")]
    NonmonotoneSchedule(String),

    /// ε(α) vanished at the requested horizon (rational or resonant α).
    #[error("epsilon zero: {0}")]
    EpsilonZero(String),

    #[error("crossing detection failed: {0}")]
    CrossingDetection(String),

    /// Adaptive integration could not meet the tolerance with any step size.
    #[error("step underflow at t = {t}: {detail}")]
    StepUnderflow { t: f64, detail: String },

    /// An experiment configuration failed validation. `field` names the
    /// offending entry.
    #[error("config invalid [{field}]: {reason}")]
    ConfigInvalid { field: String, reason: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn verification(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::VerificationFailure {
            check: check.into(),
            detail: detail.into(),
        }
    }

    pub fn config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::ConfigInvalid {
            field: field.into(),
            reason: reason.into(),
        }
    }

    /// Process exit code for the CLI: 1 config, 2 verification, 3 resources.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ConfigInvalid { .. } | Error::RationalInput { .. } => 1,
            Error::VerificationFailure { .. }
            | Error::CertificateInvalid(_)
            | Error::HypothesisViolated(_)
            | Error::NonmonotoneSchedule(_)
            | Error::EpsilonZero(_) => 2,
            Error::PrecisionExhausted(_)
            | Error::BudgetExceeded(_)
            | Error::ResolutionInsufficient(_)
            | Error::ResourceLimit(_)
            | Error::StepUnderflow { .. }
            | Error::CrossingDetection(_) => 3,
            Error::Io(_) | Error::Json(_) | Error::Csv(_) => 1,
        }
    }
}
