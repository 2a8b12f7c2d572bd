use thiserror::Error;

/// Errors raised by the library. The CLI maps each variant to an exit status.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {at}")]
    Pole { at: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("Yang-Baxter equation fails at {component}")]
    YangBaxter { component: String },
    #[error("singular at degree {degree} (kernel dimension {kernel_dim})")]
    Singular { degree: usize, kernel_dim: usize },
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("dimension {dim} exceeds the configured cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("not isotypical: 2r+ acts on the antisymmetric square with minimal polynomial {minimal_polynomial}")]
    NotIsotypical { minimal_polynomial: String },
    #[error("representation is not faithful")]
    NotFaithful,
    #[error("{stage}: {detail}")]
    AxiomFailure { stage: String, detail: String },
    #[error("pairing is degenerate")]
    DegeneratePairing,
}

impl Error {
    /// Whether the error reports a violated mathematical property (as opposed to bad input).
    pub fn is_property_violation(&self) -> bool {
        matches!(
            self,
            Error::YangBaxter { .. }
                | Error::Singular { .. }
                | Error::NotHomomorphism(_)
                | Error::NotIsotypical { .. }
                | Error::NotFaithful
                | Error::AxiomFailure { .. }
                | Error::DegeneratePairing
                | Error::Pole { .. }
                | Error::DivisionByZero
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
