use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("unsupported simple type `{0}` (only A-series types are available)")]
    UnsupportedType(String),

    #[error("structure constants fail the Jacobi identity on basis triple {0:?}")]
    Jacobi((usize, usize, usize)),

    #[error("invalid Manin form: {0}")]
    InvalidForm(String),

    #[error("invalid involution: {0}")]
    Involution(String),

    #[error("invalid Lagrangian datum: {0}")]
    Lagrangian(String),

    #[error("not in standard position: {0}")]
    NotStandard(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("link condition {condition} fails: {detail}")]
    LinkCondition { condition: u8, detail: String },

    #[error("no Gaussian-rational eigenvalues: {0}")]
    NonRationalSpectrum(String),

    #[error("tower stage {stage}: {source}")]
    TowerStage { stage: usize, source: Box<Error> },

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
