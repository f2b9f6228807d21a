use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("signature mismatch: ({0}, {1}) vs ({2}, {3})")]
    SignatureMismatch(u8, u8, u8, u8),
    #[error("invalid signature: p = {p}, q = {q} (need 1 ≤ p+q ≤ 8)")]
    InvalidSignature { p: u8, q: u8 },
    #[error("grade index {0} out of range for dimension {1}")]
    GradeOutOfRange(usize, usize),
    #[error("operation requires odd dimension, got d = {0}")]
    RequiresOddDimension(usize),
    #[error("operation requires even dimension, got d = {0}")]
    RequiresEvenDimension(usize),
    #[error("truncated element has nonzero coefficients above grade (d-1)/2")]
    GradeOverflow,
    #[error("branch label ℓ mismatch: {0} vs {1}")]
    BranchMismatch(i8, i8),
    #[error("admissible pairing of requested type not realized (σ_min/σ_max = {0:.3e})")]
    PairingNotRealized(f64),
    #[error("dequantization solve failed: {0}")]
    DequantizeSingular(String),
    #[error("form is not a spinor square: {0}")]
    NotASquare(String),
    #[error("metric is singular or has wrong signature at sampled point")]
    SingularMetric,
    #[error("point outside chart domain")]
    OutsideDomain,
    #[error("constraint unsolvable: {0}")]
    ConstraintUnsolvable(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
