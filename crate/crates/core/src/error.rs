use thiserror::Error;

/// Failures reported by the evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VoigtError {
    #[error("imaginary part y = {0} is outside the supported range [0, 0.1]")]
    YOutOfRange(f64),
    #[error("argument is not finite: {0}")]
    NonFinite(&'static str),
    #[error("Hermite order n = {0} must be odd and positive")]
    InvalidHermiteOrder(i64),
    #[error("coefficient index k = {k} is outside [0, {m}]")]
    IndexOutOfRange { m: usize, k: usize },
    #[error("series truncation N = {n} exceeds the generated tables (m_max = {m_max})")]
    TruncationTooLarge { n: usize, m_max: usize },
    #[error("continued-fraction depth must be at least 1")]
    ZeroDepth,
    #[error("the Laplace continued fraction is undefined at z = 0")]
    ZeroArgument,
    #[error("relative error undefined: reference {0} component is zero")]
    ZeroReference(&'static str),
    #[error("accuracy level {0:e} has no published parameter table")]
    UnsupportedLevel(f64),
}

pub type Result<T> = std::result::Result<T, VoigtError>;
