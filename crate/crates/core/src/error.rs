use thiserror::Error;

/// Failures raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: entry ({row}, {col}) deviates from its conjugate partner by {deviation:e}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: &'static str },

    #[error("degenerate control at t = {t} µs: both coupling channels vanish")]
    DegenerateControl { t: f64 },

    #[error("degenerate spectrum at t = {t} µs (smallest gap {gap:e})")]
    DegenerateSpectrum { t: f64, gap: f64 },

    #[error("eigenvector continuity lost at t = {t} µs (overlap {overlap:.3}); reduce the step")]
    StepTooLarge { t: f64, overlap: f64 },

    #[error("state norm drifted by {drift:e} at t = {t} µs; reduce the integration step")]
    NormDrift { t: f64, drift: f64 },

    #[error("density matrix lost positivity at t = {t} µs (smallest eigenvalue {min_eigenvalue:e}); reduce the integration step")]
    PositivityViolation { t: f64, min_eigenvalue: f64 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
