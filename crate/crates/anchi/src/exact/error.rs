use std::error::Error;
use std::fmt;

/// Errors from the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// A rational function was built with an identically zero denominator.
    ZeroDenominator,
    /// Series expansion requested for a function with a pole at the origin.
    PoleAtOrigin,
    /// Generating-function shift outside the supported range {0, 1}.
    InvalidShift { shift: u64 },
    /// Quasi-polynomial interpolation fit a residue class but a verification
    /// sample disagreed with the fit.
    InterpolationMismatch { residue: usize, argument: u64 },
    /// A reconstructed generating function disagreed with the quasi-polynomial
    /// it was built from at a verification coefficient.
    GenfunMismatch { argument: u64 },
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::ZeroDenominator => {
                write!(f, "denominator polynomial is identically zero")
            }
            ExactError::PoleAtOrigin => {
                write!(f, "series expansion requires a nonzero denominator at the origin")
            }
            ExactError::InvalidShift { shift } => {
                write!(f, "generating-function shift must be 0 or 1, got {shift}")
            }
            ExactError::InterpolationMismatch { residue, argument } => write!(
                f,
                "quasi-polynomial fit for residue class {residue} disagrees with sample at argument {argument}"
            ),
            ExactError::GenfunMismatch { argument } => write!(
                f,
                "generating function disagrees with quasi-polynomial at coefficient {argument}"
            ),
        }
    }
}

impl Error for ExactError {}
