use core::fmt;

/// Failure modes shared across the pipeline.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// The identically-zero polynomial has no well-defined root set.
    ZeroPolynomial,
    /// Iteration budget exhausted before the convergence criterion was met.
    NoConvergence { iterations: usize },
    /// The denominator 5k³ + Ck − D is too close to zero for the explicit
    /// pair-product formula; use the quadratic fallback instead.
    DegenerateDenominator { magnitude: f64, threshold: f64 },
    /// The supplied k does not annihilate the resolvent to within tolerance.
    NotAResolventRoot { relative_magnitude: f64 },
    /// No candidate resolvent root produced a split under the residual ceiling.
    NoViableSplit { candidates: usize },
    /// Series argument outside the convergence domain (p = q+1 needs |z| < 1).
    DivergentArgument { magnitude: f64 },
    /// A lower series parameter is a non-positive integer.
    PoleParameter { index: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "zero polynomial has no roots"),
            Error::NoConvergence { iterations } => {
                write!(f, "no convergence after {iterations} iterations")
            }
            Error::DegenerateDenominator { magnitude, threshold } => write!(
                f,
                "degenerate denominator |5k^3+Ck-D| = {magnitude:e} below threshold {threshold:e}"
            ),
            Error::NotAResolventRoot { relative_magnitude } => write!(
                f,
                "k is not a resolvent root (relative magnitude {relative_magnitude:e})"
            ),
            Error::NoViableSplit { candidates } => {
                write!(f, "no viable split among {candidates} resolvent root candidates")
            }
            Error::DivergentArgument { magnitude } => {
                write!(f, "series diverges at |z| = {magnitude} (requires |z| < 1)")
            }
            Error::PoleParameter { index } => {
                write!(f, "lower parameter {index} is a non-positive integer (series pole)")
            }
        }
    }
}

impl core::error::Error for Error {}
