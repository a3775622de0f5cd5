use core::fmt;

/// Errors reported by fallible operations in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Series inversion requires a constant term of +1 or -1, the only
    /// units of the integer coefficient ring.
    NonUnitConstantTerm,
    /// A z-row outside the stored range of a coefficient table was requested.
    IndexOutOfRange { m: i64, m_min: i64, m_max: i64 },
    /// No closed form is implemented for f_{m,k} at this level.
    UnsupportedLevel { k: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonUnitConstantTerm => {
                write!(
                    f,
                    "cannot invert a series whose constant term is not +1 or -1"
                )
            }
            Error::IndexOutOfRange { m, m_min, m_max } => {
                write!(f, "z-row {m} outside the stored range [{m_min}, {m_max}]")
            }
            Error::UnsupportedLevel { k } => {
                write!(
                    f,
                    "no closed form for level k = {k}; only k <= 2 is supported"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
