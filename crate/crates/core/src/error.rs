use core::fmt;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `d` is divisible by the square of a prime.
    NotSquarefree(u64),
    /// `d` is squarefree but its class number is not 1, 2 or 3.
    UnsupportedField(u64),
    /// An intermediate value left the 64-bit range.
    Overflow,
    /// The class index does not name an ideal class of the field.
    InvalidClass { d: u64, class_index: usize },
    /// A scalar argument was out of its allowed range.
    InvalidArgument(&'static str),
    /// The DP target `r * k` exceeds the configured table size.
    TargetTooLarge { target: u64, cap: u64 },
    /// The operation needs `omega = (1 + sqrt(-d)) / 2`.
    WrongBranch(u64),
    /// The encoded number of norms failed its bounded universality check.
    CrossCheckFailed {
        d: u64,
        count: u32,
        reason: &'static str,
    },
    /// `r_max` is too small for the requested computation.
    WindowTooSmall { d: u64, needed: u64, got: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquarefree(d) => write!(f, "NotSquarefree: {d} is divisible by a square > 1"),
            Error::UnsupportedField(d) => write!(
                f,
                "UnsupportedField: Q(sqrt(-{d})) does not have class number 1, 2 or 3"
            ),
            Error::Overflow => f.write_str("Overflow: value exceeds the 64-bit range"),
            Error::InvalidClass { d, class_index } => {
                write!(f, "InvalidClass: d={d} has no ideal class {class_index}")
            }
            Error::InvalidArgument(what) => write!(f, "InvalidArgument: {what}"),
            Error::TargetTooLarge { target, cap } => {
                write!(f, "Overflow: target {target} exceeds the DP cap {cap}")
            }
            Error::WrongBranch(d) => {
                write!(f, "WrongBranch: d={d} is not 3 mod 4")
            }
            Error::CrossCheckFailed { d, count, reason } => {
                write!(f, "CrossCheckFailed: d={d}, {count} norms: {reason}")
            }
            Error::WindowTooSmall { d, needed, got } => {
                write!(
                    f,
                    "WindowTooSmall: d={d} needs r_max >= {needed}, got {got}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
