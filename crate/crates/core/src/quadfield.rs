//! Arithmetic in the ring of integers `O = Z + Z*omega` of `Q(sqrt(-d))`.
//!
//! Only the fields with class number 1, 2 or 3 are supported; the lists are
//! compiled in.

use core::fmt;

use crate::Error;

/// Class number 1.
pub const CLASS_ONE: [u64; 9] = [1, 2, 3, 7, 11, 19, 43, 67, 163];
/// Class number 2.
pub const CLASS_TWO: [u64; 18] = [
    5, 6, 10, 13, 15, 22, 35, 37, 51, 58, 91, 115, 123, 187, 235, 267, 403, 427,
];
/// Class number 3.
pub const CLASS_THREE: [u64; 16] = [
    23, 31, 59, 83, 107, 139, 211, 283, 307, 331, 379, 499, 547, 643, 883, 907,
];

/// Which generator `omega` the ring of integers uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmegaBranch {
    /// `omega = sqrt(-d)`, used when `d = 1, 2 (mod 4)`.
    SqrtMinusD,
    /// `omega = (1 + sqrt(-d)) / 2`, used when `d = 3 (mod 4)`.
    HalfOnePlusSqrtMinusD,
}

impl OmegaBranch {
    pub fn for_d(d: u64) -> Self {
        if d % 4 == 3 {
            OmegaBranch::HalfOnePlusSqrtMinusD
        } else {
            OmegaBranch::SqrtMinusD
        }
    }
}

impl fmt::Display for OmegaBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaBranch::SqrtMinusD => f.write_str("sqrt(-d)"),
            OmegaBranch::HalfOnePlusSqrtMinusD => f.write_str("(1+sqrt(-d))/2"),
        }
    }
}

/// A supported imaginary quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldParams {
    d: u64,
    branch: OmegaBranch,
    class_number: u8,
}

impl FieldParams {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn branch(&self) -> OmegaBranch {
        self.branch
    }

    pub fn class_number(&self) -> u8 {
        self.class_number
    }

    /// `(1 + d) / 4` for the `(1+sqrt(-d))/2` branch, `d` otherwise: the
    /// coefficient of `b^2` in the norm form.
    pub fn b2_coefficient(&self) -> u64 {
        match self.branch {
            OmegaBranch::SqrtMinusD => self.d,
            OmegaBranch::HalfOnePlusSqrtMinusD => (1 + self.d) / 4,
        }
    }

    pub fn norm(&self, e: RingElement) -> Result<u64, Error> {
        norm_form_value(self.d, self.branch, e.a, e.b)
    }

    /// `N(a + b*omega) / k^2`, reduced.
    pub fn scaled_form_value(&self, k: u64, e: RingElement) -> Result<Ratio, Error> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be positive"));
        }
        let den = k.checked_mul(k).ok_or(Error::Overflow)?;
        Ok(Ratio::new(self.norm(e)?, den))
    }
}

impl fmt::Display for FieldParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Q(sqrt(-{})), omega = {}, h = {}",
            self.d, self.branch, self.class_number
        )
    }
}

/// Returns true when no square of a prime divides `n`.
pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Class number of `Q(sqrt(-d))` when it is one of the encoded fields.
pub fn class_number_of(d: u64) -> Option<u8> {
    if CLASS_ONE.contains(&d) {
        Some(1)
    } else if CLASS_TWO.contains(&d) {
        Some(2)
    } else if CLASS_THREE.contains(&d) {
        Some(3)
    } else {
        None
    }
}

pub fn make_field(d: u64) -> Result<FieldParams, Error> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be positive"));
    }
    if !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    let class_number = class_number_of(d).ok_or(Error::UnsupportedField(d))?;
    Ok(FieldParams {
        d,
        branch: OmegaBranch::for_d(d),
        class_number,
    })
}

/// Every supported field, class number 1 first.
pub fn supported_fields() -> impl Iterator<Item = FieldParams> {
    CLASS_ONE
        .iter()
        .chain(CLASS_TWO.iter())
        .chain(CLASS_THREE.iter())
        .map(|&d| make_field(d).expect("encoded fields are valid"))
}

/// An element `a + b*omega` of the ring of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    pub a: i64,
    pub b: i64,
}

impl RingElement {
    pub const ZERO: RingElement = RingElement { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        RingElement { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl From<(i64, i64)> for RingElement {
    fn from((a, b): (i64, i64)) -> Self {
        RingElement { a, b }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Evaluates the norm form of the `branch` ring on `(a, b)` for any `d`.
///
/// `d` need not be squarefree or supported; the three-norm witness identities
/// use `d = 27`.
pub fn norm_form_value(d: u64, branch: OmegaBranch, a: i64, b: i64) -> Result<u64, Error> {
    let coeff = match branch {
        OmegaBranch::SqrtMinusD => d,
        OmegaBranch::HalfOnePlusSqrtMinusD => {
            if d % 4 != 3 {
                return Err(Error::WrongBranch(d));
            }
            (1 + d) / 4
        }
    };
    let coeff = i64::try_from(coeff).map_err(|_| Error::Overflow)?;
    let aa = a.checked_mul(a).ok_or(Error::Overflow)?;
    let bb = b
        .checked_mul(b)
        .and_then(|x| x.checked_mul(coeff))
        .ok_or(Error::Overflow)?;
    let cross = match branch {
        OmegaBranch::SqrtMinusD => 0,
        OmegaBranch::HalfOnePlusSqrtMinusD => a.checked_mul(b).ok_or(Error::Overflow)?,
    };
    let n = aa
        .checked_add(cross)
        .and_then(|x| x.checked_add(bb))
        .ok_or(Error::Overflow)?;
    debug_assert!(n >= 0);
    Ok(n as u64)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A nonnegative rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    /// Panics when `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        if g == 0 {
            return Ratio { num: 0, den: 1 };
        }
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
