//! Stand-alone validation of representation certificates.
//!
//! Nothing here calls into the search code: the ring structure is rebuilt
//! from `d` alone, norms come from `4N = (2a+b)^2 + d b^2` (or `a^2 + d b^2`),
//! and the congruence is tested by actually multiplying `(s + t w) * gamma`
//! in the ring and checking both coordinates for divisibility by `k`.

use core::fmt;

/// Why a certificate was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateFault {
    Empty,
    ZeroSummand {
        index: usize,
    },
    /// `(s + t w) * gamma / k` is not integral.
    NotInClass {
        index: usize,
    },
    WrongSum {
        expected: i128,
        got: i128,
    },
    BadModulus,
}

impl fmt::Display for CertificateFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateFault::Empty => f.write_str("certificate has no summands"),
            CertificateFault::ZeroSummand { index } => write!(f, "summand {index} is zero"),
            CertificateFault::NotInClass { index } => {
                write!(f, "summand {index} violates the class congruence")
            }
            CertificateFault::WrongSum { expected, got } => {
                write!(f, "norms sum to {got}, expected {expected}")
            }
            CertificateFault::BadModulus => f.write_str("k must be positive"),
        }
    }
}

/// `(x0 + x1 w)(y0 + y1 w)` using `w^2 = -d` or `w^2 = w - (1+d)/4`.
fn ring_mul(d: i128, x: (i128, i128), y: (i128, i128)) -> (i128, i128) {
    let c0 = x.0 * y.0;
    let c1 = x.0 * y.1 + x.1 * y.0;
    let c2 = x.1 * y.1;
    if d % 4 == 3 {
        (c0 - c2 * ((1 + d) / 4), c1 + c2)
    } else {
        (c0 - c2 * d, c1)
    }
}

fn norm(d: i128, (a, b): (i128, i128)) -> i128 {
    if d % 4 == 3 {
        let u = 2 * a + b;
        (u * u + d * b * b) / 4
    } else {
        a * a + d * b * b
    }
}

/// Checks that every `gamma = a + b w` is nonzero, that `(s + t w) gamma`
/// is divisible by `k`, and that the norms sum to `r * k`. Returns the sum.
pub fn check_representation(
    d: u64,
    k: u64,
    (s, t): (i64, i64),
    r: u64,
    gammas: &[(i64, i64)],
) -> Result<u64, CertificateFault> {
    if k == 0 {
        return Err(CertificateFault::BadModulus);
    }
    if gammas.is_empty() {
        return Err(CertificateFault::Empty);
    }
    let (d, k) = (d as i128, k as i128);
    let mut total: i128 = 0;
    for (index, &(a, b)) in gammas.iter().enumerate() {
        let g = (a as i128, b as i128);
        if g == (0, 0) {
            return Err(CertificateFault::ZeroSummand { index });
        }
        let p = ring_mul(d, (s as i128, t as i128), g);
        if p.0 % k != 0 || p.1 % k != 0 {
            return Err(CertificateFault::NotInClass { index });
        }
        total += norm(d, g);
    }
    let expected = r as i128 * k;
    if total != expected {
        return Err(CertificateFault::WrongSum {
            expected,
            got: total,
        });
    }
    Ok(total as u64)
}
