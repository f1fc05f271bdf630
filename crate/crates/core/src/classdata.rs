//! Ideal class representatives and the congruence conditions they impose.
//!
//! Each non-principal class is represented by an integral ideal
//! `U = (k, s + t*omega)` with `U * conj(U) = k*O`, so that the unimodular
//! lattice `U v` has `h(v) = 1/k`. A representation of `U v^r` by `I_m` sends
//! `k v^r` to `sum gamma_i z_i`, and it extends to all of `U v^r` exactly when
//! every `(s + t*omega) * gamma_i / k` is integral. That is the condition
//! encoded by [`CongruenceCondition`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::quadfield::{FieldParams, OmegaBranch, Ratio, RingElement, CLASS_THREE, CLASS_TWO};
use crate::Error;

/// One representative ideal per class; class 1 is the ring itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IdealClassRep {
    pub class_index: usize,
    pub k: u64,
    pub s: i64,
    pub t: i64,
}

impl IdealClassRep {
    pub const PRINCIPAL: IdealClassRep = IdealClassRep {
        class_index: 1,
        k: 1,
        s: 0,
        t: 0,
    };

    /// `h(v)` of the unimodular lattice `U v`.
    pub fn h_scale(&self) -> Ratio {
        Ratio::new(1, self.k)
    }

    pub fn is_principal(&self) -> bool {
        self.class_index == 1
    }

    pub fn generator(&self) -> RingElement {
        RingElement::new(self.s, self.t)
    }
}

impl fmt::Display for IdealClassRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_principal() {
            return f.write_str("O");
        }
        let gen = match (self.s, self.t) {
            (0, 1) => String::from("w"),
            (s, 1) => format!("{s}+w"),
            (s, t) => format!("{s}+{t}w"),
        };
        write!(f, "({},{})", self.k, gen.replace("+-", "-"))
    }
}

// (d, k, s, t) for the non-principal class of each class-number-2 field.
const CLASS_TWO_REPS: [(u64, u64, i64, i64); 18] = [
    (5, 2, 1, 1),
    (6, 2, 0, 1),
    (10, 2, 0, 1),
    (13, 2, 1, 1),
    (15, 2, 1, 1),
    (22, 2, 0, 1),
    (35, 5, 2, 1),
    (37, 2, 1, 1),
    (51, 5, 1, 1),
    (58, 2, 0, 1),
    (91, 7, 3, 1),
    (115, 5, -3, 1),
    (123, 3, 1, 1),
    (187, 7, -2, 1),
    (235, 5, 2, 1),
    (267, 3, 1, 1),
    (403, 11, 6, 1),
    (427, 7, 3, 1),
];

// (d, k, s_2, s_3); both generators have t = 1.
const CLASS_THREE_REPS: [(u64, u64, i64, i64); 16] = [
    (23, 2, 0, -1),
    (31, 2, 0, -1),
    (59, 3, 0, -1),
    (83, 3, 0, -1),
    (107, 3, 0, -1),
    (139, 5, 0, -1),
    (211, 5, 1, -2),
    (283, 7, 2, -3),
    (307, 7, 0, -1),
    (331, 5, 1, -2),
    (379, 5, 0, -1),
    (499, 5, 0, -1),
    (547, 11, 2, -3),
    (643, 7, 0, -1),
    (883, 13, 0, -1),
    (907, 13, 4, -5),
];

/// Representatives of every ideal class, class index ascending.
pub fn class_reps(f: &FieldParams) -> Vec<IdealClassRep> {
    let d = f.d();
    let mut reps = alloc::vec![IdealClassRep::PRINCIPAL];
    if let Some(&(_, k, s, t)) = CLASS_TWO_REPS.iter().find(|row| row.0 == d) {
        reps.push(IdealClassRep {
            class_index: 2,
            k,
            s,
            t,
        });
    } else if let Some(&(_, k, s2, s3)) = CLASS_THREE_REPS.iter().find(|row| row.0 == d) {
        reps.push(IdealClassRep {
            class_index: 2,
            k,
            s: s2,
            t: 1,
        });
        reps.push(IdealClassRep {
            class_index: 3,
            k,
            s: s3,
            t: 1,
        });
    }
    debug_assert_eq!(reps.len(), f.class_number() as usize);
    reps
}

pub fn class_rep(f: &FieldParams, class_index: usize) -> Result<IdealClassRep, Error> {
    class_reps(f)
        .into_iter()
        .find(|r| r.class_index == class_index)
        .ok_or(Error::InvalidClass {
            d: f.d(),
            class_index,
        })
}

/// For class-number-3 fields, the odd `n` with `U_2 = (k, (n-1)/2 + omega)`.
pub fn odd_root(f: &FieldParams) -> Option<i64> {
    CLASS_THREE_REPS
        .iter()
        .find(|row| row.0 == f.d())
        .map(|row| 2 * row.2 + 1)
}

/// Which ring the congruence was derived in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionKind {
    /// `k | (s a - d t b)` and `k | (t a + s b)`.
    Branch12,
    /// `k | (s a - ((1+d)/4) t b)` and `k | (t a + (s+t) b)`.
    Branch3,
}

/// The pair of divisibility constraints `k | (c1a a + c1b b)`,
/// `k | (c2a a + c2b b)` on the coordinates of a summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceCondition {
    pub k: u64,
    pub kind: ConditionKind,
    pub first: (i64, i64),
    pub second: (i64, i64),
}

/// A single linear congruence equivalent to a [`CongruenceCondition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearCongruence {
    /// Always true (principal class).
    Trivial,
    /// `k | (a + c b)` with `0 <= c < k`.
    APlusCB { k: u64, c: u64 },
    /// `k | b`.
    B { k: u64 },
}

impl LinearCongruence {
    #[inline]
    pub fn holds(&self, a: i64, b: i64) -> bool {
        match *self {
            LinearCongruence::Trivial => true,
            LinearCongruence::APlusCB { k, c } => {
                (a as i128 + c as i128 * b as i128).rem_euclid(k as i128) == 0
            }
            LinearCongruence::B { k } => (b as i128).rem_euclid(k as i128) == 0,
        }
    }
}

impl fmt::Display for LinearCongruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LinearCongruence::Trivial => f.write_str("none"),
            LinearCongruence::APlusCB { k, c: 0 } => write!(f, "{k}|a"),
            LinearCongruence::APlusCB { k, c: 1 } => write!(f, "{k}|(a+b)"),
            LinearCongruence::APlusCB { k, c } => write!(f, "{k}|(a+{c}b)"),
            LinearCongruence::B { k } => write!(f, "{k}|b"),
        }
    }
}

pub fn congruence_for(f: &FieldParams, rep: &IdealClassRep) -> CongruenceCondition {
    let (s, t) = (rep.s, rep.t);
    match f.branch() {
        OmegaBranch::SqrtMinusD => CongruenceCondition {
            k: rep.k,
            kind: ConditionKind::Branch12,
            first: (s, -(f.d() as i64) * t),
            second: (t, s),
        },
        OmegaBranch::HalfOnePlusSqrtMinusD => CongruenceCondition {
            k: rep.k,
            kind: ConditionKind::Branch3,
            first: (s, -(f.b2_coefficient() as i64) * t),
            second: (t, s + t),
        },
    }
}

fn divides(k: u64, (ca, cb): (i64, i64), a: i64, b: i64) -> bool {
    let v = ca as i128 * a as i128 + cb as i128 * b as i128;
    v.rem_euclid(k as i128) == 0
}

impl CongruenceCondition {
    pub fn holds(&self, a: i64, b: i64) -> bool {
        self.k == 1 || (divides(self.k, self.first, a, b) && divides(self.k, self.second, a, b))
    }

    /// Finds an equivalent single congruence and confirms the equivalence on
    /// every residue pair mod `k`. `None` if no such form exists.
    pub fn simplified(&self) -> Option<LinearCongruence> {
        let k = self.k;
        if k == 1 {
            return Some(LinearCongruence::Trivial);
        }
        let ki = k as i64;
        let candidate = (0..k)
            .find(|&c| self.holds(-(c as i64), 1))
            .map(|c| LinearCongruence::APlusCB { k, c })
            .or_else(|| self.holds(1, 0).then_some(LinearCongruence::B { k }))?;
        let equivalent =
            (0..ki).all(|a| (0..ki).all(|b| self.holds(a, b) == candidate.holds(a, b)));
        equivalent.then_some(candidate)
    }
}

fn linear_term(ca: i64, cb: i64) -> String {
    let mut out = String::new();
    for (coef, var) in [(ca, "a"), (cb, "b")] {
        if coef == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push(if coef < 0 { '-' } else { '+' });
        } else if coef < 0 {
            out.push('-');
        }
        let mag = coef.unsigned_abs();
        if mag != 1 {
            out.push_str(&format!("{mag}"));
        }
        out.push_str(var);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for CongruenceCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            return f.write_str("none");
        }
        write!(
            f,
            "{k}|({}) and {k}|({})",
            linear_term(self.first.0, self.first.1),
            linear_term(self.second.0, self.second.1),
            k = self.k
        )
    }
}

/// One failed consistency check of the encoded tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableViolation {
    pub d: u64,
    pub class_index: usize,
    pub reason: String,
}

/// Checks every encoded representative; returns the violations (none expected).
pub fn validate_tables() -> Vec<TableViolation> {
    let mut out = Vec::new();
    let mut bad = |d, class_index, reason: String| {
        out.push(TableViolation {
            d,
            class_index,
            reason,
        })
    };
    for &d in CLASS_TWO.iter().chain(CLASS_THREE.iter()) {
        let f = match crate::make_field(d) {
            Ok(f) => f,
            Err(e) => {
                bad(d, 0, format!("field rejected: {e}"));
                continue;
            }
        };
        let reps = class_reps(&f);
        if reps.len() != f.class_number() as usize {
            bad(
                d,
                0,
                format!("{} reps for class number {}", reps.len(), f.class_number()),
            );
            continue;
        }
        for rep in reps.iter().filter(|r| !r.is_principal()) {
            match f.norm(rep.generator()) {
                Ok(n) if n % rep.k == 0 => {}
                Ok(n) => bad(
                    d,
                    rep.class_index,
                    format!("k={} does not divide N={n}", rep.k),
                ),
                Err(e) => bad(d, rep.class_index, format!("{e}")),
            }
            if congruence_for(&f, rep).simplified().is_none() {
                bad(
                    d,
                    rep.class_index,
                    String::from("no single-congruence form"),
                );
            }
        }
        if f.class_number() == 3 {
            let (r2, r3) = (reps[1], reps[2]);
            if r2.k != r3.k || r2.t != 1 || r3.t != 1 || r2.s + r3.s != -1 {
                bad(d, 3, format!("reps {r2} and {r3} are not a conjugate pair"));
            }
            let n = 2 * r2.s + 1;
            let k = r2.k as i64;
            let is_root = |x: i64| (x * x + d as i64).rem_euclid(k) == 0;
            if n <= 0 || !is_root(n) || (1..n).step_by(2).any(is_root) {
                bad(
                    d,
                    2,
                    format!("n={n} is not the least odd root of -d mod {k}"),
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::make_field;
    use crate::quadfield::supported_fields;

    fn cond(d: u64, class_index: usize) -> CongruenceCondition {
        let f = make_field(d).unwrap();
        congruence_for(&f, &class_rep(&f, class_index).unwrap())
    }

    #[test]
    fn reps_match_reference_rows() {
        let f = make_field(35).unwrap();
        assert_eq!(
            class_reps(&f),
            [
                IdealClassRep::PRINCIPAL,
                IdealClassRep {
                    class_index: 2,
                    k: 5,
                    s: 2,
                    t: 1
                }
            ]
        );
        let f = make_field(23).unwrap();
        assert_eq!(
            class_reps(&f),
            [
                IdealClassRep::PRINCIPAL,
                IdealClassRep {
                    class_index: 2,
                    k: 2,
                    s: 0,
                    t: 1
                },
                IdealClassRep {
                    class_index: 3,
                    k: 2,
                    s: -1,
                    t: 1
                },
            ]
        );
        assert_eq!(
            class_reps(&make_field(1).unwrap()),
            [IdealClassRep::PRINCIPAL]
        );
        for f in supported_fields() {
            assert_eq!(class_reps(&f).len(), f.class_number() as usize);
        }
    }

    #[test]
    fn table_checksum() {
        let sum: i64 = CLASS_TWO_REPS
            .iter()
            .map(|&(d, k, s, t)| d as i64 * 7 + k as i64 * 5 + s * 3 + t)
            .chain(
                CLASS_THREE_REPS
                    .iter()
                    .map(|&(d, k, s2, s3)| d as i64 * 7 + k as i64 * 5 + s2 * 3 - s3),
            )
            .sum();
        // Frozen from the transcribed tables.
        assert_eq!(sum, 53702);
    }

    #[test]
    fn validation_is_clean() {
        assert_eq!(validate_tables(), []);
    }

    #[test]
    fn representative_display() {
        let f = make_field(907).unwrap();
        let reps = class_reps(&f);
        assert_eq!(std::format!("{}", reps[1]), "(13,4+w)");
        assert_eq!(std::format!("{}", reps[2]), "(13,-5+w)");
        assert_eq!(reps[1].h_scale(), Ratio::new(1, 13));
        assert_eq!(odd_root(&f), Some(9));
    }

    #[test]
    fn simplified_conditions() {
        assert_eq!(
            cond(5, 2).simplified(),
            Some(LinearCongruence::APlusCB { k: 2, c: 1 })
        );
        assert_eq!(
            cond(15, 2).simplified(),
            Some(LinearCongruence::APlusCB { k: 2, c: 0 })
        );
        assert_eq!(
            cond(91, 2).simplified(),
            Some(LinearCongruence::APlusCB { k: 7, c: 4 })
        );
        assert_eq!(
            std::format!("{}", cond(35, 2).simplified().unwrap()),
            "5|(a+3b)"
        );
        assert_eq!(std::format!("{}", cond(5, 2)), "2|(a-5b) and 2|(a+b)");
        assert_eq!(cond(43, 1).simplified(), Some(LinearCongruence::Trivial));
    }

    #[test]
    fn predicate_examples() {
        let c = cond(5, 2);
        assert!(c.holds(1, 1));
        assert!(!c.holds(1, 0));
        for f in supported_fields() {
            for rep in class_reps(&f) {
                let c = congruence_for(&f, &rep);
                assert!(c.holds(rep.k as i64, 0));
            }
        }
    }

    #[test]
    fn closed_under_negation_and_scaling() {
        for f in supported_fields() {
            for rep in class_reps(&f) {
                let c = congruence_for(&f, &rep);
                let k = rep.k as i64;
                for a in -30..=30 {
                    for b in -30..=30 {
                        assert_eq!(c.holds(a, b), c.holds(-a, -b));
                    }
                }
                for x in -6..=6 {
                    for y in -6..=6 {
                        assert!(c.holds(k * x, k * y));
                    }
                }
            }
        }
    }

    #[test]
    fn conjugate_classes_swap_under_cross_map() {
        for f in supported_fields().filter(|f| f.class_number() == 3) {
            let c2 = cond(f.d(), 2);
            let c3 = cond(f.d(), 3);
            let n = odd_root(&f).unwrap();
            let k = c2.k as i64;
            let q = f.b2_coefficient() as i64;
            for a in -200i64..=200 {
                for b in -200i64..=200 {
                    assert_eq!(c2.holds(a, b), c3.holds(a + b, -b), "d={} ({a},{b})", f.d());
                    if (a + (n + 1) / 2 * b).rem_euclid(k) == 0 {
                        assert_eq!(((n - 1) / 2 * a - q * b).rem_euclid(k), 0);
                    }
                }
            }
        }
    }
}
