//! Bounded universality checks for diagonal forms, mixed sums of squares and
//! triangular numbers, and the minimal number of norms needed to write every
//! positive integer.
//!
//! The universality theorems themselves (fifteen theorem, 290 theorem, the
//! classification of universal ternary mixed sums) are taken as given. What
//! this module provides is exact finite checking: a form "represents `n`"
//! only when an explicit integer solution is found.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::quadfield::{norm_form_value, FieldParams, OmegaBranch};
use crate::Error;

/// Bound used by the norm-count cross-check.
pub const CROSS_CHECK_LIMIT: u64 = 10_000;

/// Forms `sum_i f_i(x_i)` where every variable appears in exactly one term.
pub trait SeparableForm {
    fn arity(&self) -> usize;

    /// Values `<= limit` of term `i`, each with one argument producing it,
    /// ascending by value.
    fn term_values(&self, i: usize, limit: u64) -> Vec<(u64, i64)>;
}

/// `sum c_i x_i^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalForm {
    pub coefficients: Vec<u64>,
}

impl DiagonalForm {
    /// Panics on a zero coefficient.
    pub fn new(coefficients: &[u64]) -> Self {
        assert!(
            coefficients.iter().all(|&c| c >= 1),
            "coefficients must be positive"
        );
        DiagonalForm {
            coefficients: coefficients.to_vec(),
        }
    }
}

fn weighted_squares(weight: u64, limit: u64) -> Vec<(u64, i64)> {
    (0u64..)
        .map(|x| (weight * x * x, x as i64))
        .take_while(|&(v, _)| v <= limit)
        .collect()
}

fn weighted_triangular(weight: u64, limit: u64) -> Vec<(u64, i64)> {
    (0u64..)
        .map(|x| (weight * triangular(x), x as i64))
        .take_while(|&(v, _)| v <= limit)
        .collect()
}

impl SeparableForm for DiagonalForm {
    fn arity(&self) -> usize {
        self.coefficients.len()
    }

    fn term_values(&self, i: usize, limit: u64) -> Vec<(u64, i64)> {
        weighted_squares(self.coefficients[i], limit)
    }
}

/// `T_x = x (x + 1) / 2`.
pub fn triangular(x: u64) -> u64 {
    x * (x + 1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermKind {
    Square,
    Triangular,
}

/// `sum w_i x_i^2` and `sum w_j T_{x_j}` mixed. Variables range over `x >= 0`;
/// `T_x = T_{-x-1}` makes negative arguments redundant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedSum {
    pub terms: Vec<(TermKind, u64)>,
}

impl MixedSum {
    /// Panics on a zero weight.
    pub fn new(terms: &[(TermKind, u64)]) -> Self {
        assert!(
            terms.iter().all(|&(_, w)| w >= 1),
            "weights must be positive"
        );
        MixedSum {
            terms: terms.to_vec(),
        }
    }
}

impl SeparableForm for MixedSum {
    fn arity(&self) -> usize {
        self.terms.len()
    }

    fn term_values(&self, i: usize, limit: u64) -> Vec<(u64, i64)> {
        match self.terms[i] {
            (TermKind::Square, w) => weighted_squares(w, limit),
            (TermKind::Triangular, w) => weighted_triangular(w, limit),
        }
    }
}

/// `sum x_i (c_i x_i + 1)` over all integers `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PronicSum {
    pub quads: Vec<u64>,
}

impl SeparableForm for PronicSum {
    fn arity(&self) -> usize {
        self.quads.len()
    }

    fn term_values(&self, i: usize, limit: u64) -> Vec<(u64, i64)> {
        let c = self.quads[i] as i128;
        let mut out = Vec::new();
        for x in 0i64.. {
            let pos = c * (x as i128) * (x as i128) + x as i128;
            let neg = c * (x as i128) * (x as i128) - x as i128;
            if neg > limit as i128 {
                break;
            }
            if pos <= limit as i128 {
                out.push((pos as u64, x));
            }
            if x > 0 {
                out.push((neg as u64, -x));
            }
        }
        out.sort_unstable();
        out.dedup_by_key(|e| e.0);
        out
    }
}

/// `2a^2 + a + 3b^2 + b + 3c^2 + c`.
pub fn sun_polynomial() -> PronicSum {
    PronicSum {
        quads: vec![2, 3, 3],
    }
}

/// The `m`-fold sum of norms of `O_d`, `sum N(a_i + b_i w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormSum {
    pub field: FieldParams,
    pub copies: usize,
}

impl SeparableForm for NormSum {
    fn arity(&self) -> usize {
        self.copies
    }

    fn term_values(&self, _: usize, limit: u64) -> Vec<(u64, i64)> {
        let mut seen = BitSet::new(limit as usize + 1);
        let d = self.field.d();
        let branch = self.field.branch();
        let lim = 2 * limit.isqrt() as i64 + 1;
        let b_lim = (4 * limit / d).isqrt() as i64 + 1;
        for b in -b_lim..=b_lim {
            for a in -lim..=lim {
                if let Ok(n) = norm_form_value(d, branch, a, b) {
                    seen.insert(n as usize);
                }
            }
        }
        // the argument slot is meaningless for a two-variable term
        (0..=limit)
            .filter(|&v| seen.contains(v as usize))
            .map(|v| (v, 0))
            .collect()
    }
}

/// A solution `x` with `form(x) = n`, searched exhaustively.
pub fn represents_bounded<F: SeparableForm + ?Sized>(form: &F, n: u64) -> Option<Vec<i64>> {
    let terms: Vec<_> = (0..form.arity()).map(|i| form.term_values(i, n)).collect();
    let mut witness = vec![0i64; terms.len()];
    fn go(terms: &[Vec<(u64, i64)>], i: usize, rest: u64, out: &mut [i64]) -> bool {
        if i == terms.len() {
            return rest == 0;
        }
        if i + 1 == terms.len() {
            return match terms[i].binary_search_by_key(&rest, |e| e.0) {
                Ok(j) => {
                    out[i] = terms[i][j].1;
                    true
                }
                Err(_) => false,
            };
        }
        for &(v, x) in terms[i].iter().take_while(|e| e.0 <= rest) {
            out[i] = x;
            if go(terms, i + 1, rest - v, out) {
                return true;
            }
        }
        false
    }
    go(&terms, 0, n, &mut witness).then_some(witness)
}

/// Every value of `form` in `0..=limit`.
pub fn value_set<F: SeparableForm + ?Sized>(form: &F, limit: u64) -> Vec<bool> {
    let bits = reachable(form, limit);
    (0..=limit as usize).map(|i| bits.contains(i)).collect()
}

fn reachable<F: SeparableForm + ?Sized>(form: &F, limit: u64) -> BitSet {
    let mut acc = BitSet::new(limit as usize + 1);
    acc.insert(0);
    for i in 0..form.arity() {
        let shifts: Vec<usize> = form
            .term_values(i, limit)
            .iter()
            .map(|e| e.0 as usize)
            .collect();
        acc = acc.sumset(&shifts);
    }
    acc
}

/// `Ok(())` if `form` represents every `1..=limit`, otherwise the first gap.
pub fn universal_up_to<F: SeparableForm + ?Sized>(form: &F, limit: u64) -> Result<(), u64> {
    match reachable(form, limit).first_missing_from(1) {
        None => Ok(()),
        Some(gap) => Err(gap as u64),
    }
}

pub fn sun_polynomial_universal(limit: u64) -> Result<(), u64> {
    universal_up_to(&sun_polynomial(), limit)
}

/// Finite sets whose representation certifies universality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionSet {
    /// Conway-Schneeberger: forms with integral Gram matrix.
    Fifteen,
    /// Bhargava-Hanke: integer-valued forms.
    TwoNinety,
}

const FIFTEEN: [u64; 9] = [1, 2, 3, 5, 6, 7, 10, 14, 15];
const TWO_NINETY: [u64; 29] = [
    1, 2, 3, 5, 6, 7, 10, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 31, 34, 35, 37, 42, 58, 93,
    110, 145, 203, 290,
];

impl CriterionSet {
    pub fn numbers(&self) -> &'static [u64] {
        match self {
            CriterionSet::Fifteen => &FIFTEEN,
            CriterionSet::TwoNinety => &TWO_NINETY,
        }
    }
}

/// True iff the form represents every member of `set`. Whether the theorem
/// behind `set` applies to `form` is the caller's responsibility.
pub fn check_criterion<F: SeparableForm + ?Sized>(form: &F, set: CriterionSet) -> bool {
    first_criterion_failure(form, set).is_none()
}

pub fn first_criterion_failure<F: SeparableForm + ?Sized>(
    form: &F,
    set: CriterionSet,
) -> Option<u64> {
    let max = *set.numbers().last().expect("nonempty");
    let bits = reachable(form, max);
    set.numbers()
        .iter()
        .copied()
        .find(|&n| !bits.contains(n as usize))
}

/// `n` is not of the form `4^a (8b + 7)`.
pub fn is_sum_of_three_squares(n: u64) -> bool {
    if n == 0 {
        return true;
    }
    let mut m = n;
    while m.is_multiple_of(4) {
        m /= 4;
    }
    m % 8 != 7
}

/// The encoded number of norms needed to write every positive integer.
pub fn encoded_norm_count(d: u64) -> Option<u32> {
    if [1, 2, 3, 7, 11].contains(&d) {
        return Some(2);
    }
    match d % 4 {
        1 | 2 if (5..=7).contains(&d) => Some(3),
        1 | 2 if d >= 8 => Some(4),
        3 if (15..=27).contains(&d) => Some(3),
        3 if d >= 28 => Some(4),
        _ => None,
    }
}

/// The smallest `m` with `I_m` universal over `O`, cross-checked: `m` norms
/// cover `1..=10^4` and `m - 1` norms miss some `n <= 100`.
pub fn universal_norm_count(f: &FieldParams) -> Result<u32, Error> {
    let d = f.d();
    let m = encoded_norm_count(d).ok_or(Error::UnsupportedField(d))?;
    let fail = |reason| Error::CrossCheckFailed {
        d,
        count: m,
        reason,
    };
    let covered = universal_up_to(
        &NormSum {
            field: *f,
            copies: m as usize,
        },
        CROSS_CHECK_LIMIT,
    );
    if covered.is_err() {
        return Err(fail("m norms leave a gap below 10^4"));
    }
    let fewer = universal_up_to(
        &NormSum {
            field: *f,
            copies: m as usize - 1,
        },
        100,
    );
    if fewer.is_ok() {
        return Err(fail("m - 1 norms already cover 1..=100"));
    }
    Ok(m)
}

/// `f_d(a1,b1,a2,b2,a3,b3) = value` with `f_d` a sum of three norms of the
/// `(1 + sqrt(-d))/2` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormIdentity {
    pub d: u64,
    pub args: [i64; 6],
    pub expected: u64,
}

impl NormIdentity {
    pub fn evaluate(&self) -> Result<u64, Error> {
        self.args.chunks(2).try_fold(0u64, |acc, ab| {
            let n = norm_form_value(self.d, OmegaBranch::HalfOnePlusSqrtMinusD, ab[0], ab[1])?;
            acc.checked_add(n).ok_or(Error::Overflow)
        })
    }

    pub fn holds(&self) -> bool {
        self.evaluate() == Ok(self.expected)
    }
}

const fn ident(d: u64, args: [i64; 6], expected: u64) -> NormIdentity {
    NormIdentity { d, args, expected }
}

/// Three-norm representations of 7, 15, 23, 31 for `d = 15, 19, 23, 27`.
pub const THREE_NORM_WITNESSES: [NormIdentity; 16] = [
    ident(15, [1, 1, 1, 0, 0, 0], 7),
    ident(15, [2, 1, 1, 0, 2, 0], 15),
    ident(15, [1, 1, 1, 0, 4, 0], 23),
    ident(15, [1, 1, 5, 0, 0, 0], 31),
    ident(19, [1, 1, 0, 0, 0, 0], 7),
    ident(19, [1, 1, 2, 0, 2, 0], 15),
    ident(19, [1, 1, 4, 0, 0, 0], 23),
    ident(19, [5, 0, 1, 0, 0, 1], 31),
    ident(23, [1, 0, 0, 1, 0, 0], 7),
    ident(23, [1, 0, 0, 1, 1, 1], 15),
    ident(23, [1, 0, 0, 1, 4, 0], 23),
    ident(23, [5, 0, 0, 1, 0, 0], 31),
    ident(27, [0, 1, 0, 0, 0, 0], 7),
    ident(27, [0, 1, 2, 0, 2, 0], 15),
    ident(27, [0, 1, 4, 0, 0, 0], 23),
    ident(27, [2, 1, 3, 0, 3, 0], 31),
];

/// Evaluates every witness identity; `(identity, computed value)`.
pub fn three_norm_witnesses() -> Vec<(NormIdentity, Result<u64, Error>)> {
    THREE_NORM_WITNESSES
        .iter()
        .map(|id| (*id, id.evaluate()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::make_field;
    use crate::quadfield::supported_fields;

    fn ternary_mixed(a: (TermKind, u64), b: (TermKind, u64), c: (TermKind, u64)) -> MixedSum {
        MixedSum::new(&[a, b, c])
    }

    #[test]
    fn three_squares_miss_seven() {
        let f = DiagonalForm::new(&[1, 1, 1]);
        assert_eq!(represents_bounded(&f, 7), None);
        assert_eq!(represents_bounded(&f, 0), Some(vec![0, 0, 0]));
        assert!(!check_criterion(&f, CriterionSet::Fifteen));
        assert_eq!(first_criterion_failure(&f, CriterionSet::Fifteen), Some(7));
    }

    #[test]
    fn mixed_sum_witness() {
        use TermKind::*;
        let f = ternary_mixed((Triangular, 2), (Square, 1), (Square, 1));
        let w = represents_bounded(&f, 5).unwrap();
        assert_eq!(w, [0, 1, 2]);
        assert_eq!(
            2 * triangular(w[0] as u64) + (w[1] * w[1] + w[2] * w[2]) as u64,
            5
        );
    }

    #[test]
    fn fifteen_criterion_examples() {
        assert!(check_criterion(
            &DiagonalForm::new(&[1, 1, 1, 1]),
            CriterionSet::Fifteen
        ));
        assert!(check_criterion(
            &DiagonalForm::new(&[1, 1, 1, 5]),
            CriterionSet::Fifteen
        ));
        assert!(check_criterion(
            &DiagonalForm::new(&[1, 1, 1, 6, 6]),
            CriterionSet::Fifteen
        ));
    }

    #[test]
    fn criterion_sets_are_exact() {
        assert_eq!(
            CriterionSet::Fifteen.numbers(),
            [1, 2, 3, 5, 6, 7, 10, 14, 15]
        );
        assert_eq!(CriterionSet::TwoNinety.numbers().len(), 29);
        assert_eq!(
            &CriterionSet::TwoNinety.numbers()[17..],
            [30, 31, 34, 35, 37, 42, 58, 93, 110, 145, 203, 290]
        );
    }

    #[test]
    fn one_one_one_d_against_fifteen() {
        // supported d = 1, 2 mod 4 in 5..=7
        let passing: std::vec::Vec<u64> = supported_fields()
            .map(|f| f.d())
            .filter(|&d| d % 4 != 3 && (5..=7).contains(&d))
            .filter(|&d| check_criterion(&DiagonalForm::new(&[1, 1, 1, d]), CriterionSet::Fifteen))
            .collect();
        assert_eq!(passing, [5, 6]);
    }

    #[test]
    fn three_square_test_agrees_with_search() {
        let f = DiagonalForm::new(&[1, 1, 1]);
        let bits = value_set(&f, 10_000);
        for n in 0..=10_000u64 {
            assert_eq!(is_sum_of_three_squares(n), bits[n as usize], "n={n}");
        }
        assert!(!is_sum_of_three_squares(7));
        assert!(!is_sum_of_three_squares(28));
        assert!(is_sum_of_three_squares(6));
    }

    #[test]
    fn bitset_and_search_agree() {
        use TermKind::*;
        let f = ternary_mixed((Triangular, 2), (Triangular, 1), (Square, 3));
        let bits = value_set(&f, 300);
        for n in 0..=300u64 {
            assert_eq!(
                represents_bounded(&f, n).is_some(),
                bits[n as usize],
                "n={n}"
            );
        }
    }

    #[test]
    fn mixed_sums_universal() {
        use TermKind::*;
        let a = ternary_mixed((Triangular, 2), (Square, 1), (Square, 1));
        assert_eq!(universal_up_to(&a, 10_000), Ok(()));
        let b = ternary_mixed((Triangular, 2), (Triangular, 2), (Square, 1));
        assert_eq!(universal_up_to(&b, 10_000), Ok(()));
        assert_eq!(universal_up_to(&DiagonalForm::new(&[1, 1]), 10_000), Err(3));
    }

    #[test]
    fn sun_polynomial_examples() {
        assert_eq!(sun_polynomial_universal(10_000), Ok(()));
        let w = represents_bounded(&sun_polynomial(), 1).unwrap();
        let v: i64 = w
            .iter()
            .zip([2i64, 3, 3])
            .map(|(x, c)| x * (c * x + 1))
            .sum();
        assert_eq!(v, 1);
        assert_eq!(
            represents_bounded(&sun_polynomial(), 0),
            Some(vec![0, 0, 0])
        );
    }

    #[test]
    fn triangular_identities() {
        for x in 0..=1000u64 {
            assert_eq!(2 * triangular(x), x * x + x);
        }
        for x in -1000i64..0 {
            let neg = (x * (x + 1) / 2) as u64;
            assert_eq!(neg, triangular((-x - 1) as u64));
        }
    }

    #[test]
    fn norm_counts() {
        assert_eq!(universal_norm_count(&make_field(5).unwrap()), Ok(3));
        assert_eq!(universal_norm_count(&make_field(11).unwrap()), Ok(2));
        assert_eq!(universal_norm_count(&make_field(31).unwrap()), Ok(4));
        assert_eq!(encoded_norm_count(19), Some(3));
        assert_eq!(encoded_norm_count(163), Some(4));
    }

    #[test]
    fn witness_identities() {
        let all = three_norm_witnesses();
        assert_eq!(all.len(), 16);
        for (id, got) in all {
            assert_eq!(got, Ok(id.expected), "{id:?}");
        }
        assert_eq!(THREE_NORM_WITNESSES[0].evaluate(), Ok(7));
        assert_eq!(THREE_NORM_WITNESSES[12].evaluate(), Ok(7));
        assert_eq!(THREE_NORM_WITNESSES[7].evaluate(), Ok(31));
    }
}
