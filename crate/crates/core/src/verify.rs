//! Published results for class numbers 2 and 3, and comparison against the
//! values recomputed by [`crate::repsearch`].
//!
//! Each row stores the smallest representable `r` ("threshold") and the
//! finite list of exceptions at or above it, exactly as the published rows
//! state them. Every `r` below the threshold is also exceptional.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::classdata::class_reps;
use crate::quadfield::FieldParams;
use crate::repsearch::{g_from_profiles, ClassProfile, MinTerms, SearchConfig};
use crate::{make_field, Error};

/// One row of the published tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedTable {
    pub d: u64,
    pub class_number: u8,
    pub k: u64,
    pub expected_g: u32,
    pub threshold: u64,
    /// Exceptions `>= threshold`.
    pub listed: &'static [u64],
}

impl ExpectedTable {
    /// All exceptional `r`: `1..threshold` followed by the listed values.
    pub fn expected_exceptions(&self) -> Vec<u64> {
        (1..self.threshold)
            .chain(self.listed.iter().copied())
            .collect()
    }

    pub fn largest_exception(&self) -> u64 {
        self.listed
            .last()
            .copied()
            .unwrap_or(self.threshold.saturating_sub(1))
    }

    /// Smallest `r_max` for which [`verify_field`] accepts this row.
    pub fn min_window(&self) -> u64 {
        self.largest_exception() + 2 * self.k
    }

    /// The row in the form `r >= 7 and r != 8,9,10`.
    pub fn condition_string(&self) -> String {
        let mut s = format!("r\u{2265}{}", self.threshold);
        if !self.listed.is_empty() {
            let list: Vec<String> = self.listed.iter().map(|r| format!("{r}")).collect();
            s.push_str(&format!(" and r\u{2260}{}", list.join(",")));
        }
        s
    }
}

const fn row(
    d: u64,
    class_number: u8,
    k: u64,
    expected_g: u32,
    threshold: u64,
    listed: &'static [u64],
) -> ExpectedTable {
    ExpectedTable {
        d,
        class_number,
        k,
        expected_g,
        threshold,
        listed,
    }
}

/// Class number 2.
pub const EXPECTED_CLASS_TWO: [ExpectedTable; 18] = [
    row(5, 2, 2, 3, 2, &[]),
    row(6, 2, 2, 3, 2, &[]),
    row(10, 2, 2, 4, 2, &[3]),
    row(13, 2, 2, 4, 2, &[3, 5]),
    row(15, 2, 2, 3, 2, &[]),
    row(22, 2, 2, 4, 2, &[3, 5, 7, 9]),
    row(35, 2, 5, 4, 3, &[4]),
    row(37, 2, 2, 4, 2, &[3, 5, 7, 9, 11, 13, 15, 17]),
    row(51, 2, 5, 4, 3, &[4, 7]),
    row(
        58,
        2,
        2,
        4,
        2,
        &[3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27],
    ),
    row(91, 2, 7, 4, 5, &[6, 8, 9, 11, 16]),
    row(115, 2, 5, 4, 5, &[6, 8, 9, 11, 13, 16, 18]),
    row(123, 2, 3, 4, 3, &[4, 5, 7, 8, 10, 13, 16, 19]),
    row(
        187,
        2,
        7,
        4,
        7,
        &[8, 9, 10, 12, 13, 15, 16, 19, 20, 23, 26, 27, 30, 37],
    ),
    row(
        235,
        2,
        5,
        4,
        5,
        &[
            6, 7, 8, 9, 11, 12, 14, 16, 17, 19, 21, 22, 24, 27, 29, 32, 34, 37, 42,
        ],
    ),
    row(
        267,
        2,
        3,
        4,
        3,
        &[
            4, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19, 20, 22, 25, 28, 31, 34, 37, 40, 43,
        ],
    ),
    row(
        403,
        2,
        11,
        4,
        11,
        &[
            12, 14, 15, 16, 17, 18, 19, 20, 21, 23, 25, 27, 28, 29, 30, 32, 34, 36, 38, 40, 41, 43,
            45, 47, 49, 51, 54, 56, 58, 60, 67, 69, 71, 80, 82,
        ],
    ),
    row(
        427,
        2,
        7,
        4,
        7,
        &[
            8, 9, 10, 11, 12, 13, 15, 16, 18, 19, 20, 22, 23, 25, 26, 27, 29, 30, 32, 33, 36, 37,
            39, 40, 43, 44, 46, 47, 50, 53, 54, 57, 60, 64, 67, 71, 74, 81, 88,
        ],
    ),
];

/// Class number 3; the list applies to both non-principal classes.
pub const EXPECTED_CLASS_THREE: [ExpectedTable; 16] = [
    row(23, 3, 2, 3, 2, &[]),
    row(31, 3, 2, 4, 2, &[3]),
    row(59, 3, 3, 4, 3, &[4]),
    row(83, 3, 3, 4, 3, &[4, 5, 8]),
    row(107, 3, 3, 4, 3, &[4, 5, 7, 8, 10]),
    row(139, 3, 5, 4, 5, &[6, 8, 9]),
    row(211, 3, 5, 4, 5, &[6, 7, 8, 9, 12, 14, 17]),
    row(283, 3, 7, 4, 7, &[8, 9, 10, 12, 15, 16, 17, 19]),
    row(307, 3, 7, 4, 7, &[8, 9, 10, 12, 13, 15, 16, 20, 23, 27]),
    row(
        331,
        3,
        5,
        4,
        5,
        &[6, 7, 8, 9, 11, 12, 13, 14, 16, 18, 21, 23, 26, 28, 33],
    ),
    row(
        379,
        3,
        5,
        4,
        5,
        &[
            6, 7, 8, 9, 11, 12, 13, 14, 16, 17, 18, 21, 22, 26, 27, 31, 32, 36,
        ],
    ),
    row(
        499,
        3,
        5,
        4,
        5,
        &[
            6, 7, 8, 9, 11, 12, 13, 14, 16, 17, 18, 19, 21, 22, 23, 24, 26, 27, 28, 32, 33, 37, 38,
            42,
        ],
    ),
    row(
        547,
        3,
        11,
        4,
        11,
        &[12, 14, 15, 16, 17, 18, 20, 21, 23, 25, 27, 28, 31, 34, 36],
    ),
    row(
        643,
        3,
        7,
        4,
        7,
        &[
            8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20, 22, 24, 25, 26, 27, 32, 33, 34, 39, 40,
            41, 47, 48, 55,
        ],
    ),
    row(
        883,
        3,
        13,
        4,
        13,
        &[
            14, 15, 16, 18, 19, 20, 21, 22, 23, 24, 25, 27, 28, 32, 33, 35, 36, 37, 38, 40, 41, 45,
            49, 50, 53, 54, 66,
        ],
    ),
    row(
        907,
        3,
        13,
        5,
        13,
        &[
            14, 15, 16, 17, 18, 20, 21, 22, 24, 25, 27, 28, 29, 30, 31, 33, 34, 35, 37, 40, 43, 44,
            47, 48, 50, 56, 63,
        ],
    ),
];

/// The published row for a class-number-2 or -3 field.
pub fn expected_table(d: u64) -> Result<ExpectedTable, Error> {
    let f = make_field(d)?;
    EXPECTED_CLASS_TWO
        .iter()
        .chain(EXPECTED_CLASS_THREE.iter())
        .find(|row| row.d == d)
        .copied()
        .ok_or(Error::InvalidArgument(
            "class number 1 fields have no exceptional table",
        ))
        .inspect(|row| debug_assert_eq!(row.class_number, f.class_number()))
}

pub fn expected_tables(class_number: u8) -> Result<&'static [ExpectedTable], Error> {
    match class_number {
        2 => Ok(&EXPECTED_CLASS_TWO),
        3 => Ok(&EXPECTED_CLASS_THREE),
        _ => Err(Error::InvalidArgument("class number must be 2 or 3")),
    }
}

/// An `r` on which the computed and published exceptional sets disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExceptionMismatch {
    pub class_index: usize,
    pub r: u64,
    pub expected_exceptional: bool,
    pub computed_exceptional: bool,
}

/// Outcome of checking one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldReport {
    pub d: u64,
    pub class_number: u8,
    pub k: u64,
    pub r_max: u64,
    pub g_expected: u32,
    pub g_computed: u32,
    pub g_witness_class: usize,
    pub g_witness_r: u64,
    pub stable: bool,
    /// Computed exceptional set per non-principal class, class index ascending.
    pub computed_exceptions: Vec<(usize, Vec<u64>)>,
    pub exception_mismatches: Vec<ExceptionMismatch>,
    /// `r` where the two non-principal classes of a class-number-3 field
    /// need different numbers of summands.
    pub cross_class_disagreements: Vec<u64>,
}

impl FieldReport {
    pub fn exceptions_match(&self) -> bool {
        self.exception_mismatches.is_empty()
    }

    pub fn is_match(&self) -> bool {
        self.exceptions_match()
            && self.g_expected == self.g_computed
            && self.stable
            && self.cross_class_disagreements.is_empty()
    }
}

/// Recomputes one field over `1..=r_max` and diffs it against its row.
pub fn verify_field(d: u64, r_max: u64) -> Result<FieldReport, Error> {
    verify_field_with(d, r_max, &SearchConfig::default())
}

pub fn verify_field_with(d: u64, r_max: u64, cfg: &SearchConfig) -> Result<FieldReport, Error> {
    let table = expected_table(d)?;
    let needed = table.min_window();
    if r_max < needed {
        return Err(Error::WindowTooSmall {
            d,
            needed,
            got: r_max,
        });
    }
    let f: FieldParams = make_field(d)?;
    let profiles = class_reps(&f)
        .iter()
        .map(|rep| ClassProfile::compute(&f, rep, r_max, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let g = g_from_profiles(&f, &profiles, r_max)?;

    let expected = table.expected_exceptions();
    let mut computed_exceptions = Vec::new();
    let mut exception_mismatches = Vec::new();
    for p in profiles.iter().filter(|p| !p.rep.is_principal()) {
        let got = p.exceptions();
        for r in 1..=r_max {
            let e = expected.binary_search(&r).is_ok();
            let c = got.binary_search(&r).is_ok();
            if e != c {
                exception_mismatches.push(ExceptionMismatch {
                    class_index: p.rep.class_index,
                    r,
                    expected_exceptional: e,
                    computed_exceptional: c,
                });
            }
        }
        computed_exceptions.push((p.rep.class_index, got));
    }
    // principal class: every r must be representable
    for r in profiles[0].exceptions() {
        exception_mismatches.push(ExceptionMismatch {
            class_index: 1,
            r,
            expected_exceptional: false,
            computed_exceptional: true,
        });
    }

    let cross_class_disagreements = if profiles.len() == 3 {
        (1..=r_max)
            .filter(|&r| profiles[1].min_terms(r) != profiles[2].min_terms(r))
            .collect()
    } else {
        Vec::new()
    };

    Ok(FieldReport {
        d,
        class_number: f.class_number(),
        k: table.k,
        r_max,
        g_expected: table.expected_g,
        g_computed: g.g,
        g_witness_class: g.witness.class_index,
        g_witness_r: g.witness.r,
        stable: g.stable,
        computed_exceptions,
        exception_mismatches,
        cross_class_disagreements,
    })
}

/// Minimum counts per `r` for one class, used by cross-class comparisons.
pub fn min_terms_series(d: u64, class_index: usize, r_max: u64) -> Result<Vec<MinTerms>, Error> {
    let f = make_field(d)?;
    let rep = crate::classdata::class_rep(&f, class_index)?;
    let p = ClassProfile::compute(&f, &rep, r_max, &SearchConfig::default())?;
    Ok((1..=r_max).map(|r| p.min_terms(r)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classdata::class_rep;

    #[test]
    fn rows_agree_with_class_data() {
        for row in EXPECTED_CLASS_TWO.iter().chain(EXPECTED_CLASS_THREE.iter()) {
            let f = make_field(row.d).unwrap();
            assert_eq!(f.class_number(), row.class_number);
            assert_eq!(class_rep(&f, 2).unwrap().k, row.k, "d={}", row.d);
            assert!(matches!(row.expected_g, 3..=5));
            assert!(row.listed.windows(2).all(|w| w[0] < w[1]));
            assert!(row.listed.iter().all(|&r| r > row.threshold));
            // threshold is the first representable r; r = k always is
            assert!(row.threshold <= row.k);
        }
    }

    #[test]
    fn transcription_counts() {
        let count = |d| expected_table(d).unwrap().listed.len();
        assert_eq!(count(403), 35);
        assert_eq!(count(427), 39);
        assert_eq!(count(883), 27);
        assert_eq!(count(907), 27);
        assert_eq!(count(547), 15);
        assert_eq!(count(187), 14);
    }

    #[test]
    fn rows_render_like_the_published_text() {
        let s = |d| expected_table(d).unwrap().condition_string();
        assert_eq!(s(5), "r≥2");
        assert_eq!(s(13), "r≥2 and r≠3,5");
        assert_eq!(s(35), "r≥3 and r≠4");
        assert_eq!(s(187), "r≥7 and r≠8,9,10,12,13,15,16,19,20,23,26,27,30,37");
        assert_eq!(
            s(403),
            "r≥11 and r≠12,14,15,16,17,18,19,20,21,23,25,27,28,29,30,32,34,36,38,40,41,43,45,47,49,51,54,56,58,60,67,69,71,80,82"
        );
        assert_eq!(
            s(907),
            "r≥13 and r≠14,15,16,17,18,20,21,22,24,25,27,28,29,30,31,33,34,35,37,40,43,44,47,48,50,56,63"
        );
        assert_eq!(
            s(547),
            "r≥11 and r≠12,14,15,16,17,18,20,21,23,25,27,28,31,34,36"
        );
    }

    #[test]
    fn expected_table_examples() {
        let t = expected_table(13).unwrap();
        assert_eq!(
            (t.threshold, t.listed, t.expected_g),
            (2, &[3u64, 5][..], 4)
        );
        assert_eq!(expected_table(907).unwrap().expected_g, 5);
        assert!(expected_table(43).is_err());
        assert!(expected_table(21).is_err());
    }

    #[test]
    fn window_guard() {
        assert!(matches!(
            verify_field(403, 50),
            Err(Error::WindowTooSmall { d: 403, .. })
        ));
    }

    #[test]
    fn single_fields_match() {
        for d in [5, 403, 907] {
            let rep = verify_field(d, 300).unwrap();
            assert!(rep.is_match(), "{rep:?}");
        }
    }
}
