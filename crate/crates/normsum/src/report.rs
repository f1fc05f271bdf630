//! Whole-table verification with a per-field worker pool.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use normsum_core::repsearch::SearchConfig;
use normsum_core::verify::{expected_tables, verify_field_with, FieldReport};
use normsum_core::Error;
use serde_json::{json, Value};

use crate::output::Render;

/// A field whose window is too small for its published exception list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowViolation {
    pub d: u64,
    pub largest_exception: u64,
    pub needed: u64,
}

#[derive(Debug)]
pub enum VerifyError {
    Precondition {
        r_max: u64,
        violations: Vec<WindowViolation>,
    },
    Core(Error),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::Precondition { r_max, violations } => {
                write!(
                    f,
                    "WindowTooSmall: r_max={r_max} is below the required window for"
                )?;
                for (i, v) in violations.iter().enumerate() {
                    let sep = if i == 0 { " " } else { ", " };
                    write!(
                        f,
                        "{sep}d={} (largest exception {}, needs {})",
                        v.d, v.largest_exception, v.needed
                    )?;
                }
                Ok(())
            }
            VerifyError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for VerifyError {}

impl From<Error> for VerifyError {
    fn from(e: Error) -> Self {
        VerifyError::Core(e)
    }
}

#[derive(Debug, Clone)]
pub struct DiffReport {
    pub class_number: u8,
    pub r_max: u64,
    pub fields: Vec<FieldReport>,
    pub runtime: Duration,
}

impl DiffReport {
    pub fn matched(&self) -> usize {
        self.fields.iter().filter(|f| f.is_match()).count()
    }

    pub fn all_match(&self) -> bool {
        self.matched() == self.fields.len()
    }
}

/// Checks every field of the given class number over `1..=r_max`.
///
/// All window preconditions are checked before any work starts. `jobs = 0`
/// uses the available parallelism.
pub fn verify_all(class_number: u8, r_max: u64, jobs: usize) -> Result<DiffReport, VerifyError> {
    verify_all_with(class_number, r_max, jobs, &SearchConfig::default())
}

pub fn verify_all_with(
    class_number: u8,
    r_max: u64,
    jobs: usize,
    cfg: &SearchConfig,
) -> Result<DiffReport, VerifyError> {
    let start = Instant::now();
    let tables = expected_tables(class_number)?;
    let violations: Vec<WindowViolation> = tables
        .iter()
        .filter(|t| r_max < t.min_window())
        .map(|t| WindowViolation {
            d: t.d,
            largest_exception: t.largest_exception(),
            needed: t.min_window(),
        })
        .collect();
    if !violations.is_empty() {
        return Err(VerifyError::Precondition { r_max, violations });
    }

    let jobs = match jobs {
        0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
        n => n,
    }
    .min(tables.len());
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<FieldReport, Error>>>> =
        Mutex::new((0..tables.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(t) = tables.get(i) else { break };
                let r = verify_field_with(t.d, r_max, cfg);
                results
                    .lock()
                    .expect("no worker panics while holding the lock")[i] = Some(r);
            });
        }
    });
    let fields = results
        .into_inner()
        .expect("workers finished")
        .into_iter()
        .map(|r| r.expect("every index was claimed"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DiffReport {
        class_number,
        r_max,
        fields,
        runtime: start.elapsed(),
    })
}

pub fn field_json(f: &FieldReport) -> Value {
    let mismatches: Vec<Value> = f
        .exception_mismatches
        .iter()
        .map(|m| {
            json!({
                "class_index": m.class_index,
                "r": m.r,
                "expected_exceptional": m.expected_exceptional,
                "computed_exceptional": m.computed_exceptional,
            })
        })
        .collect();
    json!({
        "d": f.d,
        "class_number": f.class_number,
        "status": if f.is_match() { "match" } else { "mismatch" },
        "k": f.k,
        "g_expected": f.g_expected,
        "g_computed": f.g_computed,
        "g_witness": { "class_index": f.g_witness_class, "r": f.g_witness_r },
        "stable": f.stable,
        "exceptions_match": f.exceptions_match(),
        "exceptions": f.computed_exceptions.iter()
            .map(|(c, e)| json!({ "class_index": c, "r": e }))
            .collect::<Vec<_>>(),
        "mismatches": mismatches,
        "cross_class_disagreements": f.cross_class_disagreements,
    })
}

impl Render for DiffReport {
    fn to_json(&self) -> Value {
        json!({
            "class_number": self.class_number,
            "r_max": self.r_max,
            "matched": self.matched(),
            "total": self.fields.len(),
            "runtime_ms": self.runtime.as_millis() as u64,
            "fields": self.fields.iter().map(field_json).collect::<Vec<_>>(),
        })
    }

    fn headers(&self) -> Vec<&'static str> {
        vec![
            "d",
            "class",
            "g_expected",
            "g_computed",
            "exceptions_match",
            "stable",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.fields
            .iter()
            .map(|f| {
                vec![
                    f.d.to_string(),
                    f.class_number.to_string(),
                    f.g_expected.to_string(),
                    f.g_computed.to_string(),
                    f.exceptions_match().to_string(),
                    f.stable.to_string(),
                ]
            })
            .collect()
    }
}
