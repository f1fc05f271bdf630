//! Representability of `U v^r` by `I_m`, minimum `m`, and certificates.
//!
//! `U v^r -> I_m` holds exactly when `r * k` is a sum of `m` norms `N(gamma)`
//! of elements satisfying the class congruence. All searches below work on
//! that integer target. The set of admissible norms is materialized once by
//! [`enumerate_norm_values`]; minimum counts come from an unbounded
//! coin-change table over every target up to the bound, so the answer
//! `Unrepresentable` is exact, not a search timeout.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::certcheck::{self, CertificateFault};
use crate::classdata::{class_rep, class_reps, congruence_for, IdealClassRep};
use crate::quadfield::{FieldParams, OmegaBranch, RingElement};
use crate::Error;

/// Default largest DP target `r * k`.
pub const DEFAULT_DP_CAP: u64 = 10_000_000;

/// Default verification window.
pub const DEFAULT_R_MAX: u64 = 300;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub dp_cap: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            dp_cap: DEFAULT_DP_CAP,
        }
    }
}

/// The lattice `U_j v^r` with `h(v^r) = r / k_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeQuery {
    pub field: FieldParams,
    pub class_index: usize,
    pub r: u64,
}

impl LatticeQuery {
    pub fn new(field: FieldParams, class_index: usize, r: u64) -> Result<Self, Error> {
        if r == 0 {
            return Err(Error::InvalidArgument("r must be positive"));
        }
        class_rep(&field, class_index)?;
        Ok(LatticeQuery {
            field,
            class_index,
            r,
        })
    }

    pub fn rep(&self) -> IdealClassRep {
        class_rep(&self.field, self.class_index).expect("validated in new")
    }

    /// The integer `r * k` that the norms must sum to.
    pub fn target(&self) -> Result<u64, Error> {
        self.r.checked_mul(self.rep().k).ok_or(Error::Overflow)
    }
}

/// Every positive norm `<= bound` attained by an element obeying the class
/// congruence, ascending, each with one canonical witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormValueSet {
    pub k: u64,
    pub bound: u64,
    pub values: Vec<u64>,
    pub witnesses: Vec<RingElement>,
}

impl NormValueSet {
    pub fn witness_for(&self, value: u64) -> Option<RingElement> {
        self.values
            .binary_search(&value)
            .ok()
            .map(|i| self.witnesses[i])
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

// Smaller |b|, then smaller |a|, then nonnegative coordinates first.
fn witness_key(e: &RingElement) -> (u64, u64, bool, bool) {
    (e.b.unsigned_abs(), e.a.unsigned_abs(), e.a < 0, e.b < 0)
}

pub fn enumerate_norm_values(
    f: &FieldParams,
    rep: &IdealClassRep,
    bound: u64,
) -> Result<NormValueSet, Error> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be positive"));
    }
    let cond = congruence_for(f, rep);
    let fast = cond.simplified();
    let admissible = |a: i64, b: i64| match fast {
        Some(lin) => lin.holds(a, b),
        None => cond.holds(a, b),
    };

    let mut best: BTreeMap<u64, RingElement> = BTreeMap::new();
    let mut offer = |a: i64, b: i64| -> Result<(), Error> {
        if (a, b) == (0, 0) || !admissible(a, b) {
            return Ok(());
        }
        let e = RingElement::new(a, b);
        let n = f.norm(e)?;
        if n == 0 || n > bound {
            return Ok(());
        }
        best.entry(n)
            .and_modify(|w| {
                if witness_key(&e) < witness_key(w) {
                    *w = e;
                }
            })
            .or_insert(e);
        Ok(())
    };

    let d = f.d();
    match f.branch() {
        OmegaBranch::SqrtMinusD => {
            let a_max = to_i64(bound.isqrt())?;
            let b_max = to_i64((bound / d).isqrt())?;
            for b in -b_max..=b_max {
                for a in -a_max..=a_max {
                    offer(a, b)?;
                }
            }
        }
        OmegaBranch::HalfOnePlusSqrtMinusD => {
            // 4 N = (2a + b)^2 + d b^2
            let four_b = bound.checked_mul(4).ok_or(Error::Overflow)?;
            let b_max = to_i64((four_b / d).isqrt())?;
            let u_max = to_i64(four_b.isqrt())?;
            for b in -b_max..=b_max {
                let lo = (-u_max - b).div_euclid(2);
                let hi = (u_max - b).div_euclid(2) + 1;
                for a in lo..=hi {
                    offer(a, b)?;
                }
            }
        }
    }

    let (values, witnesses) = best.into_iter().unzip();
    Ok(NormValueSet {
        k: rep.k,
        bound,
        values,
        witnesses,
    })
}

fn to_i64(x: u64) -> Result<i64, Error> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// Minimum number of summands, or proof that none suffices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinTerms {
    Representable(u32),
    Unrepresentable,
}

impl MinTerms {
    pub fn count(&self) -> Option<u32> {
        match self {
            MinTerms::Representable(m) => Some(*m),
            MinTerms::Unrepresentable => None,
        }
    }

    pub fn is_representable(&self) -> bool {
        matches!(self, MinTerms::Representable(_))
    }
}

const UNREACHED: u32 = u32::MAX;

/// Minimum-summand table for every target `0..=max_target`.
#[derive(Debug, Clone)]
pub struct SummandTable {
    counts: Vec<u32>,
}

impl SummandTable {
    pub fn build(values: &[u64], max_target: u64) -> Self {
        let len = max_target as usize + 1;
        let mut counts = vec![UNREACHED; len];
        counts[0] = 0;
        let values: Vec<usize> = values
            .iter()
            .map(|&v| v as usize)
            .filter(|&v| v < len)
            .collect();
        for t in 1..len {
            let mut best = UNREACHED;
            for &v in values.iter().take_while(|&&v| v <= t) {
                let prev = counts[t - v];
                if prev != UNREACHED && prev + 1 < best {
                    best = prev + 1;
                }
            }
            counts[t] = best;
        }
        SummandTable { counts }
    }

    pub fn max_target(&self) -> u64 {
        self.counts.len() as u64 - 1
    }

    /// Panics if `target` is beyond the table.
    pub fn min_terms(&self, target: u64) -> MinTerms {
        match self.counts[target as usize] {
            UNREACHED => MinTerms::Unrepresentable,
            m => MinTerms::Representable(m),
        }
    }
}

fn check_cap(target: u64, cfg: &SearchConfig) -> Result<(), Error> {
    if target > cfg.dp_cap {
        return Err(Error::TargetTooLarge {
            target,
            cap: cfg.dp_cap,
        });
    }
    Ok(())
}

pub fn min_terms(q: &LatticeQuery) -> Result<MinTerms, Error> {
    min_terms_with(q, &SearchConfig::default())
}

pub fn min_terms_with(q: &LatticeQuery, cfg: &SearchConfig) -> Result<MinTerms, Error> {
    let target = q.target()?;
    check_cap(target, cfg)?;
    let values = enumerate_norm_values(&q.field, &q.rep(), target)?;
    Ok(SummandTable::build(&values.values, target).min_terms(target))
}

/// Minimum counts for one ideal class and every `r` in `1..=r_max`.
#[derive(Debug, Clone)]
pub struct ClassProfile {
    pub field: FieldParams,
    pub rep: IdealClassRep,
    pub r_max: u64,
    pub values: NormValueSet,
    table: SummandTable,
}

impl ClassProfile {
    pub fn compute(
        field: &FieldParams,
        rep: &IdealClassRep,
        r_max: u64,
        cfg: &SearchConfig,
    ) -> Result<Self, Error> {
        if r_max == 0 {
            return Err(Error::InvalidArgument("r_max must be positive"));
        }
        let max_target = r_max.checked_mul(rep.k).ok_or(Error::Overflow)?;
        check_cap(max_target, cfg)?;
        let values = enumerate_norm_values(field, rep, max_target)?;
        let table = SummandTable::build(&values.values, max_target);
        Ok(ClassProfile {
            field: *field,
            rep: *rep,
            r_max,
            values,
            table,
        })
    }

    /// Panics unless `1 <= r <= r_max`.
    pub fn min_terms(&self, r: u64) -> MinTerms {
        assert!(
            (1..=self.r_max).contains(&r),
            "r={r} outside 1..={}",
            self.r_max
        );
        self.table.min_terms(r * self.rep.k)
    }

    pub fn exceptions(&self) -> Vec<u64> {
        (1..=self.r_max)
            .filter(|&r| !self.min_terms(r).is_representable())
            .collect()
    }

    /// Largest minimum count over representable `r <= up_to`, with the first
    /// `r` attaining it.
    pub fn max_min_terms(&self, up_to: u64) -> Option<(u32, u64)> {
        let mut best: Option<(u32, u64)> = None;
        for r in 1..=up_to.min(self.r_max) {
            if let Some(m) = self.min_terms(r).count() {
                if best.is_none_or(|(b, _)| m > b) {
                    best = Some((m, r));
                }
            }
        }
        best
    }
}

/// An explicit representation `r * k = sum N(gamma_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepCertificate {
    pub query: LatticeQuery,
    pub gammas: Vec<RingElement>,
}

impl RepCertificate {
    pub fn m(&self) -> usize {
        self.gammas.len()
    }

    /// Re-validates through [`certcheck`], which shares no code with the search.
    pub fn check(&self) -> Result<u64, CertificateFault> {
        let rep = self.query.rep();
        let gammas: Vec<(i64, i64)> = self.gammas.iter().map(|g| (g.a, g.b)).collect();
        certcheck::check_representation(
            self.query.field.d(),
            rep.k,
            (rep.s, rep.t),
            self.query.r,
            &gammas,
        )
    }
}

/// The lexicographically least certificate with exactly `m` summands, if any.
pub fn find_certificate(q: &LatticeQuery, m: usize) -> Result<Option<RepCertificate>, Error> {
    find_certificate_with(q, m, &SearchConfig::default())
}

pub fn find_certificate_with(
    q: &LatticeQuery,
    m: usize,
    cfg: &SearchConfig,
) -> Result<Option<RepCertificate>, Error> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive"));
    }
    let target = q.target()?;
    check_cap(target, cfg)?;
    let values = enumerate_norm_values(&q.field, &q.rep(), target)?;
    let Some(&smallest) = values.values.first() else {
        return Ok(None);
    };
    if (m as u64).saturating_mul(smallest) > target {
        return Ok(None);
    }

    // reach[j] = targets that are sums of exactly j admissible norms
    let len = target as usize + 1;
    let shifts: Vec<usize> = values.values.iter().map(|&v| v as usize).collect();
    let mut reach = Vec::with_capacity(m + 1);
    let mut zero = BitSet::new(len);
    zero.insert(0);
    reach.push(zero);
    for j in 1..=m {
        let next = reach[j - 1].sumset(&shifts);
        reach.push(next);
    }
    if !reach[m].contains(target as usize) {
        return Ok(None);
    }

    let mut remaining = target as usize;
    let mut gammas = Vec::with_capacity(m);
    for slot in (0..m).rev() {
        let v = shifts
            .iter()
            .copied()
            .find(|&v| v <= remaining && reach[slot].contains(remaining - v))
            .expect("reachability table guarantees a summand");
        gammas.push(values.witness_for(v as u64).expect("value has a witness"));
        remaining -= v;
    }
    debug_assert_eq!(remaining, 0);
    Ok(Some(RepCertificate { query: *q, gammas }))
}

/// Every `r <= r_max` for which no `I_m` represents `U_j v^r`.
pub fn exceptional_set(f: &FieldParams, class_index: usize, r_max: u64) -> Result<Vec<u64>, Error> {
    let rep = class_rep(f, class_index)?;
    Ok(ClassProfile::compute(f, &rep, r_max, &SearchConfig::default())?.exceptions())
}

/// `g_d(1)` over the window `r <= r_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GInvariant {
    pub g: u32,
    pub witness: LatticeQuery,
    /// The maximum is already attained with `r <= r_max / 2`.
    pub stable: bool,
}

/// Smallest `r_max` accepted by [`g_invariant`]: two full residue cycles of
/// the largest `k`.
pub fn min_window(f: &FieldParams) -> u64 {
    2 * class_reps(f).iter().map(|r| r.k).max().unwrap_or(1)
}

pub fn g_invariant(f: &FieldParams, r_max: u64) -> Result<GInvariant, Error> {
    g_invariant_with(f, r_max, &SearchConfig::default())
}

pub fn g_invariant_with(
    f: &FieldParams,
    r_max: u64,
    cfg: &SearchConfig,
) -> Result<GInvariant, Error> {
    let profiles = class_reps(f)
        .iter()
        .map(|rep| ClassProfile::compute(f, rep, r_max, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    g_from_profiles(f, &profiles, r_max)
}

pub fn g_from_profiles(
    f: &FieldParams,
    profiles: &[ClassProfile],
    r_max: u64,
) -> Result<GInvariant, Error> {
    let needed = min_window(f);
    if r_max < needed {
        return Err(Error::WindowTooSmall {
            d: f.d(),
            needed,
            got: r_max,
        });
    }
    let mut best: Option<(u32, usize, u64)> = None;
    let mut lower_half = 0u32;
    for p in profiles {
        if let Some((m, r)) = p.max_min_terms(r_max) {
            if best.is_none_or(|(b, _, _)| m > b) {
                best = Some((m, p.rep.class_index, r));
            }
        }
        if let Some((m, _)) = p.max_min_terms(r_max / 2) {
            lower_half = lower_half.max(m);
        }
    }
    let (g, class_index, r) =
        best.ok_or(Error::InvalidArgument("no representable lattice in window"))?;
    Ok(GInvariant {
        g,
        witness: LatticeQuery {
            field: *f,
            class_index,
            r,
        },
        stable: lower_half == g,
    })
}

/// `(a, b) -> (a + b, -b)`: swaps the two non-principal classes of a
/// class-number-3 field while preserving the norm.
pub fn cross_class_map(f: &FieldParams, e: RingElement) -> Result<RingElement, Error> {
    if f.branch() != OmegaBranch::HalfOnePlusSqrtMinusD {
        return Err(Error::WrongBranch(f.d()));
    }
    let a = e.a.checked_add(e.b).ok_or(Error::Overflow)?;
    let b = e.b.checked_neg().ok_or(Error::Overflow)?;
    Ok(RingElement::new(a, b))
}
