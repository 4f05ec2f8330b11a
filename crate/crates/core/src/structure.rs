//! Long-run structure of threshold sumsets.
//!
//! For `k >= 2` and any `t >= 1` there is a fold threshold
//! `h_t = (k-1)(t*a_max - 1)*a_max + 1` past which `(hA)^(t)` decomposes as
//!
//! ```text
//! (hA)^(t) = C_t  ∪  [c_t, h*a_max - d_t]  ∪  (h*a_max - D_t)
//! ```
//!
//! with fringes `C_t`, `D_t` and cut points `c_t`, `d_t` that do not depend
//! on `h`. This module computes the threshold ([`threshold_bounds`]),
//! extracts the fringes at `h_t` ([`extract_fringes`]), predicts and
//! verifies the decomposition across fold ranges ([`predict_sumset`],
//! [`verify_structure`]), probes how early the decomposition really kicks
//! in ([`empirical_onset`]), checks the two supporting lemmas, constructs
//! explicit multi-representation witnesses ([`construct_witnesses`]), and
//! derives generalized Frobenius numbers `FN_t(A) = c_t - 1`.

use serde::{Deserialize, Serialize};

use crate::bits::DenseBits;
use crate::counting::{rep_count_table, table_cols, CountMode, FoldSweep, ThresholdSumset};
use crate::error::{Error, Result};
use crate::sets::NormalizedSet;

/// The stabilization threshold `h_t` and the a-priori fringe widths
/// `c'_t`, `d'_t` guaranteed by the interval lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThresholdBounds {
    t: u32,
    h_t: i64,
    c_prime_t: i64,
    d_prime_t: i64,
}

impl ThresholdBounds {
    pub fn t(&self) -> u32 {
        self.t
    }

    /// `h_t = (k-1)(t*a_max - 1)*a_max + 1`.
    pub fn h_t(&self) -> i64 {
        self.h_t
    }

    /// `c'_t = (t*a_max - 1) * (a_1 + ... + a_{k-1})`.
    pub fn c_prime_t(&self) -> i64 {
        self.c_prime_t
    }

    /// `d'_t = (k-1)(t*a_max - 1)*a_max = h_t - 1`.
    pub fn d_prime_t(&self) -> i64 {
        self.d_prime_t
    }
}

/// Evaluate the three formulas without the `k >= 2` gate; the `k = 1`
/// instance is meaningful only for `t = 1`, which the callers enforce.
pub(crate) fn bounds_for(set: &NormalizedSet, t: u32) -> Result<ThresholdBounds> {
    if t == 0 {
        return Err(Error::ZeroThreshold);
    }
    let overflow = Error::Overflow("threshold bound formulas");
    let a_max = set.a_max();
    let k = set.k() as i64;
    let m = (t as i64)
        .checked_mul(a_max)
        .and_then(|x| x.checked_sub(1))
        .ok_or(overflow.clone())?;
    let d_prime_t = (k - 1)
        .checked_mul(m)
        .and_then(|x| x.checked_mul(a_max))
        .ok_or(overflow.clone())?;
    let h_t = d_prime_t.checked_add(1).ok_or(overflow.clone())?;
    let interior_sum = set
        .interior()
        .iter()
        .try_fold(0i64, |acc, &a| acc.checked_add(a))
        .ok_or(overflow.clone())?;
    let c_prime_t = m.checked_mul(interior_sum).ok_or(overflow)?;
    Ok(ThresholdBounds {
        t,
        h_t,
        c_prime_t,
        d_prime_t,
    })
}

/// Compute `h_t`, `c'_t`, `d'_t` for a set with `k >= 2`.
pub fn threshold_bounds(set: &NormalizedSet, t: u32) -> Result<ThresholdBounds> {
    if set.k() == 1 {
        return Err(Error::PairSetUnsupported);
    }
    bounds_for(set, t)
}

/// The h-independent decomposition data: fringes `C_t`, `D_t` and cut
/// points `c_t`, `d_t`, extracted at fold `h_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FringeStructure {
    pub(crate) set: NormalizedSet,
    pub(crate) bounds: ThresholdBounds,
    pub(crate) c_t: i64,
    pub(crate) d_t: i64,
    pub(crate) c_set: Vec<i64>,
    pub(crate) d_set: Vec<i64>,
}

impl FringeStructure {
    pub fn set(&self) -> &NormalizedSet {
        &self.set
    }

    pub fn t(&self) -> u32 {
        self.bounds.t
    }

    pub fn bounds(&self) -> &ThresholdBounds {
        &self.bounds
    }

    /// Start of the central interval; `FN_t(A) = c_t - 1`.
    pub fn c_t(&self) -> i64 {
        self.c_t
    }

    /// Reflected end of the central interval: it stops at `h*a_max - d_t`.
    pub fn d_t(&self) -> i64 {
        self.d_t
    }

    /// The initial fringe `C_t ⊆ [0, c_t - 2]`, sorted ascending.
    pub fn c_set(&self) -> &[i64] {
        &self.c_set
    }

    /// The terminal fringe `D_t ⊆ [0, d_t - 2]` (as offsets from `h*a_max`),
    /// sorted ascending.
    pub fn d_set(&self) -> &[i64] {
        &self.d_set
    }

    /// Decomposition membership of `n` at a fold with top element `n_max`.
    fn predicts(&self, n: i64, n_max: i64) -> bool {
        (n >= self.c_t && n <= n_max - self.d_t)
            || self.c_set.binary_search(&n).is_ok()
            || self.d_set.binary_search(&(n_max - n)).is_ok()
    }
}

/// Result of fringe extraction: either a genuine structure, or the one
/// degenerate case `A = {0, 1}` with `t >= 2`, where `(hA)^(t)` is empty
/// for every fold because each count is exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FringeOutcome {
    Structure(FringeStructure),
    EmptyForAllFolds { set: NormalizedSet, t: u32 },
}

impl FringeOutcome {
    pub fn structure(&self) -> Option<&FringeStructure> {
        match self {
            FringeOutcome::Structure(f) => Some(f),
            FringeOutcome::EmptyForAllFolds { .. } => None,
        }
    }

    /// Unwrap the structure, turning the degenerate case into an error.
    pub fn into_structure(self) -> Result<FringeStructure> {
        match self {
            FringeOutcome::Structure(f) => Ok(f),
            FringeOutcome::EmptyForAllFolds { t, .. } => Err(Error::EmptyForAllFolds { t }),
        }
    }
}

fn fold_from_i64(h_t: i64, a_max: i64) -> Result<u32> {
    u32::try_from(h_t).map_err(|_| Error::RangeTooLarge {
        h: h_t as u64,
        a_max,
    })
}

/// Closed-form outcome for `A = {0, 1}` (`k = 1`): `hA = [0, h]` with every
/// count exactly 1, so `t = 1` yields the trivial full-interval structure
/// and `t >= 2` yields the empty set at every fold.
fn pair_set_outcome(set: &NormalizedSet, t: u32) -> Result<FringeOutcome> {
    if t == 1 {
        Ok(FringeOutcome::Structure(FringeStructure {
            set: set.clone(),
            bounds: bounds_for(set, 1)?,
            c_t: 0,
            d_t: 0,
            c_set: Vec::new(),
            d_set: Vec::new(),
        }))
    } else {
        Ok(FringeOutcome::EmptyForAllFolds {
            set: set.clone(),
            t,
        })
    }
}

/// Minimize the cut points and collect the fringes from the capped count
/// table of `(hA)^(t)` at `h = h_t`.
fn fringe_from_counts(
    set: NormalizedSet,
    bounds: ThresholdBounds,
    counts: &[u32],
    h: u32,
) -> Result<FringeStructure> {
    let t = bounds.t;
    let n_max = (counts.len() - 1) as i64;
    let member = |n: i64| counts[n as usize] >= t;
    let lo = bounds.c_prime_t;
    let hi = n_max - bounds.d_prime_t;
    debug_assert!(lo <= hi, "the guaranteed interval is nonempty at h_t");
    for n in lo..=hi {
        if !member(n) {
            return Err(Error::ContainmentFalsified { h, lo, hi, n });
        }
    }
    let mut c_t = lo;
    while c_t > 0 && member(c_t - 1) {
        c_t -= 1;
    }
    let mut d_t = bounds.d_prime_t;
    while d_t > 0 && member(n_max - d_t + 1) {
        d_t -= 1;
    }
    let c_set: Vec<i64> = (0..c_t).filter(|&n| member(n)).collect();
    let d_set: Vec<i64> = (0..d_t).filter(|&dd| member(n_max - dd)).collect();
    Ok(FringeStructure {
        set,
        bounds,
        c_t,
        d_t,
        c_set,
        d_set,
    })
}

/// Extract `(C_t, c_t, d_t, D_t)` at fold `h_t`, per the minimization in
/// the structure theorem's proof.
pub fn extract_fringes(set: &NormalizedSet, t: u32) -> Result<FringeOutcome> {
    if t == 0 {
        return Err(Error::ZeroThreshold);
    }
    if set.k() == 1 {
        return pair_set_outcome(set, t);
    }
    let bounds = bounds_for(set, t)?;
    let h_t = fold_from_i64(bounds.h_t, set.a_max())?;
    let table = rep_count_table(set, h_t, CountMode::Capped(t))?;
    let (_, counts) = table.capped_counts().expect("table was built capped");
    let fringe = fringe_from_counts(set.clone(), bounds, counts, h_t)?;
    Ok(FringeOutcome::Structure(fringe))
}

/// Evaluate the decomposition `C_t ∪ [c_t, h*a_max - d_t] ∪ (h*a_max - D_t)`
/// at fold `h`, clipped to the sumset domain `[0, h*a_max]`. The result
/// equals `(hA)^(t)` whenever `h >= h_t`; smaller folds are allowed so
/// callers can probe where agreement actually begins.
pub fn predict_sumset(fringe: &FringeStructure, h: u32) -> Result<ThresholdSumset> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    let cols = table_cols(&fringe.set, h)?;
    let n_max = cols as i64 - 1;
    let mut bits = DenseBits::new(cols);
    for &c in &fringe.c_set {
        if c <= n_max {
            bits.insert(c as usize);
        }
    }
    let int_hi = n_max - fringe.d_t;
    if fringe.c_t <= int_hi {
        bits.insert_range(fringe.c_t as usize, int_hi as usize);
    }
    for &dd in &fringe.d_set {
        if dd <= n_max {
            bits.insert((n_max - dd) as usize);
        }
    }
    Ok(ThresholdSumset::from_parts(
        fringe.set.clone(),
        h,
        fringe.t(),
        bits,
    ))
}

/// A record that the predicted decomposition and the directly computed
/// `(hA)^(t)` agreed for every fold in `[verified_h_lo, verified_h_hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCertificate {
    pub(crate) fringe: FringeStructure,
    pub(crate) verified_h_lo: u32,
    pub(crate) verified_h_hi: u32,
}

impl StructureCertificate {
    pub fn fringe(&self) -> &FringeStructure {
        &self.fringe
    }

    pub fn verified_h_lo(&self) -> u32 {
        self.verified_h_lo
    }

    pub fn verified_h_hi(&self) -> u32 {
        self.verified_h_hi
    }
}

/// Compare the decomposition against a capped count table at fold `h`;
/// any disagreement is reported as a structured mismatch.
fn compare_fold(fringe: &FringeStructure, h: u32, counts: &[u32]) -> Result<()> {
    let t = fringe.t();
    let n_max = (counts.len() - 1) as i64;
    let mut predicted_only = Vec::new();
    let mut computed_only = Vec::new();
    for n in 0..=n_max {
        let predicted = fringe.predicts(n, n_max);
        let computed = counts[n as usize] >= t;
        if predicted != computed {
            if predicted {
                predicted_only.push(n);
            } else {
                computed_only.push(n);
            }
        }
    }
    if predicted_only.is_empty() && computed_only.is_empty() {
        Ok(())
    } else {
        Err(Error::StructureMismatch {
            h,
            predicted_only,
            computed_only,
        })
    }
}

/// Independently compute `(hA)^(t)` for every `h` in `[h_lo, h_hi]` and
/// check it against the predicted decomposition. All folds are served by a
/// single dynamic program, and the fringe itself is extracted from that
/// program's `h_t` slice on the way up.
pub fn verify_structure(
    set: &NormalizedSet,
    t: u32,
    h_lo: u32,
    h_hi: u32,
) -> Result<StructureCertificate> {
    if t == 0 {
        return Err(Error::ZeroThreshold);
    }
    if h_lo == 0 {
        return Err(Error::ZeroFold);
    }
    if h_hi < h_lo {
        return Err(Error::BadFoldRange { lo: h_lo, hi: h_hi });
    }
    if set.k() == 1 && t >= 2 {
        return Err(Error::EmptyForAllFolds { t });
    }
    let bounds = bounds_for(set, t)?;
    if (h_lo as i64) < bounds.h_t {
        return Err(Error::BelowThreshold {
            h_lo,
            h_t: bounds.h_t,
        });
    }
    let h_t = fold_from_i64(bounds.h_t, set.a_max())?;
    let mut fringe = match set.k() {
        1 => Some(pair_set_outcome(set, t)?.into_structure()?),
        _ => None,
    };
    let mut sweep = FoldSweep::new(set, h_hi, t)?;
    while let Some((h, counts)) = sweep.advance() {
        if fringe.is_none() && h == h_t {
            fringe = Some(fringe_from_counts(set.clone(), bounds, counts, h)?);
        }
        if h >= h_lo {
            let f = fringe.as_ref().expect("fringe extracted at h_t <= h_lo");
            compare_fold(f, h, counts)?;
        }
    }
    Ok(StructureCertificate {
        fringe: fringe.expect("sweep reached h_t"),
        verified_h_lo: h_lo,
        verified_h_hi: h_hi,
    })
}

/// The smallest `h*` such that the decomposition (with fringes extracted
/// at `h_t`) matches the computed `(hA)^(t)` for every `h` in `[h*, h_t]`.
/// Folds in `(h_t, h_t + beyond]` are checked as well; a mismatch there is
/// an implementation-falsifying error, not a smaller onset.
pub fn empirical_onset(set: &NormalizedSet, t: u32, beyond: u32) -> Result<u32> {
    let fringe = extract_fringes(set, t)?.into_structure()?;
    let h_t = fold_from_i64(fringe.bounds.h_t, set.a_max())?;
    let h_max = h_t
        .checked_add(beyond)
        .ok_or(Error::Overflow("onset window"))?;
    let mut agree = vec![false; h_t as usize + 1];
    let mut sweep = FoldSweep::new(set, h_max, t)?;
    while let Some((h, counts)) = sweep.advance() {
        match compare_fold(&fringe, h, counts) {
            Ok(()) => {
                if h <= h_t {
                    agree[h as usize] = true;
                }
            }
            Err(e) if h >= h_t => return Err(e),
            Err(_) => {}
        }
    }
    let mut onset = h_t;
    while onset > 1 && agree[onset as usize - 1] {
        onset -= 1;
    }
    Ok(onset)
}

fn inclusion_step_holds(set: &NormalizedSet, t: u32, cur: &[u32], next: &[u32]) -> bool {
    for (n, &c) in cur.iter().enumerate() {
        if c >= t {
            for &a in set.elements() {
                if next[n + a as usize] < t {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `(hA)^(t) + A ⊆ ((h+1)A)^(t)` — the inclusion lemma, which a
/// correct counting implementation can never falsify.
pub fn check_inclusion_lemma(set: &NormalizedSet, h: u32, t: u32) -> Result<bool> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    if t == 0 {
        return Err(Error::ZeroThreshold);
    }
    let next_h = h.checked_add(1).ok_or(Error::Overflow("fold increment"))?;
    let cur = rep_count_table(set, h, CountMode::Capped(t))?;
    let next = rep_count_table(set, next_h, CountMode::Capped(t))?;
    Ok(inclusion_step_holds(
        set,
        t,
        cur.capped_counts().expect("capped").1,
        next.capped_counts().expect("capped").1,
    ))
}

/// The inclusion lemma checked for every step `h -> h+1` with
/// `h in [1, h_max]`, sharing one dynamic program across all folds.
pub fn check_inclusion_lemma_sweep(set: &NormalizedSet, t: u32, h_max: u32) -> Result<bool> {
    let top = h_max.checked_add(1).ok_or(Error::Overflow("fold increment"))?;
    let mut sweep = FoldSweep::new(set, top, t)?;
    let mut prev: Vec<u32> = Vec::new();
    while let Some((h, counts)) = sweep.advance() {
        if h > 1 && !inclusion_step_holds(set, t, &prev, counts) {
            return Ok(false);
        }
        prev.clear();
        prev.extend_from_slice(counts);
    }
    Ok(true)
}

fn interval_covered(bounds: &ThresholdBounds, counts: &[u32]) -> bool {
    let n_max = (counts.len() - 1) as i64;
    let lo = bounds.c_prime_t;
    let hi = n_max - bounds.d_prime_t;
    // an interval with lo > hi is empty and the claim holds vacuously
    (lo..=hi).all(|n| counts[n as usize] >= bounds.t)
}

/// Whether `[c'_t, h*a_max - d'_t] ⊆ (hA)^(t)` — the interval lemma.
pub fn check_interval_lemma(set: &NormalizedSet, h: u32, t: u32) -> Result<bool> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    let bounds = threshold_bounds(set, t)?;
    let table = rep_count_table(set, h, CountMode::Capped(t))?;
    Ok(interval_covered(
        &bounds,
        table.capped_counts().expect("capped").1,
    ))
}

/// The interval lemma checked for every `h in [1, h_max]` off one dynamic
/// program.
pub fn check_interval_lemma_sweep(set: &NormalizedSet, t: u32, h_max: u32) -> Result<bool> {
    let bounds = threshold_bounds(set, t)?;
    let mut sweep = FoldSweep::new(set, h_max, t)?;
    while let Some((_, counts)) = sweep.advance() {
        if !interval_covered(&bounds, counts) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `t` explicit pairwise-distinct representations of one integer `n` as a
/// sum of `h` elements, as constructed in the interval lemma's proof.
/// Vector `s` (1-based) lists exponents `x_1, ..., x_k` of `a_1, ..., a_k`;
/// the remaining `h - Σ x_j` parts are zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSet {
    n: i64,
    h: u32,
    t: u32,
    witnesses: Vec<Vec<i64>>,
}

impl WitnessSet {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.witnesses
    }
}

/// Iterative left-to-right Bézout pass over `a_1, ..., a_k`: returns
/// `beta` with every entry in `[0, a_max)` and
/// `Σ beta_j * a_j ≡ gcd = 1 (mod a_max)`. Reducing coefficients modulo
/// `a_max` at each step keeps the arithmetic small; it preserves the
/// congruence because `a_k = a_max ≡ 0`.
fn bezout_mod(set: &NormalizedSet) -> Vec<i64> {
    let a_max = set.a_max();
    let mut beta: Vec<i64> = Vec::with_capacity(set.k());
    let mut g: i64 = 0;
    for &a in &set.elements()[1..] {
        let (g_next, u, v) = egcd(g, a);
        let u = u.rem_euclid(a_max);
        for b in &mut beta {
            *b = mul_mod(*b, u, a_max);
        }
        beta.push(v.rem_euclid(a_max));
        g = g_next;
    }
    debug_assert_eq!(g, 1, "normalized sets have gcd 1");
    beta
}

/// `(g, u, v)` with `u*a + v*b = g = gcd(a, b)`.
fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

fn mul_mod(a: i64, b: i64, m: i64) -> i64 {
    ((a as i128 * b as i128).rem_euclid(m as i128)) as i64
}

/// Build `t` distinct representations of `n` at fold `h`, for any `n` in
/// the guaranteed interval `[c'_t, h*a_max - d'_t]`: solve the Bézout
/// congruence once, then shift the first `k-1` exponents into the disjoint
/// windows `[(s-1)*a_max, s*a_max - 1]` for `s = 1, ..., t` and solve for
/// the final exponent.
pub fn construct_witnesses(set: &NormalizedSet, t: u32, h: u32, n: i64) -> Result<WitnessSet> {
    if t == 0 {
        return Err(Error::ZeroThreshold);
    }
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    if set.k() == 1 {
        return Err(Error::PairSetUnsupported);
    }
    let bounds = bounds_for(set, t)?;
    let a_max = set.a_max();
    let n_max = (h as i64)
        .checked_mul(a_max)
        .ok_or(Error::Overflow("sumset index range"))?;
    let lo = bounds.c_prime_t;
    let hi = n_max - bounds.d_prime_t;
    if n < lo || n > hi {
        return Err(Error::OutsideInterval { n, lo, hi });
    }
    let beta = bezout_mod(set);
    let base: Vec<i64> = beta[..set.k() - 1]
        .iter()
        .map(|&b| mul_mod(b, n, a_max))
        .collect();
    let mut witnesses = Vec::with_capacity(t as usize);
    for s in 1..=t as i64 {
        let shift = (s - 1)
            .checked_mul(a_max)
            .ok_or(Error::Overflow("witness window shift"))?;
        let mut x: Vec<i64> = Vec::with_capacity(set.k());
        let mut partial: i128 = 0;
        for (&r, &a) in base.iter().zip(set.interior()) {
            let xj = r.checked_add(shift).ok_or(Error::Overflow("witness exponent"))?;
            partial += xj as i128 * a as i128;
            x.push(xj);
        }
        let rem = n as i128 - partial;
        assert!(
            rem >= 0 && rem % a_max as i128 == 0,
            "witness construction must divide exactly for n in the interval"
        );
        let x_k = i64::try_from(rem / a_max as i128)
            .map_err(|_| Error::Overflow("witness exponent"))?;
        x.push(x_k);
        let parts: i128 = x.iter().map(|&v| v as i128).sum();
        assert!(
            parts <= h as i128,
            "witness construction must fit in {h} parts"
        );
        witnesses.push(x);
    }
    Ok(WitnessSet { n, h, t, witnesses })
}

/// `FN_t(A) = c_t - 1`: the largest integer that never accumulates `t`
/// representations, at any fold. For `A = {0, 1}` and `t >= 2` no integer
/// ever does, so no finite answer exists and an error is returned.
pub fn frobenius_number(set: &NormalizedSet, t: u32) -> Result<i64> {
    Ok(extract_fringes(set, t)?.into_structure()?.c_t - 1)
}

/// `[FN_1(A), ..., FN_{t_max}(A)]`; always nondecreasing.
pub fn frobenius_sequence(set: &NormalizedSet, t_max: u32) -> Result<Vec<i64>> {
    if t_max == 0 {
        return Err(Error::ZeroThreshold);
    }
    (1..=t_max).map(|t| frobenius_number(set, t)).collect()
}

/// Serialization form of a verified fringe structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FringeReport {
    pub set: Vec<i64>,
    pub t: u32,
    pub h_t: i64,
    pub c_t: i64,
    pub d_t: i64,
    #[serde(rename = "C_t")]
    pub c_fringe: Vec<i64>,
    #[serde(rename = "D_t")]
    pub d_fringe: Vec<i64>,
    pub c_prime_t: i64,
    pub d_prime_t: i64,
    pub verified_h: [u32; 2],
}

impl FringeReport {
    pub fn from_certificate(cert: &StructureCertificate) -> Self {
        let fringe = &cert.fringe;
        FringeReport {
            set: fringe.set.elements().to_vec(),
            t: fringe.t(),
            h_t: fringe.bounds.h_t,
            c_t: fringe.c_t,
            d_t: fringe.d_t,
            c_fringe: fringe.c_set.clone(),
            d_fringe: fringe.d_set.clone(),
            c_prime_t: fringe.bounds.c_prime_t,
            d_prime_t: fringe.bounds.d_prime_t,
            verified_h: [cert.verified_h_lo, cert.verified_h_hi],
        }
    }
}
