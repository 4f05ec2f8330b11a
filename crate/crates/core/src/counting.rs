//! The representation function `r_{A,h}(n)` and threshold sumsets `(hA)^(t)`.
//!
//! `r_{A,h}(n)` counts multisets of size `h` drawn from `A` that sum to `n`
//! (equivalently: nondecreasing h-tuples). The workhorse is a bounded-knapsack
//! dynamic program over the nonzero elements; the element 0 absorbs unused
//! parts, so a state with `p <= h` parts contributes to the h-fold count.
//! A direct enumeration oracle provides ground truth for tests at small sizes.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bits::DenseBits;
use crate::error::{Error, Result};
use crate::sets::NormalizedSet;

/// Hard limit on the multisets the enumeration oracle will visit.
pub const ORACLE_BUDGET: u128 = 10_000_000;

/// Largest addressable table index `h * a_max`.
const MAX_INDEX: i64 = 1 << 31;

/// Counting mode for [`rep_count_table`]: exact arbitrary-precision counts,
/// or counts saturated at a cap. Deciding `r >= t` only ever needs a cap of
/// `t`, which is what the structure pipeline uses throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    Exact,
    Capped(u32),
}

/// The table `n -> r_{A,h}(n)` over `n in [0, h * a_max]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepCountTable {
    set: NormalizedSet,
    h: u32,
    data: TableData,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum TableData {
    Exact(Vec<BigUint>),
    Capped { cap: u32, cells: Vec<u32> },
}

impl RepCountTable {
    pub fn set(&self) -> &NormalizedSet {
        &self.set
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn mode(&self) -> CountMode {
        match &self.data {
            TableData::Exact(_) => CountMode::Exact,
            TableData::Capped { cap, .. } => CountMode::Capped(*cap),
        }
    }

    /// Number of table entries, `h * a_max + 1`.
    pub fn len(&self) -> usize {
        match &self.data {
            TableData::Exact(cells) => cells.len(),
            TableData::Capped { cells, .. } => cells.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest representable sum, `h * a_max`.
    pub fn max_sum(&self) -> i64 {
        self.len() as i64 - 1
    }

    /// Whether `r_{A,h}(n) >= t`. Out-of-range `n` has count 0.
    /// In capped mode `t` must not exceed the cap.
    pub fn has_at_least(&self, n: i64, t: u32) -> bool {
        if n < 0 || n > self.max_sum() {
            return false;
        }
        let idx = n as usize;
        match &self.data {
            TableData::Exact(cells) => cells[idx] >= BigUint::from(t),
            TableData::Capped { cap, cells } => {
                debug_assert!(t <= *cap, "cap {cap} cannot decide threshold {t}");
                cells[idx] >= t
            }
        }
    }

    /// The exact counts, when the table was built in exact mode.
    pub fn exact_counts(&self) -> Option<&[BigUint]> {
        match &self.data {
            TableData::Exact(cells) => Some(cells),
            TableData::Capped { .. } => None,
        }
    }

    /// The saturated counts and their cap, when built in capped mode.
    pub fn capped_counts(&self) -> Option<(u32, &[u32])> {
        match &self.data {
            TableData::Exact(_) => None,
            TableData::Capped { cap, cells } => Some((*cap, cells)),
        }
    }
}

/// The set `(hA)^(t)` of integers with at least `t` representations,
/// stored as a dense membership structure over `[0, h * a_max]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdSumset {
    set: NormalizedSet,
    h: u32,
    t: u32,
    members: DenseBits,
}

impl ThresholdSumset {
    pub(crate) fn from_parts(set: NormalizedSet, h: u32, t: u32, members: DenseBits) -> Self {
        ThresholdSumset { set, h, t, members }
    }

    pub fn set(&self) -> &NormalizedSet {
        &self.set
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Upper end of the membership range, `h * a_max`.
    pub fn max_sum(&self) -> i64 {
        self.members.len() as i64 - 1
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && self.members.contains(n as usize)
    }

    /// Number of members.
    pub fn count(&self) -> usize {
        self.members.count()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.members.iter_ones().map(|i| i as i64)
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.iter().collect()
    }

    /// Membership equality, ignoring how either side was produced.
    pub fn same_members(&self, other: &ThresholdSumset) -> bool {
        self.members == other.members
    }

    /// `(self \ other, other \ self)` as sorted lists.
    pub fn symmetric_difference(&self, other: &ThresholdSumset) -> (Vec<i64>, Vec<i64>) {
        let left = self
            .members
            .difference(&other.members)
            .into_iter()
            .map(|i| i as i64)
            .collect();
        let right = other
            .members
            .difference(&self.members)
            .into_iter()
            .map(|i| i as i64)
            .collect();
        (left, right)
    }
}

/// Table width for fold `h`: `h * a_max + 1` entries, guarded at 2^31.
pub(crate) fn table_cols(set: &NormalizedSet, h: u32) -> Result<usize> {
    let n_max = (h as i64)
        .checked_mul(set.a_max())
        .ok_or(Error::Overflow("table index range"))?;
    if n_max > MAX_INDEX {
        return Err(Error::RangeTooLarge {
            h: h as u64,
            a_max: set.a_max(),
        });
    }
    Ok(n_max as usize + 1)
}

/// `dp[p][n]` = number of multisets with exactly `p` parts drawn from the
/// nonzero elements, summing to `n`; every cell saturated at `cap`.
/// Elements are processed outermost, parts next, sum innermost.
pub(crate) struct PartsProfile {
    cols: usize,
    max_parts: u32,
    rows: Vec<u32>,
}

impl PartsProfile {
    pub(crate) fn build(set: &NormalizedSet, max_parts: u32, cap: u32) -> Result<Self> {
        let cols = table_cols(set, max_parts)?;
        let mut rows = vec![0u32; (max_parts as usize + 1) * cols];
        rows[0] = 1;
        let elems: Vec<usize> = set.elements()[1..].iter().map(|&a| a as usize).collect();
        let a_min = elems[0];
        for &a in &elems {
            for p in 1..=max_parts as usize {
                // Live region of row p-1: sums in [(p-1)*a_min, (p-1)*a].
                let lo = a + (p - 1) * a_min;
                if lo >= cols {
                    break;
                }
                let hi = (a + (p - 1) * a).min(cols - 1);
                let (done, rest) = rows.split_at_mut(p * cols);
                let prev = &done[(p - 1) * cols..];
                let cur = &mut rest[..cols];
                for n in lo..=hi {
                    let add = prev[n - a];
                    if add != 0 {
                        cur[n] = cur[n].saturating_add(add).min(cap);
                    }
                }
            }
        }
        Ok(PartsProfile {
            cols,
            max_parts,
            rows,
        })
    }

    fn row(&self, p: u32) -> &[u32] {
        let start = p as usize * self.cols;
        &self.rows[start..start + self.cols]
    }
}

/// Streams the capped fold counts `n -> min(r_{A,h}(n), cap)` for
/// `h = 1, 2, ..., h_max` off a single parts profile. The slice returned
/// for fold `h` covers `n in [0, h * a_max]`.
pub(crate) struct FoldSweep {
    profile: PartsProfile,
    cum: Vec<u32>,
    cap: u32,
    a_max: usize,
    h: u32,
}

impl FoldSweep {
    pub(crate) fn new(set: &NormalizedSet, h_max: u32, cap: u32) -> Result<Self> {
        if h_max == 0 {
            return Err(Error::ZeroFold);
        }
        if cap == 0 {
            return Err(Error::ZeroCap);
        }
        let profile = PartsProfile::build(set, h_max, cap)?;
        let cum = profile.row(0).to_vec();
        Ok(FoldSweep {
            profile,
            cum,
            cap,
            a_max: set.a_max() as usize,
            h: 0,
        })
    }

    pub(crate) fn advance(&mut self) -> Option<(u32, &[u32])> {
        if self.h == self.profile.max_parts {
            return None;
        }
        self.h += 1;
        let row = self.profile.row(self.h);
        for (c, &r) in self.cum.iter_mut().zip(row) {
            if r != 0 {
                *c = c.saturating_add(r).min(self.cap);
            }
        }
        let upto = (self.h as usize * self.a_max).min(self.cum.len() - 1);
        Some((self.h, &self.cum[..=upto]))
    }
}

/// Membership bitset `{ n : counts[n] >= t }`.
pub(crate) fn membership(counts: &[u32], t: u32) -> DenseBits {
    let mut bits = DenseBits::new(counts.len());
    for (n, &c) in counts.iter().enumerate() {
        if c >= t {
            bits.insert(n);
        }
    }
    bits
}

/// Compute the full representation-count table for fold `h`.
pub fn rep_count_table(set: &NormalizedSet, h: u32, mode: CountMode) -> Result<RepCountTable> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    let data = match mode {
        CountMode::Capped(0) => return Err(Error::ZeroCap),
        CountMode::Capped(cap) => {
            let profile = PartsProfile::build(set, h, cap)?;
            let mut cells = profile.row(0).to_vec();
            for p in 1..=h {
                for (c, &r) in cells.iter_mut().zip(profile.row(p)) {
                    if r != 0 {
                        *c = c.saturating_add(r).min(cap);
                    }
                }
            }
            TableData::Capped { cap, cells }
        }
        CountMode::Exact => TableData::Exact(exact_counts(set, h)?),
    };
    Ok(RepCountTable {
        set: set.clone(),
        h,
        data,
    })
}

/// Exact counts via the same element/parts/sum recurrence with
/// arbitrary-precision cells.
fn exact_counts(set: &NormalizedSet, h: u32) -> Result<Vec<BigUint>> {
    let cols = table_cols(set, h)?;
    let parts = h as usize;
    let mut rows: Vec<BigUint> = vec![BigUint::zero(); (parts + 1) * cols];
    rows[0] = BigUint::one();
    let elems: Vec<usize> = set.elements()[1..].iter().map(|&a| a as usize).collect();
    let a_min = elems[0];
    for &a in &elems {
        for p in 1..=parts {
            let lo = a + (p - 1) * a_min;
            if lo >= cols {
                break;
            }
            let hi = (a + (p - 1) * a).min(cols - 1);
            let (done, rest) = rows.split_at_mut(p * cols);
            let prev = &done[(p - 1) * cols..];
            let cur = &mut rest[..cols];
            for n in lo..=hi {
                if !prev[n - a].is_zero() {
                    cur[n] += &prev[n - a];
                }
            }
        }
    }
    let mut cells = rows[..cols].to_vec();
    for p in 1..=parts {
        let row = &rows[p * cols..(p + 1) * cols];
        for (c, r) in cells.iter_mut().zip(row) {
            if !r.is_zero() {
                *c += r;
            }
        }
    }
    Ok(cells)
}

/// Ground-truth oracle: exhaustively enumerate every size-`h` multiset
/// (as a multiplicity vector over the nonzero elements, the zeros implied)
/// and tally the sums. Refuses when more than [`ORACLE_BUDGET`] multisets
/// would be visited.
pub fn rep_count_oracle(set: &NormalizedSet, h: u32) -> Result<RepCountTable> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    let multisets =
        binomial_u128(h as u128 + set.k() as u128, set.k() as u128).unwrap_or(u128::MAX);
    if multisets > ORACLE_BUDGET {
        return Err(Error::OracleBudgetExceeded {
            multisets,
            budget: ORACLE_BUDGET,
        });
    }
    let cols = table_cols(set, h)?;
    let mut tally = vec![0u64; cols];
    let elems: Vec<usize> = set.elements()[1..].iter().map(|&a| a as usize).collect();
    enumerate_multiplicities(&elems, h as usize, 0, &mut tally);
    Ok(RepCountTable {
        set: set.clone(),
        h,
        data: TableData::Exact(tally.into_iter().map(BigUint::from).collect()),
    })
}

fn enumerate_multiplicities(elems: &[usize], parts_left: usize, sum: usize, tally: &mut [u64]) {
    match elems.split_first() {
        None => tally[sum] += 1,
        Some((&a, rest)) => {
            for m in 0..=parts_left {
                enumerate_multiplicities(rest, parts_left - m, sum + m * a, tally);
            }
        }
    }
}

/// Materialize `(hA)^(t)` from a table capped at `t`.
pub fn threshold_sumset(set: &NormalizedSet, h: u32, t: u32) -> Result<ThresholdSumset> {
    if t == 0 {
        return Err(Error::ZeroThreshold);
    }
    let table = rep_count_table(set, h, CountMode::Capped(t))?;
    let (_, cells) = table.capped_counts().unwrap();
    let members = membership(cells, t);
    Ok(ThresholdSumset {
        set: set.clone(),
        h,
        t,
        members,
    })
}

/// `C(n, k)` in u128, `None` on overflow.
pub(crate) fn binomial_u128(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc.checked_mul(n - k + i)? / i;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{normalize, RawSet};
    use proptest::prelude::*;

    fn nset(v: &[i64]) -> NormalizedSet {
        NormalizedSet::new(v.to_vec()).unwrap()
    }

    fn exact_vec(table: &RepCountTable) -> Vec<u64> {
        table
            .exact_counts()
            .unwrap()
            .iter()
            .map(|c| {
                let digits = c.to_u64_digits();
                match digits.len() {
                    0 => 0,
                    1 => digits[0],
                    _ => panic!("count too large for test helper"),
                }
            })
            .collect()
    }

    #[test]
    fn table_enumerates_the_six_pair_multisets() {
        // {0,0},{0,1},{0,2},{1,1},{1,2},{2,2}
        let t = rep_count_table(&nset(&[0, 1, 2]), 2, CountMode::Exact).unwrap();
        assert_eq!(exact_vec(&t), vec![1, 1, 2, 1, 1]);
    }

    #[test]
    fn capped_table_saturates() {
        let t = rep_count_table(&nset(&[0, 1, 2]), 2, CountMode::Capped(1)).unwrap();
        assert_eq!(t.capped_counts().unwrap().1, &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn endpoints_have_unique_representations() {
        // all-zeros and all-a_max multisets are the only ways to hit 0 and h*a_max
        for elems in [vec![0i64, 1], vec![0, 2, 3], vec![0, 3, 5, 7]] {
            for h in [1u32, 3, 7] {
                let t = rep_count_table(&nset(&elems), h, CountMode::Exact).unwrap();
                let v = exact_vec(&t);
                assert_eq!(v[0], 1);
                assert_eq!(*v.last().unwrap(), 1);
            }
        }
    }

    #[test]
    fn oracle_matches_dp_on_examples() {
        let a = nset(&[0, 1, 2]);
        let dp = rep_count_table(&a, 2, CountMode::Exact).unwrap();
        let oracle = rep_count_oracle(&a, 2).unwrap();
        assert_eq!(dp.exact_counts().unwrap(), oracle.exact_counts().unwrap());
    }

    #[test]
    fn oracle_on_pair_set_is_all_ones() {
        let t = rep_count_oracle(&nset(&[0, 1]), 5).unwrap();
        assert_eq!(exact_vec(&t), vec![1; 6]);
    }

    #[test]
    fn oracle_counts_both_representations_of_six() {
        // 6 = 0+3+3 = 2+2+2
        let t = rep_count_oracle(&nset(&[0, 2, 3]), 3).unwrap();
        assert_eq!(exact_vec(&t)[6], 2);
    }

    #[test]
    fn oracle_refuses_beyond_budget() {
        let err = rep_count_oracle(&nset(&[0, 1, 2, 3, 7]), 1000).unwrap_err();
        assert!(matches!(err, Error::OracleBudgetExceeded { .. }));
    }

    #[test]
    fn threshold_sumset_examples() {
        let a = nset(&[0, 1, 2]);
        assert_eq!(threshold_sumset(&a, 2, 2).unwrap().to_vec(), vec![2]);
        assert_eq!(
            threshold_sumset(&a, 2, 1).unwrap().to_vec(),
            vec![0, 1, 2, 3, 4]
        );
        assert!(threshold_sumset(&nset(&[0, 1]), 4, 2).unwrap().to_vec().is_empty());
    }

    #[test]
    fn zero_parameters_are_rejected() {
        let a = nset(&[0, 1, 2]);
        assert_eq!(rep_count_table(&a, 0, CountMode::Exact).unwrap_err(), Error::ZeroFold);
        assert_eq!(
            rep_count_table(&a, 2, CountMode::Capped(0)).unwrap_err(),
            Error::ZeroCap
        );
        assert_eq!(threshold_sumset(&a, 2, 0).unwrap_err(), Error::ZeroThreshold);
        assert_eq!(rep_count_oracle(&a, 0).unwrap_err(), Error::ZeroFold);
    }

    #[test]
    fn index_range_guard_trips() {
        let a = nset(&[0, 3, 1 << 30]);
        assert!(matches!(
            rep_count_table(&a, 8, CountMode::Capped(1)),
            Err(Error::RangeTooLarge { .. })
        ));
    }

    #[test]
    fn sweep_agrees_with_single_fold_tables() {
        let a = nset(&[0, 2, 3, 7]);
        let mut sweep = FoldSweep::new(&a, 9, 3).unwrap();
        while let Some((h, counts)) = sweep.advance() {
            let table = rep_count_table(&a, h, CountMode::Capped(3)).unwrap();
            assert_eq!(counts, table.capped_counts().unwrap().1, "fold {h}");
        }
    }

    #[test]
    fn binomial_matches_factorial_form() {
        assert_eq!(binomial_u128(4, 2), Some(6));
        assert_eq!(binomial_u128(10, 0), Some(1));
        assert_eq!(binomial_u128(12, 4), Some(495));
        for (n, k) in [(1004u64, 4u64), (50, 25), (120, 3)] {
            let expect = binomial_biguint(n, k);
            assert_eq!(
                BigUint::from(binomial_u128(n as u128, k as u128).unwrap()),
                expect
            );
        }
    }

    /// Independent binomial for the mass invariant, built from factorials.
    fn binomial_biguint(n: u64, k: u64) -> BigUint {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for i in 0..k {
            num *= BigUint::from(n - i);
            den *= BigUint::from(i + 1);
        }
        num / den
    }

    fn arb_normalized() -> impl Strategy<Value = NormalizedSet> {
        proptest::collection::btree_set(1i64..=12, 1..=4).prop_map(|s| {
            let mut v = vec![0i64];
            v.extend(s);
            normalize(&RawSet::new(v).unwrap()).unwrap().normalized().clone()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn dp_equals_oracle(a in arb_normalized(), h in 1u32..=8) {
            let dp = rep_count_table(&a, h, CountMode::Exact).unwrap();
            let oracle = rep_count_oracle(&a, h).unwrap();
            prop_assert_eq!(dp.exact_counts().unwrap(), oracle.exact_counts().unwrap());
        }

        #[test]
        fn total_mass_is_binomial(a in arb_normalized(), h in 1u32..=8) {
            let dp = rep_count_table(&a, h, CountMode::Exact).unwrap();
            let total: BigUint = dp.exact_counts().unwrap().iter().sum();
            prop_assert_eq!(total, binomial_biguint(h as u64 + a.k() as u64, a.k() as u64));
        }

        #[test]
        fn capped_is_pointwise_min(a in arb_normalized(), h in 1u32..=8, cap in 1u32..=5) {
            let exact = rep_count_table(&a, h, CountMode::Exact).unwrap();
            let capped = rep_count_table(&a, h, CountMode::Capped(cap)).unwrap();
            let cells = capped.capped_counts().unwrap().1;
            for (e, &c) in exact.exact_counts().unwrap().iter().zip(cells) {
                let expect = e.clone().min(BigUint::from(cap));
                prop_assert_eq!(BigUint::from(c), expect);
            }
        }

        #[test]
        fn threshold_nests_in_t_and_grows_in_h(a in arb_normalized(), h in 1u32..=7, t in 1u32..=4) {
            let s = threshold_sumset(&a, h, t).unwrap();
            let tighter = threshold_sumset(&a, h, t + 1).unwrap();
            for n in tighter.iter() {
                prop_assert!(s.contains(n));
            }
            let wider = threshold_sumset(&a, h + 1, t).unwrap();
            for n in s.iter() {
                prop_assert!(wider.contains(n));
            }
        }
    }
}
