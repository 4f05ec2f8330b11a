//! The reflection dual `A* = max(A) - A` and its symmetry identities.
//!
//! Reflecting a sum of `h` elements through `h * a_max` turns representations
//! of `n` over `A` into representations of `h*a_max - n` over `A*`, so
//! `r_{A,h}(n) = r_{A*,h}(h*a_max - n)` and the threshold sumsets of `A` and
//! `A*` are mirror images. On fringes this swaps the roles of `(C_t, c_t)`
//! and `(D_t, d_t)`.

use crate::counting::{rep_count_table, CountMode, FoldSweep};
use crate::error::{Error, Result};
use crate::sets::NormalizedSet;
use crate::structure::{bounds_for, FringeStructure};

/// A set together with its reflection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPair {
    original: NormalizedSet,
    dual: NormalizedSet,
}

impl DualPair {
    pub fn new(set: &NormalizedSet) -> Self {
        DualPair {
            original: set.clone(),
            dual: dual_set(set),
        }
    }

    pub fn original(&self) -> &NormalizedSet {
        &self.original
    }

    pub fn dual(&self) -> &NormalizedSet {
        &self.dual
    }
}

/// `A* = { a_max - a : a ∈ A }`, sorted ascending. The reflection keeps
/// 0 as minimum, a_max as maximum, and gcd 1.
pub fn dual_set(set: &NormalizedSet) -> NormalizedSet {
    let a_max = set.a_max();
    let reflected: Vec<i64> = set.elements().iter().rev().map(|&a| a_max - a).collect();
    NormalizedSet::new(reflected).expect("reflection preserves normalization")
}

fn reflected_threshold_equal(a: &[u32], b: &[u32], t: u32) -> bool {
    let n_max = a.len() - 1;
    (0..=n_max).all(|n| (a[n] >= t) == (b[n_max - n] >= t))
}

/// Whether `{ h*a_max - n : n ∈ (hA)^(t) } = (hA*)^(t)`. A correct
/// implementation can never observe `false`.
pub fn check_duality(set: &NormalizedSet, h: u32, t: u32) -> Result<bool> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    let dual = dual_set(set);
    let a_tab = rep_count_table(set, h, CountMode::Capped(t))?;
    let b_tab = rep_count_table(&dual, h, CountMode::Capped(t))?;
    Ok(reflected_threshold_equal(
        a_tab.capped_counts().expect("capped").1,
        b_tab.capped_counts().expect("capped").1,
        t,
    ))
}

/// [`check_duality`] for every `h in [1, h_max]`, driving the two sides'
/// dynamic programs in lockstep.
pub fn check_duality_sweep(set: &NormalizedSet, t: u32, h_max: u32) -> Result<bool> {
    let dual = dual_set(set);
    let mut a_sweep = FoldSweep::new(set, h_max, t)?;
    let mut b_sweep = FoldSweep::new(&dual, h_max, t)?;
    while let Some((_, a_counts)) = a_sweep.advance() {
        let (_, b_counts) = b_sweep.advance().expect("sweeps advance in lockstep");
        if !reflected_threshold_equal(a_counts, b_counts, t) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The fringe structure of `A*` obtained by pure swap:
/// `(C_t, c_t) <-> (D_t, d_t)`. Equals direct extraction on `A*`; that
/// equality is what the tests verify.
pub fn dual_fringes(fringe: &FringeStructure) -> FringeStructure {
    let dual = dual_set(fringe.set());
    let bounds = bounds_for(&dual, fringe.t())
        .expect("dual bounds are no larger than the original's");
    FringeStructure {
        set: dual,
        bounds,
        c_t: fringe.d_t(),
        d_t: fringe.c_t(),
        c_set: fringe.d_set().to_vec(),
        d_set: fringe.c_set().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{extract_fringes, threshold_bounds};
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn nset(v: &[i64]) -> NormalizedSet {
        NormalizedSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_set(&nset(&[0, 2, 3])).elements(), &[0, 1, 3]);
        assert_eq!(dual_set(&nset(&[0, 1, 3])).elements(), &[0, 2, 3]);
        assert_eq!(dual_set(&nset(&[0, 1, 2])).elements(), &[0, 1, 2]);
    }

    #[test]
    fn dual_pair_shares_a_max() {
        let p = DualPair::new(&nset(&[0, 2, 7, 9]));
        assert_eq!(p.original().a_max(), p.dual().a_max());
        assert_eq!(dual_set(p.dual()), *p.original());
    }

    #[test]
    fn check_duality_examples() {
        assert!(check_duality(&nset(&[0, 1, 2]), 3, 2).unwrap());
        assert!(check_duality(&nset(&[0, 2, 3]), 5, 1).unwrap());
        assert!(check_duality(&nset(&[0, 2, 3]), 16, 2).unwrap());
    }

    #[test]
    fn duality_sweep_small() {
        for t in 1..=2 {
            assert!(check_duality_sweep(&nset(&[0, 2, 3]), t, 20).unwrap());
        }
    }

    #[test]
    fn dual_fringes_swaps_023() {
        let f = extract_fringes(&nset(&[0, 2, 3]), 1)
            .unwrap()
            .into_structure()
            .unwrap();
        let g = dual_fringes(&f);
        assert_eq!(g.set().elements(), &[0, 1, 3]);
        assert_eq!((g.c_t(), g.d_t()), (0, 2));
        assert!(g.c_set().is_empty());
        assert_eq!(g.d_set(), &[0]);
        let direct = extract_fringes(&nset(&[0, 1, 3]), 1)
            .unwrap()
            .into_structure()
            .unwrap();
        assert_eq!(g, direct);
    }

    #[test]
    fn dual_fringes_is_involutive() {
        let f = extract_fringes(&nset(&[0, 2, 5, 9]), 2)
            .unwrap()
            .into_structure()
            .unwrap();
        assert_eq!(dual_fringes(&dual_fringes(&f)), f);
    }

    #[test]
    fn self_dual_sets_have_symmetric_fringes() {
        for t in 1..=2 {
            let a = nset(&[0, 1, 2]);
            assert_eq!(dual_set(&a), a);
            let f = extract_fringes(&a, t).unwrap().into_structure().unwrap();
            assert_eq!(f.c_t(), f.d_t());
            assert_eq!(f.c_set(), f.d_set());
        }
    }

    #[test]
    fn dual_bounds_swap_roles() {
        // c'(A*) uses the reflected interior, d' and h_t are shared
        let b = threshold_bounds(&nset(&[0, 2, 3]), 1).unwrap();
        let bd = threshold_bounds(&nset(&[0, 1, 3]), 1).unwrap();
        assert_eq!(b.h_t(), bd.h_t());
        assert_eq!(b.d_prime_t(), bd.d_prime_t());
        assert_eq!(bd.c_prime_t(), 2);
    }

    fn arb_set() -> impl Strategy<Value = NormalizedSet> {
        proptest::collection::btree_set(1i64..=10, 1..=4).prop_map(|s| {
            let mut v = vec![0i64];
            v.extend(s);
            let raw = crate::sets::RawSet::new(v).unwrap();
            crate::sets::normalize(&raw).unwrap().normalized().clone()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn dual_is_involution(a in arb_set()) {
            prop_assert_eq!(dual_set(&dual_set(&a)), a);
        }

        #[test]
        fn exact_counts_reflect(a in arb_set(), h in 1u32..=8) {
            let b = dual_set(&a);
            let ta = rep_count_table(&a, h, CountMode::Exact).unwrap();
            let tb = rep_count_table(&b, h, CountMode::Exact).unwrap();
            let ca = ta.exact_counts().unwrap();
            let cb: Vec<BigUint> = tb.exact_counts().unwrap().iter().rev().cloned().collect();
            prop_assert_eq!(ca, cb.as_slice());
        }

        #[test]
        fn duality_check_never_fails(a in arb_set(), h in 1u32..=10, t in 1u32..=3) {
            prop_assert!(check_duality(&a, h, t).unwrap());
        }
    }
}
