//! Deterministic sampling of normalized sets for verification sweeps.

use std::collections::BTreeSet;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sets::NormalizedSet;

/// Draw `count` distinct normalized sets `{0} ∪ S` with `S ⊆ [1, a_limit]`,
/// `|S| ∈ [2, k_max]`, and gcd 1, by seeded rejection sampling. The same
/// seed always yields the same corpus, in the same order.
pub fn sample_sets(
    seed: u64,
    count: usize,
    k_max: usize,
    a_limit: i64,
) -> Result<Vec<NormalizedSet>> {
    if k_max < 2 || a_limit < k_max as i64 {
        return Err(Error::CorpusParams { k_max, a_limit });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    let attempts = count.saturating_mul(10_000).max(10_000);
    for _ in 0..attempts {
        if out.len() == count {
            break;
        }
        let k = rng.random_range(2..=k_max);
        let mut elems: Vec<i64> = rand::seq::index::sample(&mut rng, a_limit as usize, k)
            .into_iter()
            .map(|i| i as i64 + 1)
            .collect();
        elems.push(0);
        elems.sort_unstable();
        let gcd = elems.iter().fold(0i64, |acc, &a| acc.gcd(&a));
        if gcd != 1 || !seen.insert(elems.clone()) {
            continue;
        }
        out.push(NormalizedSet::new(elems).expect("sampled sets are normalized by construction"));
    }
    if out.len() < count {
        return Err(Error::CorpusExhausted {
            requested: count,
            found: out.len(),
        });
    }
    Ok(out)
}
