//! Fixed-universe dense bitset over `0..len`.

const WORD_BITS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DenseBits {
    len: usize,
    words: Vec<u64>,
}

impl DenseBits {
    pub fn new(len: usize) -> Self {
        DenseBits {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD_BITS] & (1 << (i % WORD_BITS)) != 0
    }

    pub fn insert_range(&mut self, lo: usize, hi: usize) {
        // inclusive range; no-op when lo > hi
        if lo > hi {
            return;
        }
        debug_assert!(hi < self.len);
        let (lw, lb) = (lo / WORD_BITS, lo % WORD_BITS);
        let (hw, hb) = (hi / WORD_BITS, hi % WORD_BITS);
        let lo_mask = !0u64 << lb;
        let hi_mask = !0u64 >> (WORD_BITS - 1 - hb);
        if lw == hw {
            self.words[lw] |= lo_mask & hi_mask;
        } else {
            self.words[lw] |= lo_mask;
            for w in &mut self.words[lw + 1..hw] {
                *w = !0;
            }
            self.words[hw] |= hi_mask;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Indices set in `self` but not in `other`. Universes may differ.
    pub fn difference(&self, other: &DenseBits) -> Vec<usize> {
        self.iter_ones().filter(|&i| !other.contains(i)).collect()
    }
}
