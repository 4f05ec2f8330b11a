//! Validated integer-set types and the normalization reduction.
//!
//! Every finite set of at least two integers can be translated and scaled so
//! that its minimum is 0 and its gcd is 1. All structural results in this
//! crate are stated for such normalized sets; [`normalize`] produces the
//! record of the affine map and [`denormalize_sumset`] transports sumsets
//! back to the original coordinates.

use num_integer::Integer;

use crate::error::{Error, Result};

/// A finite set of integers, strictly increasing, with at least two elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSet {
    elements: Vec<i64>,
}

impl RawSet {
    /// Validates strict increase and minimum size. The library layer is
    /// strict: unsorted input or duplicates are rejected, not repaired.
    pub fn new(elements: Vec<i64>) -> Result<Self> {
        check_strictly_increasing(&elements)?;
        Ok(RawSet { elements })
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }
}

/// A set `A = {0 = a_0 < a_1 < ... < a_k}` with `gcd(A) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalizedSet {
    elements: Vec<i64>,
}

impl NormalizedSet {
    pub fn new(elements: Vec<i64>) -> Result<Self> {
        check_strictly_increasing(&elements)?;
        if elements[0] != 0 {
            return Err(Error::NotNormalized(format!(
                "minimum must be 0, got {}",
                elements[0]
            )));
        }
        let g = elements.iter().fold(0i64, |g, &e| g.gcd(&e));
        if g != 1 {
            return Err(Error::NotNormalized(format!("gcd must be 1, got {g}")));
        }
        Ok(NormalizedSet { elements })
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    /// Number of nonzero elements.
    pub fn k(&self) -> usize {
        self.elements.len() - 1
    }

    /// The largest element `a_k`.
    pub fn a_max(&self) -> i64 {
        *self.elements.last().unwrap()
    }

    /// The elements `a_1, ..., a_{k-1}` strictly between 0 and `a_max`.
    pub(crate) fn interior(&self) -> &[i64] {
        &self.elements[1..self.elements.len() - 1]
    }
}

impl std::fmt::Display for NormalizedSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// The affine map relating a raw set `B` to its normalized form `A`:
/// `B = offset + scale * A` elementwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationRecord {
    normalized: NormalizedSet,
    offset: i64,
    scale: i64,
}

impl NormalizationRecord {
    pub fn normalized(&self) -> &NormalizedSet {
        &self.normalized
    }

    /// The minimum of the raw set.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// The gcd of the shifted set; always >= 1.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// True when the raw set was already in normalized form.
    pub fn is_identity(&self) -> bool {
        self.offset == 0 && self.scale == 1
    }
}

/// Translate a raw set to minimum 0 and divide out the gcd.
pub fn normalize(raw: &RawSet) -> Result<NormalizationRecord> {
    let offset = raw.elements[0];
    let shifted: Vec<i64> = raw
        .elements
        .iter()
        .map(|&e| e.checked_sub(offset).ok_or(Error::Overflow("normalization shift")))
        .collect::<Result<_>>()?;
    let scale = shifted.iter().fold(0i64, |g, &e| g.gcd(&e));
    debug_assert!(scale >= 1);
    let elements: Vec<i64> = shifted.iter().map(|&e| e / scale).collect();
    Ok(NormalizationRecord {
        normalized: NormalizedSet::new(elements)?,
        offset,
        scale,
    })
}

/// Map a sumset of the normalized set back to raw coordinates:
/// `n -> h*offset + scale*n`.
pub fn denormalize_sumset(record: &NormalizationRecord, h: u32, sums: &[i64]) -> Result<Vec<i64>> {
    if h == 0 {
        return Err(Error::ZeroFold);
    }
    let base = (h as i64)
        .checked_mul(record.offset)
        .ok_or(Error::Overflow("denormalization base"))?;
    sums.iter()
        .map(|&n| {
            record
                .scale
                .checked_mul(n)
                .and_then(|x| x.checked_add(base))
                .ok_or(Error::Overflow("denormalization"))
        })
        .collect()
}

/// Parse a comma-separated list of decimal integers, e.g. `0,2,3`.
/// Whitespace around entries is ignored. No sorting or deduplication
/// happens here; this reports the values exactly as written.
pub fn parse_set_literal(text: &str) -> Result<Vec<i64>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::ParseSetLiteral("empty input".into()));
    }
    trimmed
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| Error::ParseSetLiteral(format!("bad integer {tok:?}")))
        })
        .collect()
}

fn check_strictly_increasing(elements: &[i64]) -> Result<()> {
    if elements.len() < 2 {
        return Err(Error::TooFewElements(elements.len()));
    }
    for (i, pair) in elements.windows(2).enumerate() {
        if pair[0] >= pair[1] {
            return Err(Error::NotStrictlyIncreasing(i + 1));
        }
    }
    Ok(())
}
