//! h-fold sumsets with multiplicity: representation counts, threshold
//! sumsets, and their long-run fringe structure.
//!
//! For a finite integer set `A` and fold `h`, the threshold sumset
//! `(hA)^(t)` collects the integers that can be written as a sum of `h`
//! elements of `A` (repetition allowed, order ignored) in at least `t`
//! distinct ways. Once `h` is large enough, `(hA)^(t)` is an interval with
//! two stable fringes; this crate computes that structure, verifies it
//! against brute-force counts, and exposes the pieces: representation
//! tables ([`counting`]), fringe extraction and witnesses ([`structure`]),
//! reflection duality ([`duality`]), and deterministic sampling of test
//! sets ([`corpus`]).
//!
//! All analysis runs on normalized sets (minimum 0, gcd 1); [`sets`]
//! converts arbitrary inputs to that form and maps results back.

mod bits;
mod error;

pub mod corpus;
pub mod counting;
pub mod duality;
pub mod sets;
pub mod structure;

pub use error::{Error, Result};

pub use counting::{
    rep_count_oracle, rep_count_table, threshold_sumset, CountMode, RepCountTable,
    ThresholdSumset, ORACLE_BUDGET,
};
pub use corpus::sample_sets;
pub use duality::{check_duality, check_duality_sweep, dual_fringes, dual_set, DualPair};
pub use sets::{
    denormalize_sumset, normalize, parse_set_literal, NormalizationRecord, NormalizedSet, RawSet,
};
pub use structure::{
    check_inclusion_lemma, check_inclusion_lemma_sweep, check_interval_lemma,
    check_interval_lemma_sweep, construct_witnesses, empirical_onset, extract_fringes,
    frobenius_number, frobenius_sequence, predict_sumset, threshold_bounds, verify_structure,
    FringeOutcome, FringeReport, FringeStructure, StructureCertificate, ThresholdBounds,
    WitnessSet,
};
