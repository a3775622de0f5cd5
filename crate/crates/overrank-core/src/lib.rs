//! Exact computation of rank statistics for partitions and overpartitions.
//!
//! Everything here is integer-exact: series coefficients and table entries are
//! arbitrary-precision integers, and no floating point appears anywhere. The
//! crate provides two independent pipelines for the same counting functions —
//! truncated generating-function expansion ([`rank_gf`]) and brute-force
//! enumeration ([`partitions`]) — plus executable monotonicity and
//! nonnegativity checks over finite sweeps ([`verify`]).
//!
//! The statistics covered:
//! - the rank of an ordinary partition (largest part minus number of parts),
//! - the D-rank of an overpartition (same statistic, overlines ignored),
//! - the M2-rank of an overpartition (see [`partitions::OverPartition::m2_rank`]).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line front end live in the companion `overrank-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bivariate;
mod error;
pub mod partitions;
pub mod rank_gf;
pub mod series;
pub mod verify;

pub use error::Error;
pub use num_bigint::BigInt;

/// Which counting statistic a rank table represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankStatistic {
    /// Rank of ordinary partitions: largest part minus number of parts.
    Dyson,
    /// D-rank of overpartitions: largest part minus number of parts.
    DRank,
    /// M2-rank of overpartitions.
    M2Rank,
}

impl RankStatistic {
    /// Stable label used in table metadata and serialized output.
    pub fn label(self) -> &'static str {
        match self {
            RankStatistic::Dyson => "dyson",
            RankStatistic::DRank => "d-rank",
            RankStatistic::M2Rank => "m2-rank",
        }
    }
}

/// Rounding convention for the half-largest-part term of the M2-rank.
///
/// Two conventions are in circulation. Under `Floor` the two overpartitions
/// of 1 both get rank -1, which contradicts the M2 generating function
/// (whose coefficient of q^1 is 2·z^0) and breaks the m ↔ -m symmetry; under
/// `Ceiling` both get rank 0 and every generating-function identity checks
/// out. [`verify::adjudicate_m2_convention`] performs that adjudication at
/// run time; `Ceiling` is the expected outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum M2Convention {
    /// Use ⌊λ₁/2⌋.
    Floor,
    /// Use ⌈λ₁/2⌉.
    Ceiling,
}

impl M2Convention {
    /// Stable label used in serialized output.
    pub fn label(self) -> &'static str {
        match self {
            M2Convention::Floor => "floor",
            M2Convention::Ceiling => "ceiling",
        }
    }
}
