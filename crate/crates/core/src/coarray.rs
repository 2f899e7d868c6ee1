//! Integer set algebra over sensor positions.
//!
//! Positions are integers in units of d = λ/2, so all co-array arithmetic is
//! exact; there are no float set-membership tolerances anywhere in this
//! module. The difference co-array collects pairwise position differences,
//! the two sum co-arrays collect (signed) pairwise sums, and the SDCA is
//! their union. Each lag carries a weight counting the ordered sensor pairs
//! that generate it; the weights drive redundancy averaging downstream.

use std::collections::BTreeMap;
use std::io::{self, Write};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoarrayError {
    #[error("sensor array must contain at least one position")]
    Empty,
    #[error("duplicate sensor position {0}")]
    DuplicatePosition(i64),
    #[error("lag 0 missing from lag set; cannot extract a contiguous segment around 0")]
    MissingZeroLag,
}

/// Physical sensor positions in units of d = λ/2.
///
/// Stored strictly increasing with the first element normalized to 0, so two
/// arrays that differ only by a rigid shift compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SensorArray {
    positions: Vec<i64>,
}

impl SensorArray {
    /// Build from arbitrary distinct integer positions. The positions are
    /// sorted and shifted so the first sensor sits at 0.
    pub fn new(positions: impl IntoIterator<Item = i64>) -> Result<Self, CoarrayError> {
        let mut positions: Vec<i64> = positions.into_iter().collect();
        if positions.is_empty() {
            return Err(CoarrayError::Empty);
        }
        positions.sort_unstable();
        for w in positions.windows(2) {
            if w[0] == w[1] {
                return Err(CoarrayError::DuplicatePosition(w[0]));
            }
        }
        let origin = positions[0];
        for p in &mut positions {
            *p -= origin;
        }
        Ok(Self { positions })
    }

    pub fn positions(&self) -> &[i64] {
        &self.positions
    }

    /// Number of physical sensors.
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Largest position (array aperture in units of d).
    pub fn aperture(&self) -> i64 {
        *self.positions.last().expect("non-empty by construction")
    }
}

/// A set of integer virtual lags with a positive weight per lag.
///
/// The weight of a lag is the number of ordered sensor pairs that generate
/// it in the co-array the set came from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LagSet {
    weights: BTreeMap<i64, usize>,
}

impl LagSet {
    /// Count multiplicities over an iterator of generated lags.
    pub fn from_lags(lags: impl IntoIterator<Item = i64>) -> Self {
        let mut weights = BTreeMap::new();
        for lag in lags {
            *weights.entry(lag).or_insert(0) += 1;
        }
        Self { weights }
    }

    /// Lags in ascending order.
    pub fn lags(&self) -> impl Iterator<Item = i64> + '_ {
        self.weights.keys().copied()
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.lags().collect()
    }

    /// Ordered-pair count for `lag`; 0 when the lag is absent.
    pub fn weight(&self, lag: i64) -> usize {
        self.weights.get(&lag).copied().unwrap_or(0)
    }

    pub fn contains(&self, lag: i64) -> bool {
        self.weights.contains_key(&lag)
    }

    /// Number of distinct lags.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Sum of weights over all lags (equals N² for a single co-array).
    pub fn total_weight(&self) -> usize {
        self.weights.values().sum()
    }

    pub fn min_lag(&self) -> Option<i64> {
        self.weights.keys().next().copied()
    }

    pub fn max_lag(&self) -> Option<i64> {
        self.weights.keys().next_back().copied()
    }

    /// Merge another lag set into this one, adding weights.
    fn absorb(&mut self, other: &LagSet) {
        for (&lag, &w) in &other.weights {
            *self.weights.entry(lag).or_insert(0) += w;
        }
    }

    /// Restrict to lags for which `keep` returns true, preserving weights.
    fn filter(&self, mut keep: impl FnMut(i64) -> bool) -> LagSet {
        LagSet {
            weights: self
                .weights
                .iter()
                .filter(|(&lag, _)| keep(lag))
                .map(|(&lag, &w)| (lag, w))
                .collect(),
        }
    }

    /// Write the set as `lag,weight` CSV lines, ascending.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (&lag, &w) in &self.weights {
            writeln!(out, "{lag},{w}")?;
        }
        Ok(())
    }
}

/// Sign selector for the sum co-array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumSign {
    Positive,
    Negative,
}

/// Disjoint partition of the SDCA into truncated difference/sum parts.
///
/// `diff` keeps every difference lag; `sum_pos` the positive-sum lags not
/// already covered; `sum_neg` the negative-sum lags covered by neither.
/// Weights inside each part come from that part's own generating co-array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdcaPartition {
    pub diff: LagSet,
    pub sum_pos: LagSet,
    pub sum_neg: LagSet,
}

impl SdcaPartition {
    /// Union of the three parts as a plain lag list (weights summed).
    pub fn union(&self) -> LagSet {
        let mut u = self.diff.clone();
        u.absorb(&self.sum_pos);
        u.absorb(&self.sum_neg);
        u
    }
}

/// Precedence order used to make the SDCA partition disjoint.
///
/// `DiffFirst` is the canonical choice: a lag found in the difference
/// co-array stays there, keeping the additive-noise contribution confined to
/// difference lags. `SumFirst` gives positive-sum lags priority instead and
/// exists so tests can show the membership verdicts do not depend on the
/// choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precedence {
    DiffFirst,
    SumFirst,
}

/// All ordered pairwise differences x_p − x_q with multiplicities.
pub fn difference_coarray(arr: &SensorArray) -> LagSet {
    let pos = arr.positions();
    LagSet::from_lags(pos.iter().flat_map(|&p| pos.iter().map(move |&q| p - q)))
}

/// All ordered pairwise sums x_p + x_q (negated when `sign` is `Negative`).
pub fn sum_coarray(arr: &SensorArray, sign: SumSign) -> LagSet {
    let pos = arr.positions();
    let s = match sign {
        SumSign::Positive => 1,
        SumSign::Negative => -1,
    };
    LagSet::from_lags(
        pos.iter()
            .flat_map(|&p| pos.iter().map(move |&q| s * (p + q))),
    )
}

/// Union of the difference co-array and both signed sum co-arrays. The
/// weight of a lag is its total pair count across the three generating sets.
pub fn sdca(arr: &SensorArray) -> LagSet {
    let mut u = difference_coarray(arr);
    u.absorb(&sum_coarray(arr, SumSign::Positive));
    u.absorb(&sum_coarray(arr, SumSign::Negative));
    u
}

/// Canonical disjoint partition of the SDCA (difference-first precedence).
pub fn partition_sdca(arr: &SensorArray) -> SdcaPartition {
    partition_sdca_with(arr, Precedence::DiffFirst)
}

/// Disjoint partition of the SDCA under an explicit precedence order.
pub fn partition_sdca_with(arr: &SensorArray, precedence: Precedence) -> SdcaPartition {
    let diff = difference_coarray(arr);
    let sum_pos = sum_coarray(arr, SumSign::Positive);
    let sum_neg = sum_coarray(arr, SumSign::Negative);
    match precedence {
        Precedence::DiffFirst => {
            let sum_pos_kept = sum_pos.filter(|lag| !diff.contains(lag));
            let sum_neg_kept =
                sum_neg.filter(|lag| !diff.contains(lag) && !sum_pos.contains(lag));
            SdcaPartition {
                diff,
                sum_pos: sum_pos_kept,
                sum_neg: sum_neg_kept,
            }
        }
        Precedence::SumFirst => {
            let diff_kept = diff.filter(|lag| !sum_pos.contains(lag));
            let sum_neg_kept =
                sum_neg.filter(|lag| !sum_pos.contains(lag) && !diff.contains(lag));
            SdcaPartition {
                diff: diff_kept,
                sum_pos,
                sum_neg: sum_neg_kept,
            }
        }
    }
}

/// Maximal interval [lo, hi] around 0 whose every integer lag is present.
///
/// This is the virtual ULA usable by spatial smoothing. Errors when the set
/// does not contain lag 0.
pub fn contiguous_segment(lags: &LagSet) -> Result<(i64, i64), CoarrayError> {
    if !lags.contains(0) {
        return Err(CoarrayError::MissingZeroLag);
    }
    let mut lo = 0;
    while lags.contains(lo - 1) {
        lo -= 1;
    }
    let mut hi = 0;
    while lags.contains(hi + 1) {
        hi += 1;
    }
    Ok((lo, hi))
}
