//! Sparse-array DOA estimation laboratory built around the sum-difference
//! co-array (SDCA) of a linear sparse array.
//!
//! The crate covers the full second-order processing chain for noncircular
//! (real-valued) sources:
//!
//! - [`coarray`] — integer set algebra over sensor positions: difference and
//!   sum co-arrays, the SDCA union, its disjoint partition, and the
//!   contiguous virtual-ULA segment.
//! - [`signal`] — snapshot generation for the simplified model and for the
//!   practical model that carries a per-source initial carrier phase.
//! - [`covariance`] — sample/population covariance and pseudo-covariance,
//!   vectorization with virtual-lag tags, and assembly of the virtual-array
//!   signal with redundancy averaging and noise subtraction.
//! - [`span`] — the least-squares membership test deciding whether the
//!   truncated virtual data stays inside the span of the stacked SDCA
//!   steering columns, and the phase sweep exposing when it does not.
//! - [`music`] — spatial smoothing, the MUSIC pseudospectrum on the virtual
//!   ULA, peak picking, and the RMSE metric.
//! - [`harness`] — reproducible Monte Carlo SNR sweeps comparing the two
//!   signal models, with CSV output.
//!
//! Every stage is deterministic given its seed, so whole sweeps reproduce
//! byte-for-byte.

pub mod coarray;
pub mod covariance;
pub mod harness;
pub mod linalg;
pub mod music;
pub mod signal;
pub mod span;

pub use coarray::{
    contiguous_segment, difference_coarray, partition_sdca, sdca, sum_coarray, LagSet,
    SdcaPartition, SensorArray, SumSign,
};
pub use covariance::{
    assemble_virtual_signal, population_stats, sample_stats, vectorize_stacked, SecondOrderStats,
    SigmaMode, TaggedVector, VirtualSignal,
};
pub use harness::{run_sweep, run_trial, ExperimentConfig, SweepResult, TrialOutcome};
pub use music::{
    music_spectrum, pick_peaks, rmse, spatial_smooth, DoaEstimate, MusicConfig, MusicEstimator,
    Pseudospectrum,
};
pub use signal::{generate_snapshots, steering_vector, Scenario, SignalModel, SnapshotBlock};
pub use span::{build_phi_bars, phase_sweep, span_residual, PhiBars, SpanTestReport};
