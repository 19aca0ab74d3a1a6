//! Spectro-computational (SC) analysis of waveforms.
//!
//! Classic link metrics charge a waveform only for airtime; this crate
//! also charges it for the baseband computation needed to produce or
//! decode each symbol, and asks whether computation scales along with
//! spectrum. It provides:
//!
//! * [`growth`]: exact symbolic poly-log growth functions with decidable
//!   asymptotic comparison (the order-of-growth algebra everything else
//!   builds on)
//! * [`waveform`]: OFDM waveform, channel, processor, and instruction
//!   count models
//! * [`metrics`]: complexity-aware throughput, efficiency, and capacity
//!   formulas plus subcarrier sweeps
//! * [`classifier`]: scalability and comp-limited verdicts decided
//!   symbolically
//! * [`dft`]: instrumented naive DFT and radix-2 FFT with exact operation
//!   counts
//! * [`bench`]: wall-clock measurement, processor calibration, and growth
//!   model fitting
//! * [`scenario`]: key-value scenario files binding the pieces together
//!
//! The `parallel` feature (on by default) runs batch transforms and
//! sweeps on a rayon pool; `--no-default-features` gives a dependency-free
//! sequential build with identical results.

pub mod bench;
pub mod classifier;
pub mod dft;
pub mod error;
pub mod growth;
pub mod metrics;
pub mod scenario;
pub mod waveform;

pub use bench::{
    calibrate_processor, fit_growth, fit_growth_points, measure, BenchSample, FitResult,
    GrowthShape,
};
pub use classifier::{
    classify_ofdm, comp_limited, sc_capacity_limit, scalability, CapacityLimit, CapacityQuery,
    DftConjecture, Verdict,
};
pub use dft::{
    batch_execute, batch_execute_seq, dft_naive, fft_radix2, max_rel_deviation, random_vectors,
    Complex64, DftImpl, NaiveDftPlan, OpCount, Radix2Plan,
};
pub use error::{Error, Result};
pub use growth::{AsymRelation, Exponent, GrowthFn, GrowthTerm};
pub use metrics::{
    alg_throughput, classic_rate, classic_se, full_report, pow2_range, r_comp, sc_efficiency,
    sc_throughput, shannon_capacity, snr, sweep_over, sweep_over_seq, sweep_sc_throughput, t_comp,
    ScReport, SweepPoint,
};
pub use scenario::Scenario;
pub use waveform::{
    complexity_catalog, min_processor_rate, ofdm_bandwidth, ofdm_bits, BasebandProcessor,
    ChannelModel, ComplexityKind, ComplexityModel, WaveformModel,
};
