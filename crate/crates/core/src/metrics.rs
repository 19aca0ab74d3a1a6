//! Spectro-computational (SC) metric formulas.
//!
//! Classic link metrics treat the symbol airtime T_sym as the only cost of
//! delivering B bits. The SC metrics add the baseband computation time
//! T_comp = T(N)/I, where T(N) is the algorithm's instruction count and I
//! the processor rate:
//!
//! * algorithmic throughput  A = I*B/T(N)           (computation only)
//! * SC throughput           SC_R = B/(T(N)/I + T_sym)
//! * SC efficiency           SC_SE = SC_R/W
//!
//! `r_comp` expresses the same throughput via the per-instruction runtime
//! t = 1/I; it is kept as a separate code path so the two formulations can
//! be checked against each other instead of trivially agreeing.
//!
//! All functions take SI units (seconds, Hz, bits/s) and are pure; domain
//! violations are caught by debug assertions rather than `Result`s since
//! every formula is total over the positive reals.

use crate::error::{Error, Result};
use crate::waveform::{
    ofdm_bandwidth, ofdm_bits, BasebandProcessor, ChannelModel, ComplexityModel, WaveformModel,
};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// AWGN channel capacity W*log2(1 + snr) in bits/s. `snr = 0` is accepted
/// at the boundary and yields 0.
pub fn shannon_capacity(bandwidth_hz: f64, snr: f64) -> f64 {
    debug_assert!(bandwidth_hz > 0.0 && snr >= 0.0);
    bandwidth_hz * (1.0 + snr).log2()
}

/// Signal-to-noise ratio P/(W*N0).
pub fn snr(power_w: f64, bandwidth_hz: f64, n0_w_per_hz: f64) -> f64 {
    debug_assert!(power_w > 0.0 && bandwidth_hz > 0.0 && n0_w_per_hz > 0.0);
    power_w / (bandwidth_hz * n0_w_per_hz)
}

/// Classic data rate B/T_sym in bits/s.
pub fn classic_rate(bits: u64, t_sym_s: f64) -> f64 {
    debug_assert!(bits >= 1 && t_sym_s > 0.0);
    bits as f64 / t_sym_s
}

/// Spectral efficiency R/W in bits/s/Hz.
pub fn classic_se(rate_bps: f64, bandwidth_hz: f64) -> f64 {
    debug_assert!(bandwidth_hz > 0.0);
    rate_bps / bandwidth_hz
}

/// Baseband processing runtime T(N)/I in seconds.
pub fn t_comp(instr_count: f64, instr_per_s: f64) -> f64 {
    debug_assert!(instr_count > 0.0 && instr_per_s > 0.0);
    instr_count / instr_per_s
}

/// Algorithmic throughput I*B/T(N) in bits/s: rate sustained when only
/// computation matters (T_sym = 0).
pub fn alg_throughput(bits: u64, instr_count: f64, instr_per_s: f64) -> f64 {
    debug_assert!(bits >= 1 && instr_count > 0.0 && instr_per_s > 0.0);
    instr_per_s * bits as f64 / instr_count
}

/// SC throughput B/(T(N)/I + T_sym) in bits/s. Either time share may be
/// zero (not both), which recovers `classic_rate` or `alg_throughput`.
pub fn sc_throughput(bits: u64, instr_count: f64, instr_per_s: f64, t_sym_s: f64) -> f64 {
    debug_assert!(bits >= 1 && instr_count >= 0.0 && instr_per_s > 0.0 && t_sym_s >= 0.0);
    debug_assert!(instr_count > 0.0 || t_sym_s > 0.0);
    bits as f64 / (instr_count / instr_per_s + t_sym_s)
}

/// Throughput with per-instruction runtime t: B/(t*T(N) + T_sym) in
/// bits/s. Agrees with [`sc_throughput`] at t = 1/I up to rounding.
pub fn r_comp(bits: u64, t_per_instr_s: f64, instr_count: f64, t_sym_s: f64) -> f64 {
    debug_assert!(bits >= 1 && t_per_instr_s >= 0.0 && instr_count >= 0.0 && t_sym_s >= 0.0);
    bits as f64 / (t_per_instr_s * instr_count + t_sym_s)
}

/// SC efficiency SC_R/W in bits/s/Hz.
pub fn sc_efficiency(sc_rate_bps: f64, bandwidth_hz: f64) -> f64 {
    debug_assert!(bandwidth_hz > 0.0);
    sc_rate_bps / bandwidth_hz
}

/// Every metric computed for one scenario. Channel-dependent fields are
/// `None` when no channel was specified.
#[derive(Debug, Clone, PartialEq)]
pub struct ScReport {
    pub scenario: String,
    pub n: u64,
    pub m: u64,
    pub delta_f_hz: f64,
    pub instr_per_s: f64,
    pub model: String,
    pub bits_per_symbol: u64,
    pub instr_count: f64,
    pub bandwidth_hz: f64,
    pub symbol_period_s: f64,
    pub t_comp_s: f64,
    pub alg_throughput_bps: f64,
    pub sc_throughput_bps: f64,
    pub sc_efficiency_bps_hz: f64,
    pub classic_rate_bps: f64,
    pub classic_se_bps_hz: f64,
    pub r_comp_bps: f64,
    pub snr: Option<f64>,
    pub shannon_capacity_bps: Option<f64>,
}

/// Compute the full metric set for one waveform/processor/complexity
/// combination. The channel is optional; it only feeds SNR and Shannon
/// capacity.
pub fn full_report(
    waveform: &WaveformModel,
    channel: Option<&ChannelModel>,
    processor: &BasebandProcessor,
    complexity: &ComplexityModel,
) -> Result<ScReport> {
    let bits = waveform.bits_per_symbol();
    let instr_count = complexity.instruction_count(waveform.n_subcarriers())?;
    let bandwidth_hz = waveform.bandwidth_hz();
    let t_sym_s = waveform.symbol_period_s();
    let i_rate = processor.instr_per_s();

    let sc = sc_throughput(bits, instr_count, i_rate, t_sym_s);
    let classic = classic_rate(bits, t_sym_s);
    let (snr_v, capacity) = match channel {
        Some(ch) => {
            let s = ch.snr();
            (Some(s), Some(shannon_capacity(ch.bandwidth_hz(), s)))
        }
        None => (None, None),
    };

    Ok(ScReport {
        scenario: waveform.name().to_string(),
        n: waveform.n_subcarriers(),
        m: waveform.constellation_order(),
        delta_f_hz: waveform.subcarrier_spacing_hz(),
        instr_per_s: i_rate,
        model: complexity.name().to_string(),
        bits_per_symbol: bits,
        instr_count,
        bandwidth_hz,
        symbol_period_s: t_sym_s,
        t_comp_s: t_comp(instr_count, i_rate),
        alg_throughput_bps: alg_throughput(bits, instr_count, i_rate),
        sc_throughput_bps: sc,
        sc_efficiency_bps_hz: sc_efficiency(sc, bandwidth_hz),
        classic_rate_bps: classic,
        classic_se_bps_hz: classic_se(classic, bandwidth_hz),
        r_comp_bps: r_comp(bits, processor.t_per_instr_s(), instr_count, t_sym_s),
        snr: snr_v,
        shannon_capacity_bps: capacity,
    })
}

/// One row of a subcarrier-count sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub n: u64,
    pub sc_throughput_bps: f64,
    pub sc_efficiency_bps_hz: f64,
}

/// Powers of two within `[n_min, n_max]`, the sweep grid.
pub fn pow2_range(n_min: u64, n_max: u64) -> Result<Vec<u64>> {
    if n_min > n_max {
        return Err(Error::InvalidRange(format!(
            "n_min ({n_min}) exceeds n_max ({n_max})"
        )));
    }
    let mut grid = Vec::new();
    let mut n: u64 = 2;
    while n <= n_max {
        if n >= n_min {
            grid.push(n);
        }
        match n.checked_mul(2) {
            Some(next) => n = next,
            None => break,
        }
    }
    if grid.is_empty() {
        return Err(Error::InvalidRange(format!(
            "no power of two >= 2 inside [{n_min}, {n_max}]"
        )));
    }
    Ok(grid)
}

fn sweep_point(
    n: u64,
    m: u64,
    delta_f_hz: f64,
    instr_per_s: f64,
    complexity: &ComplexityModel,
) -> Result<SweepPoint> {
    let bits = ofdm_bits(n, m)?;
    let instr_count = complexity.instruction_count(n)?;
    let t_sym_s = 1.0 / delta_f_hz;
    let sc = sc_throughput(bits, instr_count, instr_per_s, t_sym_s);
    Ok(SweepPoint {
        n,
        sc_throughput_bps: sc,
        sc_efficiency_bps_hz: sc_efficiency(sc, ofdm_bandwidth(n, delta_f_hz)),
    })
}

/// Evaluate SC throughput/efficiency at each listed subcarrier count,
/// sequentially.
pub fn sweep_over_seq(
    ns: &[u64],
    m: u64,
    delta_f_hz: f64,
    instr_per_s: f64,
    complexity: &ComplexityModel,
) -> Result<Vec<SweepPoint>> {
    ns.iter()
        .map(|&n| sweep_point(n, m, delta_f_hz, instr_per_s, complexity))
        .collect()
}

/// Evaluate SC throughput/efficiency at each listed subcarrier count,
/// fanning out across threads when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn sweep_over(
    ns: &[u64],
    m: u64,
    delta_f_hz: f64,
    instr_per_s: f64,
    complexity: &ComplexityModel,
) -> Result<Vec<SweepPoint>> {
    ns.par_iter()
        .map(|&n| sweep_point(n, m, delta_f_hz, instr_per_s, complexity))
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub fn sweep_over(
    ns: &[u64],
    m: u64,
    delta_f_hz: f64,
    instr_per_s: f64,
    complexity: &ComplexityModel,
) -> Result<Vec<SweepPoint>> {
    sweep_over_seq(ns, m, delta_f_hz, instr_per_s, complexity)
}

/// Sweep over all powers of two in `[n_min, n_max]`.
pub fn sweep_sc_throughput(
    m: u64,
    delta_f_hz: f64,
    instr_per_s: f64,
    complexity: &ComplexityModel,
    n_min: u64,
    n_max: u64,
) -> Result<Vec<SweepPoint>> {
    let grid = pow2_range(n_min, n_max)?;
    sweep_over(&grid, m, delta_f_hz, instr_per_s, complexity)
}
