//! Waveform, channel, and processor models feeding the SC metric formulas.
//!
//! These types hold the concrete numbers (bits per symbol B, symbol period
//! T_sym, bandwidth W, instruction count T(N), processor rate I) that the
//! `metrics` module consumes. The complexity catalog pairs each named
//! baseband algorithm with both an exact instruction-count evaluator and
//! the symbolic [`GrowthFn`] used for asymptotic classification.

use crate::error::{Error, Result};
use crate::growth::GrowthFn;

/// OFDM-style waveform: `n` subcarriers at `delta_f_hz` spacing, each
/// carrying a log2(m)-bit constellation symbol. The symbol period is the
/// OFDM reciprocal `1 / delta_f_hz`; cyclic prefix is not modeled.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveformModel {
    name: String,
    n_subcarriers: u64,
    subcarrier_spacing_hz: f64,
    constellation_order: u64,
    symbol_period_s: f64,
}

impl WaveformModel {
    pub fn new(name: &str, n_subcarriers: u64, subcarrier_spacing_hz: f64, m: u64) -> Result<Self> {
        if n_subcarriers < 1 {
            return Err(Error::InvalidWaveform(
                "subcarrier count must be at least 1".into(),
            ));
        }
        if !subcarrier_spacing_hz.is_finite() || subcarrier_spacing_hz <= 0.0 {
            return Err(Error::InvalidWaveform(format!(
                "subcarrier spacing must be positive, got {subcarrier_spacing_hz}"
            )));
        }
        // validates that m is a power of two >= 2
        ofdm_bits(n_subcarriers, m)?;
        Ok(Self {
            name: name.to_string(),
            n_subcarriers,
            subcarrier_spacing_hz,
            constellation_order: m,
            symbol_period_s: 1.0 / subcarrier_spacing_hz,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_subcarriers(&self) -> u64 {
        self.n_subcarriers
    }

    pub fn subcarrier_spacing_hz(&self) -> f64 {
        self.subcarrier_spacing_hz
    }

    pub fn constellation_order(&self) -> u64 {
        self.constellation_order
    }

    pub fn symbol_period_s(&self) -> f64 {
        self.symbol_period_s
    }

    /// Bits carried by one OFDM symbol: N * log2(M).
    pub fn bits_per_symbol(&self) -> u64 {
        ofdm_bits(self.n_subcarriers, self.constellation_order)
            .expect("constellation order was validated at construction")
    }

    /// Occupied bandwidth W = N * delta_f.
    pub fn bandwidth_hz(&self) -> f64 {
        ofdm_bandwidth(self.n_subcarriers, self.subcarrier_spacing_hz)
    }
}

/// AWGN channel: bandwidth, received power, and one-sided noise density.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelModel {
    bandwidth_hz: f64,
    rx_power_w: f64,
    noise_psd_w_per_hz: f64,
}

impl ChannelModel {
    pub fn new(bandwidth_hz: f64, rx_power_w: f64, noise_psd_w_per_hz: f64) -> Result<Self> {
        for (label, v) in [
            ("bandwidth", bandwidth_hz),
            ("received power", rx_power_w),
            ("noise density", noise_psd_w_per_hz),
        ] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidValue {
                    key: label.to_string(),
                    reason: format!("must be positive, got {v}"),
                });
            }
        }
        Ok(Self {
            bandwidth_hz,
            rx_power_w,
            noise_psd_w_per_hz,
        })
    }

    pub fn bandwidth_hz(&self) -> f64 {
        self.bandwidth_hz
    }

    pub fn rx_power_w(&self) -> f64 {
        self.rx_power_w
    }

    pub fn noise_psd_w_per_hz(&self) -> f64 {
        self.noise_psd_w_per_hz
    }

    pub fn snr(&self) -> f64 {
        crate::metrics::snr(self.rx_power_w, self.bandwidth_hz, self.noise_psd_w_per_hz)
    }
}

/// Baseband processor executing `instr_per_s` instructions per second.
#[derive(Debug, Clone, PartialEq)]
pub struct BasebandProcessor {
    instr_per_s: f64,
}

impl BasebandProcessor {
    pub fn new(instr_per_s: f64) -> Result<Self> {
        if !instr_per_s.is_finite() || instr_per_s <= 0.0 {
            return Err(Error::InvalidValue {
                key: "processor.instr_per_s".to_string(),
                reason: format!("must be positive, got {instr_per_s}"),
            });
        }
        Ok(Self { instr_per_s })
    }

    pub fn instr_per_s(&self) -> f64 {
        self.instr_per_s
    }

    /// Per-instruction runtime t = 1/I.
    pub fn t_per_instr_s(&self) -> f64 {
        1.0 / self.instr_per_s
    }
}

/// Instruction-count shape of a named baseband algorithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComplexityKind {
    /// Direct DFT evaluation, N^2 instructions.
    DftNaive,
    /// Radix-2 FFT, N*log2 N instructions; power-of-two N only.
    FftRadix2,
    /// Hypothetical linear-time DFT, c*N instructions.
    LinearConjecture(f64),
    /// Least-squares channel detector, N instructions.
    LsDetector,
}

/// Named instruction-count function: exact evaluator plus the matching
/// symbolic growth function. The two agree exactly on every supported N.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityModel {
    name: String,
    kind: ComplexityKind,
    symbolic: GrowthFn,
}

impl ComplexityModel {
    pub fn new(kind: ComplexityKind) -> Result<Self> {
        let (name, symbolic) = match kind {
            ComplexityKind::DftNaive => ("dft_naive", GrowthFn::quadratic(1.0)?),
            ComplexityKind::FftRadix2 => ("fft_radix2", GrowthFn::n_log_n(1.0)?),
            ComplexityKind::LinearConjecture(c) => {
                if !c.is_finite() || c <= 0.0 {
                    return Err(Error::InvalidValue {
                        key: "complexity.linear_c".to_string(),
                        reason: format!("must be positive, got {c}"),
                    });
                }
                ("dft_linear_conjecture", GrowthFn::linear(c)?)
            }
            ComplexityKind::LsDetector => ("ls_detector", GrowthFn::linear(1.0)?),
        };
        Ok(Self {
            name: name.to_string(),
            kind,
            symbolic,
        })
    }

    /// Look up a catalog model by name. `linear_c` applies only to
    /// `dft_linear_conjecture` (default 1 when absent).
    pub fn by_name(name: &str, linear_c: Option<f64>) -> Result<Self> {
        let kind = match name {
            "dft_naive" => ComplexityKind::DftNaive,
            "fft_radix2" => ComplexityKind::FftRadix2,
            "dft_linear_conjecture" => ComplexityKind::LinearConjecture(linear_c.unwrap_or(1.0)),
            "ls_detector" => ComplexityKind::LsDetector,
            _ => return Err(Error::UnknownModel(name.to_string())),
        };
        if linear_c.is_some() && !matches!(kind, ComplexityKind::LinearConjecture(_)) {
            return Err(Error::InvalidValue {
                key: "complexity.linear_c".to_string(),
                reason: format!("only valid for model `dft_linear_conjecture`, not `{name}`"),
            });
        }
        Self::new(kind)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ComplexityKind {
        self.kind
    }

    pub fn symbolic(&self) -> &GrowthFn {
        &self.symbolic
    }

    /// Whether `n` is in the model's domain.
    pub fn supports(&self, n: u64) -> bool {
        match self.kind {
            ComplexityKind::FftRadix2 => n.is_power_of_two(),
            _ => n >= 1,
        }
    }

    /// Exact instruction count at `n`. Integer-valued for every catalog
    /// entry with an integer coefficient.
    pub fn instruction_count(&self, n: u64) -> Result<f64> {
        match self.kind {
            ComplexityKind::DftNaive => Ok(n as f64 * n as f64),
            ComplexityKind::FftRadix2 => {
                if !n.is_power_of_two() {
                    return Err(Error::NotPowerOfTwo(n));
                }
                Ok((n * u64::from(n.trailing_zeros())) as f64)
            }
            ComplexityKind::LinearConjecture(c) => Ok(c * n as f64),
            ComplexityKind::LsDetector => Ok(n as f64),
        }
    }
}

/// All built-in complexity models, with c = 1 for the linear conjecture.
pub fn complexity_catalog() -> Vec<ComplexityModel> {
    vec![
        ComplexityModel::new(ComplexityKind::DftNaive).expect("valid catalog entry"),
        ComplexityModel::new(ComplexityKind::FftRadix2).expect("valid catalog entry"),
        ComplexityModel::new(ComplexityKind::LinearConjecture(1.0)).expect("valid catalog entry"),
        ComplexityModel::new(ComplexityKind::LsDetector).expect("valid catalog entry"),
    ]
}

/// Bits per OFDM symbol: N * log2(M). M must be a power of two >= 2.
pub fn ofdm_bits(n: u64, m: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::InvalidWaveform(
            "subcarrier count must be at least 1".into(),
        ));
    }
    if m < 2 || !m.is_power_of_two() {
        return Err(Error::InvalidWaveform(format!(
            "constellation order must be a power of two >= 2, got {m}"
        )));
    }
    Ok(n * u64::from(m.trailing_zeros()))
}

/// Occupied bandwidth W = N * delta_f in Hz.
pub fn ofdm_bandwidth(n: u64, delta_f_hz: f64) -> f64 {
    debug_assert!(n >= 1 && delta_f_hz > 0.0);
    n as f64 * delta_f_hz
}

/// Minimum processor rate keeping the compute time within one symbol
/// period: T_instr / T_sym. Units follow the inputs (instructions per
/// whatever unit `t_sym` is expressed in).
pub fn min_processor_rate(instr_count: f64, t_sym: f64) -> f64 {
    debug_assert!(instr_count > 0.0 && t_sym > 0.0);
    instr_count / t_sym
}
