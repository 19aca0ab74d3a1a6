//! Measurement harness tying the instrumented transforms back to the
//! symbolic complexity models.
//!
//! [`measure`] runs one implementation at one size and records the exact
//! operation counts plus a median wall time; [`calibrate_processor`] turns
//! such samples into an empirical processor rate; [`fit_growth`] selects
//! which of the three candidate shapes (linear, N*log2 N, quadratic)
//! generated a set of counts. Fitting uses least squared log-residuals so
//! the decision is scale-free, and reports a free log-log slope purely as
//! a diagnostic.

use std::time::Instant;

use crate::dft::{random_vectors, DftImpl, OpCount};
use crate::error::{Error, Result};
use crate::growth::GrowthFn;

/// One benchmark observation: exact counts and a median wall time.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchSample {
    pub impl_name: String,
    pub n: u64,
    pub op_count_mul: u64,
    pub op_count_add: u64,
    pub wall_time_s: f64,
    pub reps: u32,
}

impl BenchSample {
    /// Total counted complex operations.
    pub fn op_count(&self) -> u64 {
        self.op_count_mul + self.op_count_add
    }
}

/// Run `imp` at size `n`, `reps >= 3` times on one seeded input vector.
/// The plan and input are prepared outside the timed region; each rep
/// times only the transform itself, and the reported wall time is the
/// median.
pub fn measure(imp: DftImpl, n: u64, reps: u32, seed: u64) -> Result<BenchSample> {
    if reps < 3 {
        return Err(Error::InsufficientSamples(format!(
            "need at least 3 repetitions, got {reps}"
        )));
    }
    if !imp.supports(n) {
        return match imp {
            DftImpl::Radix2 => Err(Error::NotPowerOfTwo(n)),
            DftImpl::Naive => Err(Error::InvalidRange(format!(
                "DFT length must be at least 1, got {n}"
            ))),
        };
    }
    let input = random_vectors(seed, n as usize, 1).remove(0);

    let mut times = Vec::with_capacity(reps as usize);
    let mut ops: Option<OpCount> = None;
    for _ in 0..reps {
        let start = Instant::now();
        let (_, count) = imp.execute(&input)?;
        times.push(start.elapsed().as_secs_f64());
        match ops {
            None => ops = Some(count),
            Some(prev) => debug_assert_eq!(prev, count, "op counts must be deterministic"),
        }
    }
    let ops = ops.expect("reps >= 3 guarantees at least one execution");

    Ok(BenchSample {
        impl_name: imp.name().to_string(),
        n,
        op_count_mul: ops.mul,
        op_count_add: ops.add,
        wall_time_s: median(&mut times),
        reps,
    })
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        0.5 * (values[mid - 1] + values[mid])
    }
}

/// Empirical processor rate: median of op_count/wall_time over at least
/// three samples of a single implementation.
pub fn calibrate_processor(samples: &[BenchSample]) -> Result<f64> {
    if samples.len() < 3 {
        return Err(Error::InsufficientSamples(format!(
            "calibration needs at least 3 samples, got {}",
            samples.len()
        )));
    }
    let first = &samples[0].impl_name;
    if samples.iter().any(|s| &s.impl_name != first) {
        return Err(Error::InsufficientSamples(
            "calibration samples must come from a single implementation".into(),
        ));
    }
    let mut rates: Vec<f64> = samples
        .iter()
        .map(|s| s.op_count() as f64 / s.wall_time_s)
        .collect();
    Ok(median(&mut rates))
}

/// Candidate growth shapes for fitting measured counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthShape {
    Linear,
    NLogN,
    Quadratic,
}

impl GrowthShape {
    pub const ALL: [GrowthShape; 3] = [GrowthShape::Linear, GrowthShape::NLogN, GrowthShape::Quadratic];

    pub fn name(&self) -> &'static str {
        match self {
            GrowthShape::Linear => "linear",
            GrowthShape::NLogN => "nlogn",
            GrowthShape::Quadratic => "quadratic",
        }
    }

    /// Unit-coefficient shape value at `n`.
    fn base(&self, n: u64) -> f64 {
        let x = n as f64;
        match self {
            GrowthShape::Linear => x,
            GrowthShape::NLogN => x * x.log2(),
            GrowthShape::Quadratic => x * x,
        }
    }

    /// The shape as a symbolic growth function with coefficient `c`.
    pub fn growth_fn(&self, c: f64) -> Result<GrowthFn> {
        match self {
            GrowthShape::Linear => GrowthFn::linear(c),
            GrowthShape::NLogN => GrowthFn::n_log_n(c),
            GrowthShape::Quadratic => GrowthFn::quadratic(c),
        }
    }
}

/// Outcome of model fitting.
#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub best_model: GrowthShape,
    pub fitted_coeff: f64,
    /// Sum of squared log-residuals of the winning shape.
    pub residual: f64,
    /// Free least-squares slope of ln(count) vs ln(N); diagnostic only.
    pub loglog_slope: f64,
}

/// Fit counted multiplications against the three candidate shapes.
pub fn fit_growth(samples: &[BenchSample]) -> Result<FitResult> {
    let points: Vec<(u64, f64)> = samples
        .iter()
        .map(|s| (s.n, s.op_count_mul as f64))
        .collect();
    fit_growth_points(&points)
}

/// Fit arbitrary (N, count) points. Requires at least 4 distinct N >= 2
/// spanning at least an 8x range, so the three shapes separate cleanly.
pub fn fit_growth_points(points: &[(u64, f64)]) -> Result<FitResult> {
    let mut distinct: Vec<u64> = points.iter().map(|&(n, _)| n).collect();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < 4 {
        return Err(Error::InsufficientSamples(format!(
            "need at least 4 samples with distinct N, got {}",
            distinct.len()
        )));
    }
    let min_n = distinct[0];
    let max_n = *distinct.last().expect("non-empty");
    if min_n < 2 {
        return Err(Error::InvalidRange(format!(
            "fitting requires N >= 2, got {min_n}"
        )));
    }
    if (max_n as f64) < 8.0 * min_n as f64 {
        return Err(Error::RangeTooNarrow);
    }
    for &(n, y) in points {
        if !(y > 0.0) || !y.is_finite() {
            return Err(Error::InvalidRange(format!(
                "counts must be positive and finite, got {y} at N = {n}"
            )));
        }
    }

    let mut best: Option<(GrowthShape, f64, f64)> = None;
    for shape in GrowthShape::ALL {
        // log-residuals against the unit shape; their mean is ln(coeff)
        let logs: Vec<f64> = points
            .iter()
            .map(|&(n, y)| (y / shape.base(n)).ln())
            .collect();
        let mean = logs.iter().sum::<f64>() / logs.len() as f64;
        let residual = logs.iter().map(|r| (r - mean).powi(2)).sum::<f64>();
        let better = match &best {
            None => true,
            Some((_, _, best_res)) => residual < *best_res,
        };
        if better {
            best = Some((shape, mean.exp(), residual));
        }
    }
    let (best_model, fitted_coeff, residual) = best.expect("three candidates were scored");

    Ok(FitResult {
        best_model,
        fitted_coeff,
        residual,
        loglog_slope: loglog_slope(points),
    })
}

fn loglog_slope(points: &[(u64, f64)]) -> f64 {
    let k = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(n, y) in points {
        let lx = (n as f64).ln();
        let ly = y.ln();
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    (k * sxy - sx * sy) / (k * sxx - sx * sx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn measure_naive_64() {
        let s = measure(DftImpl::Naive, 64, 3, 1).unwrap();
        assert_eq!(s.op_count_mul, 4096);
        assert_eq!(s.op_count_add, 64 * 63);
        assert!(s.wall_time_s > 0.0);
        assert_eq!(s.impl_name, "dft_naive");
    }

    #[test]
    fn measure_fft_64() {
        let s = measure(DftImpl::Radix2, 64, 3, 1).unwrap();
        assert_eq!(s.op_count_mul, 192);
        assert_eq!(s.op_count_add, 384);
        assert_eq!(s.op_count(), 576);
    }

    #[test]
    fn measure_validates_inputs() {
        assert!(measure(DftImpl::Naive, 64, 2, 1).is_err());
        assert!(measure(DftImpl::Radix2, 100, 3, 1).is_err());
    }

    #[test]
    fn measure_op_counts_are_deterministic() {
        let a = measure(DftImpl::Radix2, 256, 3, 9).unwrap();
        let b = measure(DftImpl::Radix2, 256, 5, 9).unwrap();
        assert_eq!(a.op_count_mul, b.op_count_mul);
        assert_eq!(a.op_count_add, b.op_count_add);
    }

    #[test]
    fn calibrate_synthetic() {
        let sample = |n: u64| BenchSample {
            impl_name: "dft_naive".into(),
            n,
            op_count_mul: 1000,
            op_count_add: 0,
            wall_time_s: 1e-6,
            reps: 3,
        };
        let samples: Vec<BenchSample> = (1..=4).map(|i| sample(i * 64)).collect();
        assert_eq!(calibrate_processor(&samples).unwrap(), 1e9);
    }

    #[test]
    fn calibrate_rejects_bad_sample_sets() {
        let one = BenchSample {
            impl_name: "dft_naive".into(),
            n: 64,
            op_count_mul: 1,
            op_count_add: 0,
            wall_time_s: 1.0,
            reps: 3,
        };
        assert!(calibrate_processor(&[one.clone(), one.clone()]).is_err());
        let mut other = one.clone();
        other.impl_name = "fft_radix2".into();
        assert!(calibrate_processor(&[one.clone(), one, other]).is_err());
    }

    #[test]
    fn fit_recovers_quadratic_from_naive_counts() {
        let points: Vec<(u64, f64)> = [64u64, 128, 256, 512]
            .iter()
            .map(|&n| (n, (n * n) as f64))
            .collect();
        let fit = fit_growth_points(&points).unwrap();
        assert_eq!(fit.best_model, GrowthShape::Quadratic);
        assert_relative_eq!(fit.fitted_coeff, 1.0, max_relative = 1e-9);
        assert_relative_eq!(fit.loglog_slope, 2.0, max_relative = 1e-9);
    }

    #[test]
    fn fit_recovers_nlogn_from_fft_mult_counts() {
        let points: Vec<(u64, f64)> = [64u64, 128, 256, 512]
            .iter()
            .map(|&n| (n, (n / 2 * u64::from(n.trailing_zeros())) as f64))
            .collect();
        let fit = fit_growth_points(&points).unwrap();
        assert_eq!(fit.best_model, GrowthShape::NLogN);
        assert_relative_eq!(fit.fitted_coeff, 0.5, max_relative = 1e-9);
    }

    #[test]
    fn fit_recovers_linear_synthetic() {
        let points: Vec<(u64, f64)> = [16u64, 64, 256, 1024]
            .iter()
            .map(|&n| (n, 3.0 * n as f64))
            .collect();
        let fit = fit_growth_points(&points).unwrap();
        assert_eq!(fit.best_model, GrowthShape::Linear);
        assert_relative_eq!(fit.fitted_coeff, 3.0, max_relative = 1e-9);
    }

    #[test]
    fn fit_rejects_narrow_or_sparse_ranges() {
        let narrow: Vec<(u64, f64)> = [64u64, 96, 128, 256]
            .iter()
            .map(|&n| (n, n as f64))
            .collect();
        assert!(matches!(
            fit_growth_points(&narrow),
            Err(Error::RangeTooNarrow)
        ));

        let sparse: Vec<(u64, f64)> = [64u64, 128, 512]
            .iter()
            .map(|&n| (n, n as f64))
            .collect();
        assert!(matches!(
            fit_growth_points(&sparse),
            Err(Error::InsufficientSamples(_))
        ));
    }

    #[test]
    fn fit_growth_uses_multiplication_counts() {
        let samples: Vec<BenchSample> = [64u64, 128, 256, 512]
            .iter()
            .map(|&n| measure(DftImpl::Naive, n, 3, 2).unwrap())
            .collect();
        let fit = fit_growth(&samples).unwrap();
        assert_eq!(fit.best_model, GrowthShape::Quadratic);
        assert_relative_eq!(fit.fitted_coeff, 1.0, max_relative = 1e-9);
        assert!(fit.residual < 1e-18);
    }

    #[test]
    fn shape_growth_fns_match_bases() {
        for shape in GrowthShape::ALL {
            let g = shape.growth_fn(2.0).unwrap();
            for n in [4u64, 64, 1024] {
                assert_relative_eq!(
                    g.eval(n).unwrap(),
                    2.0 * shape.base(n),
                    max_relative = 1e-12
                );
            }
        }
    }
}
