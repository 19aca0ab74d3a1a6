//! Instrumented DFT implementations.
//!
//! Two reference transforms back the symbolic complexity models with
//! counted work: a naive O(N^2) DFT and an iterative radix-2 FFT. Counts
//! are complex-arithmetic operations (multiplications and additions), not
//! CPU instructions, so they are deterministic and portable:
//!
//! * naive: N^2 multiplications, N*(N-1) additions
//! * radix-2: (N/2)*log2 N multiplications, N*log2 N additions (every
//!   butterfly is counted, including trivial twiddles)
//!
//! Twiddle factors live in a precomputed plan and are excluded from both
//! the counts and any timed region. Counters are confined to a single
//! `execute` invocation and returned by value, so concurrent transforms
//! never share state.

use std::f64::consts::PI;
use std::str::FromStr;

pub use num_complex::Complex64;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Complex operations performed by one transform invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OpCount {
    pub mul: u64,
    pub add: u64,
}

impl OpCount {
    pub fn total(&self) -> u64 {
        self.mul + self.add
    }
}

/// Naive DFT plan: full table of the N roots of unity.
#[derive(Debug, Clone)]
pub struct NaiveDftPlan {
    twiddles: Vec<Complex64>,
}

impl NaiveDftPlan {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "DFT length must be at least 1");
        Self {
            twiddles: roots_of_unity(n),
        }
    }

    pub fn len(&self) -> usize {
        self.twiddles.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// X[k] = sum_j x[j] * W^(k*j) with W = e^(-2*pi*i/N).
    pub fn execute(&self, x: &[Complex64]) -> (Vec<Complex64>, OpCount) {
        let n = self.len();
        assert_eq!(x.len(), n, "input length must match the plan");
        let mut out = Vec::with_capacity(n);
        let mut ops = OpCount::default();
        for k in 0..n {
            // twiddle index walks k steps per term, reduced mod n
            let mut idx = 0usize;
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &xj) in x.iter().enumerate() {
                let term = xj * self.twiddles[idx];
                ops.mul += 1;
                if j == 0 {
                    acc = term;
                } else {
                    acc += term;
                    ops.add += 1;
                }
                idx += k;
                if idx >= n {
                    idx -= n;
                }
            }
            out.push(acc);
        }
        (out, ops)
    }
}

/// Radix-2 FFT plan: N/2 twiddles, power-of-two length.
#[derive(Debug, Clone)]
pub struct Radix2Plan {
    n: usize,
    twiddles: Vec<Complex64>,
}

impl Radix2Plan {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 || !n.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(n as u64));
        }
        let full = roots_of_unity(n);
        Ok(Self {
            n,
            twiddles: full[..n / 2].to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Iterative Cooley-Tukey: bit-reversal permutation, then log2 N
    /// butterfly stages over in-place data.
    pub fn execute(&self, x: &[Complex64]) -> (Vec<Complex64>, OpCount) {
        let n = self.n;
        assert_eq!(x.len(), n, "input length must match the plan");
        let mut a = x.to_vec();
        let mut ops = OpCount::default();

        let stages = n.trailing_zeros();
        for i in 0..n {
            let j = reverse_bits(i, stages);
            if j > i {
                a.swap(i, j);
            }
        }

        let mut len = 2;
        while len <= n {
            let half = len / 2;
            let step = n / len;
            for start in (0..n).step_by(len) {
                for j in 0..half {
                    let w = self.twiddles[j * step];
                    let t = w * a[start + j + half];
                    let u = a[start + j];
                    a[start + j] = u + t;
                    a[start + j + half] = u - t;
                    ops.mul += 1;
                    ops.add += 2;
                }
            }
            len *= 2;
        }
        (a, ops)
    }
}

fn roots_of_unity(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|k| {
            let angle = -2.0 * PI * k as f64 / n as f64;
            Complex64::new(angle.cos(), angle.sin())
        })
        .collect()
}

fn reverse_bits(value: usize, bits: u32) -> usize {
    if bits == 0 {
        return 0;
    }
    value.reverse_bits() >> (usize::BITS - bits)
}

/// One-shot naive DFT.
pub fn dft_naive(x: &[Complex64]) -> (Vec<Complex64>, OpCount) {
    NaiveDftPlan::new(x.len()).execute(x)
}

/// One-shot radix-2 FFT; the length must be a power of two.
pub fn fft_radix2(x: &[Complex64]) -> Result<(Vec<Complex64>, OpCount)> {
    Ok(Radix2Plan::new(x.len())?.execute(x))
}

/// Selector for the two instrumented implementations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DftImpl {
    Naive,
    Radix2,
}

impl DftImpl {
    pub fn name(&self) -> &'static str {
        match self {
            DftImpl::Naive => "dft_naive",
            DftImpl::Radix2 => "fft_radix2",
        }
    }

    pub fn supports(&self, n: u64) -> bool {
        match self {
            DftImpl::Naive => n >= 1,
            DftImpl::Radix2 => n.is_power_of_two(),
        }
    }

    pub fn execute(&self, x: &[Complex64]) -> Result<(Vec<Complex64>, OpCount)> {
        match self {
            DftImpl::Naive => Ok(dft_naive(x)),
            DftImpl::Radix2 => fft_radix2(x),
        }
    }
}

impl FromStr for DftImpl {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dft_naive" => Ok(DftImpl::Naive),
            "fft_radix2" => Ok(DftImpl::Radix2),
            _ => Err(Error::UnknownImpl(s.to_string())),
        }
    }
}

/// `count` deterministic test vectors of length `n`, components uniform
/// in [-1, 1). The same seed always yields the same vectors.
pub fn random_vectors(seed: u64, n: usize, count: usize) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect()
        })
        .collect()
}

/// Transform every input with a shared plan, sequentially.
pub fn batch_execute_seq(
    imp: DftImpl,
    inputs: &[Vec<Complex64>],
) -> Result<Vec<(Vec<Complex64>, OpCount)>> {
    match inputs.first() {
        None => Ok(Vec::new()),
        Some(first) => match imp {
            DftImpl::Naive => {
                let plan = NaiveDftPlan::new(first.len());
                Ok(inputs.iter().map(|x| plan.execute(x)).collect())
            }
            DftImpl::Radix2 => {
                let plan = Radix2Plan::new(first.len())?;
                Ok(inputs.iter().map(|x| plan.execute(x)).collect())
            }
        },
    }
}

/// Transform every input with a shared plan, across threads when the
/// `parallel` feature is enabled. Per-invocation counters make this safe.
#[cfg(feature = "parallel")]
pub fn batch_execute(
    imp: DftImpl,
    inputs: &[Vec<Complex64>],
) -> Result<Vec<(Vec<Complex64>, OpCount)>> {
    match inputs.first() {
        None => Ok(Vec::new()),
        Some(first) => match imp {
            DftImpl::Naive => {
                let plan = NaiveDftPlan::new(first.len());
                Ok(inputs.par_iter().map(|x| plan.execute(x)).collect())
            }
            DftImpl::Radix2 => {
                let plan = Radix2Plan::new(first.len())?;
                Ok(inputs.par_iter().map(|x| plan.execute(x)).collect())
            }
        },
    }
}

#[cfg(not(feature = "parallel"))]
pub fn batch_execute(
    imp: DftImpl,
    inputs: &[Vec<Complex64>],
) -> Result<Vec<(Vec<Complex64>, OpCount)>> {
    batch_execute_seq(imp, inputs)
}

/// Largest per-bin deviation of `a` from `b`, relative to the largest
/// magnitude in `b` (infinity-norm relative error).
pub fn max_rel_deviation(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let scale = b.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
    if scale == 0.0 {
        return a.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0f64, f64::max)
        / scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn impulse(n: usize) -> Vec<Complex64> {
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        x[0] = Complex64::new(1.0, 0.0);
        x
    }

    #[test]
    fn naive_impulse_is_flat() {
        let (out, ops) = dft_naive(&impulse(4));
        for bin in &out {
            assert_relative_eq!(bin.re, 1.0, max_relative = 1e-12);
            assert!(bin.im.abs() < 1e-12);
        }
        assert_eq!(ops.mul, 16);
        assert_eq!(ops.add, 12);
    }

    #[test]
    fn naive_all_ones_is_dc_only() {
        let x = vec![Complex64::new(1.0, 0.0); 4];
        let (out, _) = dft_naive(&x);
        assert_relative_eq!(out[0].re, 4.0, max_relative = 1e-12);
        for bin in &out[1..] {
            assert!(bin.norm() < 1e-12);
        }
    }

    #[test]
    fn fft_impulse_counts() {
        let (out, ops) = fft_radix2(&impulse(8)).unwrap();
        for bin in &out {
            assert_relative_eq!(bin.re, 1.0, max_relative = 1e-12);
            assert!(bin.im.abs() < 1e-12);
        }
        assert_eq!(ops.mul, 12);
        assert_eq!(ops.add, 24);
    }

    #[test]
    fn fft_rejects_non_power_of_two() {
        let x = vec![Complex64::new(0.0, 0.0); 6];
        assert!(matches!(fft_radix2(&x), Err(Error::NotPowerOfTwo(6))));
        assert!(Radix2Plan::new(0).is_err());
    }

    #[test]
    fn op_counts_match_formulas() {
        for n in [1u64, 2, 4, 16, 64, 128] {
            let x = random_vectors(7, n as usize, 1).remove(0);
            let (_, ops) = dft_naive(&x);
            assert_eq!(ops.mul, n * n);
            assert_eq!(ops.add, n * (n - 1));
        }
        for n in [2u64, 8, 64, 512] {
            let x = random_vectors(7, n as usize, 1).remove(0);
            let (_, ops) = fft_radix2(&x).unwrap();
            let logn = u64::from(n.trailing_zeros());
            assert_eq!(ops.mul, n / 2 * logn);
            assert_eq!(ops.add, n * logn);
        }
    }

    #[test]
    fn naive_op_ratio_is_quadratic() {
        let x64 = random_vectors(1, 64, 1).remove(0);
        let x128 = random_vectors(1, 128, 1).remove(0);
        let (_, small) = dft_naive(&x64);
        let (_, big) = dft_naive(&x128);
        assert_eq!(big.mul as f64 / small.mul as f64, 4.0);
    }

    #[test]
    fn fft_matches_naive_at_512() {
        let x = random_vectors(99, 512, 1).remove(0);
        let (reference, _) = dft_naive(&x);
        let (fast, _) = fft_radix2(&x).unwrap();
        assert!(max_rel_deviation(&fast, &reference) < 1e-9);
    }

    #[test]
    fn random_vectors_are_deterministic_and_bounded() {
        let a = random_vectors(42, 32, 3);
        let b = random_vectors(42, 32, 3);
        assert_eq!(a, b);
        let c = random_vectors(43, 32, 3);
        assert_ne!(a, c);
        for v in &a {
            for z in v {
                assert!(z.re >= -1.0 && z.re < 1.0);
                assert!(z.im >= -1.0 && z.im < 1.0);
            }
        }
    }

    #[test]
    fn batch_matches_single_execution() {
        let inputs = random_vectors(5, 64, 8);
        let par = batch_execute(DftImpl::Radix2, &inputs).unwrap();
        let seq = batch_execute_seq(DftImpl::Radix2, &inputs).unwrap();
        assert_eq!(par.len(), 8);
        for ((pv, pc), (sv, sc)) in par.iter().zip(&seq) {
            assert_eq!(pv, sv);
            assert_eq!(pc, sc);
        }
    }

    #[test]
    fn impl_from_str() {
        assert_eq!("dft_naive".parse::<DftImpl>().unwrap(), DftImpl::Naive);
        assert_eq!("fft_radix2".parse::<DftImpl>().unwrap(), DftImpl::Radix2);
        assert!("fft_radix4".parse::<DftImpl>().is_err());
        assert!(DftImpl::Radix2.supports(64));
        assert!(!DftImpl::Radix2.supports(100));
        assert!(DftImpl::Naive.supports(100));
    }

    #[test]
    fn single_point_transform_is_identity() {
        let x = vec![Complex64::new(2.5, -1.5)];
        let (naive, ops) = dft_naive(&x);
        assert_eq!(naive, x);
        assert_eq!(ops.mul, 1);
        assert_eq!(ops.add, 0);
        let (fast, ops) = fft_radix2(&x).unwrap();
        assert_eq!(fast, x);
        assert_eq!(ops.total(), 0);
    }
}
