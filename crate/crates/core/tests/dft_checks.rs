//! Numeric and structural checks for the instrumented transforms and the
//! measurement harness. A compensated direct summation serves as an
//! independent oracle at small N; the naive transform is the reference at
//! larger N (the exhaustive size grid lives in the CLI acceptance suite).

use num_complex::Complex64;

use sc_core::bench::{calibrate_processor, fit_growth_points, measure, GrowthShape};
use sc_core::dft::{
    batch_execute, batch_execute_seq, dft_naive, fft_radix2, max_rel_deviation, random_vectors,
    DftImpl,
};

/// Direct DFT with Kahan-compensated accumulation and per-term angle
/// computation: no shared twiddle table, no accumulated phase error.
fn dft_compensated(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let (mut re, mut im) = (0.0f64, 0.0f64);
        let (mut c_re, mut c_im) = (0.0f64, 0.0f64);
        for (j, &xj) in x.iter().enumerate() {
            let angle = -2.0 * std::f64::consts::PI * (k as f64) * (j as f64) / n as f64;
            let w = Complex64::new(angle.cos(), angle.sin());
            let term = xj * w;
            // Kahan step per component
            let y = term.re - c_re;
            let t = re + y;
            c_re = (t - re) - y;
            re = t;
            let y = term.im - c_im;
            let t = im + y;
            c_im = (t - im) - y;
            im = t;
        }
        out.push(Complex64::new(re, im));
    }
    out
}

#[test]
fn transforms_match_compensated_oracle_at_n16() {
    for x in random_vectors(2024, 16, 20) {
        let oracle = dft_compensated(&x);
        let (naive, _) = dft_naive(&x);
        let (fast, _) = fft_radix2(&x).unwrap();
        assert!(max_rel_deviation(&naive, &oracle) < 1e-10);
        assert!(max_rel_deviation(&fast, &oracle) < 1e-10);
    }
}

#[test]
fn fft_matches_naive_on_spot_sizes() {
    for n in [2usize, 8, 64, 512] {
        for x in random_vectors(n as u64, n, 10) {
            let (reference, _) = dft_naive(&x);
            let (fast, _) = fft_radix2(&x).unwrap();
            assert!(
                max_rel_deviation(&fast, &reference) < 1e-9,
                "deviation too large at N = {n}"
            );
        }
    }
}

#[test]
fn parseval_holds_for_both_implementations() {
    for n in [4usize, 64, 256] {
        for x in random_vectors(7 + n as u64, n, 5) {
            let time_energy: f64 = x.iter().map(|z| z.norm_sqr()).sum();
            for out in [dft_naive(&x).0, fft_radix2(&x).unwrap().0] {
                let freq_energy: f64 =
                    out.iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64;
                assert!(
                    (freq_energy / time_energy - 1.0).abs() < 1e-9,
                    "Parseval violated at N = {n}"
                );
            }
        }
    }
}

#[test]
fn transforms_are_linear() {
    let n = 64;
    let a = Complex64::new(0.7, -1.3);
    let b = Complex64::new(-2.1, 0.4);
    let vectors = random_vectors(11, n, 4);
    for pair in vectors.chunks(2) {
        let (x, y) = (&pair[0], &pair[1]);
        let combo: Vec<Complex64> = x.iter().zip(y).map(|(&u, &v)| a * u + b * v).collect();
        for (combined, (fx, fy)) in [
            (fft_radix2(&combo).unwrap().0, (fft_radix2(x).unwrap().0, fft_radix2(y).unwrap().0)),
            (dft_naive(&combo).0, (dft_naive(x).0, dft_naive(y).0)),
        ] {
            let expected: Vec<Complex64> =
                fx.iter().zip(&fy).map(|(&u, &v)| a * u + b * v).collect();
            assert!(max_rel_deviation(&combined, &expected) < 1e-9);
        }
    }
}

#[test]
fn batch_parallel_equals_sequential() {
    let inputs = random_vectors(31, 128, 16);
    for imp in [DftImpl::Naive, DftImpl::Radix2] {
        let par = batch_execute(imp, &inputs).unwrap();
        let seq = batch_execute_seq(imp, &inputs).unwrap();
        assert_eq!(par, seq);
    }
}

#[test]
fn repeated_measurements_have_identical_counts() {
    for imp in [DftImpl::Naive, DftImpl::Radix2] {
        let a = measure(imp, 128, 3, 77).unwrap();
        let b = measure(imp, 128, 7, 77).unwrap();
        assert_eq!(a.op_count_mul, b.op_count_mul);
        assert_eq!(a.op_count_add, b.op_count_add);
        assert_eq!(a.op_count(), b.op_count());
    }
}

#[test]
fn calibration_is_stable_across_sizes() {
    let samples: Vec<_> = [256u64, 512, 1024, 2048, 4096]
        .iter()
        .map(|&n| measure(DftImpl::Radix2, n, 25, 123).unwrap())
        .collect();
    let rate = calibrate_processor(&samples).unwrap();
    assert!(rate > 0.0);
    for s in &samples {
        let sample_rate = s.op_count() as f64 / s.wall_time_s;
        let drift = (sample_rate / rate - 1.0).abs();
        assert!(
            drift <= 0.25,
            "rate at N = {} drifts {:.0}% from the median",
            s.n,
            drift * 100.0
        );
    }
}

#[test]
fn fit_recovers_every_shape_across_coefficients() {
    let ns = [64u64, 128, 256, 512, 1024];
    for coeff in [0.1, 0.7, 1.0, std::f64::consts::PI, 10.0] {
        for shape in GrowthShape::ALL {
            let g = shape.growth_fn(coeff).unwrap();
            let points: Vec<(u64, f64)> = ns.iter().map(|&n| (n, g.eval(n).unwrap())).collect();
            let fit = fit_growth_points(&points).unwrap();
            assert_eq!(fit.best_model, shape, "coeff {coeff}");
            assert!(
                (fit.fitted_coeff / coeff - 1.0).abs() < 1e-9,
                "coeff {} fitted as {}",
                coeff,
                fit.fitted_coeff
            );
        }
    }
}

#[test]
fn measured_counts_feed_the_expected_fits() {
    let naive: Vec<(u64, f64)> = [64u64, 128, 256, 512]
        .iter()
        .map(|&n| {
            let s = measure(DftImpl::Naive, n, 3, 5).unwrap();
            (n, s.op_count_mul as f64)
        })
        .collect();
    let fit = fit_growth_points(&naive).unwrap();
    assert_eq!(fit.best_model, GrowthShape::Quadratic);

    let fft: Vec<(u64, f64)> = [64u64, 128, 256, 512]
        .iter()
        .map(|&n| {
            let s = measure(DftImpl::Radix2, n, 3, 5).unwrap();
            (n, s.op_count_mul as f64)
        })
        .collect();
    let fit = fit_growth_points(&fft).unwrap();
    assert_eq!(fit.best_model, GrowthShape::NLogN);
    assert!((fit.fitted_coeff - 0.5).abs() < 1e-9);
}
