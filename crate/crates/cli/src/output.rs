//! Rendering helpers: 6-significant-digit number formatting, CSV rows
//! with fixed column orders, and the human-readable tables in the
//! microsecond/megahertz units natural to the case study.

use sc_core::bench::BenchSample;
use sc_core::metrics::{ScReport, SweepPoint};

/// Six significant digits in scientific notation; parses back to within
/// one part in 1e5 and exactly for round values.
pub fn sig6(x: f64) -> String {
    format!("{x:.5e}")
}

/// Six significant digits in plain decimal for human tables. Snapping
/// through the scientific form keeps the shortest-round-trip printer from
/// exposing rounding noise like 0.9230769999999999.
pub fn human6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let snapped: f64 = sig6(x).parse().expect("formatter output is a valid float");
    format!("{snapped}")
}

pub const REPORT_HEADER: &str = "scenario,n,m,delta_f_hz,instr_per_s,model,t_comp_s,\
alg_throughput_bps,sc_throughput_bps,sc_efficiency_bps_hz,classic_rate_bps,\
classic_se_bps_hz,shannon_capacity_bps";

pub fn report_row(r: &ScReport) -> String {
    let capacity = match r.shannon_capacity_bps {
        Some(c) => sig6(c),
        None => String::new(),
    };
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.scenario,
        r.n,
        r.m,
        sig6(r.delta_f_hz),
        sig6(r.instr_per_s),
        r.model,
        sig6(r.t_comp_s),
        sig6(r.alg_throughput_bps),
        sig6(r.sc_throughput_bps),
        sig6(r.sc_efficiency_bps_hz),
        sig6(r.classic_rate_bps),
        sig6(r.classic_se_bps_hz),
        capacity
    )
}

pub const SWEEP_HEADER: &str = "n,sc_throughput_bps,sc_efficiency_bps_hz";

pub fn sweep_row(p: &SweepPoint) -> String {
    format!(
        "{},{},{}",
        p.n,
        sig6(p.sc_throughput_bps),
        sig6(p.sc_efficiency_bps_hz)
    )
}

pub const BENCH_HEADER: &str = "impl,n,op_count_mul,op_count_add,wall_time_s,reps";

pub fn bench_row(s: &BenchSample) -> String {
    format!(
        "{},{},{},{},{},{}",
        s.impl_name,
        s.n,
        s.op_count_mul,
        s.op_count_add,
        sig6(s.wall_time_s),
        s.reps
    )
}

/// Human-readable report in the presentation units of the case study
/// (microseconds, MHz, bits per microsecond).
pub fn human_report(r: &ScReport) -> String {
    let mut out = String::new();
    let mut line = |label: &str, value: String| {
        out.push_str(&format!("{label:<22}{value}\n"));
    };
    line("scenario", r.scenario.clone());
    line("model", r.model.clone());
    line("N subcarriers", r.n.to_string());
    line("M constellation", r.m.to_string());
    line("delta_f [MHz]", human6(r.delta_f_hz / 1e6));
    line("bandwidth [MHz]", human6(r.bandwidth_hz / 1e6));
    line("T_sym [us]", human6(r.symbol_period_s * 1e6));
    line("bits per symbol", r.bits_per_symbol.to_string());
    line("instructions", human6(r.instr_count));
    line("I [instr/us]", human6(r.instr_per_s / 1e6));
    line("T_comp [us]", human6(r.t_comp_s * 1e6));
    line("A [bits/us]", human6(r.alg_throughput_bps / 1e6));
    line("SC_R [bits/us]", human6(r.sc_throughput_bps / 1e6));
    line("SC_SE [bits/s/Hz]", human6(r.sc_efficiency_bps_hz));
    line("R [bits/us]", human6(r.classic_rate_bps / 1e6));
    line("SE [bits/s/Hz]", human6(r.classic_se_bps_hz));
    line("R_comp [bits/us]", human6(r.r_comp_bps / 1e6));
    if let Some(snr) = r.snr {
        line("SNR", human6(snr));
    }
    if let Some(c) = r.shannon_capacity_bps {
        line("C [bits/us]", human6(c / 1e6));
    }
    out
}

/// Side-by-side comparison with rate gains of the first scenario over the
/// second.
pub fn human_compare(a: &ScReport, b: &ScReport) -> String {
    let classic_gain = a.classic_rate_bps / b.classic_rate_bps;
    let sc_gain = a.sc_throughput_bps / b.sc_throughput_bps;
    let mut out = String::new();
    out.push_str(&format!(
        "{:<26}{:<18}{}\n",
        "metric", a.scenario, b.scenario
    ));
    let mut row = |label: &str, va: String, vb: String| {
        out.push_str(&format!("{label:<26}{va:<18}{vb}\n"));
    };
    row("N subcarriers", a.n.to_string(), b.n.to_string());
    row(
        "I [instr/us]",
        human6(a.instr_per_s / 1e6),
        human6(b.instr_per_s / 1e6),
    );
    row(
        "T_comp [us]",
        human6(a.t_comp_s * 1e6),
        human6(b.t_comp_s * 1e6),
    );
    row(
        "classic R [bits/us]",
        human6(a.classic_rate_bps / 1e6),
        human6(b.classic_rate_bps / 1e6),
    );
    row(
        "SC_R [bits/us]",
        human6(a.sc_throughput_bps / 1e6),
        human6(b.sc_throughput_bps / 1e6),
    );
    row(
        "SC_SE [bits/s/Hz]",
        human6(a.sc_efficiency_bps_hz),
        human6(b.sc_efficiency_bps_hz),
    );
    out.push('\n');
    out.push_str(&format!("classic gain:             {}\n", human6(classic_gain)));
    out.push_str(&format!("SC gain:                  {}\n", human6(sc_gain)));
    out.push_str(&format!(
        "gain ratio (classic/SC):  {}\n",
        human6(classic_gain / sc_gain)
    ));
    out
}

pub fn human_sweep(points: &[SweepPoint]) -> String {
    let mut out = format!(
        "{:<10}{:<20}{}\n",
        "N", "SC_R [bits/us]", "SC_SE [bits/s/Hz]"
    );
    for p in points {
        out.push_str(&format!(
            "{:<10}{:<20}{}\n",
            p.n,
            human6(p.sc_throughput_bps / 1e6),
            human6(p.sc_efficiency_bps_hz)
        ));
    }
    out
}

pub fn human_bench(samples: &[BenchSample]) -> String {
    let mut out = format!(
        "{:<12}{:<8}{:<14}{:<14}{:<14}{}\n",
        "impl", "n", "mul", "add", "wall [us]", "reps"
    );
    for s in samples {
        out.push_str(&format!(
            "{:<12}{:<8}{:<14}{:<14}{:<14}{}\n",
            s.impl_name,
            s.n,
            s.op_count_mul,
            s.op_count_add,
            human6(s.wall_time_s * 1e6),
            s.reps
        ));
    }
    out
}
