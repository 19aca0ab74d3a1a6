//! Scalability and comp-limited classification over symbolic growth
//! functions.
//!
//! Two questions are answered exactly, with no numeric thresholds:
//!
//! * Scalability: does SC throughput survive as spectrum grows? It does
//!   iff the bit growth B keeps up with the time complexity T, i.e.
//!   B = Omega(T). Otherwise the computation share of the symbol budget
//!   swamps the bits and SC throughput tends to zero.
//! * Comp-limited: does the SC capacity, the limit of peak bit growth
//!   B_max over the problem's complexity lower bound L, vanish? When it
//!   does, computation rather than spectrum or power is the binding
//!   constraint.
//!
//! For OFDM the lower bound of the DFT is an open problem, so
//! [`classify_ofdm`] forces the caller to state a conjecture instead of
//! assuming one.

use std::fmt;

use crate::growth::{AsymRelation, GrowthFn};

/// Inputs of a comp-limited query: peak bit growth and the assumed
/// complexity lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityQuery {
    pub b_max: GrowthFn,
    pub lower_bound: GrowthFn,
}

impl CapacityQuery {
    pub fn new(b_max: GrowthFn, lower_bound: GrowthFn) -> Self {
        Self { b_max, lower_bound }
    }
}

/// Limit class of B_max(N)/L(N) as N grows without bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CapacityLimit {
    Zero,
    Positive(f64),
    Infinite,
}

impl fmt::Display for CapacityLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CapacityLimit::Zero => f.write_str("zero"),
            CapacityLimit::Positive(v) => write!(f, "positive ({v})"),
            CapacityLimit::Infinite => f.write_str("infinite"),
        }
    }
}

/// Classifier output: the asymptotic relation used as evidence, the
/// derived verdicts, and a one-line rationale naming the rule applied.
/// `comp_limited` is `None` for plain scalability queries.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub relation: AsymRelation,
    pub scalable: bool,
    pub comp_limited: Option<bool>,
    pub rationale: String,
}

impl Verdict {
    fn yes_no(v: bool) -> &'static str {
        if v {
            "yes"
        } else {
            "no"
        }
    }

    /// Machine-readable record, one `key=value` per line.
    pub fn to_record(&self) -> String {
        let limit = match self.relation.limit() {
            Some(l) => l.to_string(),
            None => String::new(),
        };
        let comp = match self.comp_limited {
            Some(v) => v.to_string(),
            None => String::new(),
        };
        format!(
            "relation={}\nlimit={}\nscalable={}\ncomp_limited={}\nrationale={}\n",
            self.relation.name(),
            limit,
            self.scalable,
            comp,
            self.rationale
        )
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "relation:     {}", self.relation)?;
        writeln!(f, "scalable:     {}", Self::yes_no(self.scalable))?;
        if let Some(cl) = self.comp_limited {
            writeln!(f, "comp-limited: {}", Self::yes_no(cl))?;
        }
        write!(f, "rationale:    {}", self.rationale)
    }
}

/// Decide whether SC throughput survives spectrum scaling: scalable iff
/// B = Omega(T).
pub fn scalability(b: &GrowthFn, t: &GrowthFn) -> Verdict {
    let relation = b.compare(t);
    let (scalable, rationale) = match relation {
        AsymRelation::LittleO => (
            false,
            format!("bit growth {b} is o(time complexity {t}): SC throughput nullifies as the spectrum scales"),
        ),
        AsymRelation::Theta { limit } => (
            true,
            format!("bit growth {b} is Theta(time complexity {t}) with limit {limit}: SC throughput approaches a positive constant"),
        ),
        AsymRelation::LittleOmega => (
            true,
            format!("bit growth {b} is omega(time complexity {t}): computation cost becomes negligible per bit"),
        ),
    };
    Verdict {
        relation,
        scalable,
        comp_limited: None,
        rationale,
    }
}

/// Limit class of B_max/L as N grows without bound.
pub fn sc_capacity_limit(q: &CapacityQuery) -> CapacityLimit {
    match q.b_max.compare(&q.lower_bound) {
        AsymRelation::LittleO => CapacityLimit::Zero,
        AsymRelation::Theta { limit } => CapacityLimit::Positive(limit),
        AsymRelation::LittleOmega => CapacityLimit::Infinite,
    }
}

/// Comp-limited verdict: true iff the SC capacity limit is zero.
pub fn comp_limited(q: &CapacityQuery) -> Verdict {
    let relation = q.b_max.compare(&q.lower_bound);
    let limit = sc_capacity_limit(q);
    let is_limited = matches!(limit, CapacityLimit::Zero);
    let rationale = match limit {
        CapacityLimit::Zero => format!(
            "SC capacity (limit of B_max {} over lower bound {}) is zero: computation is the binding constraint",
            q.b_max, q.lower_bound
        ),
        CapacityLimit::Positive(v) => format!(
            "SC capacity (limit of B_max {} over lower bound {}) is the positive constant {v}: not comp-limited",
            q.b_max, q.lower_bound
        ),
        CapacityLimit::Infinite => format!(
            "SC capacity (limit of B_max {} over lower bound {}) diverges: not comp-limited",
            q.b_max, q.lower_bound
        ),
    };
    Verdict {
        scalable: matches!(
            relation,
            AsymRelation::Theta { .. } | AsymRelation::LittleOmega
        ),
        relation,
        comp_limited: Some(is_limited),
        rationale,
    }
}

/// Assumed lower bound for the N-point DFT. The true bound is an open
/// problem, so callers must pick a side; there is no default.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DftConjecture {
    /// DFT needs Omega(N log2 N) instructions.
    NLogN,
    /// DFT is solvable in linear time, c*N instructions.
    Linear(f64),
}

/// Comp-limited classification of uncoded OFDM under a stated DFT
/// lower-bound conjecture. Peak bit growth is linear in N (bits per
/// symbol scale with the subcarrier count at fixed SNR).
pub fn classify_ofdm(conjecture: DftConjecture) -> Verdict {
    let b_max = GrowthFn::linear(1.0).expect("valid constant");
    let lower_bound = match conjecture {
        DftConjecture::NLogN => GrowthFn::n_log_n(1.0).expect("valid constant"),
        DftConjecture::Linear(c) => {
            GrowthFn::linear(c).expect("conjecture coefficient must be positive")
        }
    };
    let mut verdict = comp_limited(&CapacityQuery::new(b_max, lower_bound));
    let branch = match conjecture {
        DftConjecture::NLogN => {
            "assuming the DFT needs Omega(N*log) instructions, OFDM bit growth N cannot keep up"
        }
        DftConjecture::Linear(_) => {
            "assuming the DFT is solvable in linear time, OFDM bit growth N keeps pace with computation"
        }
    };
    verdict.rationale = format!("{branch}; {}", verdict.rationale);
    verdict
}
