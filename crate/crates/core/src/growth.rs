//! Exact symbolic algebra for poly-log growth functions.
//!
//! A growth function is a finite sum of terms `c * N^p * (log2 N)^q` with
//! `c > 0` and rational exponents `p, q >= 0`. This family covers every
//! instruction-count shape handled by the crate (constants, `c*N`,
//! `N*log2 N`, `N^2`, ...) while keeping asymptotic comparison exact and
//! decidable: the order of growth of a normalized sum is determined by the
//! lexicographically largest `(p, q)` pair, so the limit of `f(N)/g(N)` as
//! `N -> infinity` can be read off the dominant terms without any numerics.
//!
//! The text syntax accepted by [`GrowthFn::parse`] (and produced by
//! `Display`) is `+`-separated products of `c`, `N[^p]` and `log[^q]`
//! factors, e.g. `3*N^2*log^1 + N` or `0.5*N^3/2`. Logarithms are base-2
//! throughout; other bases fold into the coefficient.

use std::fmt;

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// Exact rational exponent.
pub type Exponent = Ratio<i64>;

/// One `c * N^p * (log2 N)^q` term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthTerm {
    coeff: f64,
    poly_exp: Exponent,
    log_exp: Exponent,
}

impl GrowthTerm {
    /// Build a term, rejecting non-positive coefficients and negative
    /// exponents (only increasing non-negative functions are representable).
    pub fn new(coeff: f64, poly_exp: Exponent, log_exp: Exponent) -> Result<Self> {
        if !coeff.is_finite() || coeff <= 0.0 {
            return Err(Error::InvalidTerm(format!(
                "coefficient must be a positive finite real, got {coeff}"
            )));
        }
        if poly_exp < Exponent::from_integer(0) || log_exp < Exponent::from_integer(0) {
            return Err(Error::InvalidTerm(format!(
                "exponents must be non-negative, got N^{poly_exp} * log^{log_exp}"
            )));
        }
        Ok(Self {
            coeff,
            poly_exp,
            log_exp,
        })
    }

    /// Term with integer exponents.
    pub fn with_int_exps(coeff: f64, poly_exp: i64, log_exp: i64) -> Result<Self> {
        Self::new(
            coeff,
            Exponent::from_integer(poly_exp),
            Exponent::from_integer(log_exp),
        )
    }

    pub fn coeff(&self) -> f64 {
        self.coeff
    }

    pub fn poly_exp(&self) -> Exponent {
        self.poly_exp
    }

    pub fn log_exp(&self) -> Exponent {
        self.log_exp
    }

    /// Dominance key: terms compare lexicographically by `(p, q)`.
    fn exponents(&self) -> (Exponent, Exponent) {
        (self.poly_exp, self.log_exp)
    }

    fn eval(&self, n: f64) -> f64 {
        self.coeff * pow_rational(n, self.poly_exp) * pow_rational(n.log2(), self.log_exp)
    }
}

/// `x^e` for a rational exponent, exact for integer `e`.
fn pow_rational(x: f64, e: Exponent) -> f64 {
    if e.is_integer() {
        let i = e.to_integer();
        if let Ok(i) = i32::try_from(i) {
            return x.powi(i);
        }
    }
    x.powf(e.to_f64().expect("rational exponent fits in f64"))
}

/// Non-empty sum of [`GrowthTerm`]s in normal form: exponent pairs strictly
/// decreasing, duplicate pairs merged by summing coefficients. The first
/// term is always the dominant one.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthFn {
    terms: Vec<GrowthTerm>,
}

/// Trichotomy of the limit of `f(N)/g(N)` as `N -> infinity`: exactly one
/// of a positive constant, zero, or infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AsymRelation {
    /// Same order of growth; the limit is the ratio of dominant coefficients.
    Theta { limit: f64 },
    /// `f` grows strictly slower than `g` (limit zero).
    LittleO,
    /// `f` grows strictly faster than `g` (limit infinite).
    LittleOmega,
}

impl AsymRelation {
    pub fn is_theta(&self) -> bool {
        matches!(self, AsymRelation::Theta { .. })
    }

    /// Limit value when the relation is `Theta`.
    pub fn limit(&self) -> Option<f64> {
        match self {
            AsymRelation::Theta { limit } => Some(*limit),
            _ => None,
        }
    }

    /// Name used in verdict records and CLI output.
    pub fn name(&self) -> &'static str {
        match self {
            AsymRelation::Theta { .. } => "theta",
            AsymRelation::LittleO => "little-o",
            AsymRelation::LittleOmega => "little-omega",
        }
    }
}

impl fmt::Display for AsymRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AsymRelation::Theta { limit } => write!(f, "theta (limit {limit})"),
            _ => f.write_str(self.name()),
        }
    }
}

impl GrowthFn {
    /// Normalize a term list: sort descending by `(p, q)` and merge
    /// duplicate exponent pairs by summing coefficients.
    pub fn normalize(terms: Vec<GrowthTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptyGrowthFn);
        }
        let mut terms = terms;
        terms.sort_by(|a, b| b.exponents().cmp(&a.exponents()));
        let mut merged: Vec<GrowthTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.exponents() == t.exponents() => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        Ok(Self { terms: merged })
    }

    /// Single-term function `c * N^p * (log2 N)^q`.
    pub fn monomial(coeff: f64, poly_exp: Exponent, log_exp: Exponent) -> Result<Self> {
        Ok(Self {
            terms: vec![GrowthTerm::new(coeff, poly_exp, log_exp)?],
        })
    }

    /// Constant function `c`.
    pub fn constant(c: f64) -> Result<Self> {
        Self::monomial(c, Exponent::from_integer(0), Exponent::from_integer(0))
    }

    /// `c * N`.
    pub fn linear(c: f64) -> Result<Self> {
        Self::monomial(c, Exponent::from_integer(1), Exponent::from_integer(0))
    }

    /// `c * N * log2 N`.
    pub fn n_log_n(c: f64) -> Result<Self> {
        Self::monomial(c, Exponent::from_integer(1), Exponent::from_integer(1))
    }

    /// `c * N^2`.
    pub fn quadratic(c: f64) -> Result<Self> {
        Self::monomial(c, Exponent::from_integer(2), Exponent::from_integer(0))
    }

    pub fn terms(&self) -> &[GrowthTerm] {
        &self.terms
    }

    /// Highest-order term (first in normal form).
    pub fn dominant(&self) -> &GrowthTerm {
        &self.terms[0]
    }

    /// Evaluate at integer `N >= 2` (so `log2 N >= 1` and every term is
    /// positive).
    pub fn eval(&self, n: u64) -> Result<f64> {
        if n < 2 {
            return Err(Error::EvalBelowDomain(n));
        }
        let x = n as f64;
        Ok(self.terms.iter().map(|t| t.eval(x)).sum())
    }

    /// Limit class of `self(N) / other(N)` as `N -> infinity`, decided by
    /// lexicographic comparison of the dominant exponent pairs; when the
    /// pairs tie the limit is the ratio of dominant coefficients.
    pub fn compare(&self, other: &GrowthFn) -> AsymRelation {
        let a = self.dominant();
        let b = other.dominant();
        match a.exponents().cmp(&b.exponents()) {
            std::cmp::Ordering::Equal => AsymRelation::Theta {
                limit: a.coeff / b.coeff,
            },
            std::cmp::Ordering::Less => AsymRelation::LittleO,
            std::cmp::Ordering::Greater => AsymRelation::LittleOmega,
        }
    }

    /// `self = O(other)`: the limit of the ratio is finite (little-o or theta).
    pub fn is_big_o_of(&self, other: &GrowthFn) -> bool {
        matches!(
            self.compare(other),
            AsymRelation::LittleO | AsymRelation::Theta { .. }
        )
    }

    /// `self = Omega(other)`: the limit of the ratio is nonzero
    /// (little-omega or theta).
    pub fn is_big_omega_of(&self, other: &GrowthFn) -> bool {
        matches!(
            self.compare(other),
            AsymRelation::LittleOmega | AsymRelation::Theta { .. }
        )
    }

    /// Pointwise sum, renormalized.
    pub fn add(&self, other: &GrowthFn) -> GrowthFn {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Self::normalize(terms).expect("sum of non-empty growth functions is non-empty")
    }

    /// Pointwise product: exponents add pairwise, coefficients multiply.
    pub fn mul(&self, other: &GrowthFn) -> GrowthFn {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(GrowthTerm {
                    coeff: a.coeff * b.coeff,
                    poly_exp: a.poly_exp + b.poly_exp,
                    log_exp: a.log_exp + b.log_exp,
                });
            }
        }
        Self::normalize(terms).expect("product of non-empty growth functions is non-empty")
    }

    /// Parse the text syntax, e.g. `3*N^2*log^1 + N` or `0.5*N^3/2*log`.
    pub fn parse(input: &str) -> Result<Self> {
        parse::growth_fn(input)
    }
}

impl fmt::Display for GrowthFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let zero = Exponent::from_integer(0);
            let one = Exponent::from_integer(1);
            let mut parts: Vec<String> = Vec::new();
            if t.coeff != 1.0 || (t.poly_exp == zero && t.log_exp == zero) {
                parts.push(format!("{}", t.coeff));
            }
            if t.poly_exp != zero {
                if t.poly_exp == one {
                    parts.push("N".to_string());
                } else {
                    parts.push(format!("N^{}", fmt_exponent(t.poly_exp)));
                }
            }
            if t.log_exp != zero {
                if t.log_exp == one {
                    parts.push("log".to_string());
                } else {
                    parts.push(format!("log^{}", fmt_exponent(t.log_exp)));
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

fn fmt_exponent(e: Exponent) -> String {
    if e.is_integer() {
        format!("{}", e.numer())
    } else {
        format!("{}/{}", e.numer(), e.denom())
    }
}

mod parse {
    use super::*;

    #[derive(Debug, Clone, PartialEq)]
    enum Token {
        Num(f64),
        N,
        Log,
        Star,
        Caret,
        Plus,
        Slash,
    }

    fn tokenize(input: &str) -> Result<Vec<Token>> {
        let bytes = input.as_bytes();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' => i += 1,
                '*' => {
                    tokens.push(Token::Star);
                    i += 1;
                }
                '^' => {
                    tokens.push(Token::Caret);
                    i += 1;
                }
                '+' => {
                    tokens.push(Token::Plus);
                    i += 1;
                }
                '/' => {
                    tokens.push(Token::Slash);
                    i += 1;
                }
                '0'..='9' | '.' => {
                    let start = i;
                    while i < bytes.len() && matches!(bytes[i] as char, '0'..='9' | '.') {
                        i += 1;
                    }
                    // scientific-notation suffix, sign included
                    if i < bytes.len() && matches!(bytes[i] as char, 'e' | 'E') {
                        let mut j = i + 1;
                        if j < bytes.len() && matches!(bytes[j] as char, '+' | '-') {
                            j += 1;
                        }
                        if j < bytes.len() && (bytes[j] as char).is_ascii_digit() {
                            i = j;
                            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                                i += 1;
                            }
                        }
                    }
                    let lit = &input[start..i];
                    let value: f64 = lit
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad number literal `{lit}`")))?;
                    tokens.push(Token::Num(value));
                }
                _ => {
                    if input[i..].starts_with("log") {
                        tokens.push(Token::Log);
                        i += 3;
                    } else if c == 'N' {
                        tokens.push(Token::N);
                        i += 1;
                    } else {
                        return Err(Error::Parse(format!(
                            "unexpected character `{c}` at byte {i}"
                        )));
                    }
                }
            }
        }
        Ok(tokens)
    }

    struct Parser {
        tokens: Vec<Token>,
        pos: usize,
    }

    impl Parser {
        fn peek(&self) -> Option<&Token> {
            self.tokens.get(self.pos)
        }

        fn next(&mut self) -> Option<Token> {
            let t = self.tokens.get(self.pos).cloned();
            if t.is_some() {
                self.pos += 1;
            }
            t
        }

        fn expect_exponent(&mut self) -> Result<Exponent> {
            let numer = match self.next() {
                Some(Token::Num(v)) => v,
                other => {
                    return Err(Error::Parse(format!(
                        "expected exponent after `^`, got {other:?}"
                    )))
                }
            };
            let mut denom = 1.0;
            if self.peek() == Some(&Token::Slash) {
                self.next();
                denom = match self.next() {
                    Some(Token::Num(v)) => v,
                    other => {
                        return Err(Error::Parse(format!(
                            "expected denominator after `/`, got {other:?}"
                        )))
                    }
                };
            }
            rational_from_parts(numer, denom)
        }

        // term := factor ('*' factor)*
        // factor := NUMBER | 'N' ['^' rat] | 'log' ['^' rat]
        fn term(&mut self) -> Result<GrowthTerm> {
            let zero = Exponent::from_integer(0);
            let one = Exponent::from_integer(1);
            let mut coeff = 1.0;
            let mut poly = zero;
            let mut log = zero;
            let mut factors = 0;
            loop {
                match self.next() {
                    Some(Token::Num(v)) => coeff *= v,
                    Some(Token::N) => {
                        let e = if self.peek() == Some(&Token::Caret) {
                            self.next();
                            self.expect_exponent()?
                        } else {
                            one
                        };
                        poly += e;
                    }
                    Some(Token::Log) => {
                        let e = if self.peek() == Some(&Token::Caret) {
                            self.next();
                            self.expect_exponent()?
                        } else {
                            one
                        };
                        log += e;
                    }
                    other => {
                        return Err(Error::Parse(format!(
                            "expected a factor (number, N or log), got {other:?}"
                        )))
                    }
                }
                factors += 1;
                if self.peek() == Some(&Token::Star) {
                    self.next();
                } else {
                    break;
                }
            }
            debug_assert!(factors > 0);
            GrowthTerm::new(coeff, poly, log)
        }
    }

    fn rational_from_parts(numer: f64, denom: f64) -> Result<Exponent> {
        let to_int = |v: f64, what: &str| -> Result<i64> {
            if v.fract() != 0.0 || v.abs() > i64::MAX as f64 {
                return Err(Error::Parse(format!(
                    "exponent {what} must be an integer, got {v}"
                )));
            }
            Ok(v as i64)
        };
        let n = to_int(numer, "numerator")?;
        let d = to_int(denom, "denominator")?;
        if d == 0 {
            return Err(Error::Parse("exponent denominator is zero".into()));
        }
        Ok(Exponent::new(n, d))
    }

    pub(super) fn growth_fn(input: &str) -> Result<GrowthFn> {
        let tokens = tokenize(input)?;
        if tokens.is_empty() {
            return Err(Error::Parse("empty growth expression".into()));
        }
        let mut p = Parser { tokens, pos: 0 };
        let mut terms = vec![p.term()?];
        while let Some(tok) = p.next() {
            if tok != Token::Plus {
                return Err(Error::Parse(format!("expected `+`, got {tok:?}")));
            }
            terms.push(p.term()?);
        }
        GrowthFn::normalize(terms)
    }
}
