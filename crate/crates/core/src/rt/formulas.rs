use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::constructions::ramsey_r3;
use crate::error::{Error, Result};

pub type Q = Ratio<i128>;

/// Closed-form edge densities `e/n²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaId {
    RhoK3K3 { delta: Q },
    RhoK3K4 { delta: Q },
    RhoK3K5 { delta: Q },
    /// Lower bound from the K₃K₆ construction; conjectured to be tight.
    K3K6Lower { delta: Q },
    /// Coefficient of `n²` for `(K₃, K_{2s−1})` at independence `g_s(n)`.
    Thm12Odd { s: usize },
    /// Coefficient of `n²` for `(K₃, K_{2s})` at independence `g_s(n)`.
    Thm12Even { s: usize },
    /// `½(1 − 1/r*)` for all-triangle specifications.
    TrianglesViaRStar { r_star: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Validity {
    /// `0 < δ` below the explicit threshold of the proof.
    Certified,
    /// Proven for sufficiently small `δ` with no explicit threshold.
    Unquantified,
    /// `δ` at or above the explicit threshold.
    Extrapolated,
    /// A `δ = 0` or `n → ∞` limit.
    Limit,
    Conjectured,
}

/// Explicit smallness thresholds on `δ`, surfaced in labels but never used
/// to refuse an evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Thresholds {
    /// δ below which the `(K₃,K₃)` upper bound is proven.
    pub k3k3: Option<f64>,
    pub k3k4: Option<f64>,
    pub k3k5: Option<f64>,
    /// Stability threshold behind the `(K₃,K₃)` and `(K₃,K₅)` bounds.
    pub stability: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            k3k3: Some(1e-13),
            k3k4: None,
            k3k5: None,
            stability: 1e-6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormulaValue {
    pub id: String,
    #[serde(serialize_with = "ser_opt_ratio")]
    pub exact: Option<Q>,
    pub value: f64,
    pub validity: Validity,
    pub threshold: Option<f64>,
}

fn ser_opt_ratio<S: serde::Serializer>(q: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&q.to_string()),
        None => s.serialize_none(),
    }
}

fn q(a: i128, b: i128) -> Q {
    Ratio::new(a, b)
}

/// Parses `a/b`, integers, decimals and `1e-6` style literals exactly.
pub fn parse_ratio(text: &str) -> Result<Q> {
    let t = text.trim();
    let bad = || Error::InvalidParameter(format!("not a rational literal: {text:?}"));
    if t.contains('/') {
        return Q::from_str(t).map_err(|_| bad());
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let scale = exp - frac.len() as i32;
    if scale.unsigned_abs() > 30 {
        return Err(bad());
    }
    let num: i128 = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let num = if neg { -num } else { num };
    let pow = 10i128.pow(scale.unsigned_abs());
    Ok(if scale >= 0 { q(num * pow, 1) } else { q(num, pow) })
}

impl FormulaId {
    pub fn name(&self) -> String {
        match self {
            Self::RhoK3K3 { delta } => format!("k3k3:{delta}"),
            Self::RhoK3K4 { delta } => format!("k3k4:{delta}"),
            Self::RhoK3K5 { delta } => format!("k3k5:{delta}"),
            Self::K3K6Lower { delta } => format!("k3k6:{delta}"),
            Self::Thm12Odd { s } => format!("odd:{s}"),
            Self::Thm12Even { s } => format!("even:{s}"),
            Self::TrianglesViaRStar { r_star } => format!("rstar:{r_star}"),
        }
    }

    /// Every identifier accepted by `from_str`, with its parameter.
    pub const SYNTAX: &'static [&'static str] =
        &["k3k3:<δ>", "k3k4:<δ>", "k3k5:<δ>", "k3k6:<δ>", "odd:<s>", "even:<s>", "rstar:<r*>"];
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (key, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Unknown(format!("{s:?} (expected one of {})", Self::SYNTAX.join(", "))))?;
        let int = || {
            arg.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("{arg:?} is not a non-negative integer")))
        };
        Ok(match key.trim().to_ascii_lowercase().as_str() {
            "k3k3" => Self::RhoK3K3 { delta: parse_ratio(arg)? },
            "k3k4" => Self::RhoK3K4 { delta: parse_ratio(arg)? },
            "k3k5" => Self::RhoK3K5 { delta: parse_ratio(arg)? },
            "k3k6" => Self::K3K6Lower { delta: parse_ratio(arg)? },
            "odd" => Self::Thm12Odd { s: int()? },
            "even" => Self::Thm12Even { s: int()? },
            "rstar" => Self::TrianglesViaRStar { r_star: int()? },
            other => return Err(Error::Unknown(format!("formula {other:?}"))),
        })
    }
}

fn delta_validity(delta: Q, threshold: Option<f64>) -> Validity {
    if delta.is_zero() {
        return Validity::Limit;
    }
    match threshold {
        None => Validity::Unquantified,
        Some(t) if delta.to_f64().unwrap_or(f64::INFINITY) < t => Validity::Certified,
        Some(_) => Validity::Extrapolated,
    }
}

pub fn eval_formula(f: &FormulaId) -> Result<FormulaValue> {
    eval_formula_with(f, &Thresholds::default())
}

pub fn eval_formula_with(f: &FormulaId, th: &Thresholds) -> Result<FormulaValue> {
    let check_delta = |d: &Q| {
        if *d < Q::zero() {
            Err(Error::InvalidParameter(format!("δ = {d} is negative")))
        } else {
            Ok(*d)
        }
    };
    let r3 = |s: usize| {
        if s < 2 {
            return Err(Error::InvalidParameter(format!("s = {s} < 2")));
        }
        ramsey_r3(s)
            .map(|r| r as i128)
            .ok_or_else(|| Error::Unknown(format!("R(3,{s}) is not tabulated")))
    };
    let half = q(1, 2);
    let (exact, validity, threshold) = match *f {
        FormulaId::RhoK3K3 { delta } => {
            let d = check_delta(&delta)?;
            (q(1, 4) + d / 2, delta_validity(d, th.k3k3), th.k3k3)
        }
        FormulaId::RhoK3K4 { delta } => {
            let d = check_delta(&delta)?;
            (q(1, 3) + d / 2 + q(3, 2) * d * d, delta_validity(d, th.k3k4), th.k3k4)
        }
        FormulaId::RhoK3K5 { delta } => {
            let d = check_delta(&delta)?;
            (q(2, 5) + d / 2, delta_validity(d, th.k3k5), th.k3k5)
        }
        FormulaId::K3K6Lower { delta } => {
            let d = check_delta(&delta)?;
            (q(5, 12) + d / 2 + q(2, 1) * d * d, Validity::Conjectured, None)
        }
        FormulaId::Thm12Odd { s } => (half * (q(1, 1) - q(1, r3(s)? - 1)), Validity::Limit, None),
        FormulaId::Thm12Even { s } => (half * (q(1, 1) - q(1, r3(s)?)), Validity::Limit, None),
        FormulaId::TrianglesViaRStar { r_star } => {
            if r_star == 0 {
                return Err(Error::InvalidParameter("r* must be positive".into()));
            }
            (half * (q(1, 1) - q(1, r_star as i128)), Validity::Limit, None)
        }
    };
    Ok(FormulaValue {
        id: f.name(),
        value: exact.to_f64().unwrap_or(f64::NAN),
        exact: Some(exact),
        validity,
        threshold,
    })
}

/// Growth function `ω(n)` in `g_s(n) = n / exp(ω(n) (ln n)^{1 − 1/s})`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Omega {
    LogLog,
    SqrtLogLog,
    Constant(f64),
}

impl Omega {
    pub fn at(&self, n: f64) -> f64 {
        match *self {
            Self::LogLog => n.ln().ln(),
            Self::SqrtLogLog => n.ln().ln().sqrt(),
            Self::Constant(c) => c,
        }
    }
}

impl FromStr for Omega {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "loglog" => Ok(Self::LogLog),
            "sqrtloglog" | "sqrt-loglog" => Ok(Self::SqrtLogLog),
            _ => match t.strip_prefix("const:").or_else(|| t.strip_prefix("constant:")) {
                Some(c) => c
                    .parse::<f64>()
                    .ok()
                    .filter(|c| c.is_finite() && *c > 0.0)
                    .map(Self::Constant)
                    .ok_or_else(|| Error::InvalidParameter(format!("bad constant in {s:?}"))),
                None => Err(Error::Unknown(format!(
                    "omega preset {s:?} (expected loglog, sqrtloglog or const:<c>)"
                ))),
            },
        }
    }
}

pub fn eval_gs(n: f64, s: usize, omega: Omega) -> Result<f64> {
    if n.is_nan() || n < 3.0 || s < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 3 and s >= 2, got n = {n}, s = {s}")));
    }
    let exponent = omega.at(n) * n.ln().powf(1.0 - 1.0 / s as f64);
    Ok(n / exponent.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        let v = eval_formula(&"k3k4:0.01".parse().unwrap()).unwrap();
        assert_eq!(v.exact, Some(q(20309, 60000)));
        assert_eq!(v.validity, Validity::Unquantified);
        let v = eval_formula(&"k3k5:0".parse().unwrap()).unwrap();
        assert_eq!((v.exact, v.validity), (Some(q(2, 5)), Validity::Limit));
        let v = eval_formula(&"k3k6:1/10".parse().unwrap()).unwrap();
        assert_eq!(v.exact, Some(q(73, 150)));
        assert_eq!(v.validity, Validity::Conjectured);
        let v = eval_formula(&"k3k3:1e-14".parse().unwrap()).unwrap();
        assert_eq!(v.validity, Validity::Certified);
        let v = eval_formula(&"k3k3:0.2".parse().unwrap()).unwrap();
        assert_eq!((v.exact, v.validity), (Some(q(7, 20)), Validity::Extrapolated));
        assert_eq!(eval_formula(&"odd:3".parse().unwrap()).unwrap().exact, Some(q(2, 5)));
        assert_eq!(eval_formula(&"even:2".parse().unwrap()).unwrap().exact, Some(q(1, 3)));
        assert_eq!(eval_formula(&"rstar:5".parse().unwrap()).unwrap().exact, Some(q(2, 5)));
        assert!(eval_formula(&"odd:6".parse().unwrap()).is_err());
        assert!(matches!("foo:1".parse::<FormulaId>(), Err(Error::Unknown(_))));
    }

    #[test]
    fn ratio_literals() {
        assert_eq!(parse_ratio("0.01").unwrap(), q(1, 100));
        assert_eq!(parse_ratio("1e-6").unwrap(), q(1, 1_000_000));
        assert_eq!(parse_ratio("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_ratio("-2.5").unwrap(), q(-5, 2));
        assert_eq!(parse_ratio("2.5e1").unwrap(), q(25, 1));
        assert!(parse_ratio("abc").is_err());
        assert!(parse_ratio(".").is_err());
    }

    #[test]
    fn gs_values() {
        let n = 4f64.exp();
        let g = eval_gs(n, 2, Omega::Constant(1.0)).unwrap();
        assert!((g - 2f64.exp()).abs() < 1e-9);
        let n = 1e5;
        let g2 = eval_gs(n, 2, Omega::LogLog).unwrap();
        let g3 = eval_gs(n, 3, Omega::LogLog).unwrap();
        assert!(g3 < g2);
        assert!("bogus".parse::<Omega>().is_err());
        assert!(eval_gs(2.0, 2, Omega::LogLog).is_err());
    }
}
