//! Report rendering: JSON documents, CSV pair dumps and plain text.
//!
//! Decimal renderings round in the direction that keeps them valid: lower
//! bounds and coverage round down, upper bounds and tail mass round up.
//! Exact fractions are always included in machine output.

use std::io::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundsReport, PairBound};
use crate::empirical::{three_sigma, ScanCounts};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
    Nearest,
}

/// Decimal string for `x` with `digits` fractional digits.
pub fn decimal(x: &BigRational, digits: u32, rounding: Rounding) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = x * BigRational::from_integer(scale.clone());
    let int = match rounding {
        Rounding::Down => scaled.floor(),
        Rounding::Up => scaled.ceil(),
        Rounding::Nearest => scaled.round(),
    }
    .to_integer();
    let negative = int.is_negative();
    let (whole, frac) = int.abs().div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{frac:0>width$}", width = digits as usize)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantity {
    pub fraction: String,
    pub decimal: String,
}

impl Quantity {
    pub fn new(x: &BigRational, digits: u32, rounding: Rounding) -> Self {
        Self { fraction: x.to_string(), decimal: decimal(x, digits, rounding) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecDoc {
    pub k: u64,
    pub r1: u64,
    pub r2: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub y: u64,
    pub z: u64,
    pub s_max: u32,
    pub lambda_cap: u64,
    pub primorial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaDoc {
    pub s: u32,
    pub upper: Quantity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub a: u64,
    pub b: u64,
    pub ds: String,
    pub db_minus: String,
    pub db_plus: String,
    pub best_s_lower: Option<u32>,
    pub best_s_upper: Option<u32>,
}

impl From<&PairBound> for PairDoc {
    fn from(p: &PairBound) -> Self {
        Self {
            a: p.a,
            b: p.b,
            ds: p.ds.to_string(),
            db_minus: p.db_minus.to_string(),
            db_plus: p.db_plus.to_string(),
            best_s_lower: p.best_s_lower,
            best_s_upper: p.best_s_upper,
        }
    }
}

/// Machine-readable form of a [`BoundsReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub spec: SpecDoc,
    pub params: ParamsDoc,
    pub lower: Quantity,
    pub upper: Quantity,
    pub coverage: Quantity,
    pub tail: Quantity,
    pub pair_count: usize,
    pub formula_mismatches: usize,
    pub lambda: Vec<LambdaDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairDoc>>,
    pub diagnostics: Vec<String>,
}

impl BoundsDoc {
    pub fn from_report(report: &BoundsReport, digits: u32, include_pairs: bool) -> Self {
        let p = &report.params;
        Self {
            spec: SpecDoc { k: report.spec.k, r1: report.spec.r1, r2: report.spec.r2 },
            params: ParamsDoc {
                y: p.y(),
                z: p.z(),
                s_max: p.s_max(),
                lambda_cap: p.lambda_cap(),
                primorial: p.primorial().to_string(),
            },
            lower: Quantity::new(&report.lower, digits, Rounding::Down),
            upper: Quantity::new(&report.upper, digits, Rounding::Up),
            coverage: Quantity::new(&report.coverage, digits, Rounding::Down),
            tail: Quantity::new(&report.tail, digits, Rounding::Up),
            pair_count: report.pair_count(),
            formula_mismatches: report.formula_mismatches().count(),
            lambda: report
                .lambdas
                .iter()
                .map(|(s, v)| LambdaDoc { s, upper: Quantity::new(v, digits, Rounding::Up) })
                .collect(),
            pairs: include_pairs.then(|| report.pairs.iter().map(PairDoc::from).collect()),
            diagnostics: report.diagnostics.clone(),
        }
    }
}

/// Pretty JSON with a trailing newline; field order is fixed by the types.
pub fn to_json<T: Serialize>(doc: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(doc)
        .map_err(|e| crate::Error::Inconsistent(format!("json: {e}")))?;
    text.push('\n');
    Ok(text)
}

pub fn write_pairs_csv<W: Write>(pairs: &[PairBound], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    let io = |e: csv::Error| crate::Error::Io(e.into());
    writer
        .write_record(["a", "b", "ds", "db_minus", "db_plus", "best_s_lower", "best_s_upper"])
        .map_err(io)?;
    let opt = |s: Option<u32>| s.map(|v| v.to_string()).unwrap_or_default();
    for p in pairs {
        writer
            .write_record([
                p.a.to_string(),
                p.b.to_string(),
                p.ds.to_string(),
                p.db_minus.to_string(),
                p.db_plus.to_string(),
                opt(p.best_s_lower),
                opt(p.best_s_upper),
            ])
            .map_err(io)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn bounds_text(report: &BoundsReport, digits: u32) -> String {
    let d = |x: &BigRational, r| decimal(x, digits, r);
    let s = &report.spec;
    let p = &report.params;
    let mut out = String::new();
    out.push_str(&format!(
        "density of {{n : sigma({k}n+{r1}) >= sigma({k}n+{r2})}}\n",
        k = s.k,
        r1 = s.r1,
        r2 = s.r2
    ));
    out.push_str(&format!(
        "y = {}  z = {}  s_max = {}  lambda cap = {}\n",
        p.y(),
        p.z(),
        p.s_max(),
        p.lambda_cap()
    ));
    out.push_str(&format!("lower     {}\n", d(&report.lower, Rounding::Down)));
    out.push_str(&format!("upper     {}\n", d(&report.upper, Rounding::Up)));
    out.push_str(&format!("coverage  {}\n", d(&report.coverage, Rounding::Down)));
    out.push_str(&format!("tail      {}\n", d(&report.tail, Rounding::Up)));
    out.push_str(&format!("pairs     {}\n", report.pair_count()));
    for (s, v) in report.lambdas.iter() {
        out.push_str(&format!("Lambda+({s}) <= {}\n", d(v, Rounding::Up)));
    }
    for line in &report.diagnostics {
        out.push_str(&format!("note: {line}\n"));
    }
    out
}

/// Machine-readable result of a brute-force count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmpiricalDoc {
    pub spec: SpecDoc,
    pub n: u64,
    pub count: u64,
    pub density: Quantity,
    pub ties: u64,
    pub tie_density: Quantity,
    pub three_sigma: String,
}

impl EmpiricalDoc {
    pub fn new(spec: &crate::bounds::ProblemSpec, n: u64, counts: ScanCounts, digits: u32) -> Self {
        let ratio = |c: u64| BigRational::new(BigInt::from(c), BigInt::from(n));
        let density = ratio(counts.at_least);
        let f = counts.at_least as f64 / n as f64;
        Self {
            spec: SpecDoc { k: spec.k, r1: spec.r1, r2: spec.r2 },
            n,
            count: counts.at_least,
            density: Quantity::new(&density, digits, Rounding::Nearest),
            ties: counts.ties,
            tie_density: Quantity::new(&ratio(counts.ties), digits, Rounding::Nearest),
            three_sigma: format!("{:.3e}", three_sigma(f, n)),
        }
    }
}

/// `x` as an `f64`, for tolerances only.
pub fn approx(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn directed_decimals() {
        assert_eq!(decimal(&r(1, 3), 6, Rounding::Down), "0.333333");
        assert_eq!(decimal(&r(1, 3), 6, Rounding::Up), "0.333334");
        assert_eq!(decimal(&r(2, 3), 6, Rounding::Nearest), "0.666667");
        assert_eq!(decimal(&r(1, 2), 0, Rounding::Up), "1");
        assert_eq!(decimal(&r(1, 1), 3, Rounding::Down), "1.000");
        assert_eq!(decimal(&r(-1, 3), 2, Rounding::Down), "-0.34");
        assert_eq!(decimal(&r(1, 100_000), 3, Rounding::Up), "0.001");
    }
}
