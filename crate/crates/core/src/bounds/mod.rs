//! Certified bounds on the density of `{n : sigma(kn+r1) >= sigma(kn+r2)}`.
//!
//! The positive integers are partitioned into cells `S(a, b)` indexed by
//! the `y`-smooth parts `a = Y(kn+r1)` and `b = Y(kn+r2)`. For each
//! admissible cell with `ab <= z` we bound the share of the cell on which
//! `h(kn+r1) >= h(kn+r2)`, then sum. Cells beyond the cap contribute their
//! whole mass `1 - sum dS` to the upper bound.

mod cells;
pub mod lambda;
mod pair;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

pub use cells::{admissible, ds_formula, ds_local, local_density};
pub use lambda::{lambda_upper, LambdaTable, DEFAULT_LAMBDA_CAP};
pub use pair::{pair_bounds, PairBound};

use crate::error::{Error, Result};
use crate::numth::{primorial, smooth_numbers};

/// The triple `(k, r1, r2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProblemSpec {
    pub k: u64,
    pub r1: u64,
    pub r2: u64,
}

impl ProblemSpec {
    pub fn new(k: u64, r1: u64, r2: u64) -> Result<Self> {
        if k > r1 && r1 > r2 {
            Ok(Self { k, r1, r2 })
        } else {
            Err(Error::InvalidSpec { k, r1, r2 })
        }
    }

    /// `r1 - r2`, always positive.
    pub fn difference(&self) -> u64 {
        self.r1 - self.r2
    }
}

/// Smoothness bound `y`, pair cap `z` (enumerate `ab <= z`), largest power
/// `s_max`, and the prime cap of the Euler product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundParams {
    y: u64,
    z: u64,
    s_max: u32,
    lambda_cap: u64,
    primorial: BigInt,
}

impl BoundParams {
    pub fn new(y: u64, z: u64, s_max: u32) -> Result<Self> {
        Self::with_lambda_cap(y, z, s_max, DEFAULT_LAMBDA_CAP)
    }

    pub fn with_lambda_cap(y: u64, z: u64, s_max: u32, lambda_cap: u64) -> Result<Self> {
        if y < 2 {
            return Err(Error::InvalidParams(format!("y = {y}, need y >= 2")));
        }
        if z == 0 {
            return Err(Error::InvalidParams("z must be positive".into()));
        }
        if s_max == 0 {
            return Err(Error::InvalidParams("s_max must be positive".into()));
        }
        if lambda_cap <= y {
            return Err(Error::InvalidParams(format!(
                "lambda cap {lambda_cap} must exceed y = {y}"
            )));
        }
        if y > 1 << 20 {
            return Err(Error::InvalidParams(format!("y = {y} is unreasonably large")));
        }
        Ok(Self { y, z, s_max, lambda_cap, primorial: primorial(y) })
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    pub fn s_max(&self) -> u32 {
        self.s_max
    }

    pub fn lambda_cap(&self) -> u64 {
        self.lambda_cap
    }

    /// Product of the primes `<= y`.
    pub fn primorial(&self) -> &BigInt {
        &self.primorial
    }

    /// Whether the exponential tail constant is certified for this cap.
    pub fn cap_is_certified(&self) -> bool {
        self.lambda_cap == DEFAULT_LAMBDA_CAP
    }
}

/// Result of [`compute_bounds`].
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub spec: ProblemSpec,
    pub params: BoundParams,
    pub lower: BigRational,
    pub upper: BigRational,
    /// Sum of `dS` over enumerated cells.
    pub coverage: BigRational,
    /// `1 - coverage`.
    pub tail: BigRational,
    pub lambdas: LambdaTable,
    /// Enumerated admissible pairs in canonical order (a, then b, ascending).
    pub pairs: Vec<PairBound>,
    pub diagnostics: Vec<String>,
    pub elapsed: Duration,
}

impl BoundsReport {
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Pairs on which the closed-form cell density differs from the local one.
    pub fn formula_mismatches(&self) -> impl Iterator<Item = &PairBound> {
        self.pairs.iter().filter(|p| !p.formula_agrees())
    }
}

/// Admissible pairs `(a, b)` of `y`-smooth numbers with `ab <= z`, in
/// canonical order.
pub fn enumerate_pairs(spec: &ProblemSpec, y: u64, z: u64) -> Vec<(u64, u64)> {
    let smooth = smooth_numbers(y, z);
    let candidates: Vec<(u64, u64)> = smooth
        .iter()
        .flat_map(|&a| {
            smooth
                .iter()
                .take_while(move |&&b| a.saturating_mul(b) <= z)
                .map(move |&b| (a, b))
        })
        .collect();
    candidates
        .into_par_iter()
        .filter(|&(a, b)| admissible(a, b, spec, y))
        .collect()
}

fn sum<'a>(values: impl ParallelIterator<Item = &'a BigRational>) -> BigRational {
    values
        .map(Clone::clone)
        .reduce(BigRational::zero, |x, y| x + y)
}

/// Lower and upper bounds on the density for one problem.
///
/// Runs on the current rayon pool; the result does not depend on the pool
/// size since all sums are exact.
pub fn compute_bounds(spec: &ProblemSpec, params: &BoundParams) -> Result<BoundsReport> {
    let started = Instant::now();
    let spec = ProblemSpec::new(spec.k, spec.r1, spec.r2)?;
    let lambdas = LambdaTable::compute(params)?;
    let y = params.y();

    let pairs = enumerate_pairs(&spec, y, params.z())
        .into_par_iter()
        .map(|(a, b)| {
            let local = ds_local(a, b, &spec, y)?;
            let formula = ds_formula(a, b, &spec, y);
            pair_bounds(a, b, local, formula, &lambdas)
        })
        .collect::<Result<Vec<_>>>()?;

    let coverage = sum(pairs.par_iter().map(|p| &p.ds));
    let lower = sum(pairs.par_iter().map(|p| &p.db_minus));
    let plus = sum(pairs.par_iter().map(|p| &p.db_plus));
    let tail = BigRational::one() - &coverage;
    if tail.is_negative() {
        return Err(Error::NegativeTail(tail.to_string()));
    }
    let upper = plus + &tail;

    let mut diagnostics = Vec::new();
    if !params.cap_is_certified() {
        diagnostics.push(format!(
            "lambda cap {} differs from {DEFAULT_LAMBDA_CAP}; the exponential tail factor is \
             not certified and the bounds are heuristic",
            params.lambda_cap()
        ));
    }
    let mismatches: Vec<&PairBound> = pairs.iter().filter(|p| !p.formula_agrees()).collect();
    if !mismatches.is_empty() {
        let shown: Vec<String> = mismatches
            .iter()
            .take(8)
            .map(|p| format!("({},{}): formula {} vs local {}", p.a, p.b, p.ds_formula, p.ds))
            .collect();
        let message = format!(
            "closed-form cell density differs from the local density on {} of {} pairs; \
             local densities used. First: {}",
            mismatches.len(),
            pairs.len(),
            shown.join("; ")
        );
        log::warn!("{message}");
        diagnostics.push(message);
    }

    if lower.is_negative() || lower > upper || upper > BigRational::one() {
        return Err(Error::Inconsistent(format!(
            "bounds out of order: lower {lower}, upper {upper}"
        )));
    }

    Ok(BoundsReport {
        spec,
        params: params.clone(),
        lower,
        upper,
        coverage,
        tail,
        lambdas,
        pairs,
        diagnostics,
        elapsed: started.elapsed(),
    })
}
