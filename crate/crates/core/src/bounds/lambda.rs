//! Certified upper bounds for `Lambda_P(s)`, the mean of `h(m)^s` over
//! integers `m` coprime to the primorial `P`.
//!
//! For `s = 1` the mean has the closed form `zeta(2) * prod_{p <= y} (1 - 1/p^2)`.
//! For `s >= 2` it is bounded by a finite Euler product over `y < p < cap`
//! times `exp(1.6623114e-6 * s)`, the latter covering all primes past
//! `cap = 65536`. Every rounding step moves the value up.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;

use super::BoundParams;
use crate::error::{Error, Result};
use crate::numth::sieve_primes;

/// Prime cap for which [`tail_exponent`] is valid.
pub const DEFAULT_LAMBDA_CAP: u64 = 65536;

/// Bits of the common power-of-two denominator used when rounding
/// Euler-product factors up.
pub const ROUNDING_BITS: usize = 96;

/// `zeta(2) = 1.6449340668482264...` rounded up at 16 decimals.
pub fn zeta2_upper() -> BigRational {
    BigRational::new(
        BigInt::from(16_449_340_668_482_267u64),
        BigInt::from(10u64.pow(16)),
    )
}

/// `1.6623114e-6` as an exact rational.
pub fn tail_exponent() -> BigRational {
    BigRational::new(BigInt::from(16_623_114u64), BigInt::from(10u64.pow(13)))
}

/// Smallest multiple of `2^-bits` that is `>= x`.
pub fn round_up(x: &BigRational, bits: usize) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = x * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.ceil().to_integer(), scale)
}

/// Upper bound for `exp(x)`, `0 <= x < 1`.
fn exp_upper(x: &BigRational) -> Result<BigRational> {
    let one = BigRational::one();
    if x.is_negative() || *x >= one {
        return Err(Error::InvalidParams(format!("tail exponent {x} outside [0, 1)")));
    }
    let small = BigRational::new(BigInt::one(), BigInt::from(100_000));
    if *x <= small {
        Ok(&one + x + x * x)
    } else {
        Ok(&one / (&one - x))
    }
}

/// Exact Euler factor `1 + ((1 + 1/p)^s - 1)/p + s / ((p^4 - p^2)(1 - 1/p)^(s-1))`.
fn euler_factor(p: u64, s: u32) -> BigRational {
    let one = BigRational::one();
    let pr = BigRational::from_integer(BigInt::from(p));
    let inv = one.clone() / &pr;
    let growth = num_traits::pow(&one + &inv, s as usize) - &one;
    let p2 = BigInt::from(p) * BigInt::from(p);
    let quartic = BigRational::from_integer(&p2 * &p2 - &p2);
    let shrink = num_traits::pow(&one - &inv, (s - 1) as usize);
    let correction = BigRational::from_integer(BigInt::from(s)) / (quartic * shrink);
    one + growth / pr + correction
}

/// Certified upper bound for `Lambda_P(s)` with `P` the primorial of `y`.
pub fn lambda_upper(s: u32, y: u64, lambda_cap: u64) -> Result<BigRational> {
    if s == 0 {
        return Err(Error::InvalidParams("s must be >= 1".into()));
    }
    if s == 1 {
        let one = BigRational::one();
        return Ok(sieve_primes(y).into_iter().fold(zeta2_upper(), |acc, p| {
            let p2 = BigInt::from(p) * BigInt::from(p);
            acc * (&one - BigRational::new(BigInt::one(), p2))
        }));
    }
    let scale = BigInt::one() << ROUNDING_BITS;
    // running product as numerator over 2^ROUNDING_BITS, rounded up each step
    let mut numer = scale.clone();
    for p in sieve_primes(lambda_cap.saturating_sub(1)) {
        if p <= y {
            continue;
        }
        let factor = round_up(&euler_factor(p, s), ROUNDING_BITS);
        let product = &numer * factor.numer() * (&scale / factor.denom());
        let (q, r) = product.div_rem(&scale);
        numer = if r.is_positive() { q + 1 } else { q };
    }
    let tail = exp_upper(&(tail_exponent() * BigRational::from_integer(BigInt::from(s))))?;
    Ok(BigRational::new(numer, scale) * tail)
}

/// `Lambda_P^+(s)` for every `s` in `1..=s_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaTable {
    entries: Vec<BigRational>,
}

impl LambdaTable {
    pub fn compute(params: &BoundParams) -> Result<Self> {
        let entries = (1..=params.s_max())
            .into_par_iter()
            .map(|s| lambda_upper(s, params.y(), params.lambda_cap()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { entries })
    }

    pub fn from_entries(entries: Vec<BigRational>) -> Self {
        Self { entries }
    }

    /// Entry for `s` (1-based).
    pub fn get(&self, s: u32) -> &BigRational {
        &self.entries[s as usize - 1]
    }

    pub fn s_max(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.entries.iter().enumerate().map(|(i, v)| (i as u32 + 1, v))
    }
}
