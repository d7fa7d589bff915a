//! Cell densities `dS(a, b)` of `S(a, b) = {n : Y(kn+r1) = a, Y(kn+r2) = b}`.
//!
//! Two independent routes are provided. [`ds_formula`] evaluates the
//! closed-form product over primes `p <= y`. [`ds_local`] multiplies the
//! exact `p`-adic local densities obtained by scanning residues modulo a
//! prime power; the conditions at distinct primes are independent by CRT,
//! so the product is the true natural density.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ProblemSpec;
use crate::error::{Error, Result};
use crate::numth::{sieve_primes, valuation};

fn ratio(n: u64, d: u64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Closed-form product for `dS(a, b)`. Does not check admissibility.
pub fn ds_formula(a: u64, b: u64, spec: &ProblemSpec, y: u64) -> BigRational {
    let diff = spec.difference();
    let ab = u128::from(a) * u128::from(b);
    let mut density = BigRational::new(BigInt::from(spec.k), BigInt::from(ab));
    for p in sieve_primes(y) {
        let divides_diff = diff.is_multiple_of(p);
        let divides_ab = ab % u128::from(p) == 0;
        let factor = match (divides_diff, divides_ab) {
            (false, false) => ratio(p - 2, p),
            (false, true) | (true, false) => ratio(p - 1, p),
            (true, true) => ratio((p - 1) * (p - 1), p),
        };
        if factor.is_zero() {
            return BigRational::zero();
        }
        density *= factor;
    }
    density
}

/// Valuation of `kn + r` as seen modulo `p^level`; zero counts as "at least
/// `level`", which exceeds every target valuation we ever compare against.
fn residue_valuation(value: u128, p: u128) -> u32 {
    if value == 0 {
        return u32::MAX;
    }
    let mut v = value;
    let mut e = 0;
    while v.is_multiple_of(p) {
        v /= p;
        e += 1;
    }
    e
}

fn local_count(p: u64, va: u32, vb: u32, spec: &ProblemSpec, level: u32) -> Result<(u128, u128)> {
    let p128 = u128::from(p);
    let modulus = p128
        .checked_pow(level)
        .filter(|m| *m <= 1 << 40)
        .ok_or(Error::Overflow("local residue modulus"))?;
    let (k, r1, r2) = (u128::from(spec.k), u128::from(spec.r1), u128::from(spec.r2));
    let mut count = 0u128;
    for n in 0..modulus {
        // kn + r taken mod p^level keeps every valuation below `level` intact
        let first = (k * n + r1) % modulus;
        if residue_valuation(first, p128) != va {
            continue;
        }
        let second = (k * n + r2) % modulus;
        if residue_valuation(second, p128) == vb {
            count += 1;
        }
    }
    Ok((count, modulus))
}

/// Density of `{n : v_p(kn+r1) = va, v_p(kn+r2) = vb}`, checked for
/// stability one level above the working level.
pub fn local_density(p: u64, va: u32, vb: u32, spec: &ProblemSpec) -> Result<BigRational> {
    let level = va + vb + valuation(spec.k, p) + 2;
    let (count, modulus) = local_count(p, va, vb, spec, level)?;
    let (count_next, modulus_next) = local_count(p, va, vb, spec, level + 1)?;
    if count * modulus_next != count_next * modulus {
        return Err(Error::UnstableLocalDensity { p, va, vb, t: level });
    }
    Ok(BigRational::new(BigInt::from(count), BigInt::from(modulus)))
}

/// Exact density of the cell `S(a, b)` as a product of local densities.
pub fn ds_local(a: u64, b: u64, spec: &ProblemSpec, y: u64) -> Result<BigRational> {
    let mut density = BigRational::one();
    for p in sieve_primes(y) {
        let factor = local_density(p, valuation(a, p), valuation(b, p), spec)?;
        if factor.is_zero() {
            return Ok(factor);
        }
        density *= factor;
    }
    Ok(density)
}

/// Whether the cell `S(a, b)` can be nonempty.
pub fn admissible(a: u64, b: u64, spec: &ProblemSpec, y: u64) -> bool {
    if !spec.difference().is_multiple_of(a.gcd(&b)) {
        return false;
    }
    sieve_primes(y).into_iter().all(|p| {
        let (va, vb) = (valuation(a, p), valuation(b, p));
        let level = va + vb + valuation(spec.k, p) + 2;
        matches!(local_count(p, va, vb, spec, level), Ok((count, _)) if count > 0)
    })
}
