//! Exact integer kernel: primes, factorization, divisor sums, abundancy
//! powers, smooth numbers and smooth parts.
//!
//! Everything here returns exact integers or [`BigRational`] values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Primes up to this bound are sieved once and shared by [`factorize`].
/// Trial division with the table factors any `n < 2^32` completely.
const SHARED_PRIME_LIMIT: u64 = 1 << 16;

fn shared_primes() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| sieve_primes(SHARED_PRIME_LIMIT))
}

/// All primes `<= limit`, ascending (sieve of Eratosthenes over odd numbers).
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = usize::try_from(limit).expect("prime limit exceeds address space");
    // index i stands for 2i + 1
    let half = limit / 2 + 1;
    let mut composite = vec![false; half];
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= limit {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = p * p / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = vec![2];
    primes.extend(
        (1..half)
            .filter(|&i| !composite[i] && 2 * i < limit)
            .map(|i| (2 * i + 1) as u64),
    );
    primes
}

/// Prime factorization of a positive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// `sigma(n) = prod (p^(e+1) - 1) / (p - 1)`.
    pub fn sigma(&self) -> u128 {
        self.factors
            .iter()
            .map(|&(p, e)| {
                let p = u128::from(p);
                let mut term = 1u128;
                let mut pk = 1u128;
                for _ in 0..e {
                    pk *= p;
                    term += pk;
                }
                term
            })
            .product()
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument("factorize"));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    for &p in shared_primes() {
        if p * p > rest {
            break;
        }
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if rest > 1 {
        let last = *shared_primes().last().unwrap();
        if rest < last * last {
            factors.push((rest, 1));
        } else {
            // Cofactor beyond the shared table: continue by odd trial division.
            let mut d = last + 2;
            while d * d <= rest {
                if rest.is_multiple_of(d) {
                    let mut e = 0;
                    while rest.is_multiple_of(d) {
                        rest /= d;
                        e += 1;
                    }
                    factors.push((d, e));
                }
                d += 2;
            }
            if rest > 1 {
                factors.push((rest, 1));
            }
        }
    }
    Ok(Factorization { value: n, factors })
}

/// Sum of the positive divisors of `n`.
pub fn sigma(n: u64) -> Result<u128> {
    Ok(factorize(n)?.sigma())
}

/// Exact `(sigma(n) / n)^s`.
pub fn abundancy_pow(n: u64, s: u32) -> Result<BigRational> {
    let base = BigRational::new(BigInt::from(sigma(n)?), BigInt::from(n));
    Ok(num_traits::pow(base, s as usize))
}

/// All `y`-smooth integers in `[1, z]`, ascending. 1 is included.
pub fn smooth_numbers(y: u64, z: u64) -> Vec<u64> {
    fn extend(primes: &[u64], start: usize, value: u64, z: u64, out: &mut Vec<u64>) {
        out.push(value);
        for (i, &p) in primes.iter().enumerate().skip(start) {
            match value.checked_mul(p) {
                Some(next) if next <= z => extend(primes, i, next, z, out),
                _ => break,
            }
        }
    }

    if z == 0 {
        return Vec::new();
    }
    let primes = sieve_primes(y);
    let mut out = Vec::new();
    extend(&primes, 0, 1, z, &mut out);
    out.sort_unstable();
    out
}

/// Largest `y`-smooth divisor of `n`.
pub fn smooth_part(n: u64, y: u64) -> u64 {
    smooth_part_with(n, &sieve_primes(y))
}

/// [`smooth_part`] against a precomputed list of the primes `<= y`.
pub fn smooth_part_with(mut n: u64, small_primes: &[u64]) -> u64 {
    let original = n;
    for &p in small_primes {
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    original / n
}

/// Exponent of the prime `p` in `n`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    debug_assert!(n > 0 && p > 1);
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// Product of the primes `<= y`.
pub fn primorial(y: u64) -> BigInt {
    sieve_primes(y).into_iter().map(BigInt::from).product::<BigInt>().max(BigInt::one())
}
