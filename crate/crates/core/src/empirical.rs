//! Brute-force counting oracles.
//!
//! `sigma` over a contiguous range is computed by a segmented sieve that
//! divides out every prime up to the square root of the range end. Counts
//! over `n <= N` stream through segments in parallel and are combined by
//! integer addition.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::bounds::ProblemSpec;
use crate::error::{Error, Result};
use crate::numth::{sieve_primes, smooth_part_with};

/// Default number of `sigma` values per segment.
pub const SEGMENT_SIZE: u64 = 1 << 22;

/// `sigma(n)` for `n` in `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeSigma {
    pub lo: u64,
    pub hi: u64,
    pub sigma_values: Vec<u64>,
}

impl RangeSigma {
    pub fn get(&self, n: u64) -> u64 {
        self.sigma_values[(n - self.lo) as usize]
    }
}

/// A count over `n in [1, N]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmpiricalEstimate {
    pub spec: ProblemSpec,
    pub count: u64,
    pub total: u64,
}

impl EmpiricalEstimate {
    pub fn density(&self) -> BigRational {
        BigRational::new(BigInt::from(self.count), BigInt::from(self.total))
    }

    pub fn density_f64(&self) -> f64 {
        self.count as f64 / self.total as f64
    }
}

/// Three-sigma binomial tolerance `3 sqrt(d (1 - d) / N)`.
pub fn three_sigma(density: f64, n: u64) -> f64 {
    3.0 * (density * (1.0 - density) / n as f64).sqrt()
}

fn sieve_segment(lo: u64, hi: u64, primes: &[u64]) -> Vec<u64> {
    let len = (hi - lo + 1) as usize;
    let mut rest: Vec<u64> = (lo..=hi).collect();
    let mut sigma = vec![1u64; len];
    for &p in primes {
        if p * p > hi {
            break;
        }
        let first = lo.div_ceil(p) * p;
        let mut m = first;
        while m <= hi {
            let i = (m - lo) as usize;
            let mut term = 1u64;
            let mut pk = 1u64;
            while rest[i].is_multiple_of(p) {
                rest[i] /= p;
                pk *= p;
                term += pk;
            }
            sigma[i] *= term;
            m += p;
        }
    }
    for (s, r) in sigma.iter_mut().zip(rest) {
        if r > 1 {
            *s *= r + 1;
        }
    }
    sigma
}

fn sqrt_primes(hi: u64) -> Vec<u64> {
    sieve_primes(hi.isqrt() + 1)
}

/// `sigma(n)` for every `n` in `[lo, hi]`; the range may not exceed [`SEGMENT_SIZE`].
pub fn sigma_range(lo: u64, hi: u64) -> Result<RangeSigma> {
    if lo == 0 || hi < lo {
        return Err(Error::InvalidParams(format!("bad range [{lo}, {hi}]")));
    }
    if hi - lo + 1 > SEGMENT_SIZE {
        return Err(Error::RangeTooLarge { lo, hi, budget: SEGMENT_SIZE });
    }
    if hi > u64::MAX / 1024 {
        return Err(Error::Overflow("sigma_range upper end"));
    }
    let sigma_values = sieve_segment(lo, hi, &sqrt_primes(hi));
    Ok(RangeSigma { lo, hi, sigma_values })
}

/// Counts of `sigma(kn+r1) >= sigma(kn+r2)` and of exact ties over `n <= N`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanCounts {
    pub at_least: u64,
    pub ties: u64,
}

/// One pass over `n in [1, N]` producing both the comparison and tie counts.
pub fn scan(spec: &ProblemSpec, n_max: u64) -> Result<ScanCounts> {
    if n_max == 0 {
        return Err(Error::ZeroArgument("N"));
    }
    let top = spec
        .k
        .checked_mul(n_max)
        .and_then(|v| v.checked_add(spec.r1))
        .filter(|&v| v < 1 << 50)
        .ok_or(Error::Overflow("k N + r1"))?;
    let primes = sqrt_primes(top);
    // n per segment so that the sigma window k*len + (r1 - r2) fits the budget
    let per_segment = ((SEGMENT_SIZE - spec.k) / spec.k).max(1);
    let segments: Vec<(u64, u64)> = (0..n_max.div_ceil(per_segment))
        .map(|i| {
            let first = 1 + i * per_segment;
            (first, (first + per_segment - 1).min(n_max))
        })
        .collect();

    let counts = segments
        .into_par_iter()
        .map(|(first, last)| {
            let lo = spec.k * first + spec.r2;
            let hi = spec.k * last + spec.r1;
            let values = sieve_segment(lo, hi, &primes);
            let mut counts = ScanCounts::default();
            for n in first..=last {
                let base = (spec.k * n - spec.k * first) as usize;
                let s1 = values[base + spec.difference() as usize];
                let s2 = values[base];
                if s1 >= s2 {
                    counts.at_least += 1;
                }
                if s1 == s2 {
                    counts.ties += 1;
                }
            }
            counts
        })
        .reduce(ScanCounts::default, |x, y| ScanCounts {
            at_least: x.at_least + y.at_least,
            ties: x.ties + y.ties,
        });
    Ok(counts)
}

/// Fraction of `n <= N` with `sigma(kn+r1) >= sigma(kn+r2)`.
pub fn empirical_density(spec: &ProblemSpec, n_max: u64) -> Result<EmpiricalEstimate> {
    let counts = scan(spec, n_max)?;
    Ok(EmpiricalEstimate { spec: *spec, count: counts.at_least, total: n_max })
}

/// Number of `n <= N` with `sigma(kn+r1) = sigma(kn+r2)`.
pub fn tie_count(spec: &ProblemSpec, n_max: u64) -> Result<EmpiricalEstimate> {
    let counts = scan(spec, n_max)?;
    Ok(EmpiricalEstimate { spec: *spec, count: counts.ties, total: n_max })
}

/// Frequency of the cell `S(a, b)` among `n <= N`.
pub fn empirical_pair_density(
    a: u64,
    b: u64,
    spec: &ProblemSpec,
    y: u64,
    n_max: u64,
) -> Result<EmpiricalEstimate> {
    if n_max == 0 {
        return Err(Error::ZeroArgument("N"));
    }
    let primes = sieve_primes(y);
    let count = (1..=n_max)
        .into_par_iter()
        .filter(|&n| {
            smooth_part_with(spec.k * n + spec.r1, &primes) == a
                && smooth_part_with(spec.k * n + spec.r2, &primes) == b
        })
        .count() as u64;
    Ok(EmpiricalEstimate { spec: *spec, count, total: n_max })
}

/// Counts of every cell `(Y(kn+r1), Y(kn+r2))` over `n <= N`.
///
/// Each `n` lands in exactly one cell, so the counts sum to `N`.
pub fn cell_histogram(spec: &ProblemSpec, y: u64, n_max: u64) -> HashMap<(u64, u64), u64> {
    let primes = sieve_primes(y);
    (1..=n_max)
        .into_par_iter()
        .fold(HashMap::new, |mut acc, n| {
            let key = (
                smooth_part_with(spec.k * n + spec.r1, &primes),
                smooth_part_with(spec.k * n + spec.r2, &primes),
            );
            *acc.entry(key).or_insert(0u64) += 1;
            acc
        })
        .reduce(HashMap::new, |mut x, y| {
            for (key, count) in y {
                *x.entry(key).or_insert(0) += count;
            }
            x
        })
}

/// Mean of `h(n)^s` over `n <= N` with `n = g (mod modulus)`.
///
/// Terms are summed in `f64` with compensation; the mean is returned as the
/// exact rational value of the resulting float.
pub fn progression_mean_hs(g: u64, modulus: u64, s: u32, n_max: u64) -> Result<BigRational> {
    if modulus == 0 || g == 0 {
        return Err(Error::ZeroArgument("progression_mean_hs"));
    }
    if g.gcd(&modulus) != 1 {
        return Err(Error::NotCoprime { g, modulus });
    }
    if n_max == 0 {
        return Err(Error::ZeroArgument("N"));
    }
    let start = if modulus == 1 { 1 } else { g % modulus };
    let start = if start == 0 { modulus } else { start };
    if start > n_max {
        return Err(Error::InvalidParams(format!(
            "no n <= {n_max} in the class {g} mod {modulus}"
        )));
    }
    let primes = sqrt_primes(n_max);
    let segments: Vec<(u64, u64)> = (0..n_max.div_ceil(SEGMENT_SIZE))
        .map(|i| (1 + i * SEGMENT_SIZE, ((i + 1) * SEGMENT_SIZE).min(n_max)))
        .collect();
    let partials: Vec<(f64, f64, u64)> = segments
        .into_par_iter()
        .map(|(lo, hi)| {
            let values = sieve_segment(lo, hi, &primes);
            let offset = (start + modulus - lo % modulus) % modulus;
            let first = lo + offset;
            let (mut sum, mut comp, mut count) = (0.0f64, 0.0f64, 0u64);
            let mut n = first;
            while n <= hi {
                let term = (values[(n - lo) as usize] as f64 / n as f64).powi(s as i32);
                let t = sum + term;
                comp += if sum.abs() >= term.abs() { (sum - t) + term } else { (term - t) + sum };
                sum = t;
                count += 1;
                n += modulus;
            }
            (sum, comp, count)
        })
        .collect();
    let (sum, comp, count) = partials
        .iter()
        .fold((0.0, 0.0, 0), |(s, c, n), &(ps, pc, pn)| (s + ps, c + pc, n + pn));
    let mean = (sum + comp) / count as f64;
    BigRational::from_float(mean).ok_or(Error::Inconsistent("non-finite progression mean".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numth::sigma;
    use num_traits::ToPrimitive;

    fn spec(k: u64, r1: u64, r2: u64) -> ProblemSpec {
        ProblemSpec::new(k, r1, r2).unwrap()
    }

    #[test]
    fn sigma_range_examples() {
        assert_eq!(
            sigma_range(1, 10).unwrap().sigma_values,
            vec![1, 3, 4, 7, 6, 12, 8, 15, 13, 18]
        );
        assert_eq!(sigma_range(12, 12).unwrap().sigma_values, vec![28]);
        assert!(matches!(
            sigma_range(1, SEGMENT_SIZE + 1),
            Err(Error::RangeTooLarge { .. })
        ));
        assert!(sigma_range(0, 5).is_err());
    }

    #[test]
    fn sigma_range_matches_factorization() {
        let range = sigma_range(999_000, 1_001_000).unwrap();
        for n in (999_000..=1_001_000).step_by(7) {
            assert_eq!(u128::from(range.get(n)), sigma(n).unwrap());
        }
    }

    fn brute_scan(s: &ProblemSpec, n_max: u64) -> ScanCounts {
        let mut c = ScanCounts::default();
        for n in 1..=n_max {
            let s1 = sigma(s.k * n + s.r1).unwrap();
            let s2 = sigma(s.k * n + s.r2).unwrap();
            c.at_least += u64::from(s1 >= s2);
            c.ties += u64::from(s1 == s2);
        }
        c
    }

    #[test]
    fn scan_matches_pointwise_sigma() {
        for s in [spec(2, 1, 0), spec(3, 2, 0), spec(4, 3, 1), spec(7, 5, 2)] {
            assert_eq!(scan(&s, 20_000).unwrap(), brute_scan(&s, 20_000));
            assert_eq!(scan(&s, 1).unwrap(), brute_scan(&s, 1));
        }
    }

    #[test]
    fn single_sample() {
        let s = spec(2, 1, 0);
        // sigma(3) = 4 >= sigma(2) = 3
        let e = empirical_density(&s, 1).unwrap();
        assert_eq!((e.count, e.total), (1, 1));
        assert_eq!(tie_count(&s, 1).unwrap().count, 0);
        assert!(empirical_density(&s, 0).is_err());
    }

    #[test]
    fn pair_density_examples() {
        let e = empirical_pair_density(1, 2, &spec(2, 1, 0), 2, 100_000).unwrap();
        assert!((e.density_f64() - 0.5).abs() <= three_sigma(0.5, 100_000));
        let e = empirical_pair_density(1, 3, &spec(3, 2, 0), 3, 100_000).unwrap();
        assert!((e.density_f64() - 1.0 / 3.0).abs() <= three_sigma(1.0 / 3.0, 100_000));
        let e = empirical_pair_density(3, 3, &spec(3, 2, 0), 3, 100_000).unwrap();
        assert_eq!(e.count, 0);
    }

    #[test]
    fn histogram_partitions_range() {
        let s = spec(3, 2, 0);
        let hist = cell_histogram(&s, 5, 50_000);
        assert_eq!(hist.values().sum::<u64>(), 50_000);
        let direct = empirical_pair_density(1, 3, &s, 5, 50_000).unwrap();
        assert_eq!(hist.get(&(1, 3)).copied().unwrap_or(0), direct.count);
    }

    #[test]
    fn progression_means() {
        let single = progression_mean_hs(5, 7, 2, 7).unwrap();
        // only n = 5: (6/5)^2
        assert!((single.to_f64().unwrap() - 1.44).abs() < 1e-12);
        let mean = progression_mean_hs(1, 1, 1, 200_000).unwrap().to_f64().unwrap();
        assert!((mean - 1.644_934).abs() < 1e-3);
        let odd = progression_mean_hs(1, 2, 1, 200_000).unwrap().to_f64().unwrap();
        assert!((odd - 1.233_700).abs() < 1e-3);
        assert!(matches!(progression_mean_hs(2, 4, 1, 100), Err(Error::NotCoprime { .. })));
    }
}
