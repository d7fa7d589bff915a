//! Certified bounds on the natural density of
//! `{n >= 1 : sigma(kn + r1) >= sigma(kn + r2)}`.
//!
//! The integers are split into cells by the `y`-smooth parts of `kn + r1`
//! and `kn + r2`. Each cell has an exact rational density, and within a
//! cell the comparison is bounded using moments of the abundancy index
//! `h(n) = sigma(n)/n` over integers free of small primes. Every number that
//! reaches a bound is an exact [`num_rational::BigRational`]; the Euler
//! products behind the moment bounds are rounded upward.
//!
//! Modules:
//! - [`numth`]: primes, factorization, `sigma`, smooth numbers.
//! - [`bounds`]: cell densities, `Lambda` bounds, per-pair and total bounds.
//! - [`empirical`]: brute-force counting oracles.
//! - [`report`] and [`cli`]: rendering and the command-line front end.
//!
//! ```
//! use sigma_density::bounds::{compute_bounds, BoundParams, ProblemSpec};
//!
//! let spec = ProblemSpec::new(2, 1, 0).unwrap();
//! let report = compute_bounds(&spec, &BoundParams::new(5, 100, 3).unwrap()).unwrap();
//! assert!(report.lower <= report.upper);
//! ```

pub mod bounds;
pub mod cli;
pub mod empirical;
pub mod error;
pub mod numth;
pub mod report;

pub use error::{Error, Result};
