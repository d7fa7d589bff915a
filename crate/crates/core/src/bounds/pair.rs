use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LambdaTable;
use crate::error::Result;
use crate::numth::abundancy_pow;

/// Certified bounds on the density of `B ∩ S(a, b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairBound {
    pub a: u64,
    pub b: u64,
    /// Density of the cell actually used (the local density).
    pub ds: BigRational,
    /// Closed-form value, kept for diagnostics.
    pub ds_formula: BigRational,
    pub db_minus: BigRational,
    pub db_plus: BigRational,
    pub best_s_lower: Option<u32>,
    pub best_s_upper: Option<u32>,
}

impl PairBound {
    pub fn formula_agrees(&self) -> bool {
        self.ds == self.ds_formula
    }
}

/// Best lower and upper bounds over `s in 1..=s_max` for one cell.
///
/// With `A = h(a)^s`, `B = h(b)^s` and `L = Lambda_P^+(s)`:
/// the lower bound `(A - B L)/(A - B) dS` applies when `A > B L`, and the
/// upper bound `A (L - 1)/(B - A) dS` applies when `B > A L`. Otherwise the
/// trivial bounds `0` and `dS` stand.
pub fn pair_bounds(
    a: u64,
    b: u64,
    ds: BigRational,
    ds_formula: BigRational,
    lambdas: &LambdaTable,
) -> Result<PairBound> {
    let ha = abundancy_pow(a, 1)?;
    let hb = abundancy_pow(b, 1)?;
    let mut pa = ha.clone();
    let mut pb = hb.clone();

    let mut db_minus = BigRational::zero();
    let mut db_plus = ds.clone();
    let mut best_s_lower = None;
    let mut best_s_upper = None;

    for (s, lambda) in lambdas.iter() {
        if s > 1 {
            pa *= &ha;
            pb *= &hb;
        }
        if pa > &pb * lambda {
            let candidate = (&pa - &pb * lambda) / (&pa - &pb) * &ds;
            if candidate > db_minus {
                db_minus = candidate;
                best_s_lower = Some(s);
            }
        } else if pb > &pa * lambda {
            let candidate = &pa * (lambda - BigRational::one()) / (&pb - &pa) * &ds;
            if candidate < db_plus {
                db_plus = candidate;
                best_s_upper = Some(s);
            }
        }
    }

    Ok(PairBound { a, b, ds, ds_formula, db_minus, db_plus, best_s_lower, best_s_upper })
}
