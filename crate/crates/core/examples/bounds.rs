//! Certified bounds for the three standard problems.
//!
//! `cargo run --release --example bounds -- [y] [z] [s_max]`

use sigma_density::bounds::{compute_bounds, BoundParams, ProblemSpec};
use sigma_density::report::{bounds_text, Rounding, decimal};

fn main() -> sigma_density::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let y = args.first().copied().unwrap_or(17);
    let z = args.get(1).copied().unwrap_or(1000);
    let s_max = args.get(2).copied().unwrap_or(6) as u32;
    let params = BoundParams::new(y, z, s_max)?;

    for (k, r1, r2) in [(2, 1, 0), (3, 2, 0), (4, 3, 1)] {
        let report = compute_bounds(&ProblemSpec::new(k, r1, r2)?, &params)?;
        print!("{}", bounds_text(&report, 6));
        println!(
            "interval width {}\n",
            decimal(&(&report.upper - &report.lower), 6, Rounding::Up)
        );
    }
    Ok(())
}
