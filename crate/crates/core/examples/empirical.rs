//! Brute-force frequency of sigma(kn+r1) >= sigma(kn+r2).
//!
//! `cargo run --release --example empirical -- [N]`

use sigma_density::bounds::ProblemSpec;
use sigma_density::empirical::{scan, three_sigma};

fn main() -> sigma_density::Result<()> {
    let n: u64 = std::env::args().nth(1).map_or(1_000_000, |a| a.parse().expect("integer N"));
    for (k, r1, r2) in [(2, 1, 0), (3, 2, 0), (4, 3, 1)] {
        let counts = scan(&ProblemSpec::new(k, r1, r2)?, n)?;
        let d = counts.at_least as f64 / n as f64;
        println!(
            "sigma({k}n+{r1}) >= sigma({k}n+{r2}): {d:.6} +- {:.1e}  ({} ties)",
            three_sigma(d, n),
            counts.ties
        );
    }
    Ok(())
}
