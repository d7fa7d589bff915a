//! Upper bounds for the mean of h(n)^s over n coprime to the primorial.
//!
//! `cargo run --release --example lambda -- [y] [s_max]`

use sigma_density::bounds::{BoundParams, LambdaTable};
use sigma_density::empirical::progression_mean_hs;
use sigma_density::numth::primorial;
use sigma_density::report::{approx, decimal, Rounding};

fn main() -> sigma_density::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let y = args.first().copied().unwrap_or(5);
    let s_max = args.get(1).copied().unwrap_or(4) as u32;
    let table = LambdaTable::compute(&BoundParams::new(y, 1, s_max)?)?;
    let modulus: u64 = primorial(y).try_into().expect("small primorial");

    println!("y = {y}, P = {modulus}");
    for (s, upper) in table.iter() {
        let mean = progression_mean_hs(1, modulus, s, 1_000_000)?;
        println!(
            "s = {s}: bound {}  observed mean (n <= 1e6) {:.6}",
            decimal(upper, 9, Rounding::Up),
            approx(&mean)
        );
    }
    Ok(())
}
