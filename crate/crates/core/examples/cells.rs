//! Cell densities: closed form against local densities, with counts.
//!
//! `cargo run --release --example cells -- k r1 r2 [y] [z]`

use sigma_density::bounds::{ds_formula, ds_local, enumerate_pairs, ProblemSpec};
use sigma_density::empirical::{cell_histogram, three_sigma};
use sigma_density::report::approx;

const N: u64 = 1_000_000;

fn main() -> sigma_density::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (k, r1, r2) = match args[..] {
        [k, r1, r2, ..] => (k, r1, r2),
        _ => (3, 2, 0),
    };
    let y = args.get(3).copied().unwrap_or(3);
    let z = args.get(4).copied().unwrap_or(48);
    let spec = ProblemSpec::new(k, r1, r2)?;
    let hist = cell_histogram(&spec, y, N);

    println!("{:>5} {:>5} {:>14} {:>14} {:>10} {:>10}", "a", "b", "formula", "local", "observed", "3 sigma");
    for (a, b) in enumerate_pairs(&spec, y, z) {
        let formula = ds_formula(a, b, &spec, y);
        let local = ds_local(a, b, &spec, y)?;
        let observed = hist.get(&(a, b)).copied().unwrap_or(0) as f64 / N as f64;
        let mark = if formula == local { "" } else { "  <- differs" };
        println!(
            "{a:>5} {b:>5} {:>14} {:>14} {observed:>10.6} {:>10.2e}{mark}",
            formula.to_string(),
            local.to_string(),
            three_sigma(approx(&local), N)
        );
    }
    Ok(())
}
