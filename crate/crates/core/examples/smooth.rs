//! Smooth numbers and smooth parts.
//!
//! `cargo run --example smooth -- [y] [z]`

use sigma_density::numth::{factorize, primorial, smooth_numbers, smooth_part};

fn main() -> sigma_density::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let y = args.first().copied().unwrap_or(5);
    let z = args.get(1).copied().unwrap_or(100);

    let list = smooth_numbers(y, z);
    println!("{} numbers <= {z} are {y}-smooth (P = {}):", list.len(), primorial(y));
    println!("{list:?}");

    for n in [360, 1001, 123_456_789, 2u64.pow(40) * 7 + 1] {
        let part = smooth_part(n, y);
        let f = factorize(n)?;
        println!("n = {n}: Y(n) = {part}, sigma(n) = {}, factors {:?}", f.sigma(), f.factors());
    }
    Ok(())
}
