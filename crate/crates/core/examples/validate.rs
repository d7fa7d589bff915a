//! Run the end-to-end consistency checks through the library entry point.
//!
//! `cargo run --release --example validate`

use std::io;

fn main() {
    let mut code = 0;
    for spec in [["2", "1", "0"], ["3", "2", "0"], ["4", "3", "1"]] {
        let args = [
            "sigma-density", "validate", "--k", spec[0], "--r1", spec[1], "--r2", spec[2],
            "--y", "5", "--max-ab", "100", "--N", "200000", "--format", "text",
        ];
        let c = sigma_density::cli::run(args, &mut io::stdout(), &mut io::stderr());
        code = code.max(c);
    }
    std::process::exit(code);
}
