//! Run the whole verification suite and print one line per check.
//!
//!     cargo run --release --example verify_all

use qchar::verify::{run_suite, VerifyOptions};

fn main() {
    let opts = VerifyOptions { max_rank: 5, samples: 100, seed: 0 };
    let reports = run_suite("all", opts).unwrap();
    let mut ok = true;
    for r in &reports {
        println!("{}", r.status_line());
        ok &= r.passed;
    }
    std::process::exit(if ok { 0 } else { 1 });
}
