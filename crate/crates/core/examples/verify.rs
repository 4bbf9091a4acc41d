//! Runs every published check except the long random walk.

use charvar::verify::{run, VerifyOptions, CRITERIA};

fn main() {
    let opts = VerifyOptions {
        only: (1..=CRITERIA).filter(|i| *i != 12).collect(),
        ..VerifyOptions::default()
    };
    for c in run(&opts) {
        println!(
            "{:>2} {} {}: {}",
            c.id,
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
}
