//! Exhaustive check of every identity over small Conway notations.

use std::time::Instant;

use twobridge::cli::{verify, Signs, SweepSpec};

fn main() {
    let max_sum = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let spec = SweepSpec {
        max_len: 5,
        max_sum,
        signs: Signs::Both,
    };
    let start = Instant::now();
    let summary = verify(&spec, true);
    println!("{summary} ({} links skipped) in {:?}", summary.links_skipped, start.elapsed());
    for f in summary.failures.iter().take(5) {
        println!("  {}: {}", f.conway, f.message);
    }
}
