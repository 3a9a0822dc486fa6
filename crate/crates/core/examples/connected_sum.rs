//! Additivity of sigma and r, multiplicativity of det, on spliced diagrams.

use twobridge::invariants::{check_sum, KnotSpec};

fn main() {
    let pairs = [("3", "3"), ("3", "-3"), ("2,1,1", "5"), ("3,1,1", "unknot")];
    for (a, b) in pairs {
        let a: KnotSpec = a.parse().unwrap();
        let b: KnotSpec = b.parse().unwrap();
        let v = check_sum(&a, &b).unwrap();
        println!(
            "{a} # {b}: sigma {}, det {}, r {} (expected {}), additive {}",
            v.sum.sigma, v.sum.det, v.sum.r, v.r_total, v.additive
        );
    }
}
