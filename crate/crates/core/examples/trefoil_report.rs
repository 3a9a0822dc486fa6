//! Full invariant report of the left-handed trefoil `[3]`.

use twobridge::invariants::{report, KnotSpec};

fn main() {
    let knot: KnotSpec = "3".parse().expect("valid notation");
    let r = report(&knot).expect("the trefoil is a knot");
    println!("{knot}: p/q = {}, det {}, branched cover {}", r.fraction, r.det, r.lens_space);
    println!("e = {}, w = {}, shift = {}", r.e, r.w, r.shift);
    println!("{} generators at level {}, R = {}", r.generator_count, r.r_tilde, r.reduced_r);
    println!("sigma = {}, r = {}", r.sigma, r.r);
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
}
