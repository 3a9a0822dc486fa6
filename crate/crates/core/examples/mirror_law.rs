//! Mirror images computed from the mirrored braid word.

use twobridge::braidkit::parse_conway;
use twobridge::invariants::{check_mirror, KnotSpec};

fn main() {
    for text in ["3", "2,1,1", "3,1,2"] {
        let c = parse_conway(text).unwrap();
        let braid = c.to_braid().unwrap();
        let v = check_mirror(&KnotSpec::Conway(c)).unwrap();
        println!("{braid}  ->  {}", braid.mirror());
        println!(
            "  sigma {} -> {}, r {} -> {}, det {} -> {}",
            v.original.sigma, v.mirror.sigma, v.original.r, v.mirror.r, v.original.det, v.mirror.det
        );
    }
}
