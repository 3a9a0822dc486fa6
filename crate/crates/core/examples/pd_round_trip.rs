//! Export a plat diagram as a PD code, read it back, and compare.

use twobridge::braidkit::parse_conway;
use twobridge::diagram::{orient, parse_pd, plat_closure, write_pd};
use twobridge::invariants::diagram_invariants;

fn main() {
    let c = parse_conway("2,1,1").unwrap();
    let oriented = orient(&plat_closure(&c.to_braid().unwrap())).unwrap();
    let text = write_pd(&oriented);
    print!("{text}");

    let back = parse_pd(&text).unwrap();
    let before = diagram_invariants(&oriented).unwrap();
    let after = diagram_invariants(&back).unwrap();
    println!("sigma {} / {}, det {} / {}", before.sigma, after.sigma, before.det, after.det);

    // A hand-written right-handed trefoil.
    let right = parse_pd("Xp 1,5,2,4\nXp 3,1,4,6\nXp 5,3,6,2\n").unwrap();
    let inv = diagram_invariants(&right).unwrap();
    println!("right trefoil: w {}, sigma {}, det {}", inv.w, inv.sigma, inv.det);
}
