//! Goeritz matrix and Gordon-Litherland signature of a plat diagram.

use twobridge::braidkit::parse_conway;
use twobridge::diagram::{checkerboard, orient, plat_closure};
use twobridge::goeritz::{conway_closed_form_sign, gl_signature};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "3,1,2".into());
    let c = parse_conway(&text).expect("valid notation").normalize_odd();
    let braid = c.to_braid().unwrap();
    let diagram = plat_closure(&braid);
    let oriented = orient(&diagram).expect("a knot, not a link");
    let colored = checkerboard(&diagram).unwrap();
    let gl = gl_signature(&oriented, &colored).unwrap();

    println!("{c} as {braid}");
    println!("Goeritz matrix:\n{}", gl.goeritz);
    println!("inertia {:?}, det {}", gl.inertia, gl.determinant);
    println!("sign(G) = {} (closed form {})", gl.inertia.signature(), conway_closed_form_sign(&c));
    println!("mu_I = {}, mu_II = {}", gl.stats.mu_one(), gl.stats.mu_two());
    println!("sigma = sign(G) - mu_II = {}", gl.sigma);
}
