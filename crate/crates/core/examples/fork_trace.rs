//! Letter-by-letter states of the generator automaton.

use twobridge::braidkit::parse_conway;
use twobridge::forkengine::run;

fn main() {
    for text in ["2,1,1", "-3,-1,-2"] {
        let c = parse_conway(text).unwrap();
        let result = run(&c, true).unwrap();
        println!("{c}");
        for line in &result.trace {
            println!("  {line}");
        }
        println!(
            "  {} generators, histogram {}, level {}\n",
            result.generator_count, result.histogram, result.r_tilde
        );
    }
}
