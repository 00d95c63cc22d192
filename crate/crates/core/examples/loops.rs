//! Short loops and the lattice verdict they imply.

use greechie::catalog::lookup;
use greechie::diagram::{find_loops, lattice_test};

fn main() -> greechie::Result<()> {
    for key in ["loop_3", "loop_5", "h10_18"] {
        let d = lookup(key)?.diagram;
        let v = lattice_test(&d);
        println!(
            "{key}: omp={} oml={}",
            v.is_omp_candidate, v.is_oml_candidate
        );
        for l in find_loops(&d, 4) {
            println!("  {}", l.describe(&d));
        }
    }
    Ok(())
}
