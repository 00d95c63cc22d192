//! Classifies every catalog entry and checks it against its stored expectations.

use greechie::catalog::catalog_list;
use greechie::classify::{check_expectations, classify, format_profile};
use greechie::states::DEFAULT_DIM_CAP;

fn main() -> greechie::Result<()> {
    for entry in catalog_list() {
        let c = classify(&entry.diagram, DEFAULT_DIM_CAP)?;
        println!(
            "{:<8} atoms={:<2} blocks={:<2} valid={:<5} hom={:<6} s2={:<2} pure={:<2} dim={:<2} full={:<5} lattice={}",
            entry.key,
            c.atoms,
            c.blocks,
            c.valid,
            format_profile(c.homogeneous),
            c.two_valued_count,
            c.pure_count,
            c.affine_dim,
            c.full,
            c.lattice_candidate,
        );
        for k in check_expectations(&entry.expectations, &c) {
            if !k.pass {
                println!(
                    "    FAIL {}: expected {}, got {}",
                    k.field, k.expected, k.actual
                );
            }
        }
    }
    Ok(())
}
