//! Parses a diagram from text and reports validity and homogeneity.

use greechie::diagram::{homogeneity, parse_diagram, validate};

const INPUT: &str = "\
name: two blocks sharing a pair
block: a b c
block: a b d
block: d e f
";

fn main() -> greechie::Result<()> {
    let d = parse_diagram(INPUT)?;
    let report = validate(&d);
    println!(
        "{}: {} atoms, {} blocks, valid={}",
        d.name().unwrap_or("?"),
        d.atom_count(),
        d.block_count(),
        report.is_valid()
    );
    for v in &report.violations {
        println!("  {v}");
    }
    let h = homogeneity(&d);
    println!(
        "atom degrees {:?}, block sizes {:?}, homogeneous {:?}",
        h.atom_degrees, h.block_sizes, h.homogeneous
    );
    Ok(())
}
