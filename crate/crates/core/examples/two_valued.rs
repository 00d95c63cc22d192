//! Lists the two-valued states of L^3_2 and checks the support-size identity.

use greechie::catalog::lookup;
use greechie::states::{theorem11_check, two_valued_states};

fn main() -> greechie::Result<()> {
    let d = lookup("l3_2")?.diagram;
    let states = two_valued_states(&d);
    println!("{} two-valued states", states.len());
    for f in &states {
        let t = theorem11_check(&d, f)?;
        println!(
            "  support {{{}}}  k={} holds={}",
            f.support_labels(&d).join(", "),
            t.k,
            t.holds
        );
    }
    println!(
        "L_17 has {}",
        two_valued_states(&lookup("l17")?.diagram).len()
    );
    Ok(())
}
