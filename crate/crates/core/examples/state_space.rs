//! Describes the state polytope of L_17: its affine hull and its vertices.

use greechie::catalog::lookup;
use greechie::rational::frac;
use greechie::states::{is_pure, is_state, state_polytope, RationalState};

fn main() -> greechie::Result<()> {
    let d = lookup("l17")?.diagram;
    let p = state_polytope(&d);
    println!("affine dimension {}", p.affine_dim());
    println!("atoms forced to zero: {:?}", p.implicit_zeros());
    let pure: Vec<RationalState> = p
        .vertices()
        .into_iter()
        .map(|v| RationalState::new(&d, v))
        .collect::<Result<_, _>>()?;
    for s in &pure {
        println!("pure: {}", s.to_json(&d));
    }
    let mid = pure[0].mix(&pure[1], &frac(1, 2));
    println!(
        "midpoint is a state: {}, pure: {}",
        is_state(&d, mid.values()),
        is_pure(&d, &mid)?
    );
    Ok(())
}
