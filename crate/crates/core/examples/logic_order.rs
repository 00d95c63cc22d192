//! Elements of the logic of a single block and of L^3_2, their order, and a
//! state evaluated on them.

use greechie::catalog::lookup;
use greechie::logic::{elements, evaluate, leq, LogicElement};
use greechie::states::pure_states;

fn main() -> greechie::Result<()> {
    let d = lookup("l3_2")?.diagram;
    let all = elements(&d);
    println!("{} elements", all.len());
    let (a, b) = (d.blocks()[0][0], d.blocks()[0][1]);
    let x = LogicElement::Atom(a);
    let y = LogicElement::Coatom(b);
    println!("{} <= {}: {}", x.display(&d), y.display(&d), leq(&d, x, y)?);
    let s = &pure_states(&d, 8)?[0];
    for e in [LogicElement::Zero, x, y, LogicElement::One] {
        println!("s({}) = {}", e.display(&d), evaluate(&d, s, e)?);
    }
    Ok(())
}
