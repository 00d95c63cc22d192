//! Fullness, the set representation by two-valued states, and regularity of
//! that representation.

use greechie::catalog::lookup;
use greechie::states::{
    is_full_by_criterion, is_full_by_definition, is_regular, signed_measure_dims,
    total_representation, two_valued_states,
};

fn main() -> greechie::Result<()> {
    for key in ["l3_2", "l27"] {
        let d = lookup(key)?.diagram;
        let states = two_valued_states(&d);
        let rep = total_representation(&d, &states)?;
        let dims = signed_measure_dims(&rep)?;
        println!(
            "{key}: full={}/{} ground={} dim V={} dim annihilator={} regular={}",
            is_full_by_criterion(&d, &states),
            is_full_by_definition(&d, &states),
            dims.ground_size,
            dims.dim_v,
            dims.dim_annihilator,
            is_regular(&rep)?,
        );
    }
    Ok(())
}
