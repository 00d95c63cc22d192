//! An equation system with no nonnegative solution, and the certificate
//! returned in place of a state.

use greechie::states::StatePolytope;

fn main() {
    // x1 = 1, x2 = 1, x1 + x2 + x3 = 1
    let p = StatePolytope::from_rows(3, vec![vec![0], vec![1], vec![0, 1, 2]]);
    println!(
        "empty: {}, affine dimension {}",
        p.is_empty(),
        p.affine_dim()
    );
    if let Some(y) = p.infeasibility_witness() {
        let y: Vec<String> = y.iter().map(ToString::to_string).collect();
        println!("certificate y = ({})", y.join(", "));
    }
}
