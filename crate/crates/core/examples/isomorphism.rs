//! Relabels a diagram, recovers the isomorphism and compares canonical forms.

use greechie::catalog::lookup;
use greechie::diagram::{canonical_form, isomorphic};

fn main() -> greechie::Result<()> {
    let d = lookup("l17")?.diagram;
    let m = d.atom_count();
    let perm: Vec<usize> = (0..m).map(|i| (i * 5 + 2) % m).collect();
    let labels = (0..m).map(|i| format!("x{i}")).collect();
    let r = d.relabeled(&perm, labels)?;
    let iso = isomorphic(&d, &r).expect("relabeling preserves structure");
    for (a, b) in iso.labeled_pairs(&d, &r).into_iter().take(5) {
        println!("{a} -> {b}");
    }
    println!(
        "canonical forms equal: {}",
        canonical_form(&d) == canonical_form(&r)
    );
    let l27 = lookup("l27")?.diagram;
    println!("L_17 vs L_27: {}", isomorphic(&d, &l27).is_some());
    Ok(())
}
