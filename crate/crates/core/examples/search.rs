//! Searches for (3,3)-homogeneous diagrams without order-3 loops.
//!
//! Usage: `cargo run --release --example search -- [max_atoms] [seconds]`

use std::time::{Duration, Instant};

use greechie::diagram::{isomorphic, to_text};
use greechie::search::{enumerate, SearchSpec};

fn main() -> greechie::Result<()> {
    let args: Vec<String> = std::env::args().collect();
    let max: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(15);
    let secs: u64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(60);
    let (_, l32) = greechie::catalog::build_lpq(3, 2)?;
    for m in 9..=max {
        let mut spec = SearchSpec::new(m);
        spec.time_budget = Duration::from_secs(secs);
        spec.node_budget = u64::MAX;
        let t = Instant::now();
        let r = enumerate(&spec)?;
        println!(
            "m={m:<2} found={} exhaustive={} nodes={} time={:.2?}",
            r.diagrams.len(),
            r.exhaustive,
            r.nodes,
            t.elapsed()
        );
        for f in &r.diagrams {
            let tag = if isomorphic(&f.diagram, &l32).is_some() {
                " (isomorphic to L^3_2)"
            } else {
                ""
            };
            println!("{}{tag}", to_text(&f.diagram));
        }
    }
    Ok(())
}
