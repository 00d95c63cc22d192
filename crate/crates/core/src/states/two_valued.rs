use super::TwoValuedState;
use crate::diagram::GreechieDiagram;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Open,
    One,
    Zero,
}

struct Search<'a> {
    d: &'a GreechieDiagram,
    marks: Vec<Mark>,
    hit: Vec<bool>,
    found: Vec<TwoValuedState>,
}

impl Search<'_> {
    /// Picks the unhit block with the fewest open atoms; `Err(())` on a dead end.
    fn most_constrained(&self) -> Result<Option<usize>, ()> {
        let mut best: Option<(usize, usize)> = None;
        for (bi, b) in self.d.blocks().iter().enumerate() {
            if self.hit[bi] {
                continue;
            }
            let open = b.iter().filter(|&&a| self.marks[a] == Mark::Open).count();
            if open == 0 {
                return Err(());
            }
            if best.is_none_or(|(_, o)| open < o) {
                best = Some((bi, open));
            }
        }
        Ok(best.map(|(bi, _)| bi))
    }

    fn run(&mut self) {
        let block = match self.most_constrained() {
            Err(()) => return,
            Ok(None) => {
                let support = (0..self.marks.len())
                    .filter(|&a| self.marks[a] == Mark::One)
                    .collect();
                self.found
                    .push(TwoValuedState::from_sorted_support(support));
                return;
            }
            Ok(Some(b)) => b,
        };
        let choices: Vec<usize> = self.d.blocks()[block]
            .iter()
            .copied()
            .filter(|&a| self.marks[a] == Mark::Open)
            .collect();
        for a in choices {
            let saved_marks = self.marks.clone();
            let saved_hit = self.hit.clone();
            self.marks[a] = Mark::One;
            for &bi in self.d.blocks_of(a) {
                self.hit[bi] = true;
                for &other in &self.d.blocks()[bi] {
                    if other != a {
                        self.marks[other] = Mark::Zero;
                    }
                }
            }
            self.run();
            self.marks = saved_marks;
            self.hit = saved_hit;
            // Later branches take a different atom of this block, so this one is 0 there.
            self.marks[a] = Mark::Zero;
        }
    }
}

/// Every two-valued state, sorted lexicographically by support.
///
/// Backtracks over blocks, always branching on the block with the fewest
/// undecided atoms; choosing an atom forces all atoms orthogonal to it to 0.
pub fn two_valued_states(d: &GreechieDiagram) -> Vec<TwoValuedState> {
    let mut s = Search {
        d,
        marks: vec![Mark::Open; d.atom_count()],
        hit: vec![false; d.block_count()],
        found: Vec::new(),
    };
    s.run();
    s.found.sort();
    s.found.dedup();
    s.found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn single_block_has_three() {
        let d = GreechieDiagram::from_labeled_blocks(None, &[vec!["1", "2", "3"]]);
        let s = two_valued_states(&d);
        assert_eq!(s.len(), 3);
        assert_eq!(s[0].support(), [0]);
    }

    #[test]
    fn l17_has_none() {
        assert!(two_valued_states(&catalog::build_l17()).is_empty());
    }

    #[test]
    fn l32_has_six() {
        let (_, l32) = catalog::build_lpq(3, 2).unwrap();
        let s = two_valued_states(&l32);
        assert_eq!(s.len(), 6);
        assert!(s.iter().all(|f| f.support().len() == 5));
    }

    #[test]
    fn loop_states_are_determined_by_corners() {
        // Each block {P_i, Q_i, P_i+1}: corners form an independent set in the
        // cycle and Q_i is forced when both neighbours are 0. For n = 5 that
        // gives 1 + 5 + 5 = 11 states.
        assert_eq!(
            two_valued_states(&catalog::build_loop(5).unwrap()).len(),
            11
        );
    }
}
