use serde::Serialize;

use super::TwoValuedState;
use crate::diagram::{homogeneity, GreechieDiagram};
use crate::error::{Error, Result};
use crate::logic::{elements, leq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem11 {
    pub k: usize,
    pub holds: bool,
}

/// For an `(n, m)`-homogeneous diagram and a two-valued state with `k` support
/// atoms, checks `|A| = m·k` and `|B| = n·k`.
pub fn theorem11_check(d: &GreechieDiagram, f: &TwoValuedState) -> Result<Theorem11> {
    let (n, m) = homogeneity(d).homogeneous.ok_or(Error::Inhomogeneous)?;
    let k = f.support().len();
    Ok(Theorem11 {
        k,
        holds: d.atom_count() == m * k && d.block_count() == n * k,
    })
}

/// Every pair of distinct non-orthogonal atoms is sent to 1 by some listed state.
pub fn is_full_by_criterion(d: &GreechieDiagram, states: &[TwoValuedState]) -> bool {
    let n = d.atom_count();
    let mut covered = vec![vec![false; n]; n];
    for f in states {
        for &a in f.support() {
            for &b in f.support() {
                covered[a][b] = true;
            }
        }
    }
    (0..n).all(|a| (a + 1..n).all(|b| d.is_orthogonal(a, b) || covered[a][b]))
}

/// The listed states determine the order: `x ≤ y` iff `f(x) ≤ f(y)` for all of them.
pub fn is_full_by_definition(d: &GreechieDiagram, states: &[TwoValuedState]) -> bool {
    let els = elements(d);
    els.iter().all(|&x| {
        els.iter().all(|&y| {
            let ordered = leq(d, x, y).expect("elements of d");
            let respected = states.iter().all(|f| !f.evaluate(x) || f.evaluate(y));
            ordered == respected
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::states::two_valued_states;

    #[test]
    fn l32_is_full_both_ways() {
        let (_, d) = catalog::build_lpq(3, 2).unwrap();
        let s = two_valued_states(&d);
        assert!(is_full_by_criterion(&d, &s));
        assert!(is_full_by_definition(&d, &s));
        for f in &s {
            assert_eq!(
                theorem11_check(&d, f).unwrap(),
                Theorem11 { k: 5, holds: true }
            );
        }
    }

    #[test]
    fn l17_is_not_full() {
        let d = catalog::build_l17();
        assert!(!is_full_by_criterion(&d, &[]));
        assert!(!is_full_by_definition(&d, &[]));
    }

    #[test]
    fn dropping_a_state_breaks_fullness() {
        let (_, d) = catalog::build_lpq(3, 2).unwrap();
        let s = two_valued_states(&d);
        assert!(!is_full_by_criterion(&d, &s[1..]));
        assert!(!is_full_by_definition(&d, &s[1..]));
    }

    #[test]
    fn single_block_counts_as_one_three() {
        let d = GreechieDiagram::from_labeled_blocks(None, &[vec!["1", "2", "3"]]);
        let f = TwoValuedState::new(&d, vec![1]).unwrap();
        assert_eq!(
            theorem11_check(&d, &f).unwrap(),
            Theorem11 { k: 1, holds: true }
        );
        let bent =
            GreechieDiagram::from_labeled_blocks(None, &[vec!["1", "2", "3"], vec!["3", "4", "5"]]);
        let g = TwoValuedState::new(&bent, vec![2]).unwrap();
        assert!(matches!(
            theorem11_check(&bent, &g),
            Err(Error::Inhomogeneous)
        ));
    }
}
