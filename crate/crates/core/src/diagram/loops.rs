//! Loops in a Greechie diagram and the loop-lemma verdicts.
//!
//! A loop of order `n` is a cyclic sequence of `n ≥ 3` distinct blocks in which
//! neighbouring blocks meet in exactly one atom (the joint), the joints are
//! pairwise distinct, and non-neighbouring blocks are disjoint. For blocks of
//! three atoms, an order-3 loop prevents the pasting from being an
//! orthomodular poset and an order-3 or order-4 loop prevents it from being a
//! lattice.

use serde::Serialize;

use super::GreechieDiagram;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Loop {
    /// Block indices in cyclic order, starting at the smallest index.
    pub blocks: Vec<usize>,
    /// `joints[i]` is the common atom of `blocks[i]` and `blocks[i + 1]` (cyclically).
    pub joints: Vec<usize>,
}

impl Loop {
    pub fn order(&self) -> usize {
        self.blocks.len()
    }

    /// Checks the defining conditions of a loop against `d`.
    pub fn is_valid_in(&self, d: &GreechieDiagram) -> bool {
        let n = self.blocks.len();
        if n < 3 || self.joints.len() != n {
            return false;
        }
        let mut bs = self.blocks.clone();
        bs.sort_unstable();
        bs.dedup();
        let mut js = self.joints.clone();
        js.sort_unstable();
        js.dedup();
        if bs.len() != n || js.len() != n || bs.last().is_some_and(|&b| b >= d.block_count()) {
            return false;
        }
        let meet = |x: usize, y: usize| -> Vec<usize> {
            let (bx, by) = (&d.blocks()[x], &d.blocks()[y]);
            bx.iter().filter(|a| by.contains(a)).copied().collect()
        };
        for i in 0..n {
            for j in i + 1..n {
                let common = meet(self.blocks[i], self.blocks[j]);
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    let joint = if j == i + 1 {
                        self.joints[i]
                    } else {
                        self.joints[n - 1]
                    };
                    if common != [joint] {
                        return false;
                    }
                } else if !common.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn describe(&self, d: &GreechieDiagram) -> String {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|&b| format!("{{{}}}", d.block_labels(b).join(",")))
            .collect();
        format!("order {}: {}", self.order(), parts.join(" - "))
    }
}

/// All loops of order `3..=max_order`, each once up to rotation and reflection,
/// sorted by order and then by block sequence.
pub fn find_loops(d: &GreechieDiagram, max_order: usize) -> Vec<Loop> {
    let mut found = Vec::new();
    if max_order < 3 {
        return found;
    }
    for start in 0..d.block_count() {
        let mut path = vec![start];
        let mut joints = Vec::new();
        extend(d, max_order, &mut path, &mut joints, &mut found);
    }
    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.blocks.cmp(&b.blocks))
    });
    found
}

fn meets(d: &GreechieDiagram, x: usize, y: usize) -> Option<usize> {
    let by = &d.blocks()[y];
    d.blocks()[x]
        .iter()
        .find(|a| by.binary_search(a).is_ok())
        .copied()
}

fn extend(
    d: &GreechieDiagram,
    max_order: usize,
    path: &mut Vec<usize>,
    joints: &mut Vec<usize>,
    found: &mut Vec<Loop>,
) {
    let start = path[0];
    let current = *path.last().unwrap();
    for &joint in &d.blocks()[current] {
        if joints.contains(&joint) || (path.len() > 1 && d.blocks()[start].contains(&joint)) {
            continue;
        }
        for &next in d.blocks_of(joint) {
            if next <= start || path.contains(&next) {
                continue;
            }
            // Blocks strictly between the start and the current one must stay disjoint from `next`.
            if path.len() > 2
                && path[1..path.len() - 1]
                    .iter()
                    .any(|&b| meets(d, b, next).is_some())
            {
                continue;
            }
            if path.len() == 1 {
                path.push(next);
                joints.push(joint);
                if path.len() < max_order {
                    extend(d, max_order, path, joints, found);
                }
                path.pop();
                joints.pop();
                continue;
            }
            match meets(d, next, start) {
                Some(closing) => {
                    if closing == joint || joints.contains(&closing) {
                        continue;
                    }
                    // Each cycle is met in both directions; keep the one with the smaller second block.
                    if path[1] < next {
                        let mut blocks = path.clone();
                        blocks.push(next);
                        let mut js = joints.clone();
                        js.push(joint);
                        js.push(closing);
                        found.push(Loop { blocks, joints: js });
                    }
                }
                None if path.len() + 1 < max_order => {
                    path.push(next);
                    joints.push(joint);
                    extend(d, max_order, path, joints, found);
                    path.pop();
                    joints.pop();
                }
                None => {}
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeVerdict {
    /// No loop of order 3.
    pub is_omp_candidate: bool,
    /// No loop of order 3 or 4.
    pub is_oml_candidate: bool,
    /// A smallest offending loop, when one exists.
    pub witness: Option<Loop>,
}

pub fn lattice_test(d: &GreechieDiagram) -> LatticeVerdict {
    let loops = find_loops(d, 4);
    let witness = loops.first().cloned();
    LatticeVerdict {
        is_omp_candidate: !loops.iter().any(|l| l.order() == 3),
        is_oml_candidate: loops.is_empty(),
        witness,
    }
}
