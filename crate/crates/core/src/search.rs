//! Generation of (3,3)-homogeneous Greechie diagrams on a fixed number of
//! atoms, up to isomorphism, under node and wall-clock budgets.
//!
//! Blocks are added one at a time around the smallest atom that still lies
//! in fewer than three blocks. Unused atoms are interchangeable, so only the
//! lowest-numbered ones may be brought in, and the blocks through one focus
//! atom are added in increasing order. Complete diagrams are deduplicated by
//! canonical form.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::classify::{classify, Classification};
use crate::diagram::{canonical_form, canonical_labeling, GreechieDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub atom_count: usize,
    pub require_no_order3_loops: bool,
    pub time_budget: Duration,
    pub node_budget: u64,
    pub classify: bool,
    pub dim_cap: usize,
}

impl SearchSpec {
    pub fn new(atom_count: usize) -> Self {
        SearchSpec {
            atom_count,
            require_no_order3_loops: true,
            time_budget: Duration::from_secs(60),
            node_budget: 50_000_000,
            classify: false,
            dim_cap: crate::states::DEFAULT_DIM_CAP,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Found {
    #[serde(skip)]
    pub diagram: GreechieDiagram,
    pub canonical_form: String,
    pub classification: Option<Classification>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub atom_count: usize,
    pub diagrams: Vec<Found>,
    pub nodes: u64,
    /// True iff the whole tree was explored before either budget ran out.
    pub exhaustive: bool,
}

const MAX_ATOMS: usize = 64;

struct State {
    m: usize,
    no_triangles: bool,
    degree: Vec<u8>,
    /// `orth[a]` has bit `b` set iff `a` and `b` share a block.
    orth: Vec<u64>,
    used: usize,
    blocks: Vec<[usize; 3]>,
    /// Last pair added around each atom while it was the focus.
    last_pair: Vec<Option<(usize, usize)>>,
    leaves: BTreeMap<Vec<u8>, GreechieDiagram>,
    nodes: u64,
    node_budget: u64,
    deadline: Instant,
    stopped: bool,
}

impl State {
    fn budget_left(&mut self) -> bool {
        if self.stopped {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.node_budget
            || (self.nodes.is_multiple_of(4096) && Instant::now() >= self.deadline)
        {
            self.stopped = true;
        }
        !self.stopped
    }

    fn admissible(&self, f: usize, a: usize) -> bool {
        a != f && self.degree[a] < 3 && self.orth[f] >> a & 1 == 0
    }

    fn creates_triangle(&self, x: usize, y: usize, z: usize) -> bool {
        let inside = 1u64 << x | 1u64 << y | 1u64 << z;
        let twice = (self.orth[x] & self.orth[y])
            | (self.orth[y] & self.orth[z])
            | (self.orth[x] & self.orth[z]);
        twice & !inside != 0
    }

    fn push(&mut self, b: [usize; 3]) {
        for &a in &b {
            self.degree[a] += 1;
            for &c in &b {
                if c != a {
                    self.orth[a] |= 1u64 << c;
                }
            }
        }
        self.blocks.push(b);
    }

    fn pop(&mut self) {
        let b = self.blocks.pop().expect("a block to remove");
        for &a in &b {
            self.degree[a] -= 1;
            for &c in &b {
                if c != a {
                    self.orth[a] &= !(1u64 << c);
                }
            }
        }
    }

    fn run(&mut self) {
        if !self.budget_left() {
            return;
        }
        let Some(f) = (0..self.m).find(|&a| self.degree[a] < 3) else {
            self.leaf();
            return;
        };
        let used_before = self.used;
        let focus_used = f < self.used;
        let base_used = if focus_used { self.used } else { self.used + 1 };
        if base_used > self.m {
            return;
        }
        // Candidates: used atoms, then at most the next two fresh ones.
        let limit = (base_used + 2).min(self.m);
        let start = self.last_pair[f];
        for a in 0..limit {
            if !self.admissible(f, a) {
                continue;
            }
            for b in a + 1..limit {
                if !self.admissible(f, b) || self.orth[a] >> b & 1 == 1 {
                    continue;
                }
                if start.is_some_and(|s| (a, b) <= s) {
                    continue;
                }
                // Fresh atoms must be taken in order: b fresh requires a used or a = base_used.
                if b >= base_used && !(b == base_used || (a == base_used && b == base_used + 1)) {
                    continue;
                }
                if self.no_triangles && self.creates_triangle(f, a, b) {
                    continue;
                }
                let mut block = [f, a, b];
                block.sort_unstable();
                self.used = base_used.max(b + 1);
                self.push(block);
                let saved = self.last_pair[f];
                self.last_pair[f] = Some((a, b));
                self.run();
                self.last_pair[f] = saved;
                self.pop();
                self.used = used_before;
                if self.stopped {
                    return;
                }
            }
        }
    }

    fn leaf(&mut self) {
        if self.used != self.m {
            return;
        }
        let atoms = (1..=self.m).map(|i| i.to_string()).collect();
        let blocks = self.blocks.iter().map(|b| b.to_vec()).collect();
        let d = GreechieDiagram::new(None, atoms, blocks).expect("atoms in range");
        let key = canonical_form(&d);
        self.leaves
            .entry(key)
            .or_insert_with(|| canonical_diagram(&d));
    }
}

/// `d` relabeled by its canonical labeling, atoms `1..m`, blocks sorted.
pub fn canonical_diagram(d: &GreechieDiagram) -> GreechieDiagram {
    let perm = canonical_labeling(d);
    let mut blocks: Vec<Vec<usize>> = d
        .blocks()
        .iter()
        .map(|b| {
            let mut nb: Vec<usize> = b.iter().map(|&a| perm[a]).collect();
            nb.sort_unstable();
            nb
        })
        .collect();
    blocks.sort();
    let atoms = (1..=d.atom_count()).map(|i| i.to_string()).collect();
    GreechieDiagram::new(d.name().map(str::to_string), atoms, blocks).expect("permutation of atoms")
}

pub fn enumerate(spec: &SearchSpec) -> Result<SearchResult> {
    let m = spec.atom_count;
    if !(3..=MAX_ATOMS).contains(&m) {
        return Err(Error::InvalidParameter(format!(
            "atom count must be in 3..={MAX_ATOMS}, got {m}"
        )));
    }
    if spec.node_budget == 0 || spec.time_budget.is_zero() {
        return Err(Error::InvalidParameter("budgets must be positive".into()));
    }
    let mut s = State {
        m,
        no_triangles: spec.require_no_order3_loops,
        degree: vec![0; m],
        orth: vec![0; m],
        used: 0,
        blocks: Vec::with_capacity(m),
        last_pair: vec![None; m],
        leaves: BTreeMap::new(),
        nodes: 0,
        node_budget: spec.node_budget,
        deadline: Instant::now() + spec.time_budget,
        stopped: false,
    };
    s.run();
    let diagrams = s
        .leaves
        .into_iter()
        .map(|(key, diagram)| {
            let classification = if spec.classify {
                Some(classify(&diagram, spec.dim_cap)?)
            } else {
                None
            };
            Ok(Found {
                diagram,
                canonical_form: String::from_utf8(key).expect("ascii canonical form"),
                classification,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchResult {
        atom_count: m,
        diagrams,
        nodes: s.nodes,
        exhaustive: !s.stopped,
    })
}
