//! Greechie diagrams: atoms and blocks of a finite orthomodular poset.
//!
//! Atom identifiers are opaque strings externally and dense indices
//! `0..atom_count()` internally. Blocks are stored as sorted index lists in
//! the order they were given.

mod format;
pub mod iso;
pub mod loops;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use format::{parse_diagram, parse_json, parse_text, to_json, to_text};
pub use iso::{canonical_form, canonical_labeling, isomorphic, DiagramIsomorphism};
pub use loops::{find_loops, lattice_test, LatticeVerdict, Loop};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreechieDiagram {
    name: Option<String>,
    atoms: Vec<String>,
    index: HashMap<String, usize>,
    blocks: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl GreechieDiagram {
    /// Builds a diagram from atom labels and blocks given as atom indices.
    pub fn new(name: Option<String>, atoms: Vec<String>, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut index = HashMap::with_capacity(atoms.len());
        for (i, a) in atoms.iter().enumerate() {
            if index.insert(a.clone(), i).is_some() {
                return Err(Error::DuplicateAtom(a.clone()));
            }
        }
        let mut incidence = vec![Vec::new(); atoms.len()];
        let mut sorted = Vec::with_capacity(blocks.len());
        for (bi, mut block) in blocks.into_iter().enumerate() {
            block.sort_unstable();
            for &a in &block {
                let slot = incidence.get_mut(a).ok_or(Error::AtomIndexOutOfRange(a))?;
                if slot.last() != Some(&bi) {
                    slot.push(bi);
                }
            }
            sorted.push(block);
        }
        Ok(GreechieDiagram {
            name,
            atoms,
            index,
            blocks: sorted,
            incidence,
        })
    }

    /// Builds a diagram from labelled blocks; atoms are created in order of first mention.
    pub fn from_labeled_blocks<S: AsRef<str>>(name: Option<&str>, blocks: &[Vec<S>]) -> Self {
        let mut b = DiagramBuilder::new(name);
        for block in blocks {
            b.block(block.iter().map(AsRef::as_ref));
        }
        b.build()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn label(&self, atom: usize) -> &str {
        &self.atoms[atom]
    }

    pub fn atom_index(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownAtom(label.to_string()))
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Indices of the blocks containing `atom`.
    pub fn blocks_of(&self, atom: usize) -> &[usize] {
        &self.incidence[atom]
    }

    pub fn degree(&self, atom: usize) -> usize {
        self.incidence[atom].len()
    }

    /// Atoms sharing a block with `atom` (excluding itself), sorted.
    pub fn neighbours(&self, atom: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incidence[atom]
            .iter()
            .flat_map(|&b| self.blocks[b].iter().copied())
            .filter(|&x| x != atom)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_orthogonal(&self, a: usize, b: usize) -> bool {
        a != b
            && self.incidence[a]
                .iter()
                .any(|&bi| self.blocks[bi].binary_search(&b).is_ok())
    }

    /// Orthogonality of two atoms given by label: true iff some block contains both.
    pub fn orthogonal(&self, a: &str, b: &str) -> Result<bool> {
        let (a, b) = (self.atom_index(a)?, self.atom_index(b)?);
        Ok(self.is_orthogonal(a, b))
    }

    pub fn block_labels(&self, block: usize) -> Vec<&str> {
        self.blocks[block].iter().map(|&a| self.label(a)).collect()
    }

    /// Renames atoms through `perm` (old index → new index) and relabels with `labels`.
    pub fn relabeled(&self, perm: &[usize], labels: Vec<String>) -> Result<Self> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&a| perm[a]).collect())
            .collect();
        GreechieDiagram::new(self.name.clone(), labels, blocks)
    }
}

/// Incremental construction with atoms created on first mention.
#[derive(Debug, Default)]
pub struct DiagramBuilder {
    name: Option<String>,
    atoms: Vec<String>,
    index: HashMap<String, usize>,
    blocks: Vec<Vec<usize>>,
}

impl DiagramBuilder {
    pub fn new(name: Option<&str>) -> Self {
        DiagramBuilder {
            name: name.map(str::to_string),
            ..Default::default()
        }
    }

    pub fn atom(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        self.atoms.push(label.to_string());
        self.index.insert(label.to_string(), self.atoms.len() - 1);
        self.atoms.len() - 1
    }

    pub fn block<'a>(&mut self, labels: impl IntoIterator<Item = &'a str>) -> &mut Self {
        let b = labels.into_iter().map(|l| self.atom(l)).collect();
        self.blocks.push(b);
        self
    }

    pub fn build(self) -> GreechieDiagram {
        GreechieDiagram::new(self.name, self.atoms, self.blocks)
            .expect("builder indices are in range and labels are unique")
    }
}

/// A violated diagram invariant, reported with external atom names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    BlockSize {
        block: usize,
        atoms: Vec<String>,
    },
    RepeatedAtom {
        block: usize,
        atom: String,
    },
    SharedPair {
        first: usize,
        second: usize,
        shared: Vec<String>,
    },
    DuplicateBlock {
        first: usize,
        second: usize,
    },
    IsolatedAtom {
        atom: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BlockSize { block, atoms } => {
                write!(
                    f,
                    "block #{block} has {} atoms, expected 3: {}",
                    atoms.len(),
                    atoms.join(" ")
                )
            }
            Violation::RepeatedAtom { block, atom } => {
                write!(f, "block #{block} repeats atom {atom}")
            }
            Violation::SharedPair {
                first,
                second,
                shared,
            } => write!(
                f,
                "blocks #{first} and #{second} share two atoms: {}",
                shared.join(" ")
            ),
            Violation::DuplicateBlock { first, second } => {
                write!(f, "blocks #{first} and #{second} are identical")
            }
            Violation::IsolatedAtom { atom } => write!(f, "atom {atom} lies in no block"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport<V = Violation> {
    pub violations: Vec<V>,
}

impl<V> ValidationReport<V> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks block size 3, distinct atoms per block, the Greechie condition,
/// block uniqueness and atom coverage.
pub fn validate(d: &GreechieDiagram) -> ValidationReport {
    let mut violations = Vec::new();
    for (bi, block) in d.blocks.iter().enumerate() {
        if block.len() != 3 {
            violations.push(Violation::BlockSize {
                block: bi,
                atoms: block.iter().map(|&a| d.atoms[a].clone()).collect(),
            });
        }
        for w in block.windows(2) {
            if w[0] == w[1] {
                violations.push(Violation::RepeatedAtom {
                    block: bi,
                    atom: d.atoms[w[0]].clone(),
                });
            }
        }
    }
    for i in 0..d.blocks.len() {
        for j in i + 1..d.blocks.len() {
            let (x, y) = (&d.blocks[i], &d.blocks[j]);
            if x == y {
                violations.push(Violation::DuplicateBlock {
                    first: i,
                    second: j,
                });
                continue;
            }
            let mut shared: Vec<usize> = x
                .iter()
                .filter(|a| y.binary_search(a).is_ok())
                .copied()
                .collect();
            shared.dedup();
            if shared.len() >= 2 {
                violations.push(Violation::SharedPair {
                    first: i,
                    second: j,
                    shared: shared.iter().map(|&a| d.atoms[a].clone()).collect(),
                });
            }
        }
    }
    for (a, blocks) in d.incidence.iter().enumerate() {
        if blocks.is_empty() {
            violations.push(Violation::IsolatedAtom {
                atom: d.atoms[a].clone(),
            });
        }
    }
    ValidationReport { violations }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogeneityProfile {
    pub atom_degrees: Vec<usize>,
    pub block_sizes: Vec<usize>,
    /// `(n, m)` when every atom lies in `n` blocks and every block has `m` atoms.
    pub homogeneous: Option<(usize, usize)>,
}

impl HomogeneityProfile {
    pub fn is_33(&self) -> bool {
        self.homogeneous == Some((3, 3))
    }
}

pub fn homogeneity(d: &GreechieDiagram) -> HomogeneityProfile {
    let atom_degrees: Vec<usize> = (0..d.atom_count()).map(|a| d.degree(a)).collect();
    let block_sizes: Vec<usize> = d.blocks.iter().map(Vec::len).collect();
    let uniform = |v: &[usize]| match v.split_first() {
        Some((&first, rest)) if rest.iter().all(|&x| x == first) => Some(first),
        _ => None,
    };
    let homogeneous = uniform(&atom_degrees).zip(uniform(&block_sizes));
    HomogeneityProfile {
        atom_degrees,
        block_sizes,
        homogeneous,
    }
}
