//! Concrete logics: families of subsets of a finite ground set that contain
//! the ground set and are closed under complement and disjoint union.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::diagram::{GreechieDiagram, ValidationReport};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcreteLogic {
    ground: Vec<String>,
    family: Vec<BitSet>,
}

#[derive(Serialize, Deserialize)]
struct JsonLogic {
    ground: Vec<String>,
    family: Vec<Vec<String>>,
}

impl ConcreteLogic {
    /// Members are deduplicated, keeping first occurrences in order.
    pub fn new(ground: Vec<String>, family: impl IntoIterator<Item = BitSet>) -> Self {
        let mut seen = HashSet::new();
        let family = family
            .into_iter()
            .inspect(|m| {
                assert_eq!(
                    m.capacity(),
                    ground.len(),
                    "member over a different ground set"
                )
            })
            .filter(|m| seen.insert(m.clone()))
            .collect();
        ConcreteLogic { ground, family }
    }

    pub fn from_labeled<S: AsRef<str>>(ground: Vec<String>, family: &[Vec<S>]) -> Result<Self> {
        let index = |l: &str| {
            ground
                .iter()
                .position(|g| g == l)
                .ok_or_else(|| Error::InvalidConcreteLogic(format!("`{l}` is not a ground point")))
        };
        let members = family
            .iter()
            .map(|m| {
                let idx = m
                    .iter()
                    .map(|l| index(l.as_ref()))
                    .collect::<Result<Vec<_>>>()?;
                Ok(BitSet::from_indices(ground.len(), idx))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ConcreteLogic::new(ground, members))
    }

    pub fn power_set(ground: Vec<String>) -> Self {
        let n = ground.len();
        assert!(n < 24, "power set of {n} points is too large");
        let members = (0u32..1 << n)
            .map(|mask| BitSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1)));
        ConcreteLogic::new(ground, members)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn family(&self) -> &[BitSet] {
        &self.family
    }

    pub fn contains(&self, member: &BitSet) -> bool {
        self.family.contains(member)
    }

    pub fn member_labels(&self, member: &BitSet) -> Vec<&str> {
        member.iter().map(|i| self.ground[i].as_str()).collect()
    }

    fn member_name(&self, member: &BitSet) -> String {
        format!("{{{}}}", self.member_labels(member).join(","))
    }

    /// Minimal non-empty members.
    pub fn atoms(&self) -> Vec<BitSet> {
        let nonempty: Vec<&BitSet> = self.family.iter().filter(|m| !m.is_empty()).collect();
        let mut atoms: Vec<BitSet> = nonempty
            .iter()
            .filter(|m| !nonempty.iter().any(|o| o != *m && o.is_subset(m)))
            .map(|m| (*m).clone())
            .collect();
        atoms.sort_by_key(|a| a.iter().collect::<Vec<_>>());
        atoms
    }

    /// The diagram of atoms with maximal families of pairwise disjoint atoms as blocks.
    pub fn to_diagram(&self) -> GreechieDiagram {
        let atoms = self.atoms();
        let n = atoms.len();
        let disjoint: Vec<Vec<bool>> = atoms
            .iter()
            .map(|a| atoms.iter().map(|b| a != b && a.is_disjoint(b)).collect())
            .collect();
        let mut cliques = Vec::new();
        bron_kerbosch(
            &disjoint,
            Vec::new(),
            (0..n).collect(),
            Vec::new(),
            &mut cliques,
        );
        for c in cliques.iter_mut() {
            c.sort_unstable();
        }
        cliques.sort();
        let labels = atoms.iter().map(|a| self.member_name(a)).collect();
        GreechieDiagram::new(None, labels, cliques).expect("clique indices are atoms")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let raw = JsonLogic {
            ground: self.ground.clone(),
            family: self
                .family
                .iter()
                .map(|m| {
                    self.member_labels(m)
                        .into_iter()
                        .map(str::to_string)
                        .collect()
                })
                .collect(),
        };
        serde_json::to_value(raw).expect("concrete logic serializes")
    }

    pub fn from_json(input: &str) -> Result<Self> {
        let raw: JsonLogic = serde_json::from_str(input)?;
        let mut seen = HashSet::new();
        for g in &raw.ground {
            if !seen.insert(g) {
                return Err(Error::InvalidConcreteLogic(format!(
                    "duplicate ground point `{g}`"
                )));
            }
        }
        ConcreteLogic::from_labeled(raw.ground, &raw.family)
    }
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
        .unwrap();
    let mut p = p;
    let mut x = x;
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.retain(|&u| u != v);
        x.push(v);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LogicViolation {
    MissingGround,
    MissingComplement {
        member: Vec<String>,
    },
    MissingDisjointUnion {
        first: Vec<String>,
        second: Vec<String>,
    },
}

impl fmt::Display for LogicViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicViolation::MissingGround => write!(f, "the ground set is not a member"),
            LogicViolation::MissingComplement { member } => {
                write!(f, "complement of {{{}}} is missing", member.join(","))
            }
            LogicViolation::MissingDisjointUnion { first, second } => write!(
                f,
                "union of disjoint members {{{}}} and {{{}}} is missing",
                first.join(","),
                second.join(",")
            ),
        }
    }
}

pub fn validate_concrete_logic(e: &ConcreteLogic) -> ValidationReport<LogicViolation> {
    let mut violations = Vec::new();
    let members: HashSet<&BitSet> = e.family.iter().collect();
    let labels = |m: &BitSet| {
        e.member_labels(m)
            .into_iter()
            .map(str::to_string)
            .collect::<Vec<_>>()
    };
    if !members.contains(&BitSet::full(e.ground.len())) {
        violations.push(LogicViolation::MissingGround);
    }
    for m in &e.family {
        if !members.contains(&m.complement()) {
            violations.push(LogicViolation::MissingComplement { member: labels(m) });
        }
    }
    for (i, x) in e.family.iter().enumerate() {
        for y in &e.family[i + 1..] {
            if x.is_disjoint(y) && !members.contains(&x.union(y)) {
                violations.push(LogicViolation::MissingDisjointUnion {
                    first: labels(x),
                    second: labels(y),
                });
            }
        }
    }
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn power_set_is_valid() {
        let e = ConcreteLogic::power_set(ground(2));
        assert_eq!(e.family().len(), 4);
        assert!(validate_concrete_logic(&e).is_valid());
    }

    #[test]
    fn missing_complement_is_reported() {
        let e =
            ConcreteLogic::from_labeled(ground(2), &[vec!["1", "2"], vec![], vec!["1"]]).unwrap();
        let v = validate_concrete_logic(&e).violations;
        assert!(v.contains(&LogicViolation::MissingComplement {
            member: vec!["1".into()]
        }));
    }

    #[test]
    fn family_is_deduplicated() {
        let e = ConcreteLogic::from_labeled(ground(2), &[vec!["1", "2"], vec!["2", "1"], vec![]])
            .unwrap();
        assert_eq!(e.family().len(), 2);
        assert!(ConcreteLogic::from_labeled(ground(2), &[vec!["7"]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let e = ConcreteLogic::power_set(ground(3));
        let back = ConcreteLogic::from_json(&e.to_json().to_string()).unwrap();
        assert_eq!(back, e);
        assert!(ConcreteLogic::from_json(r#"{"ground": ["a","a"], "family": []}"#).is_err());
    }

    #[test]
    fn diagram_of_a_boolean_algebra_is_one_block() {
        let d = ConcreteLogic::power_set(ground(3)).to_diagram();
        assert_eq!(d.atom_count(), 3);
        assert_eq!(d.blocks(), [vec![0, 1, 2]]);
    }
}
