//! Executable fixtures: every named construction, with the values it is
//! expected to produce.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::concrete::ConcreteLogic;
use crate::diagram::{DiagramBuilder, GreechieDiagram};
use crate::error::{Error, Result};

/// Blocks shared by every `H_k(m)` construction.
const H_COMMON: &str = "1-2-3 1-4-5 1-6-7 2-8-9 2-10-11 3-12-13 3-14-15";

const H_ADDED: [(&str, &str, usize, &str); 8] = [
    ("h1_19", "H_1(19)", 19, "4-8-12 4-10-14 5-9-16 5-11-17 6-8-15 6-13-16 7-9-18 7-14-17 10-16-19 11-13-18 12-17-19 15-18-19"),
    ("h3_18", "H_3(18)", 18, "4-8-12 4-14-16 5-10-13 5-17-18 6-11-12 6-16-18 7-9-17 7-10-15 8-15-18 9-13-16 11-14-17"),
    ("h4_19", "H_4(19)", 19, "4-8-12 4-10-14 5-9-13 5-11-16 6-8-15 6-11-17 7-9-18 7-10-19 12-16-18 13-17-19 14-17-18 15-16-19"),
    ("h5_19", "H_5(19)", 19, "4-8-12 4-10-14 5-9-15 5-11-13 6-13-16 6-15-17 7-11-18 7-12-19 8-17-18 9-16-19 10-17-19 14-16-18"),
    ("h6_19", "H_6(19)", 19, "4-8-12 4-10-14 5-9-13 5-11-16 6-9-15 6-11-17 7-10-18 7-13-19 8-16-19 12-17-18 14-17-19 15-16-18"),
    ("h7_18", "H_7(18)", 18, "4-8-12 4-10-14 5-11-15 5-16-17 6-8-18 6-10-16 7-9-15 7-12-17 9-13-16 11-13-18 14-17-18"),
    ("h10_18", "H_10(18)", 18, "4-8-12 4-10-14 5-8-16 5-11-17 6-12-16 6-14-17 7-9-13 7-11-15 9-17-18 10-13-18 15-16-18"),
    ("h11_19", "H_11(19)", 19, "4-8-12 4-10-14 5-9-15 5-11-13 6-8-16 6-10-17 7-13-19 7-15-18 9-17-19 11-16-18 12-17-18 14-16-19"),
];

/// The 28-block summand, with `1-13-15` read as `1-5-13`.
const RELATIONAL_28: &str = "1-5-13 1-6-21 1-14-22 2-6-25 2-5-17 2-18-26 3-9-13 3-10-25 3-14-26 \
    4-9-17 4-10-21 4-18-22 5-15-19 6-23-27 7-11-13 7-12-25 7-15-27 8-11-21 8-12-17 8-19-23 \
    9-16-20 10-24-28 11-16-24 12-20-28 14-24-27 15-20-26 16-19-22 18-23-28";

pub const H_KEYS: [&str; 9] = [
    "h1_19", "h2_17", "h3_18", "h4_19", "h5_19", "h6_19", "h7_18", "h10_18", "h11_19",
];

/// Atoms `1..=m` and blocks written as `a-b-c` tokens.
fn numbered(name: &str, m: usize, blocks: &str) -> GreechieDiagram {
    let atoms = (1..=m).map(|i| i.to_string()).collect();
    let blocks = blocks
        .split_whitespace()
        .map(|b| {
            b.split('-')
                .map(|a| a.parse::<usize>().expect("numeric atom") - 1)
                .collect()
        })
        .collect();
    GreechieDiagram::new(Some(name.to_string()), atoms, blocks).expect("fixture atoms are in range")
}

/// The loop `l_n`: corners `P0..P(n-1)`, midpoints `Q0..Q(n-1)`, blocks `{P_i, Q_i, P_i+1}`.
pub fn build_loop(n: usize) -> Result<GreechieDiagram> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "loop order must be at least 3, got {n}"
        )));
    }
    let mut b = DiagramBuilder::new(Some(&format!("l_{n}")));
    for i in 0..n {
        b.atom(&format!("P{i}"));
    }
    for i in 0..n {
        b.atom(&format!("Q{i}"));
    }
    for i in 0..n {
        let (p, q, r) = (
            format!("P{i}"),
            format!("Q{i}"),
            format!("P{}", (i + 1) % n),
        );
        b.block([p.as_str(), q.as_str(), r.as_str()]);
    }
    Ok(b.build())
}

/// Subsets of `{1..pq}` whose size is a multiple of `q`, and the diagram of
/// its atoms (the `q`-subsets).
pub fn build_lpq(p: usize, q: usize) -> Result<(ConcreteLogic, GreechieDiagram)> {
    if p == 0 || q == 0 || p * q > 12 {
        return Err(Error::InvalidParameter(format!(
            "need p, q >= 1 and p*q <= 12, got p={p}, q={q}"
        )));
    }
    let n = p * q;
    let ground = (1..=n).map(|i| i.to_string()).collect();
    let family = (0u32..1 << n)
        .filter(|mask| (mask.count_ones() as usize).is_multiple_of(q))
        .map(|mask| BitSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1)));
    let logic = ConcreteLogic::new(ground, family);
    let diagram = logic.to_diagram().with_name(format!("L^{p}_{q}"));
    Ok((logic, diagram))
}

pub fn build_l17() -> GreechieDiagram {
    let mut b = DiagramBuilder::new(Some("L_17"));
    for prefix in ["P", "Q"] {
        for i in 0..7 {
            b.atom(&format!("{prefix}{i}"));
        }
    }
    for i in 0..3 {
        b.atom(&format!("R{i}"));
    }
    for i in 0..7 {
        let (p, q, r) = (
            format!("P{i}"),
            format!("Q{i}"),
            format!("P{}", (i + 1) % 7),
        );
        b.block([p.as_str(), q.as_str(), r.as_str()]);
    }
    for block in [
        ["P0", "P4", "R0"],
        ["Q0", "Q2", "Q5"],
        ["Q0", "Q3", "R2"],
        ["P1", "Q4", "R1"],
        ["Q1", "Q3", "Q6"],
        ["Q1", "Q5", "R0"],
        ["P2", "P5", "R2"],
        ["Q2", "Q4", "Q6"],
        ["P3", "P6", "R1"],
        ["R0", "R1", "R2"],
    ] {
        b.block(block);
    }
    b.build()
}

/// The 3×3×3 grid `x.y.z` with its 27 axis-parallel lines as blocks.
pub fn build_l27() -> GreechieDiagram {
    let label = |c: [usize; 3]| format!("{}.{}.{}", c[0], c[1], c[2]);
    let mut b = DiagramBuilder::new(Some("L_27"));
    for x in 0..3 {
        for y in 0..3 {
            for z in 0..3 {
                b.atom(&label([x, y, z]));
            }
        }
    }
    for axis in 0..3 {
        let others: Vec<usize> = (0..3).filter(|&k| k != axis).collect();
        for u in 0..3 {
            for v in 0..3 {
                let line: Vec<String> = (0..3)
                    .map(|t| {
                        let mut c = [0; 3];
                        c[axis] = t;
                        c[others[0]] = u;
                        c[others[1]] = v;
                        label(c)
                    })
                    .collect();
                b.block(line.iter().map(String::as_str));
            }
        }
    }
    b.build()
}

pub fn build_hk(key: &str) -> Result<GreechieDiagram> {
    if key == "h2_17" {
        return Ok(build_l17().with_name("H_2(17)"));
    }
    let (_, name, m, added) = H_ADDED
        .iter()
        .find(|(k, ..)| *k == key)
        .ok_or_else(|| Error::UnknownCatalogKey(key.to_string()))?;
    Ok(numbered(name, *m, &format!("{H_COMMON} {added}")))
}

/// `L(2n)` on `a0..a(2n-1)`: blocks `{a2i, a2i+1, a2i+2}` and `{a2i-5, a2i, a2i+5}`, indices mod `2n`.
pub fn build_l2n(n: usize) -> Result<GreechieDiagram> {
    if n < 9 {
        return Err(Error::InvalidParameter(format!(
            "L(2n) needs n >= 9, got {n}"
        )));
    }
    let m = 2 * n;
    let atoms = (0..m).map(|i| format!("a{i}")).collect();
    let mut blocks = Vec::with_capacity(m);
    for i in 0..n {
        let e = 2 * i;
        blocks.push(vec![e, e + 1, (e + 2) % m]);
        blocks.push(vec![(e + m - 5) % m, e, (e + 5) % m]);
    }
    GreechieDiagram::new(Some(format!("L({m})")), atoms, blocks)
}

pub fn build_relational28() -> GreechieDiagram {
    numbered("relational_28", 28, RELATIONAL_28)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Asserted for the construction in the literature.
    Claimed,
    /// Follows from the construction by a short argument.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tagged<T> {
    pub value: T,
    pub source: Source,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expectations {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid: Option<Tagged<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homogeneous: Option<Tagged<Option<(usize, usize)>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_valued_count: Option<Tagged<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure_count: Option<Tagged<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub affine_dim: Option<Tagged<isize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub full: Option<Tagged<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular: Option<Tagged<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice_candidate: Option<Tagged<bool>>,
}

fn claimed<T>(value: T) -> Option<Tagged<T>> {
    Some(Tagged {
        value,
        source: Source::Claimed,
    })
}

fn derived<T>(value: T) -> Option<Tagged<T>> {
    Some(Tagged {
        value,
        source: Source::Derived,
    })
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: String,
    pub params: Vec<(&'static str, usize)>,
    pub diagram: GreechieDiagram,
    pub expectations: Expectations,
    pub note: Option<String>,
}

impl CatalogEntry {
    fn new(key: &str, diagram: GreechieDiagram, expectations: Expectations) -> Self {
        CatalogEntry {
            key: key.to_string(),
            params: Vec::new(),
            diagram,
            expectations,
            note: None,
        }
    }

    fn params(mut self, params: &[(&'static str, usize)]) -> Self {
        self.params = params.to_vec();
        self
    }

    fn note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

const H_DIMS: [isize; 9] = [0, 1, 2, 2, 2, 2, 3, 3, 3];
const H_PURE: [usize; 9] = [1, 2, 3, 4, 5, 6, 7, 10, 11];

/// All entries in a fixed order: the named constructions first, then the
/// parametric families.
pub fn catalog_list() -> Vec<CatalogEntry> {
    let hom33 = || claimed(Some((3, 3)));
    let mut out = Vec::new();

    let (_, l32) = build_lpq(3, 2).expect("3*2 is within the cap");
    out.push(
        CatalogEntry::new(
            "l3_2",
            l32,
            Expectations {
                homogeneous: hom33(),
                two_valued_count: claimed(6),
                full: claimed(true),
                ..Default::default()
            },
        )
        .params(&[("p", 3), ("q", 2)]),
    );
    out.push(CatalogEntry::new(
        "l17",
        build_l17(),
        Expectations {
            homogeneous: hom33(),
            two_valued_count: claimed(0),
            pure_count: claimed(2),
            affine_dim: claimed(1),
            full: derived(false),
            ..Default::default()
        },
    ));
    out.push(CatalogEntry::new(
        "l27",
        build_l27(),
        Expectations {
            homogeneous: derived(Some((3, 3))),
            two_valued_count: claimed(12),
            full: claimed(true),
            regular: claimed(true),
            ..Default::default()
        },
    ));
    for (i, key) in H_KEYS.iter().enumerate() {
        let mut entry = CatalogEntry::new(
            key,
            build_hk(key).expect("known key"),
            Expectations {
                homogeneous: hom33(),
                pure_count: claimed(H_PURE[i]),
                affine_dim: claimed(H_DIMS[i]),
                lattice_candidate: claimed(false),
                ..Default::default()
            },
        );
        if *key == "h2_17" {
            entry = entry.note("same diagram as l17");
        }
        if *key == "h10_18" {
            entry = entry.note(
                "kept as listed; contains the order-3 loops {1,4,5}-{4,8,12}-{5,8,16}, \
                 {4,8,12}-{5,8,16}-{6,12,16} and {7,9,13}-{9,17,18}-{10,13,18}",
            );
        }
        if *key == "h7_18" {
            entry = entry
                .note("block 6-8-18 appears with a doubled dash (`6--8-18`) in the source list");
        }
        out.push(entry);
    }
    out.push(
        CatalogEntry::new(
            "rel28",
            build_relational28(),
            Expectations {
                valid: derived(true),
                homogeneous: hom33(),
                two_valued_count: derived(0),
                pure_count: claimed(1),
                affine_dim: derived(0),
                lattice_candidate: derived(false),
                ..Default::default()
            },
        )
        .note(
            "the source list has block 1-13-15, which puts atom 5 in two blocks and atom 15 in four; \
             it is read as 1-5-13, the only one-atom change giving a valid (3,3)-homogeneous diagram",
        ),
    );

    for (n, lattice) in [(3, false), (5, true), (7, true)] {
        let homogeneous = derived(None);
        out.push(
            CatalogEntry::new(
                &format!("loop_{n}"),
                build_loop(n).expect("n >= 3"),
                Expectations {
                    valid: derived(true),
                    homogeneous,
                    lattice_candidate: derived(lattice),
                    ..Default::default()
                },
            )
            .params(&[("n", n)]),
        );
    }
    for (p, q, profile) in [(2, 2, (1, 2)), (1, 3, (1, 1))] {
        let (_, d) = build_lpq(p, q).expect("within the cap");
        out.push(
            CatalogEntry::new(
                &format!("lpq_{p}_{q}"),
                d,
                Expectations {
                    valid: derived(false),
                    homogeneous: derived(Some(profile)),
                    ..Default::default()
                },
            )
            .params(&[("p", p), ("q", q)]),
        );
    }
    for (n, pure) in [(9, 3), (10, 2), (11, 1)] {
        let mut entry = CatalogEntry::new(
            &format!("l2n_{}", 2 * n),
            build_l2n(n).expect("n >= 9"),
            Expectations {
                homogeneous: derived(Some((3, 3))),
                pure_count: claimed(pure),
                ..Default::default()
            },
        )
        .params(&[("n", n)]);
        if n == 10 {
            entry.expectations.valid = derived(false);
            entry = entry.note(
                "for 2n = 20 the blocks {a(2i-5), a(2i), a(2i+5)} and {a(2i+5), a(2i+10), a(2i+15)} \
                 share two atoms, so this member is not a Greechie diagram; its state polytope is a single point",
            );
        }
        out.push(entry);
    }
    out
}

pub fn lookup(key: &str) -> Result<CatalogEntry> {
    catalog_list()
        .into_iter()
        .find(|e| e.key == key)
        .ok_or_else(|| Error::UnknownCatalogKey(key.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{homogeneity, validate};

    #[test]
    fn keys_are_unique_and_named_entries_come_first() {
        let list = catalog_list();
        let keys: Vec<&str> = list.iter().map(|e| e.key.as_str()).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), keys.len());
        assert_eq!(&keys[..3], ["l3_2", "l17", "l27"]);
        assert_eq!(keys[12], "rel28");
    }

    #[test]
    fn stored_profiles_match() {
        for e in catalog_list() {
            let valid = validate(&e.diagram).is_valid();
            let expected_valid = e.expectations.valid.as_ref().is_none_or(|t| t.value);
            assert_eq!(valid, expected_valid, "{}", e.key);
            if let Some(h) = &e.expectations.homogeneous {
                assert_eq!(homogeneity(&e.diagram).homogeneous, h.value, "{}", e.key);
            }
        }
    }

    #[test]
    fn sizes() {
        let l27 = build_l27();
        assert_eq!((l27.atom_count(), l27.block_count()), (27, 27));
        assert!(l27.orthogonal("0.0.0", "0.0.2").unwrap());
        assert!(!l27.orthogonal("0.0.0", "0.1.1").unwrap());
        let (e, l32) = build_lpq(3, 2).unwrap();
        assert_eq!(e.family().len(), 32);
        assert_eq!((l32.atom_count(), l32.block_count()), (15, 15));
        assert_eq!(build_hk("h7_18").unwrap().block_count(), 18);
        for key in H_KEYS {
            let d = build_hk(key).unwrap();
            assert_eq!(d.atom_count(), d.block_count(), "{key}");
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(build_loop(2).is_err());
        assert!(build_lpq(4, 4).is_err());
        assert!(build_l2n(8).is_err());
        assert!(matches!(
            build_hk("h8_18"),
            Err(Error::UnknownCatalogKey(_))
        ));
        assert!(lookup("nope").is_err());
    }
}
