//! Text and JSON encodings of a diagram.
//!
//! Text form, one directive per line:
//!
//! ```text
//! # comment
//! name: <label>
//! atom: <id>
//! block: <id> <id> <id>
//! ```
//!
//! Atoms not declared with `atom:` are created on first mention in a block.

use serde::{Deserialize, Serialize};

use super::{DiagramBuilder, GreechieDiagram};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct JsonDiagram {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default)]
    atoms: Vec<String>,
    blocks: Vec<Vec<String>>,
}

/// Parses either encoding; input starting with `{` is taken as JSON.
pub fn parse_diagram(input: &str) -> Result<GreechieDiagram> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn parse_text(input: &str) -> Result<GreechieDiagram> {
    let mut name = None;
    let mut builder = DiagramBuilder::new(None);
    for (n, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: n + 1,
            message,
        };
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| err(format!("expected `<directive>: ...`, got `{line}`")))?;
        let rest = rest.trim();
        match key.trim() {
            "name" => name = Some(rest.to_string()),
            "atom" => {
                let mut tokens = rest.split_whitespace();
                let (Some(id), None) = (tokens.next(), tokens.next()) else {
                    return Err(err("`atom:` takes exactly one identifier".into()));
                };
                if builder.index.contains_key(id) {
                    return Err(Error::DuplicateAtom(id.to_string()));
                }
                builder.atom(id);
            }
            "block" => {
                if rest.is_empty() {
                    return Err(err("empty block".into()));
                }
                builder.block(rest.split_whitespace());
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    builder.name = name;
    Ok(builder.build())
}

pub fn parse_json(input: &str) -> Result<GreechieDiagram> {
    let raw: JsonDiagram = serde_json::from_str(input)?;
    let mut builder = DiagramBuilder::new(raw.name.as_deref());
    for a in &raw.atoms {
        if builder.index.contains_key(a) {
            return Err(Error::DuplicateAtom(a.clone()));
        }
        builder.atom(a);
    }
    for b in &raw.blocks {
        if b.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "empty block".into(),
            });
        }
        builder.block(b.iter().map(String::as_str));
    }
    Ok(builder.build())
}

/// Canonical text encoding: optional name, every atom in order, then every block.
pub fn to_text(d: &GreechieDiagram) -> String {
    let mut out = String::new();
    if let Some(name) = d.name() {
        out.push_str(&format!("name: {name}\n"));
    }
    for a in d.atoms() {
        out.push_str(&format!("atom: {a}\n"));
    }
    for bi in 0..d.block_count() {
        out.push_str(&format!("block: {}\n", d.block_labels(bi).join(" ")));
    }
    out
}

pub fn to_json(d: &GreechieDiagram) -> serde_json::Value {
    let raw = JsonDiagram {
        name: d.name().map(str::to_string),
        atoms: d.atoms().to_vec(),
        blocks: (0..d.block_count())
            .map(|b| d.block_labels(b).into_iter().map(str::to_string).collect())
            .collect(),
    };
    serde_json::to_value(raw).expect("diagram serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::diagram::canonical_form;

    #[test]
    fn text_format_creates_atoms_in_order() {
        let d =
            parse_text("# a comment\nname: tiny\natom: z\nblock: a b c\nblock: c  d\te\n").unwrap();
        assert_eq!(d.name(), Some("tiny"));
        assert_eq!(d.atoms(), ["z", "a", "b", "c", "d", "e"]);
        assert_eq!(d.blocks(), [vec![1, 2, 3], vec![3, 4, 5]]);
    }

    #[test]
    fn text_emission_is_exact() {
        let d = parse_text("name: t\nblock: x y z\n").unwrap();
        assert_eq!(
            to_text(&d),
            "name: t\natom: x\natom: y\natom: z\nblock: x y z\n"
        );
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_text("block: 1 2 3\nfoo: bar\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_text("block:\n").is_err());
        assert!(parse_text("no colon here").is_err());
        assert!(matches!(
            parse_text("atom: a\natom: a\n"),
            Err(Error::DuplicateAtom(_))
        ));
    }

    #[test]
    fn json_matches_text() {
        let j = r#"{"name": "t", "atoms": ["q"], "blocks": [["a","b","c"]]}"#;
        let d = parse_diagram(j).unwrap();
        assert_eq!(d.atoms(), ["q", "a", "b", "c"]);
        let t = parse_diagram(&to_text(&d)).unwrap();
        assert_eq!(d, t);
        assert!(parse_json("{\"blocks\": 3}").is_err());
    }

    #[test]
    fn catalog_round_trips_through_both_encodings() {
        for entry in catalog::catalog_list() {
            let d = &entry.diagram;
            let from_text = parse_diagram(&to_text(d)).unwrap();
            let from_json = parse_diagram(&to_json(d).to_string()).unwrap();
            assert_eq!(&from_text, d, "{}", entry.key);
            assert_eq!(&from_json, d, "{}", entry.key);
            if crate::diagram::validate(d).is_valid() && d.atom_count() <= 30 {
                assert_eq!(canonical_form(&from_text), canonical_form(d));
            }
        }
    }
}
