//! States on the logic of a diagram: two-valued states, the exact state
//! polytope and its vertices (pure states), fullness, total representation
//! and regularity of concrete logics.

mod fullness;
mod measures;
mod polytope;
mod two_valued;
mod vertex_enum;

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::diagram::GreechieDiagram;
use crate::error::{Error, Result};
use crate::logic::LogicElement;
use crate::rational::{parse_rational, to_canonical_string, Rational};

pub use fullness::{is_full_by_criterion, is_full_by_definition, theorem11_check, Theorem11};
pub use measures::{is_regular, signed_measure_dims, total_representation, SignedMeasureSpaces};
pub use polytope::{is_pure, pure_states, state_polytope, StatePolytope, DEFAULT_DIM_CAP};
pub use two_valued::two_valued_states;
pub use vertex_enum::polytope_vertices;

/// Exact state: atom values in `[0, 1]` summing to 1 on every block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalState {
    values: Vec<Rational>,
}

/// Returns a description of the first broken state condition, if any.
fn state_defect(d: &GreechieDiagram, values: &[Rational]) -> Option<String> {
    if values.len() != d.atom_count() {
        return Some(format!(
            "{} values for {} atoms",
            values.len(),
            d.atom_count()
        ));
    }
    for (a, v) in values.iter().enumerate() {
        if v.is_negative() || *v > Rational::one() {
            return Some(format!(
                "value {} on {} is outside [0, 1]",
                to_canonical_string(v),
                d.label(a)
            ));
        }
    }
    for (bi, b) in d.blocks().iter().enumerate() {
        let sum: Rational = b.iter().map(|&a| &values[a]).sum();
        if !sum.is_one() {
            return Some(format!("block #{bi} sums to {}", to_canonical_string(&sum)));
        }
    }
    None
}

pub fn is_state(d: &GreechieDiagram, values: &[Rational]) -> bool {
    state_defect(d, values).is_none()
}

impl RationalState {
    pub fn new(d: &GreechieDiagram, values: Vec<Rational>) -> Result<Self> {
        match state_defect(d, &values) {
            Some(why) => Err(Error::NotAState(why)),
            None => Ok(RationalState { values }),
        }
    }

    pub(crate) fn from_vertex(values: Vec<Rational>) -> Self {
        RationalState { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, atom: usize) -> &Rational {
        &self.values[atom]
    }

    /// `(1 - t)·self + t·other`.
    pub fn mix(&self, other: &RationalState, t: &Rational) -> RationalState {
        let s = Rational::one() - t;
        RationalState {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(x, y)| &s * x + t * y)
                .collect(),
        }
    }

    pub fn to_json(&self, d: &GreechieDiagram) -> Value {
        let values: Map<String, Value> = self
            .values
            .iter()
            .enumerate()
            .map(|(a, v)| {
                (
                    d.label(a).to_string(),
                    Value::String(to_canonical_string(v)),
                )
            })
            .collect();
        serde_json::json!({ "values": values })
    }

    pub fn from_json(d: &GreechieDiagram, input: &str) -> Result<Self> {
        let raw: Value = serde_json::from_str(input)?;
        let map = raw
            .get("values")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::NotAState("expected an object with a \"values\" map".into()))?;
        let mut values = vec![None; d.atom_count()];
        for (label, v) in map {
            let a = d.atom_index(label)?;
            let text = v.as_str().ok_or_else(|| {
                Error::NotAState(format!("value of {label} is not a \"p/q\" string"))
            })?;
            values[a] = Some(parse_rational(text)?);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(a, v)| v.ok_or_else(|| Error::NotAState(format!("no value for {}", d.label(a)))))
            .collect::<Result<Vec<_>>>()?;
        RationalState::new(d, values)
    }
}

/// A two-valued state, given by the atoms it sends to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoValuedState {
    support: Vec<usize>,
}

impl TwoValuedState {
    /// `support` must meet every block of `d` in exactly one atom.
    pub fn new(d: &GreechieDiagram, mut support: Vec<usize>) -> Result<Self> {
        support.sort_unstable();
        support.dedup();
        if let Some(&a) = support.iter().find(|&&a| a >= d.atom_count()) {
            return Err(Error::AtomIndexOutOfRange(a));
        }
        for (bi, b) in d.blocks().iter().enumerate() {
            let hits = b
                .iter()
                .filter(|a| support.binary_search(a).is_ok())
                .count();
            if hits != 1 {
                return Err(Error::NotAState(format!(
                    "block #{bi} contains {hits} support atoms"
                )));
            }
        }
        Ok(TwoValuedState { support })
    }

    pub(crate) fn from_sorted_support(support: Vec<usize>) -> Self {
        TwoValuedState { support }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn value(&self, atom: usize) -> bool {
        self.support.binary_search(&atom).is_ok()
    }

    /// The value (0 or 1) on an element of the logic.
    pub fn evaluate(&self, x: LogicElement) -> bool {
        match x {
            LogicElement::Zero => false,
            LogicElement::One => true,
            LogicElement::Atom(a) => self.value(a),
            LogicElement::Coatom(a) => !self.value(a),
        }
    }

    pub fn to_rational(&self, atom_count: usize) -> RationalState {
        RationalState {
            values: (0..atom_count)
                .map(|a| {
                    if self.value(a) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        }
    }

    pub fn support_labels<'a>(&self, d: &'a GreechieDiagram) -> Vec<&'a str> {
        self.support.iter().map(|&a| d.label(a)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::frac;

    #[test]
    fn state_construction_checks_blocks() {
        let d = GreechieDiagram::from_labeled_blocks(None, &[vec!["1", "2", "3"]]);
        assert!(RationalState::new(&d, vec![frac(1, 2), frac(1, 2), frac(0, 1)]).is_ok());
        assert!(matches!(
            RationalState::new(&d, vec![frac(1, 2), frac(1, 2), frac(1, 2)]),
            Err(Error::NotAState(_))
        ));
        assert!(RationalState::new(&d, vec![frac(3, 2), frac(-1, 2), frac(0, 1)]).is_err());
        assert!(RationalState::new(&d, vec![frac(1, 1)]).is_err());
    }

    #[test]
    fn state_json_round_trip() {
        let h1 = catalog::build_hk("h1_19").unwrap();
        let s = RationalState::new(&h1, vec![frac(1, 3); 19]).unwrap();
        let json = s.to_json(&h1);
        assert_eq!(json["values"]["7"], "1/3");
        assert_eq!(RationalState::from_json(&h1, &json.to_string()).unwrap(), s);
        assert!(RationalState::from_json(&h1, r#"{"values": {"1": "1/3"}}"#).is_err());
    }

    #[test]
    fn two_valued_state_checks_exactly_one() {
        let d =
            GreechieDiagram::from_labeled_blocks(None, &[vec!["1", "2", "3"], vec!["3", "4", "5"]]);
        assert!(TwoValuedState::new(&d, vec![2]).is_ok());
        assert!(TwoValuedState::new(&d, vec![0, 3]).is_ok());
        assert!(TwoValuedState::new(&d, vec![0, 2]).is_err());
        assert!(TwoValuedState::new(&d, vec![0]).is_err());
    }
}
