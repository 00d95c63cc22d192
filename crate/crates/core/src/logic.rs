//! Elements and order of the orthomodular poset pasted from a diagram with
//! three-atom blocks: `{0, 1} ∪ A ∪ A⊥`, where the join of two atoms of a
//! block is the orthocomplement of the third.

use std::fmt;

use num_traits::One;

use crate::diagram::GreechieDiagram;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::states::RationalState;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LogicElement {
    Zero,
    Atom(usize),
    Coatom(usize),
    One,
}

impl LogicElement {
    pub fn orthocomplement(self) -> LogicElement {
        match self {
            LogicElement::Zero => LogicElement::One,
            LogicElement::One => LogicElement::Zero,
            LogicElement::Atom(a) => LogicElement::Coatom(a),
            LogicElement::Coatom(a) => LogicElement::Atom(a),
        }
    }

    pub fn display<'a>(&self, d: &'a GreechieDiagram) -> ElementDisplay<'a> {
        ElementDisplay {
            element: *self,
            diagram: d,
        }
    }

    fn check(self, d: &GreechieDiagram) -> Result<Self> {
        match self {
            LogicElement::Atom(a) | LogicElement::Coatom(a) if a >= d.atom_count() => {
                Err(Error::ForeignElement(format!("{self:?}")))
            }
            _ => Ok(self),
        }
    }
}

pub struct ElementDisplay<'a> {
    element: LogicElement,
    diagram: &'a GreechieDiagram,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.element {
            LogicElement::Zero => write!(f, "0"),
            LogicElement::One => write!(f, "1"),
            LogicElement::Atom(a) => write!(f, "{}", self.diagram.label(a)),
            LogicElement::Coatom(a) => write!(f, "{}'", self.diagram.label(a)),
        }
    }
}

pub fn orthocomplement(x: LogicElement) -> LogicElement {
    x.orthocomplement()
}

/// `0`, the atoms, the coatoms and `1`: `2 + 2·|A|` elements.
pub fn elements(d: &GreechieDiagram) -> Vec<LogicElement> {
    let n = d.atom_count();
    let mut out = Vec::with_capacity(2 + 2 * n);
    out.push(LogicElement::Zero);
    out.extend((0..n).map(LogicElement::Atom));
    out.extend((0..n).map(LogicElement::Coatom));
    out.push(LogicElement::One);
    out
}

pub fn leq(d: &GreechieDiagram, x: LogicElement, y: LogicElement) -> Result<bool> {
    use LogicElement::*;
    Ok(match (x.check(d)?, y.check(d)?) {
        (Zero, _) | (_, One) => true,
        (_, Zero) | (One, _) => false,
        (Atom(a), Atom(b)) | (Coatom(a), Coatom(b)) => a == b,
        (Atom(a), Coatom(b)) => d.is_orthogonal(a, b),
        (Coatom(_), Atom(_)) => false,
    })
}

/// Value of a state on an element: `s(a)` on atoms, `1 - s(a)` on coatoms.
pub fn evaluate(d: &GreechieDiagram, s: &RationalState, x: LogicElement) -> Result<Rational> {
    if s.values().len() != d.atom_count() {
        return Err(Error::ForeignElement(
            "state belongs to another diagram".into(),
        ));
    }
    Ok(match x.check(d)? {
        LogicElement::Zero => Rational::from_integer(0.into()),
        LogicElement::One => Rational::one(),
        LogicElement::Atom(a) => s.values()[a].clone(),
        LogicElement::Coatom(a) => Rational::one() - &s.values()[a],
    })
}
