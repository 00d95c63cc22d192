//! One-call summary of a diagram, and comparison against stored expectations.

use serde::Serialize;

use crate::catalog::{Expectations, Source, Tagged};
use crate::diagram::{homogeneity, lattice_test, validate, GreechieDiagram};
use crate::error::{Error, Result};
use crate::states::{
    is_full_by_criterion, is_full_by_definition, is_regular, state_polytope, total_representation,
    two_valued_states,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub atoms: usize,
    pub blocks: usize,
    pub valid: bool,
    pub homogeneous: Option<(usize, usize)>,
    pub two_valued_count: usize,
    pub pure_count: usize,
    pub affine_dim: isize,
    pub full: bool,
    pub full_by_definition: bool,
    /// Regularity of the total representation; `None` when there are no
    /// two-valued states or their representation is not a concrete logic.
    pub regular: Option<bool>,
    pub lattice_candidate: bool,
}

pub fn classify(d: &GreechieDiagram, dim_cap: usize) -> Result<Classification> {
    let s2 = two_valued_states(d);
    let polytope = state_polytope(d);
    if polytope.affine_dim() > dim_cap as isize {
        return Err(Error::DimensionCapExceeded {
            dim: polytope.affine_dim() as usize,
            cap: dim_cap,
        });
    }
    let regular = if s2.is_empty() {
        None
    } else {
        match is_regular(&total_representation(d, &s2)?) {
            Ok(r) => Some(r),
            Err(Error::InvalidConcreteLogic(_)) => None,
            Err(e) => return Err(e),
        }
    };
    Ok(Classification {
        atoms: d.atom_count(),
        blocks: d.block_count(),
        valid: validate(d).is_valid(),
        homogeneous: homogeneity(d).homogeneous,
        two_valued_count: s2.len(),
        pure_count: polytope.vertices().len(),
        affine_dim: polytope.affine_dim(),
        full: is_full_by_criterion(d, &s2),
        full_by_definition: is_full_by_definition(d, &s2),
        regular,
        lattice_candidate: lattice_test(d).is_oml_candidate,
    })
}

/// Outcome of comparing one stored expectation with the computed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectationCheck {
    pub field: &'static str,
    pub expected: String,
    pub actual: String,
    pub source: Source,
    pub pass: bool,
}

pub fn format_profile(h: Option<(usize, usize)>) -> String {
    match h {
        Some((n, m)) => format!("({n},{m})"),
        None => "none".to_string(),
    }
}

fn format_regular(r: Option<bool>) -> String {
    r.map_or_else(|| "undefined".to_string(), |b| b.to_string())
}

fn check<T: PartialEq>(
    out: &mut Vec<ExpectationCheck>,
    field: &'static str,
    expected: &Option<Tagged<T>>,
    actual: T,
    show: impl Fn(&T) -> String,
) {
    if let Some(t) = expected {
        out.push(ExpectationCheck {
            field,
            expected: show(&t.value),
            actual: show(&actual),
            source: t.source,
            pass: t.value == actual,
        });
    }
}

pub fn check_expectations(e: &Expectations, c: &Classification) -> Vec<ExpectationCheck> {
    let mut out = Vec::new();
    let s = |v: &dyn ToString| v.to_string();
    check(&mut out, "valid", &e.valid, c.valid, |v| s(v));
    check(
        &mut out,
        "homogeneous",
        &e.homogeneous,
        c.homogeneous,
        |v| format_profile(*v),
    );
    check(
        &mut out,
        "two_valued_count",
        &e.two_valued_count,
        c.two_valued_count,
        |v| s(v),
    );
    check(&mut out, "pure_count", &e.pure_count, c.pure_count, |v| {
        s(v)
    });
    check(&mut out, "affine_dim", &e.affine_dim, c.affine_dim, |v| {
        s(v)
    });
    check(&mut out, "full", &e.full, c.full, |v| s(v));
    let regular = e.regular.as_ref().map(|t| Tagged {
        value: Some(t.value),
        source: t.source,
    });
    check(&mut out, "regular", &regular, c.regular, |v| {
        format_regular(*v)
    });
    check(
        &mut out,
        "lattice_candidate",
        &e.lattice_candidate,
        c.lattice_candidate,
        |v| s(v),
    );
    out
}
