use num_traits::{One, Zero};
use serde::Serialize;

use super::TwoValuedState;
use crate::bitset::BitSet;
use crate::concrete::{validate_concrete_logic, ConcreteLogic};
use crate::diagram::GreechieDiagram;
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::logic::elements;
use crate::rational::Rational;

/// Dimensions of the signed measures on a concrete logic and of its annihilator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignedMeasureSpaces {
    pub dim_v: usize,
    pub dim_annihilator: usize,
    pub ground_size: usize,
}

/// Represents each element `x` by the set of listed states with `f(x) = 1`,
/// over the ground set `s1..sk`.
pub fn total_representation(
    d: &GreechieDiagram,
    states: &[TwoValuedState],
) -> Result<ConcreteLogic> {
    if states.is_empty() {
        return Err(Error::EmptyStateSet);
    }
    let k = states.len();
    let ground = (1..=k).map(|i| format!("s{i}")).collect();
    let family = elements(d)
        .into_iter()
        .map(|x| BitSet::from_indices(k, (0..k).filter(|&i| states[i].evaluate(x))));
    Ok(ConcreteLogic::new(ground, family))
}

pub fn signed_measure_dims(e: &ConcreteLogic) -> Result<SignedMeasureSpaces> {
    if let Some(v) = validate_concrete_logic(e).violations.first() {
        return Err(Error::InvalidConcreteLogic(v.to_string()));
    }
    let omega = e.ground().len();
    let family = e.family();
    let indicator = |b: bool| if b { Rational::one() } else { Rational::zero() };

    let membership: Vec<Vec<Rational>> = family
        .iter()
        .map(|m| (0..omega).map(|p| indicator(m.contains(p))).collect())
        .collect();
    let dim_annihilator = omega - rank(&membership);

    let position = |m: &BitSet| {
        family
            .iter()
            .position(|x| x == m)
            .expect("closed under disjoint union")
    };
    let mut additivity: Vec<Vec<Rational>> = Vec::new();
    for (i, x) in family.iter().enumerate() {
        for (j, y) in family.iter().enumerate().skip(i + 1) {
            if !x.is_disjoint(y) {
                continue;
            }
            let mut row = vec![Rational::zero(); family.len()];
            row[position(&x.union(y))] += Rational::one();
            row[i] -= Rational::one();
            row[j] -= Rational::one();
            if row.iter().any(|v| !v.is_zero()) && !additivity.contains(&row) {
                additivity.push(row);
            }
        }
    }
    let dim_v = family.len() - rank(&additivity);
    Ok(SignedMeasureSpaces {
        dim_v,
        dim_annihilator,
        ground_size: omega,
    })
}

/// `dim E° + dim V(E) = |Ω|`.
pub fn is_regular(e: &ConcreteLogic) -> Result<bool> {
    let s = signed_measure_dims(e)?;
    Ok(s.dim_annihilator + s.dim_v == s.ground_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::two_valued_states;

    fn ground(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn power_set_of_two_points() {
        let e = ConcreteLogic::power_set(ground(2));
        let s = signed_measure_dims(&e).unwrap();
        assert_eq!((s.dim_annihilator, s.dim_v, s.ground_size), (0, 2, 2));
        assert!(is_regular(&e).unwrap());
    }

    #[test]
    fn trivial_logic_on_three_points() {
        let e = ConcreteLogic::from_labeled(ground(3), &[vec![], vec!["1", "2", "3"]]).unwrap();
        let s = signed_measure_dims(&e).unwrap();
        assert_eq!((s.dim_annihilator, s.dim_v), (2, 1));
        assert!(is_regular(&e).unwrap());
    }

    #[test]
    fn invalid_logic_is_rejected() {
        let e = ConcreteLogic::from_labeled(ground(2), &[vec!["1"]]).unwrap();
        assert!(matches!(
            signed_measure_dims(&e),
            Err(Error::InvalidConcreteLogic(_))
        ));
    }

    #[test]
    fn single_block_representation_is_the_power_set() {
        let d = GreechieDiagram::from_labeled_blocks(None, &[vec!["1", "2", "3"]]);
        let e = total_representation(&d, &two_valued_states(&d)).unwrap();
        assert_eq!(e.ground().len(), 3);
        assert_eq!(e.family().len(), 8);
        assert!(matches!(
            total_representation(&d, &[]),
            Err(Error::EmptyStateSet)
        ));
    }
}
