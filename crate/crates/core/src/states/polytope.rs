use num_traits::{One, Signed, Zero};

use super::{vertex_enum::polytope_vertices, RationalState};
use crate::diagram::GreechieDiagram;
use crate::error::{Error, Result};
use crate::linalg::{rank, solve_affine, AffineSolution};
use crate::rational::Rational;
use crate::simplex::{minimize, LpOutcome};

pub const DEFAULT_DIM_CAP: usize = 8;

/// `{ x : Σ_{a ∈ row} x_a = 1 for every row, x ≥ 0 }` with its exact affine hull.
#[derive(Clone, Debug)]
pub struct StatePolytope {
    atom_count: usize,
    equalities: Vec<Vec<usize>>,
    equality_rank: usize,
    witness: Option<Vec<Rational>>,
    implicit_zeros: Vec<usize>,
    base_point: Vec<Rational>,
    directions: Vec<Vec<Rational>>,
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

impl StatePolytope {
    /// Builds the polytope for arbitrary 0/1 equality rows over `atom_count` atoms.
    pub fn from_rows(atom_count: usize, equalities: Vec<Vec<usize>>) -> Self {
        let m = atom_count;
        let a = incidence_rows(m, &equalities);
        let b = vec![Rational::one(); a.len()];
        let equality_rank = rank(&a);
        let mut p = StatePolytope {
            atom_count,
            equalities,
            equality_rank,
            witness: None,
            implicit_zeros: Vec::new(),
            base_point: Vec::new(),
            directions: Vec::new(),
        };

        if let AffineSolution::Inconsistent { combination } = solve_affine(&a, &b, m) {
            // yᵀA = 0 and yᵀb ≠ 0; flip so that yᵀb < 0.
            let yb: Rational = combination.iter().sum();
            let y = if yb.is_positive() {
                combination.into_iter().map(|v| -v).collect()
            } else {
                combination
            };
            p.witness = Some(y);
            return p;
        }
        let feasible = match minimize(&a, &b, &vec![Rational::zero(); m]) {
            LpOutcome::Infeasible { certificate } => {
                p.witness = Some(certificate);
                return p;
            }
            LpOutcome::Optimal { x, .. } => x,
            LpOutcome::Unbounded => unreachable!("zero objective is bounded"),
        };

        let mut open: Vec<bool> = feasible.iter().map(Zero::is_zero).collect();
        for i in 0..m {
            if !open[i] {
                continue;
            }
            let mut c = vec![Rational::zero(); m];
            c[i] = -Rational::one();
            match minimize(&a, &b, &c) {
                LpOutcome::Optimal { x, value } => {
                    if value.is_zero() {
                        p.implicit_zeros.push(i);
                    }
                    for (j, v) in x.iter().enumerate() {
                        if v.is_positive() {
                            open[j] = false;
                        }
                    }
                }
                // Only an atom outside every row can grow without bound.
                LpOutcome::Unbounded => {}
                LpOutcome::Infeasible { .. } => unreachable!("the system has a feasible point"),
            }
        }

        let mut hull = a.clone();
        let mut rhs = b.clone();
        for &i in &p.implicit_zeros {
            hull.push(unit(m, i));
            rhs.push(Rational::zero());
        }
        match solve_affine(&hull, &rhs, m) {
            AffineSolution::Solved { kernel, .. } => p.directions = kernel,
            AffineSolution::Inconsistent { .. } => {
                unreachable!("feasible point satisfies the hull system")
            }
        }
        p.base_point = feasible;
        p
    }

    pub fn atom_count(&self) -> usize {
        self.atom_count
    }

    pub fn equalities(&self) -> &[Vec<usize>] {
        &self.equalities
    }

    pub fn equality_rank(&self) -> usize {
        self.equality_rank
    }

    /// Dimension of the solution space of the equalities alone.
    pub fn equality_dim(&self) -> usize {
        self.atom_count - self.equality_rank
    }

    pub fn is_empty(&self) -> bool {
        self.witness.is_some()
    }

    /// Dimension of the polytope itself; `-1` when it is empty.
    pub fn affine_dim(&self) -> isize {
        if self.is_empty() {
            -1
        } else {
            self.directions.len() as isize
        }
    }

    /// For an empty polytope, `y` with `yᵀA ≥ 0` and `yᵀ1 < 0`.
    pub fn infeasibility_witness(&self) -> Option<&[Rational]> {
        self.witness.as_deref()
    }

    /// Atoms that vanish at every point of the polytope.
    pub fn implicit_zeros(&self) -> &[usize] {
        &self.implicit_zeros
    }

    /// A state; empty when the polytope is.
    pub fn base_point(&self) -> &[Rational] {
        &self.base_point
    }

    /// A basis of the directions of the affine hull.
    pub fn directions(&self) -> &[Vec<Rational>] {
        &self.directions
    }

    pub fn point(&self, t: &[Rational]) -> Vec<Rational> {
        assert_eq!(t.len(), self.directions.len());
        let mut x = self.base_point.clone();
        for (n, ti) in self.directions.iter().zip(t) {
            for (xi, ni) in x.iter_mut().zip(n) {
                *xi += ni * ti;
            }
        }
        x
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.atom_count
            && x.iter().all(|v| !v.is_negative())
            && self
                .equalities
                .iter()
                .all(|row| row.iter().map(|&i| &x[i]).sum::<Rational>().is_one())
    }

    /// True iff `x` is in the polytope and its tight constraints have full rank.
    pub fn is_vertex(&self, x: &[Rational]) -> bool {
        self.contains(x) && tight_rank_is_full(self.atom_count, &self.equalities, x)
    }

    /// Vertices in lexicographic order; empty for an empty polytope.
    pub fn vertices(&self) -> Vec<Vec<Rational>> {
        if self.is_empty() {
            return Vec::new();
        }
        polytope_vertices(&self.base_point, &self.directions)
    }
}

fn incidence_rows(m: usize, equalities: &[Vec<usize>]) -> Vec<Vec<Rational>> {
    equalities
        .iter()
        .map(|row| {
            let mut r = vec![Rational::zero(); m];
            for &i in row {
                r[i] += Rational::one();
            }
            r
        })
        .collect()
}

fn tight_rank_is_full(m: usize, equalities: &[Vec<usize>], x: &[Rational]) -> bool {
    let mut rows = incidence_rows(m, equalities);
    rows.extend((0..m).filter(|&i| x[i].is_zero()).map(|i| unit(m, i)));
    rank(&rows) == m
}

pub fn state_polytope(d: &GreechieDiagram) -> StatePolytope {
    StatePolytope::from_rows(d.atom_count(), d.blocks().to_vec())
}

/// Exact vertices of the state polytope, lexicographically ordered.
pub fn pure_states(d: &GreechieDiagram, dim_cap: usize) -> Result<Vec<RationalState>> {
    let p = state_polytope(d);
    if p.affine_dim() > dim_cap as isize {
        return Err(Error::DimensionCapExceeded {
            dim: p.affine_dim() as usize,
            cap: dim_cap,
        });
    }
    Ok(p.vertices()
        .into_iter()
        .map(RationalState::from_vertex)
        .collect())
}

pub fn is_pure(d: &GreechieDiagram, s: &RationalState) -> Result<bool> {
    let s = RationalState::new(d, s.values().to_vec())?;
    Ok(tight_rank_is_full(d.atom_count(), d.blocks(), s.values()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::frac;
    use crate::simplex::is_farkas_certificate;

    #[test]
    fn single_block_triangle() {
        let d = GreechieDiagram::from_labeled_blocks(None, &[vec!["1", "2", "3"]]);
        let p = state_polytope(&d);
        assert_eq!(p.affine_dim(), 2);
        let v = pure_states(&d, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(v[2].values(), [frac(1, 1), frac(0, 1), frac(0, 1)]);
    }

    #[test]
    fn h1_is_a_point() {
        let h1 = catalog::build_hk("h1_19").unwrap();
        let p = state_polytope(&h1);
        assert_eq!(p.affine_dim(), 0);
        let v = pure_states(&h1, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v[0].values().iter().all(|x| *x == frac(1, 3)));
        assert!(is_pure(&h1, &v[0]).unwrap());
    }

    #[test]
    fn l17_segment_midpoint_is_not_pure() {
        let l17 = catalog::build_l17();
        let p = state_polytope(&l17);
        assert_eq!(p.affine_dim(), 1);
        let v = pure_states(&l17, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(v.len(), 2);
        let mid = v[0].mix(&v[1], &frac(1, 2));
        assert!(mid.values().iter().all(|x| *x == frac(1, 3)));
        assert!(!is_pure(&l17, &mid).unwrap());
    }

    #[test]
    fn implicit_zero_is_detected() {
        let p = StatePolytope::from_rows(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(p.affine_dim(), 0);
        assert_eq!(p.base_point(), vec![frac(1, 2); 3]);
        let q = StatePolytope::from_rows(3, vec![vec![0, 1], vec![0, 1, 2]]);
        assert_eq!(q.implicit_zeros(), [2]);
        assert_eq!(q.equality_dim(), 1);
        assert_eq!(q.affine_dim(), 1);
    }

    #[test]
    fn empty_systems_carry_witnesses() {
        let rows = vec![vec![0], vec![1], vec![0, 1, 2]];
        let p = StatePolytope::from_rows(3, rows.clone());
        assert_eq!(p.affine_dim(), -1);
        let a: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| {
                (0..3)
                    .map(|i| {
                        if r.contains(&i) {
                            frac(1, 1)
                        } else {
                            frac(0, 1)
                        }
                    })
                    .collect()
            })
            .collect();
        assert!(is_farkas_certificate(
            &a,
            &vec![frac(1, 1); 3],
            p.infeasibility_witness().unwrap()
        ));
        assert!(p.vertices().is_empty());

        let q = StatePolytope::from_rows(2, vec![vec![0], vec![0, 1], vec![1]]);
        assert_eq!(q.affine_dim(), -1);
        assert!(q.infeasibility_witness().is_some());
    }

    #[test]
    fn uncovered_atom_gives_an_unbounded_direction() {
        let p = StatePolytope::from_rows(4, vec![vec![0, 1, 2]]);
        assert_eq!(p.affine_dim(), 3);
        assert!(p.implicit_zeros().is_empty());
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let d =
            GreechieDiagram::from_labeled_blocks(None, &[vec!["1", "2", "3"], vec!["4", "5", "6"]]);
        assert!(matches!(
            pure_states(&d, 3),
            Err(Error::DimensionCapExceeded { dim: 4, cap: 3 })
        ));
        assert_eq!(pure_states(&d, 4).unwrap().len(), 9);
    }
}
