//! Exact two-phase simplex for `min c·x` subject to `A x = b, x ≥ 0`.
//!
//! Bland's rule keeps the method finite under degeneracy. Infeasible systems
//! come back with a Farkas certificate `y` (`yᵀA ≥ 0`, `yᵀb < 0`) read off the
//! final phase-one tableau.

use num_traits::{One, Signed, Zero};

use crate::linalg::dot;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible { certificate: Vec<Rational> },
    Unbounded,
    Optimal { x: Vec<Rational>, value: Rational },
}

struct Tableau {
    vars: usize,
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    reduced: Vec<Rational>,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.reduced.len()
    }

    fn price(&mut self, costs: &[Rational]) {
        let width = self.rhs();
        self.reduced = (0..width)
            .map(|j| {
                let mut d = costs[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !costs[b].is_zero() && !row[j].is_zero() {
                        d -= &costs[b] * &row[j];
                    }
                }
                d
            })
            .collect();
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        let f = self.reduced[c].clone();
        if !f.is_zero() {
            for (v, p) in self.reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs Bland's rule over entering columns `< allowed`. Returns false when unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let rhs = self.rhs();
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.reduced[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return false,
            }
        }
    }
}

pub fn minimize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let vars = c.len();
    let m = a.len();
    let signs: Vec<bool> = b.iter().map(|v| v.is_negative()).collect();
    let rows = a
        .iter()
        .zip(b)
        .zip(&signs)
        .enumerate()
        .map(|(i, ((row, rhs), &neg))| {
            let mut r: Vec<Rational> = row
                .iter()
                .map(|v| if neg { -v } else { v.clone() })
                .collect();
            r.extend((0..m).map(|k| {
                if k == i {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r.push(if neg { -rhs } else { rhs.clone() });
            r
        })
        .collect();
    let mut t = Tableau {
        vars,
        rows,
        basis: (vars..vars + m).collect(),
        reduced: vec![Rational::zero(); vars + m],
    };

    let phase_one: Vec<Rational> = (0..vars + m)
        .map(|j| {
            if j < vars {
                Rational::zero()
            } else {
                Rational::one()
            }
        })
        .collect();
    t.price(&phase_one);
    t.optimize(vars + m);
    let rhs = t.rhs();
    let infeasibility: Rational = t
        .rows
        .iter()
        .zip(&t.basis)
        .filter(|(_, &bj)| bj >= vars)
        .fold(Rational::zero(), |acc, (row, _)| acc + &row[rhs]);
    if infeasibility.is_positive() {
        // Dual of phase one: y_k = 1 - reduced cost of artificial k.
        let certificate = (0..m)
            .map(|k| {
                let y = Rational::one() - &t.reduced[vars + k];
                if signs[k] {
                    y
                } else {
                    -y
                }
            })
            .collect();
        return LpOutcome::Infeasible { certificate };
    }

    // Drive zero-level artificials out of the basis; rows with nothing to pivot on are redundant.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= vars {
            if let Some(j) = (0..vars).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, j);
            } else {
                t.rows.remove(i);
                t.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }

    let mut costs = c.to_vec();
    costs.resize(vars + m, Rational::zero());
    t.price(&costs);
    if !t.optimize(t.vars) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); vars];
    for (row, &bj) in t.rows.iter().zip(&t.basis) {
        x[bj] = row[rhs].clone();
    }
    let value = dot(c, &x);
    LpOutcome::Optimal { x, value }
}

/// Checks a Farkas certificate for infeasibility of `A x = b, x ≥ 0`.
pub fn is_farkas_certificate(a: &[Vec<Rational>], b: &[Rational], y: &[Rational]) -> bool {
    let cols = a.first().map_or(0, Vec::len);
    let columns_ok = (0..cols).all(|j| {
        let col: Vec<Rational> = a.iter().map(|r| r[j].clone()).collect();
        !dot(y, &col).is_negative()
    });
    columns_ok && dot(y, b).is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn optimum_of_small_program() {
        // x0 + x1 + x2 = 1, x0 + 2 x1 = 1; maximise x1.
        let a = mat(&[&[1, 1, 1], &[1, 2, 0]]);
        let b = vec![int(1), int(1)];
        let c = vec![int(0), int(-1), int(0)];
        let LpOutcome::Optimal { x, value } = minimize(&a, &b, &c) else {
            panic!("bounded feasible program");
        };
        assert_eq!(value, frac(-1, 2));
        assert_eq!(x[1], frac(1, 2));
    }

    #[test]
    fn nonnegativity_infeasibility_has_certificate() {
        // x0 = 1, x1 = 1, x0 + x1 + x2 = 1 forces x2 = -1.
        let a = mat(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1]]);
        let b = vec![int(1), int(1), int(1)];
        let c = vec![int(0); 3];
        let LpOutcome::Infeasible { certificate } = minimize(&a, &b, &c) else {
            panic!("infeasible");
        };
        assert!(is_farkas_certificate(&a, &b, &certificate));
    }

    #[test]
    fn negative_right_hand_side() {
        let a = mat(&[&[-1, -1]]);
        let b = vec![int(-2)];
        let c = vec![int(1), int(2)];
        let LpOutcome::Optimal { value, .. } = minimize(&a, &b, &c) else {
            panic!("feasible");
        };
        assert_eq!(value, int(2));
        let LpOutcome::Infeasible { certificate } = minimize(&a, &[int(2)], &c) else {
            panic!("x ≥ 0 cannot sum to -2");
        };
        assert!(is_farkas_certificate(&a, &[int(2)], &certificate));
    }

    #[test]
    fn unbounded_program() {
        let a = mat(&[&[1, -1]]);
        let outcome = minimize(&a, &[int(0)], &[int(-1), int(0)]);
        assert_eq!(outcome, LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let a = mat(&[&[1, 1], &[2, 2]]);
        let b = vec![int(1), int(2)];
        let LpOutcome::Optimal { value, .. } = minimize(&a, &b, &[int(1), int(0)]) else {
            panic!("feasible");
        };
        assert_eq!(value, int(0));
    }
}
