//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Row-reduces `rows` in place, pivoting only in the first `pivot_cols` columns.
/// Columns beyond `pivot_cols` are carried along (augmented part).
/// Returns the pivot column of each leading row, in order.
pub fn rref(rows: &mut [Vec<Rational>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for v in rows[r].iter_mut() {
                *v *= &inv;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let factor = other[c].clone();
            for (v, p) in other.iter_mut().zip(pivot_row.iter()) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Solution set of `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum AffineSolution {
    /// `combination` is a row vector `y` with `yᵀA = 0` and `yᵀb ≠ 0`.
    Inconsistent { combination: Vec<Rational> },
    /// `x = particular + Σ tᵢ kernel[i]`; the kernel vectors are linearly independent.
    Solved {
        particular: Vec<Rational>,
        kernel: Vec<Vec<Rational>>,
        rank: usize,
    },
}

pub fn solve_affine(a: &[Vec<Rational>], b: &[Rational], cols: usize) -> AffineSolution {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, rhs))| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = rref(&mut m, cols);
    let rank = pivots.len();
    if let Some(row) = m[rank..].iter().find(|row| !row[cols].is_zero()) {
        return AffineSolution::Inconsistent {
            combination: row[cols + 1..].to_vec(),
        };
    }
    let mut particular = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = m[r][cols].clone();
    }
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let kernel = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][f].clone();
            }
            v
        })
        .collect();
    AffineSolution::Solved {
        particular,
        kernel,
        rank,
    }
}

/// Solves a square system; `None` when the matrix is singular.
pub fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    match solve_affine(a, b, n) {
        AffineSolution::Solved {
            particular, rank, ..
        } if rank == n => Some(particular),
        _ => None,
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
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
    fn rank_of_dependent_rows() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn affine_solution_checks_out() {
        let a = mat(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = vec![int(1), int(1)];
        let AffineSolution::Solved {
            particular,
            kernel,
            rank,
        } = solve_affine(&a, &b, 3)
        else {
            panic!("consistent system");
        };
        assert_eq!(rank, 2);
        assert_eq!(kernel.len(), 1);
        for (row, rhs) in a.iter().zip(&b) {
            assert_eq!(&dot(row, &particular), rhs);
            assert!(dot(row, &kernel[0]).is_zero());
        }
    }

    #[test]
    fn inconsistency_certificate() {
        let a = mat(&[&[1, 0], &[1, 1], &[0, 1]]);
        let b = vec![int(1), int(1), int(1)];
        let AffineSolution::Inconsistent { combination } = solve_affine(&a, &b, 2) else {
            panic!("x0 = 1, x1 = 1 and x0 + x1 = 1 is inconsistent");
        };
        for c in 0..2 {
            let col: Vec<Rational> = a.iter().map(|r| r[c].clone()).collect();
            assert!(dot(&combination, &col).is_zero());
        }
        assert!(!dot(&combination, &b).is_zero());
    }

    #[test]
    fn square_solve() {
        let a = mat(&[&[2, 1], &[1, 3]]);
        let x = solve_square(&a, &[int(1), int(2)]).unwrap();
        assert_eq!(x, vec![frac(1, 5), frac(3, 5)]);
        assert!(solve_square(&mat(&[&[1, 2], &[2, 4]]), &[int(1), int(2)]).is_none());
    }
}
