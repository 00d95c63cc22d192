//! Double description over the homogenized cone of a parametrized polytope.
//!
//! A polytope `{ x0 + N·t : x0 + N·t ≥ 0 }` becomes the cone
//! `{ (t, λ) : λ·x0 + N·t ≥ 0, λ ≥ 0 }`; its extreme rays with `λ > 0` are
//! the vertices. Rays are kept as primitive integer vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bitset::BitSet;
use crate::linalg::rank;
use crate::rational::Rational;

struct Ray {
    coords: Vec<BigInt>,
    zeros: BitSet,
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

/// Clears denominators of a rational row and makes it primitive.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    primitive(row.iter().map(|x| x.numer() * (&l / x.denom())).collect())
}

fn eval(row: &[BigInt], ray: &[BigInt]) -> BigInt {
    row.iter()
        .zip(ray)
        .filter(|(a, _)| !a.is_zero())
        .map(|(a, r)| a * r)
        .sum()
}

/// Vertices of `{ base + Σ tᵢ·directions[i] ≥ 0 }`, which must be nonempty
/// with linearly independent directions. Unbounded regions contribute only
/// their vertices. Output is sorted lexicographically and duplicate-free.
pub fn polytope_vertices(base: &[Rational], directions: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let dim = directions.len();
    if dim == 0 {
        return vec![base.to_vec()];
    }
    // Row layout: (coefficients on t, coefficient on λ).
    let mut rows: Vec<Vec<BigInt>> = vec![{
        let mut r = vec![BigInt::zero(); dim + 1];
        r[dim] = BigInt::one();
        r
    }];
    for (i, x0) in base.iter().enumerate() {
        let mut r: Vec<Rational> = directions.iter().map(|n| n[i].clone()).collect();
        r.push(x0.clone());
        if r[..dim].iter().all(Zero::is_zero) {
            continue;
        }
        let r = integer_row(&r);
        if !rows.contains(&r) {
            rows.push(r);
        }
    }

    // Initial simplex cone from dim + 1 independent rows.
    let mut chosen: Vec<usize> = Vec::new();
    let mut chosen_rows: Vec<Vec<Rational>> = Vec::new();
    for (k, r) in rows.iter().enumerate() {
        let mut trial = chosen_rows.clone();
        trial.push(
            r.iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect(),
        );
        if rank(&trial) == trial.len() {
            chosen.push(k);
            chosen_rows = trial;
            if chosen.len() == dim + 1 {
                break;
            }
        }
    }
    assert_eq!(chosen.len(), dim + 1, "directions are linearly independent");
    let mut rays: Vec<Ray> = (0..=dim)
        .map(|j| {
            let mut rhs = vec![Rational::zero(); dim + 1];
            rhs[j] = Rational::one();
            let sol = crate::linalg::solve_square(&chosen_rows, &rhs).expect("independent rows");
            let zeros = BitSet::from_indices(
                rows.len(),
                chosen
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, &k)| k),
            );
            Ray {
                coords: integer_row(&sol),
                zeros,
            }
        })
        .collect();

    for k in 0..rows.len() {
        if chosen.contains(&k) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| eval(&rows[k], &r.coords)).collect();
        let pos: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_positive())
            .collect();
        let neg: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_negative())
            .collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.zeros.insert(k);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.intersection(&rays[n].zeros);
                if common.count() + 1 < dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == n || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let vp = &values[p];
                let vn = -&values[n];
                let coords = rays[p]
                    .coords
                    .iter()
                    .zip(&rays[n].coords)
                    .map(|(a, b)| &vn * a + vp * b)
                    .collect();
                let mut zeros = common;
                zeros.insert(k);
                next.push(Ray {
                    coords: primitive(coords),
                    zeros,
                });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + next.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                r.zeros.insert(k);
            }
            kept.push(r);
        }
        kept.extend(next);
        rays = kept;
    }

    let mut out: Vec<Vec<Rational>> = rays
        .into_iter()
        .filter(|r| r.coords[dim].is_positive())
        .map(|r| {
            let lambda = &r.coords[dim];
            let t: Vec<Rational> = r.coords[..dim]
                .iter()
                .map(|c| Rational::new(c.clone(), lambda.clone()))
                .collect();
            base.iter()
                .enumerate()
                .map(|(i, x0)| {
                    directions
                        .iter()
                        .zip(&t)
                        .fold(x0.clone(), |acc, (n, ti)| acc + &n[i] * ti)
                })
                .collect()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn triangle() {
        // x = (t1, t2, 1 - t1 - t2) ≥ 0
        let base = vec![int(0), int(0), int(1)];
        let dirs = vec![vec![int(1), int(0), int(-1)], vec![int(0), int(1), int(-1)]];
        let v = polytope_vertices(&base, &dirs);
        assert_eq!(
            v,
            vec![
                vec![int(0), int(0), int(1)],
                vec![int(0), int(1), int(0)],
                vec![int(1), int(0), int(0)],
            ]
        );
    }

    #[test]
    fn square_with_infeasible_base() {
        // 0 ≤ t1 ≤ 1, 0 ≤ t2 ≤ 1, base point outside.
        let base = vec![int(-5), int(6), int(3), int(-2)];
        let dirs = vec![
            vec![int(1), int(-1), int(0), int(0)],
            vec![int(0), int(0), int(-1), int(1)],
        ];
        let v = polytope_vertices(&base, &dirs);
        assert_eq!(v.len(), 4);
        assert!(v.iter().all(|x| x.iter().all(|c| !c.is_negative())));
    }

    #[test]
    fn point() {
        let base = vec![frac(1, 3); 3];
        assert_eq!(polytope_vertices(&base, &[]), vec![base]);
    }
}
