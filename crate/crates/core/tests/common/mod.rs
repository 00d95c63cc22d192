//! Independent reference implementations used to cross-check the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

use greechie::rational::Rational;
use greechie::GreechieDiagram;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Two-valued states by filtering all `2^m` subsets of atoms.
pub fn two_valued_by_filter(d: &GreechieDiagram) -> Vec<Vec<usize>> {
    let m = d.atom_count();
    assert!(m <= 20, "filter oracle is limited to 20 atoms");
    let masks: Vec<u32> = d
        .blocks()
        .iter()
        .map(|b| b.iter().fold(0, |acc, &a| acc | 1 << a))
        .collect();
    let mut out: Vec<Vec<usize>> = (0u32..1 << m)
        .filter(|s| masks.iter().all(|b| (s & b).count_ones() == 1))
        .map(|s| (0..m).filter(|a| s >> a & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Plain Gauss-Jordan over the rationals: returns (particular, kernel basis) of `A x = b`.
fn affine_solutions(
    a: &[Vec<Rational>],
    b: &[Rational],
) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            r.iter()
                .cloned()
                .chain(std::iter::once(v.clone()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][c].recip();
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=cols {
                    let delta = &f * &m[row][j];
                    m[i][j] = &m[i][j] - delta;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x0 = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x0[c] = m[r][cols].clone();
    }
    let kernel = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][f].clone();
            }
            v
        })
        .collect();
    Some((x0, kernel))
}

fn lcm_of_denominators<'a>(v: impl Iterator<Item = &'a Rational>) -> BigInt {
    v.fold(BigInt::one(), |l, x| {
        num_integer::Integer::lcm(&l, x.denom())
    })
}

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("small integer data")
}

/// Solves the square integer system `M t = r` by Bareiss elimination; `None` if singular.
/// Returns `(numerators, det)` with `t = numerators / det`.
fn bareiss_solve(mut m: Vec<Vec<i128>>, mut r: Vec<i128>) -> Option<(Vec<i128>, i128)> {
    let n = m.len();
    let mut prev = 1i128;
    for k in 0..n {
        let p = (k..n).find(|&i| m[i][k] != 0)?;
        m.swap(k, p);
        r.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            r[i] = (r[i] * m[k][k] - m[i][k] * r[k]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    let det = m[n - 1][n - 1];
    // Back substitution on det-scaled unknowns: t_i = num_i / det.
    let mut num = vec![0i128; n];
    for i in (0..n).rev() {
        let mut acc = r[i] * det;
        for j in i + 1..n {
            acc -= m[i][j] * num[j];
        }
        num[i] = acc / m[i][i];
    }
    Some((num, det))
}

/// Vertices of the state polytope by solving every `d`-subset of
/// nonnegativity constraints as equalities in the parametrization of the
/// block equations (`d` = dimension of their solution space).
pub fn vertices_by_subsets(d: &GreechieDiagram) -> BTreeSet<Vec<Rational>> {
    let m = d.atom_count();
    let a: Vec<Vec<Rational>> = d
        .blocks()
        .iter()
        .map(|b| {
            (0..m)
                .map(|i| {
                    if b.contains(&i) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let Some((x0, kernel)) = affine_solutions(&a, &vec![Rational::one(); a.len()]) else {
        return BTreeSet::new();
    };
    let dim = kernel.len();
    let mut out = BTreeSet::new();
    if dim == 0 {
        if x0.iter().all(|v| !v.is_negative()) {
            out.insert(x0);
        }
        return out;
    }
    // x = (X0 + Σ K_j u_j) / D with integer X0, K and D.
    let den = lcm_of_denominators(x0.iter().chain(kernel.iter().flatten()));
    let big = |x: &Rational| to_i64(&(x.numer() * (&den / x.denom()))) as i128;
    let x0i: Vec<i128> = x0.iter().map(big).collect();
    let ki: Vec<Vec<i128>> = kernel.iter().map(|k| k.iter().map(big).collect()).collect();
    let den = to_i64(&den) as i128;

    let mut subset: Vec<usize> = (0..dim).collect();
    loop {
        let mat: Vec<Vec<i128>> = subset
            .iter()
            .map(|&i| (0..dim).map(|j| ki[j][i]).collect())
            .collect();
        let rhs: Vec<i128> = subset.iter().map(|&i| -x0i[i]).collect();
        if let Some((num, det)) = bareiss_solve(mat, rhs) {
            // det·D·x_i = det·X0_i + Σ K_ji num_j
            let scaled: Vec<i128> = (0..m)
                .map(|i| det * x0i[i] + (0..dim).map(|j| ki[j][i] * num[j]).sum::<i128>())
                .collect();
            if scaled.iter().all(|v| v.signum() * det.signum() >= 0) {
                let q = BigInt::from(det * den);
                out.insert(
                    scaled
                        .iter()
                        .map(|v| Rational::new(BigInt::from(*v), q.clone()))
                        .collect(),
                );
            }
        }
        // Next subset in lexicographic order.
        let Some(i) = (0..dim).rev().find(|&i| subset[i] < m - dim + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..dim {
            subset[j] = subset[j - 1] + 1;
        }
    }
    out
}

/// Every loop of order `3..=max_order`, by trying all sequences of distinct blocks.
/// Each loop is returned once, rotated to start at its smallest block and
/// oriented so that the second block is smaller than the last.
pub fn loops_by_dfs(d: &GreechieDiagram, max_order: usize) -> BTreeSet<Vec<usize>> {
    let nb = d.block_count();
    assert!(nb <= 8, "naive loop oracle is limited to 8 blocks");
    let meet = |x: usize, y: usize| -> Vec<usize> {
        d.blocks()[x]
            .iter()
            .filter(|a| d.blocks()[y].contains(a))
            .copied()
            .collect()
    };
    let mut out = BTreeSet::new();
    let mut seq = Vec::new();
    fn extend(
        seq: &mut Vec<usize>,
        nb: usize,
        max_order: usize,
        meet: &dyn Fn(usize, usize) -> Vec<usize>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        let n = seq.len();
        if n >= 3 {
            let mut ok = true;
            let mut joints = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let common = meet(seq[i], seq[j]);
                    let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                    if adjacent {
                        ok &= common.len() == 1;
                        joints.extend(common);
                    } else {
                        ok &= common.is_empty();
                    }
                }
            }
            let mut js = joints.clone();
            js.sort_unstable();
            js.dedup();
            if ok && js.len() == n && seq[0] == *seq.iter().min().unwrap() && seq[1] < seq[n - 1] {
                out.insert(seq.clone());
            }
        }
        if n == max_order {
            return;
        }
        for b in 0..nb {
            if !seq.contains(&b) {
                seq.push(b);
                extend(seq, nb, max_order, meet, out);
                seq.pop();
            }
        }
    }
    extend(&mut seq, nb, max_order, &meet, &mut out);
    out
}

/// Supports of the two-valued states of the 3×3×3 grid: graphs `z = L(x, y)`
/// of the 12 Latin squares of order 3, as sorted `x.y.z` labels.
pub fn latin_square_supports() -> BTreeSet<Vec<String>> {
    let mut out = BTreeSet::new();
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for r0 in &perms {
        for r1 in &perms {
            for r2 in &perms {
                let rows = [r0, r1, r2];
                let latin = (0..3).all(|y| {
                    let mut col: Vec<usize> = (0..3).map(|x| rows[x][y]).collect();
                    col.sort_unstable();
                    col == [0, 1, 2]
                });
                if latin {
                    let mut s: Vec<String> = (0..3)
                        .flat_map(|x| (0..3).map(move |y| format!("{x}.{y}.{}", rows[x][y])))
                        .collect();
                    s.sort();
                    out.insert(s);
                }
            }
        }
    }
    out
}
