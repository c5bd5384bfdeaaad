//! Smith normal form over the Euclidean domain ℚ[s].

use num_traits::{One, Zero};

use super::matrix::laurent_to_poly;
use super::{LaurentPoly, Matrix, Poly};

fn degree_key(p: &Poly) -> usize {
    p.degree().unwrap_or(usize::MAX)
}

/// Position of a nonzero entry of least degree in the lower-right block.
fn min_degree_entry(a: &Matrix<Poly>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for r in t..a.rows() {
        for c in t..a.cols() {
            let d = degree_key(&a[(r, c)]);
            if d != usize::MAX && best.is_none_or(|(bd, _, _)| d < bd) {
                best = Some((d, r, c));
                if d == 0 {
                    return Some((r, c));
                }
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

fn row_axpy(a: &mut Matrix<Poly>, target: usize, source: usize, factor: &Poly, from: usize) {
    for c in from..a.cols() {
        if a[(source, c)].is_zero() {
            continue;
        }
        let v = &a[(target, c)] - &(factor * &a[(source, c)]);
        a[(target, c)] = v;
    }
}

fn col_axpy(a: &mut Matrix<Poly>, target: usize, source: usize, factor: &Poly, from: usize) {
    for r in from..a.rows() {
        if a[(r, source)].is_zero() {
            continue;
        }
        let v = &a[(r, target)] - &(factor * &a[(r, source)]);
        a[(r, target)] = v;
    }
}

/// Elementary divisors `d_1 | d_2 | … | d_r` (monic, nonzero) of a matrix over ℚ[s].
///
/// `r` is the rank over ℚ(s); the matrix is equivalent to `diag(d_1, …, d_r, 0, …)`.
pub fn smith_normal_form(m: &Matrix<Poly>) -> Vec<Poly> {
    let mut a = m.clone();
    let mut t = 0;
    while t < a.rows().min(a.cols()) {
        let Some((pr, pc)) = min_degree_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            let pivot = a[(t, t)].clone();
            let mut residue = false;
            for r in t + 1..a.rows() {
                if a[(r, t)].is_zero() {
                    continue;
                }
                let (q, rem) = a[(r, t)].div_rem(&pivot);
                row_axpy(&mut a, r, t, &q, t);
                residue |= !rem.is_zero();
            }
            for c in t + 1..a.cols() {
                if a[(t, c)].is_zero() {
                    continue;
                }
                let (q, rem) = a[(t, c)].div_rem(&pivot);
                col_axpy(&mut a, c, t, &q, t);
                residue |= !rem.is_zero();
            }
            if residue {
                // A remainder of smaller degree than the pivot survived in row or
                // column t; promote the smallest one and repeat.
                let mut best = (degree_key(&a[(t, t)]), t, t);
                for r in t + 1..a.rows() {
                    let d = degree_key(&a[(r, t)]);
                    if d < best.0 {
                        best = (d, r, t);
                    }
                }
                for c in t + 1..a.cols() {
                    let d = degree_key(&a[(t, c)]);
                    if d < best.0 {
                        best = (d, t, c);
                    }
                }
                a.swap_rows(t, best.1);
                a.swap_cols(t, best.2);
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let offender = (t + 1..a.rows())
                .find(|&r| (t + 1..a.cols()).any(|c| !pivot.divides(&a[(r, c)])));
            match offender {
                Some(r) => row_axpy(&mut a, t, r, &-Poly::one(), t),
                None => break,
            }
        }
        let monic = a[(t, t)].monic();
        a[(t, t)] = monic;
        t += 1;
    }
    (0..a.rows().min(a.cols()))
        .map(|i| a[(i, i)].clone())
        .take_while(|d| !d.is_zero())
        .collect()
}

/// Elementary divisors over ℚ[s, s⁻¹]: the ℚ[s] divisors with every factor
/// of `s` removed (powers of `s` are units). The divisibility chain survives.
pub fn laurent_elementary_divisors(m: &Matrix<LaurentPoly>) -> Vec<Poly> {
    smith_normal_form(&laurent_to_poly(m))
        .into_iter()
        .map(|d| d.strip_s().monic())
        .collect()
}
