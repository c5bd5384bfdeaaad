use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Field, LaurentPoly, Poly, RatFunc, Rational};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let a = &self[(r, k)];
                let b = &other[(k, c)];
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a.clone() * b.clone();
                }
            }
            acc
        })
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.data[r * self.cols + c].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Integral domain with exact division, as needed by Bareiss elimination.
trait ExactDomain: Clone + Zero + PartialEq {
    fn mul_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn exact_quotient(&self, d: &Self) -> Self;
}

impl ExactDomain for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn exact_quotient(&self, d: &Self) -> Self {
        debug_assert!((self % d).is_zero());
        self / d
    }
}

impl ExactDomain for Poly {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn exact_quotient(&self, d: &Self) -> Self {
        self.exact_div(d).expect("Bareiss division is exact")
    }
}

/// Rank by fraction-free (Bareiss) elimination; consumes its working copy.
fn bareiss_rank<T: ExactDomain>(mut m: Matrix<T>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    let mut prev = None::<T>;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[(r, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(rank, p);
        let pivot = m[(rank, c)].clone();
        for r in rank + 1..rows {
            let lead = m[(r, c)].clone();
            for k in c + 1..cols {
                let v = m[(r, k)].mul_ref(&pivot).sub_ref(&lead.mul_ref(&m[(rank, k)]));
                m[(r, k)] = match &prev {
                    Some(d) => v.exact_quotient(d),
                    None => v,
                };
            }
            m[(r, c)] = T::zero();
        }
        prev = Some(pivot);
        rank += 1;
    }
    rank
}

/// Rank over the fraction field of the entry ring.
pub trait RankOverField {
    fn rank(&self) -> usize;
}

impl RankOverField for Matrix<Rational> {
    fn rank(&self) -> usize {
        // Clear denominators row by row; rank is unchanged.
        let rows: Vec<Vec<BigInt>> = (0..self.rows())
            .map(|r| {
                let lcm = self.row(r).iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                self.row(r).iter().map(|q| (q * Rational::from_integer(lcm.clone())).to_integer()).collect()
            })
            .collect();
        if self.cols() == 0 {
            return 0;
        }
        bareiss_rank(Matrix::from_rows(rows))
    }
}

impl RankOverField for Matrix<Poly> {
    fn rank(&self) -> usize {
        if self.cols() == 0 || self.rows() == 0 {
            return 0;
        }
        bareiss_rank(self.clone())
    }
}

impl RankOverField for Matrix<RatFunc> {
    fn rank(&self) -> usize {
        if self.cols() == 0 || self.rows() == 0 {
            return 0;
        }
        let rows: Vec<Vec<Poly>> = (0..self.rows())
            .map(|r| {
                let den = self.row(r).iter().fold(Poly::one(), |acc, f| {
                    let g = acc.gcd(f.den());
                    (&acc * f.den()).exact_div(&g).expect("gcd divides")
                });
                self.row(r)
                    .iter()
                    .map(|f| (f.num() * &den).exact_div(f.den()).expect("lcm"))
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows).rank()
    }
}

impl RankOverField for Matrix<LaurentPoly> {
    fn rank(&self) -> usize {
        laurent_to_poly(self).rank()
    }
}

/// Multiplies each column by the power of `s` that clears negative exponents.
/// Column scaling by units of ℚ[s, s⁻¹] preserves rank and elementary divisors.
pub(crate) fn laurent_to_poly(m: &Matrix<LaurentPoly>) -> Matrix<Poly> {
    let shifts: Vec<i64> = (0..m.cols())
        .map(|c| {
            (0..m.rows())
                .filter_map(|r| m[(r, c)].min_exponent())
                .min()
                .map_or(0, |e| -e)
        })
        .collect();
    Matrix::from_fn(m.rows(), m.cols(), |r, c| m[(r, c)].times_s_pow_to_poly(shifts[c]))
}

impl<F: Field> Matrix<F> {
    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..m.cols() {
            if row == m.rows() {
                break;
            }
            let Some(p) = (row..m.rows()).find(|&r| !m[(r, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = F::one() / m[(row, c)].clone();
            for k in c..m.cols() {
                let v = m[(row, k)].clone() * inv.clone();
                m[(row, k)] = v;
            }
            for r in 0..m.rows() {
                if r == row || m[(r, c)].is_zero() {
                    continue;
                }
                let f = m[(r, c)].clone();
                for k in c..m.cols() {
                    if m[(row, k)].is_zero() {
                        continue;
                    }
                    let v = m[(r, k)].clone() - f.clone() * m[(row, k)].clone();
                    m[(r, k)] = v;
                }
            }
            pivots.push(c);
            row += 1;
        }
        (m, pivots)
    }

    /// Solves `self · X = rhs` for square invertible `self`.
    pub fn solve(&self, rhs: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(self.rows(), self.cols(), "solve expects a square system");
        assert_eq!(self.rows(), rhs.rows(), "right-hand side height mismatch");
        let n = self.rows();
        let aug = Matrix::from_fn(n, n + rhs.cols(), |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else {
                rhs[(r, c - n)].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, rhs.cols(), |r, c| red[(r, n + c)].clone()))
    }

    /// Basis of the column space of `self`, as a subset of its columns.
    pub fn column_basis(&self) -> Vec<usize> {
        self.rref().1
    }
}

/// Trace of the linear map `g` restricted to the column space of `a`.
///
/// The column space must be `g`-stable; `g` is square of size `a.rows()`.
pub fn trace_on_column_space<F: Field>(a: &Matrix<F>, g: &Matrix<F>) -> F {
    let cols = a.column_basis();
    if cols.is_empty() {
        return F::zero();
    }
    let all_rows: Vec<usize> = (0..a.rows()).collect();
    let basis = a.select(&all_rows, &cols);
    // Rows on which the basis is invertible.
    let rows = basis.transpose().column_basis();
    let image = g.mul_mat(&basis);
    let local: Vec<usize> = (0..cols.len()).collect();
    let x = basis
        .select(&rows, &local)
        .solve(&image.select(&rows, &local))
        .expect("selected rows form an invertible block");
    (0..cols.len()).fold(F::zero(), |acc, i| acc + x[(i, i)].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(Matrix::<Rational>::identity(2).rank(), 2);
        assert_eq!(Matrix::<Rational>::zeros(3, 3).rank(), 0);
        assert_eq!(Matrix::<Rational>::zeros(0, 4).rank(), 0);
        assert_eq!(Matrix::<Rational>::zeros(4, 0).rank(), 0);
    }

    #[test]
    fn rank_over_rational_functions() {
        let s = Poly::s();
        let m = Matrix::from_rows(vec![
            vec![RatFunc::from_poly(s.clone()), RatFunc::one()],
            vec![RatFunc::from_poly(s.pow(2)), RatFunc::from_poly(s.clone())],
        ]);
        assert_eq!(m.rank(), 1);
        let m = Matrix::from_rows(vec![
            vec![RatFunc::new(Poly::one(), s.clone()), RatFunc::one()],
            vec![RatFunc::one(), RatFunc::from_poly(s.clone())],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_with_fractions() {
        let m = Matrix::from_rows(vec![vec![ratio(1, 2), ratio(1, 3)], vec![rat(3), rat(2)]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(q(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).rank(), 3);
    }

    #[test]
    fn solve_and_trace() {
        let a = q(&[&[2, 1], &[1, 1]]);
        let b = q(&[&[3], &[2]]);
        assert_eq!(a.solve(&b).unwrap(), q(&[&[1], &[1]]));
        // swap on Q^2 restricted to the line spanned by (1, 1) has trace 1,
        // on the line spanned by (1, -1) trace -1
        let swap = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(trace_on_column_space(&q(&[&[1, 2], &[1, 2]]), &swap), rat(1));
        assert_eq!(trace_on_column_space(&q(&[&[1], &[-1]]), &swap), rat(-1));
        assert_eq!(trace_on_column_space(&Matrix::identity(2), &swap), rat(0));
    }
}
