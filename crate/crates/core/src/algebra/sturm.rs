//! Real-root counting with Sturm sequences.

use num_traits::{One, Signed, Zero};

use super::{rat, ratio, Poly, Rational};
use crate::error::{Error, Result};

/// Positive real roots of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCount {
    /// Roots in `(0, ∞)` counted with multiplicity.
    pub with_multiplicity: usize,
    /// One closed interval `[lo, hi]` per distinct root; `lo == hi` when the
    /// root is rational and was hit exactly.
    pub intervals: Vec<(Rational, Rational)>,
}

fn normalize_positive(p: Poly) -> Poly {
    match p.leading() {
        Some(lc) => p.scale(&lc.abs().recip()),
        None => p,
    }
}

struct Sturm {
    chain: Vec<Poly>,
}

impl Sturm {
    /// `p` must be square-free and nonzero.
    fn new(p: &Poly) -> Self {
        let mut chain = vec![normalize_positive(p.clone())];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(normalize_positive(d));
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(normalize_positive(-r));
        }
        Sturm { chain }
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|p| sign(&p.eval(x))))
    }

    fn at_pos_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.leading().map_or(0, sign)))
    }

    fn at_neg_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let s = p.leading().map_or(0, sign);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct roots in `(lo, hi]`.
    fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.at(lo).saturating_sub(self.at(hi))
    }
}

fn sign(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Cauchy bound: every root has absolute value below it.
fn root_bound(p: &Poly) -> Rational {
    let lc = p.leading().expect("nonzero").abs();
    let max = p.coeffs().iter().map(|c| c.abs() / &lc).fold(Rational::zero(), |a, b| if b > a { b } else { a });
    max + Rational::one()
}

fn isolate(p: &Poly, sturm: &Sturm, lo: Rational, hi: Rational, out: &mut Vec<(Rational, Rational)>) {
    let n = sturm.count(&lo, &hi);
    if n == 0 {
        return;
    }
    let width_ok = &hi - &lo <= ratio(1, 16);
    if n == 1 && width_ok {
        if p.eval(&hi).is_zero() {
            out.push((hi.clone(), hi));
        } else {
            out.push((lo, hi));
        }
        return;
    }
    let mid = (&lo + &hi) / rat(2);
    isolate(p, sturm, lo, mid.clone(), out);
    isolate(p, sturm, mid, hi, out);
}

/// Distinct real roots of the nonzero polynomial `p` in `(lo, hi]`.
pub fn count_real_roots_in(p: &Poly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    Ok(Sturm::new(&p.square_free_part()).count(lo, hi))
}

/// Total number of distinct real roots.
pub(crate) fn count_distinct_real_roots(p: &Poly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let sturm = Sturm::new(&p.square_free_part());
    sturm.at_neg_infinity().saturating_sub(sturm.at_pos_infinity())
}

fn distinct_positive(p: &Poly) -> Vec<(Rational, Rational)> {
    let q = p.square_free_part().strip_s();
    let mut out = Vec::new();
    if q.degree().unwrap_or(0) == 0 {
        return out;
    }
    let sturm = Sturm::new(&q);
    isolate(&q, &sturm, Rational::zero(), root_bound(&q), &mut out);
    out
}

/// Number of roots in `(0, ∞)` with multiplicity, plus isolating intervals
/// for the distinct ones in increasing order.
pub fn count_positive_real_roots(p: &Poly) -> Result<RootCount> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let with_multiplicity = p
        .square_free_decomposition()
        .iter()
        .map(|(k, f)| *k as usize * distinct_positive(f).len())
        .sum();
    Ok(RootCount { with_multiplicity, intervals: distinct_positive(p) })
}

/// Shrinks an isolating interval `[lo, hi]` of a single root of `p` (with
/// `lo` not a root unless `lo == hi`) until it is at most `width` wide.
pub fn refine_root(p: &Poly, lo: &Rational, hi: &Rational, width: &Rational) -> (Rational, Rational) {
    if lo == hi || p.eval(hi).is_zero() {
        return (hi.clone(), hi.clone());
    }
    let q = p.square_free_part();
    let sturm = Sturm::new(&q);
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / rat(2);
        if q.eval(&mid).is_zero() {
            return (mid.clone(), mid);
        }
        if sturm.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_roots() {
        let c = count_positive_real_roots(&Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(c.with_multiplicity, 1);
        assert_eq!(c.intervals, vec![(rat(1), rat(1))]);
        let c = count_positive_real_roots(&Poly::from_ints(&[1, 1])).unwrap();
        assert_eq!(c.with_multiplicity, 0);
        assert!(c.intervals.is_empty());
    }

    #[test]
    fn quadratic_with_two_positive_roots() {
        let c = count_positive_real_roots(&Poly::from_ints(&[2, -3, 1])).unwrap();
        assert_eq!(c.with_multiplicity, 2);
        assert_eq!(c.intervals.len(), 2);
        for ((lo, hi), root) in c.intervals.iter().zip([1, 2]) {
            assert!(lo <= &rat(root) && &rat(root) <= hi);
        }
    }

    #[test]
    fn irrational_roots_are_bracketed() {
        // s^2 - 2
        let p = Poly::from_ints(&[-2, 0, 1]);
        let c = count_positive_real_roots(&p).unwrap();
        assert_eq!(c.with_multiplicity, 1);
        let (lo, hi) = &c.intervals[0];
        assert!(p.eval(lo) * p.eval(hi) < Rational::zero());
        assert!(hi - lo <= ratio(1, 16));
    }

    #[test]
    fn multiplicities_and_zero_root() {
        // s (s - 1)^3 (s + 2)
        let p = &(&Poly::s() * &Poly::from_ints(&[-1, 1]).pow(3)) * &Poly::from_ints(&[2, 1]);
        let c = count_positive_real_roots(&p).unwrap();
        assert_eq!(c.with_multiplicity, 3);
        assert_eq!(c.intervals.len(), 1);
        assert_eq!(count_distinct_real_roots(&p), 3);
    }

    #[test]
    fn rejects_zero_polynomial() {
        assert_eq!(count_positive_real_roots(&Poly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(count_real_roots_in(&Poly::from_ints(&[-4, 0, 1]), &rat(-3), &rat(0)), Ok(1));
    }

    #[test]
    fn refines_sqrt_two() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let (lo, hi) = count_positive_real_roots(&p).unwrap().intervals[0].clone();
        let (lo, hi) = refine_root(&p, &lo, &hi, &ratio(1, 1_000_000));
        assert!(&hi - &lo <= ratio(1, 1_000_000));
        assert!(&lo * &lo < rat(2) && &hi * &hi > rat(2));
    }
}
