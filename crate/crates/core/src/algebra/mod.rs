//! Exact arithmetic: rationals, polynomials in `s`, Laurent polynomials,
//! rational functions, cyclotomic numbers, dense matrices, Smith normal form,
//! real-root counting and power series in `λ`.

mod cyclotomic;
mod laurent;
mod matrix;
mod poly;
mod ratfunc;
mod series;
mod snf;
mod sturm;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};
pub use laurent::LaurentPoly;
pub use matrix::{trace_on_column_space, Matrix, RankOverField};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use series::CountingSeries;
pub use snf::{laurent_elementary_divisors, smith_normal_form};
pub use sturm::{count_positive_real_roots, count_real_roots_in, refine_root, RootCount};
pub(crate) use sturm::count_distinct_real_roots;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// A commutative field with owned arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl Field for Rational {}
impl Field for RatFunc {}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-2/7"` or `"0.25"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let negative = whole.trim_start().starts_with('-');
        let w: BigInt = if whole.is_empty() || whole == "-" { BigInt::zero() } else { whole.parse().ok()? };
        let f: BigInt = frac.parse().ok()?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let magnitude = Rational::new(f, scale);
        let w = Rational::from_integer(w);
        return Some(if negative { w - magnitude } else { w + magnitude });
    }
    t.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// `q^e` for an integer exponent; `q` must be nonzero when `e < 0`.
pub fn rational_pow(q: &Rational, e: i64) -> Rational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// Returns the value as a nonnegative machine integer when it is one.
pub fn as_nonnegative_integer(q: &Rational) -> Option<u64> {
    use num_traits::ToPrimitive;
    if q.is_integer() && !q.is_negative_value() {
        q.to_integer().to_u64()
    } else {
        None
    }
}

trait SignExt {
    fn is_negative_value(&self) -> bool;
}

impl SignExt for Rational {
    fn is_negative_value(&self) -> bool {
        self < &Rational::zero()
    }
}
