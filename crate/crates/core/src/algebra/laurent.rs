use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rational_pow, Poly, RatFunc, Rational};

/// Element of ℚ[s, s⁻¹], stored as `s^shift · base` where `base` has a
/// nonzero constant term (or is zero, in which case `shift` is 0).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    base: Poly,
    shift: i64,
}

impl LaurentPoly {
    pub fn new(base: Poly, shift: i64) -> Self {
        if base.is_zero() {
            return LaurentPoly { base, shift: 0 };
        }
        let v = base.s_valuation();
        LaurentPoly { base: base.strip_s(), shift: shift + v as i64 }
    }

    /// `c · s^k`
    pub fn monomial(c: Rational, k: i64) -> Self {
        LaurentPoly::new(Poly::constant(c), k)
    }

    pub fn base(&self) -> &Poly {
        &self.base
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Lowest exponent present; `None` for zero.
    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.shift)
    }

    /// `s^k · self` as an ordinary polynomial; requires `k + shift >= 0`.
    pub fn times_s_pow_to_poly(&self, k: i64) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let e = self.shift + k;
        assert!(e >= 0, "negative exponent left after shift");
        self.base.shift_up(e as usize)
    }

    /// Evaluation at a nonzero rational.
    pub fn eval(&self, x: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        self.base.eval(x) * rational_pow(x, self.shift)
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        if self.shift >= 0 {
            RatFunc::from_poly(self.base.shift_up(self.shift as usize))
        } else {
            RatFunc::new(self.base.clone(), Poly::monomial(Rational::one(), (-self.shift) as usize))
        }
    }

    /// `p(s^k)` for positive `k`.
    pub fn compose_power(&self, k: usize) -> LaurentPoly {
        LaurentPoly::new(self.base.compose_power(k), self.shift * k as i64)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly { base: Poly::zero(), shift: 0 }
    }

    fn is_zero(&self) -> bool {
        self.base.is_zero()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly { base: Poly::one(), shift: 0 }
    }
}

impl From<Poly> for LaurentPoly {
    fn from(p: Poly) -> Self {
        LaurentPoly::new(p, 0)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shift {
            0 => write!(f, "{}", self.base),
            k if self.base.is_unit() && self.base.coeff(0).is_one() => write!(f, "s^{k}"),
            k => write!(f, "s^{k}*({})", self.base),
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

fn aligned(a: &LaurentPoly, b: &LaurentPoly) -> (Poly, Poly, i64) {
    let m = a.shift.min(b.shift);
    (a.base.shift_up((a.shift - m) as usize), b.base.shift_up((b.shift - m) as usize), m)
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, m) = aligned(self, rhs);
        LaurentPoly::new(&a + &b, m)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(&self.base * &rhs.base, self.shift + rhs.shift)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { base: -&self.base, shift: self.shift }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
