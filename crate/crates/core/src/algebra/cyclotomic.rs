use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use super::{rat, Poly, Rational};

/// The `n`-th cyclotomic polynomial Φ_n, computed as `(s^n - 1) / Π_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: u32) -> Poly {
    assert!(n > 0, "cyclotomic order must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, Poly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache poisoned").get(&n) {
        return p.clone();
    }
    let mut p = &Poly::monomial(rat(1), n as usize) - &Poly::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = p.exact_div(&cyclotomic_polynomial(d)).expect("cyclotomic factors divide s^n - 1");
    }
    cache.lock().expect("cache poisoned").insert(n, p.clone());
    p
}

/// Element of ℚ(ζ_n), in the power basis `1, ζ, …, ζ^{φ(n)-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    order: u32,
    coords: Vec<Rational>,
}

impl CyclotomicNumber {
    fn reduce(order: u32, p: Poly) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.degree().expect("nonzero");
        let r = p.rem(&phi);
        let coords = (0..deg).map(|k| r.coeff(k)).collect();
        CyclotomicNumber { order, coords }
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        Self::reduce(order, Poly::constant(q))
    }

    /// `ζ_n^k`, for any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        Self::reduce(order, Poly::monomial(Rational::one(), e))
    }

    pub fn zero(order: u32) -> Self {
        Self::from_rational(order, Rational::zero())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    fn as_poly(&self) -> Poly {
        Poly::new(self.coords.clone())
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "mixing cyclotomic fields of different order");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_order(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        CyclotomicNumber { order: self.order, coords }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber { order: self.order, coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_order(other);
        Self::reduce(self.order, &self.as_poly() * &other.as_poly())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CyclotomicNumber { order: self.order, coords: self.coords.iter().map(|c| c * q).collect() }
    }

    /// Complex conjugation, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut p = Poly::zero();
        for (k, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                p = &p + &Poly::monomial(c.clone(), (n - k) % n);
            }
        }
        Self::reduce(self.order, p)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, u, _) = self.as_poly().ext_gcd(&cyclotomic_polynomial(self.order));
        debug_assert!(g.is_one());
        Some(Self::reduce(self.order, u))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the number lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    /// Human-readable form in the power basis, e.g. `-1 - z`.
    pub fn display(&self) -> String {
        Poly::new(self.coords.clone()).display_in("z")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic<{}>({})", self.order, self.display())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), Poly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), Poly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), Poly::from_ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), Poly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), Poly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), Poly::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn roots_of_unity_multiply() {
        let z = CyclotomicNumber::zeta_pow(3, 1);
        let z2 = z.mul(&z);
        assert_eq!(z2, CyclotomicNumber::zeta_pow(3, 2));
        assert_eq!(z2.mul(&z).as_rational(), Some(rat(1)));
        // 1 + z + z^2 = 0
        let sum = CyclotomicNumber::from_rational(3, rat(1)).add(&z).add(&z2);
        assert!(sum.is_zero());
    }

    #[test]
    fn conjugation_and_inverse() {
        let z = CyclotomicNumber::zeta_pow(4, 1);
        assert_eq!(z.conj(), CyclotomicNumber::zeta_pow(4, 3));
        assert_eq!(z.mul(&z.conj()).as_rational(), Some(rat(1)));
        let a = CyclotomicNumber::from_rational(3, rat(2)).add(&CyclotomicNumber::zeta_pow(3, 1));
        let prod = a.mul(&a.inv().unwrap());
        assert_eq!(prod.as_rational(), Some(rat(1)));
        assert_eq!(CyclotomicNumber::zeta_pow(2, 1).as_rational(), Some(rat(-1)));
        assert_eq!(CyclotomicNumber::from_rational(5, ratio(1, 2)).scale(&rat(2)).as_rational(), Some(rat(1)));
    }
}
