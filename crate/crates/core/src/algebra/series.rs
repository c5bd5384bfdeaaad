use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{rat, Rational};

/// Polynomial in the formal variable `λ` with rational coefficients.
///
/// Houses Morse counting series, Novikov series, Poincaré polynomials and the
/// quotients of their differences by `1 + λ`. Integrality is checked where
/// needed, not enforced by the type.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct CountingSeries {
    coeffs: Vec<Rational>,
}

impl CountingSeries {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CountingSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        CountingSeries::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_counts(coeffs: &[usize]) -> Self {
        CountingSeries::new(coeffs.iter().map(|&c| rat(c as i64)).collect())
    }

    /// `c · λ^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        CountingSeries::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// All coefficients nonnegative.
    pub fn is_admissible(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        CountingSeries::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        CountingSeries::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CountingSeries::new(self.coeffs.iter().map(|c| c * q).collect())
    }

    /// Multiplication by `λ^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        CountingSeries { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return CountingSeries::default();
        }
        let mut coeffs = vec![Rational::zero(); self.len() + other.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CountingSeries::new(coeffs)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Writes `self = (1 + λ)·q + r` with a constant remainder `r = self(-1)`.
    pub fn divide_by_one_plus_lambda(&self) -> (CountingSeries, Rational) {
        if self.is_empty() {
            return (CountingSeries::default(), Rational::zero());
        }
        // Synthetic division by λ + 1, from the top coefficient down.
        let n = self.len();
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] - &carry;
            if k == 0 {
                return (CountingSeries::new(q), v);
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Human-readable form in `λ`, lowest degree first.
    pub fn display(&self) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ^{k}"),
            };
            if k == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for CountingSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl fmt::Debug for CountingSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({})", self.display())
    }
}

impl From<CountingSeries> for Vec<String> {
    fn from(s: CountingSeries) -> Self {
        s.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl TryFrom<Vec<String>> for CountingSeries {
    type Error = String;

    fn try_from(v: Vec<String>) -> Result<Self, Self::Error> {
        v.iter()
            .map(|c| super::parse_rational(c).ok_or_else(|| format!("bad coefficient {c:?}")))
            .collect::<Result<Vec<_>, _>>()
            .map(CountingSeries::new)
    }
}
