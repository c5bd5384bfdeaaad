//! The rank-one deformation of a complex by an integer cocycle.
//!
//! For a cocycle `θ` the twisted chain complex has entries in ℚ[s, s⁻¹]: the
//! incidence `[σ : τ]` is multiplied by `s^{θ(m_σ → m_τ)}·ε(m_σ → m_τ)`, where
//! `m_σ` is the least vertex of `σ`, the path runs inside `σ`, and `ε` is an
//! optional sign cocycle. Specializing `s = e^t` gives the complexes computing
//! `H^*(K, E_{tθ})` (tensored with the sign system); `s = 1` and trivial signs
//! recover the simplicial boundary.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{
    count_positive_real_roots, laurent_elementary_divisors, rat, LaurentPoly, Matrix, Poly, RankOverField, Rational,
};
use crate::complex::{relative_cells, IntegerCocycle, SignCocycle, SimplicialComplex, Subcomplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Entry {
    row: usize,
    col: usize,
    coeff: i8,
    exponent: i64,
}

/// Twisted chain complex over ℚ[s, s⁻¹] of `(K, A)` with coefficients `E_θ ⊗ ε`.
#[derive(Clone, Debug)]
pub struct TwistedComplex {
    complex: SimplicialComplex,
    twist: IntegerCocycle,
    sign: Option<SignCocycle>,
    cells: Vec<Vec<usize>>,
    entries: Vec<Vec<Entry>>,
}

/// Twisted complex of `K` with the local system defined by `θ` (and `ε`).
pub fn build_twisted(k: &SimplicialComplex, theta: &IntegerCocycle, sign: Option<&SignCocycle>) -> Result<TwistedComplex> {
    build_relative_twisted(k, &Subcomplex::empty(k), theta, sign)
}

/// Twisted quotient complex `C(K)/C(A)`.
pub fn build_relative_twisted(
    k: &SimplicialComplex,
    a: &Subcomplex,
    theta: &IntegerCocycle,
    sign: Option<&SignCocycle>,
) -> Result<TwistedComplex> {
    a.validate(k)?;
    if theta.values().len() != k.count(1) {
        return Err(Error::InvalidComplex("cocycle does not match the complex".into()));
    }
    theta.ensure_cocycle(k)?;
    if let Some(eps) = sign {
        if eps.values().len() != k.count(1) {
            return Err(Error::InvalidComplex("sign cocycle does not match the complex".into()));
        }
        eps.ensure_cocycle(k)?;
    }
    let cells = relative_cells(k, a);
    let mut entries = vec![Vec::new(); cells.len()];
    for d in 1..cells.len() {
        let pos: HashMap<usize, usize> = cells[d - 1].iter().enumerate().map(|(i, &c)| (c, i)).collect();
        for (col, &c) in cells[d].iter().enumerate() {
            let from = k.simplex(d, c)[0];
            for (f, incidence) in k.faces(d, c) {
                let Some(&row) = pos.get(&f) else { continue };
                let to = k.simplex(d - 1, f)[0];
                let eps = sign.map_or(1, |e| e.value(k, from, to));
                entries[d].push(Entry { row, col, coeff: incidence * eps, exponent: theta.value(k, from, to) });
            }
        }
    }
    Ok(TwistedComplex { complex: k.clone(), twist: theta.clone(), sign: sign.cloned(), cells, entries })
}

impl TwistedComplex {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn twist(&self) -> &IntegerCocycle {
        &self.twist
    }

    pub fn sign(&self) -> Option<&SignCocycle> {
        self.sign.as_ref()
    }

    /// Number of degrees, `dim K + 1`.
    pub fn degrees(&self) -> usize {
        self.cells.len()
    }

    /// Rank of the free module in degree `i`.
    pub fn rank_of_chains(&self, i: usize) -> usize {
        self.cells.get(i).map_or(0, Vec::len)
    }

    /// Simplex indices (of the parent complex) forming the basis in degree `i`.
    pub fn cells(&self, i: usize) -> &[usize] {
        self.cells.get(i).map_or(&[], Vec::as_slice)
    }

    /// `∂_k` over ℚ[s, s⁻¹]; `k` outside `1..degrees()` yields an empty map.
    pub fn differential(&self, k: usize) -> Matrix<LaurentPoly> {
        let (rows, cols) = self.shape(k);
        let mut m = Matrix::zeros(rows, cols);
        if let Some(list) = self.entries.get(k) {
            for e in list {
                let v = &m[(e.row, e.col)] + &LaurentPoly::monomial(rat(e.coeff as i64), e.exponent);
                m[(e.row, e.col)] = v;
            }
        }
        m
    }

    /// `∂_k` with `s ↦ s₀`.
    pub fn specialized_differential(&self, k: usize, s0: &Rational) -> Matrix<Rational> {
        let (rows, cols) = self.shape(k);
        let mut m = Matrix::zeros(rows, cols);
        if let Some(list) = self.entries.get(k) {
            for e in list {
                let v = &m[(e.row, e.col)] + &(rat(e.coeff as i64) * crate::algebra::rational_pow(s0, e.exponent));
                m[(e.row, e.col)] = v;
            }
        }
        m
    }

    fn shape(&self, k: usize) -> (usize, usize) {
        if k == 0 || k >= self.cells.len() {
            return (self.rank_of_chains(k.wrapping_sub(1)), self.rank_of_chains(k));
        }
        (self.cells[k - 1].len(), self.cells[k].len())
    }

    /// Whether `∂_{k} ∘ ∂_{k+1} = 0` for all `k` over ℚ[s, s⁻¹].
    pub fn is_chain_complex(&self) -> bool {
        (1..self.degrees().saturating_sub(1))
            .all(|k| self.differential(k).mul_mat(&self.differential(k + 1)).is_zero_matrix())
    }

    fn dims_from_ranks(&self, ranks: &[usize]) -> Vec<usize> {
        (0..self.degrees())
            .map(|i| self.rank_of_chains(i) - ranks[i] - ranks[i + 1])
            .collect()
    }

    /// Ranks of `∂_0, …, ∂_{n}` over ℚ(s), padded with zeros at both ends.
    fn generic_ranks(&self) -> Vec<usize> {
        (0..=self.degrees())
            .map(|k| if k == 0 || k >= self.degrees() { 0 } else { self.differential(k).rank() })
            .collect()
    }
}

/// Generic (background) dimensions of the twisted cohomology, computed over ℚ(s).
pub fn background_betti(t: &TwistedComplex) -> Vec<usize> {
    t.dims_from_ranks(&t.generic_ranks())
}

/// Cohomology dimensions at `s = s₀`.
pub fn specialize(t: &TwistedComplex, s0: &Rational) -> Result<Vec<usize>> {
    if s0.is_zero() {
        return Err(Error::ZeroSpecialization);
    }
    let ranks: Vec<usize> = (0..=t.degrees())
        .map(|k| if k == 0 || k >= t.degrees() { 0 } else { t.specialized_differential(k, s0).rank() })
        .collect();
    Ok(t.dims_from_ranks(&ranks))
}

/// Jump data of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeJumps {
    pub degree: usize,
    pub background: usize,
    /// Square-free decomposition `(P, k)` of the product of the nonunit
    /// elementary divisors of the two adjacent differentials.
    pub jump_factors: Vec<(Poly, u32)>,
    /// Isolating intervals of the distinct jump points `s₀ > 0`.
    pub positive_real_jumps: Vec<(Rational, Rational)>,
    /// Distinct negative real roots of the jump factors (no real `t`).
    pub negative_real_jumps: usize,
    /// Distinct non-real roots of the jump factors.
    pub complex_jumps: usize,
}

impl DegreeJumps {
    /// Product of the distinct jump factors.
    pub fn jump_polynomial(&self) -> Poly {
        self.jump_factors.iter().fold(Poly::one(), |acc, (p, _)| &acc * p)
    }
}

/// Background dimensions with the jump loci of the deformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikovProfile {
    pub background: Vec<usize>,
    /// Non-unit elementary divisors over ℚ[s, s⁻¹] of `∂_k` (index 0 unused).
    pub divisors: Vec<Vec<Poly>>,
    pub degrees: Vec<DegreeJumps>,
}

impl NovikovProfile {
    /// Dimension in degree `i` at `s₀ ≠ 0`: the background value plus the
    /// number of elementary divisors of `∂_i` and `∂_{i+1}` vanishing at `s₀`.
    pub fn dimension_at(&self, i: usize, s0: &Rational) -> usize {
        let vanishing = |k: usize| {
            self.divisors.get(k).map_or(0, |ds| ds.iter().filter(|d| d.eval(s0).is_zero()).count())
        };
        self.background[i] + vanishing(i) + vanishing(i + 1)
    }
}

/// Background values, elementary divisors and jump points of the deformation.
pub fn jump_profile(t: &TwistedComplex) -> NovikovProfile {
    let background = background_betti(t);
    let divisors: Vec<Vec<Poly>> = (0..t.degrees())
        .map(|k| {
            if k == 0 {
                return Vec::new();
            }
            laurent_elementary_divisors(&t.differential(k))
                .into_iter()
                .filter(|d| !d.is_unit())
                .collect()
        })
        .collect();
    let degrees = (0..t.degrees())
        .map(|i| {
            let product = divisors[i]
                .iter()
                .chain(divisors.get(i + 1).into_iter().flatten())
                .fold(Poly::one(), |acc, d| &acc * d);
            let jump_factors: Vec<(Poly, u32)> =
                product.square_free_decomposition().into_iter().map(|(k, p)| (p, k)).collect();
            let radical = product.square_free_part();
            let (positive, negative, complex) = if radical.is_unit() {
                (Vec::new(), 0, 0)
            } else {
                let pos = count_positive_real_roots(&radical).expect("nonzero").intervals;
                let neg = count_positive_real_roots(&radical.reflect()).expect("nonzero").intervals.len();
                let deg = radical.degree().unwrap_or(0);
                let real = crate::algebra::count_distinct_real_roots(&radical);
                (pos, neg, deg - real)
            };
            DegreeJumps {
                degree: i,
                background: background[i],
                jump_factors,
                positive_real_jumps: positive,
                negative_real_jumps: negative,
                complex_jumps: complex,
            }
        })
        .collect();
    NovikovProfile { background, divisors, degrees }
}

/// One row of a sampled dimension table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleRow {
    pub s: Rational,
    pub dims: Vec<usize>,
    /// Some dimension exceeds its background value.
    pub on_jump_locus: bool,
}

/// Cohomology dimensions at each grid point, in grid order.
pub fn sample_dimensions(t: &TwistedComplex, grid: &[Rational]) -> Result<Vec<SampleRow>> {
    if grid.iter().any(Zero::is_zero) {
        return Err(Error::ZeroSpecialization);
    }
    if grid.is_empty() {
        return Ok(Vec::new());
    }
    let background = background_betti(t);
    grid.iter()
        .map(|s0| {
            let dims = specialize(t, s0)?;
            let on_jump_locus = dims.iter().zip(&background).any(|(d, b)| d > b);
            Ok(SampleRow { s: s0.clone(), dims, on_jump_locus })
        })
        .collect()
}
