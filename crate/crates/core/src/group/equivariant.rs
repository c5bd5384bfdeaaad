use std::thread;

use num_traits::{Signed, Zero};

use super::action::verify_sign_invariance;
use super::{verify_invariance, CharacterTable, GroupAction};
use crate::algebra::{rat, trace_on_column_space, CyclotomicNumber, Field, LaurentPoly, Matrix, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::local_system::{background_betti, specialize, TwistedComplex};

/// Matrix of `g` on the twisted chains of degree `i`.
///
/// `g·e_σ = ±ε(m_σ → w)·s^{θ(m_σ → w)}·e_{gσ}` with `w = g⁻¹(m_{gσ})`, the
/// vertex of `σ` sent to the least vertex of `gσ`; the transport along `σ`
/// makes the map commute with the twisted boundary.
pub fn twisted_action_matrix(a: &GroupAction, t: &TwistedComplex, g: usize, i: usize) -> Result<Matrix<LaurentPoly>> {
    let k = t.complex();
    let cells = t.cells(i);
    let mut m = Matrix::zeros(cells.len(), cells.len());
    let g_inv = a.group().inverse(g);
    for (col, &c) in cells.iter().enumerate() {
        let (image, sign) = a.image(g, i, c);
        let row = cells.iter().position(|&x| x == image).ok_or_else(|| {
            Error::InvalidAction(format!(
                "{} moves {} into the excluded subcomplex",
                a.group().label(g),
                k.simplex_name(k.simplex(i, c))
            ))
        })?;
        let from = k.simplex(i, c)[0];
        let to = a.vertex_image(g_inv, k.simplex(i, image)[0]);
        let eps = t.sign().map_or(1, |e| e.value(k, from, to));
        let coeff = rat((sign * eps) as i64);
        m[(row, col)] = LaurentPoly::monomial(coeff, t.twist().value(k, from, to));
    }
    Ok(m)
}

fn check_compatible(a: &GroupAction, t: &TwistedComplex) -> Result<()> {
    if a.complex() != t.complex() {
        return Err(Error::Precondition("the action and the twisted complex live on different complexes".into()));
    }
    verify_invariance(a, t.twist()).into_result()?;
    if let Some(eps) = t.sign() {
        verify_sign_invariance(a, eps).into_result()?;
    }
    Ok(())
}

/// Action matrices of `g` in every degree, checked against the differential.
fn chain_action(a: &GroupAction, t: &TwistedComplex, g: usize) -> Result<Vec<Matrix<LaurentPoly>>> {
    let mats = (0..t.degrees()).map(|i| twisted_action_matrix(a, t, g, i)).collect::<Result<Vec<_>>>()?;
    for k in 1..t.degrees() {
        let d = t.differential(k);
        if d.mul_mat(&mats[k]) != mats[k - 1].mul_mat(&d) {
            return Err(Error::Precondition(format!(
                "{} does not commute with the twisted boundary in degree {k}",
                a.group().label(g)
            )));
        }
    }
    Ok(mats)
}

/// `tr(g | H_i) = tr(g | C_i) - tr(g | im ∂_i) - tr(g | im ∂_{i+1})`.
fn homology_traces<F: Field>(d: &[Matrix<F>], g: &[Matrix<F>]) -> Vec<F> {
    let n = g.len();
    (0..n)
        .map(|i| {
            let chains = (0..g[i].rows()).fold(F::zero(), |acc, r| acc + g[i][(r, r)].clone());
            let below = if i >= 1 { trace_on_column_space(&d[i], &g[i - 1]) } else { F::zero() };
            let above = if i + 1 < n { trace_on_column_space(&d[i + 1], &g[i]) } else { F::zero() };
            chains - below - above
        })
        .collect()
}

fn generic_traces(t: &TwistedComplex, mats: &[Matrix<LaurentPoly>]) -> Vec<RatFunc> {
    let d: Vec<Matrix<RatFunc>> = (0..t.degrees()).map(|k| t.differential(k).map(LaurentPoly::to_ratfunc)).collect();
    let g: Vec<Matrix<RatFunc>> = mats.iter().map(|m| m.map(LaurentPoly::to_ratfunc)).collect();
    homology_traces(&d, &g)
}

fn specialized_traces(t: &TwistedComplex, mats: &[Matrix<LaurentPoly>], s0: &Rational) -> Vec<Rational> {
    let d: Vec<Matrix<Rational>> = (0..t.degrees()).map(|k| t.specialized_differential(k, s0)).collect();
    let g: Vec<Matrix<Rational>> = mats.iter().map(|m| m.map(|e| e.eval(s0))).collect();
    homology_traces(&d, &g)
}

/// Trace of `g` on `H_i(K, E_θ)` over ℚ(s); it has the same character as the
/// cohomology since the character is rational valued.
pub fn trace_on_twisted_cohomology(a: &GroupAction, t: &TwistedComplex, g: usize, i: usize) -> Result<RatFunc> {
    check_compatible(a, t)?;
    if i >= t.degrees() {
        return Ok(RatFunc::zero());
    }
    let mats = chain_action(a, t, g)?;
    Ok(generic_traces(t, &mats).swap_remove(i))
}

/// Decomposition of twisted cohomology into isotypic parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicReport {
    pub representations: Vec<String>,
    pub representation_degrees: Vec<usize>,
    /// Point of evaluation; `None` for the background over ℚ(s).
    pub at: Option<Rational>,
    /// Total dimension per degree.
    pub dimensions: Vec<usize>,
    /// `traces[i][g]`.
    pub traces: Vec<Vec<Rational>>,
    /// `multiplicities[i][ρ] = dim Hom_G(V*_ρ, H^i)`.
    pub multiplicities: Vec<Vec<usize>>,
}

impl IsotypicReport {
    pub fn multiplicity(&self, i: usize, rep: usize) -> usize {
        self.multiplicities[i][rep]
    }
}

fn collect_traces<T: Send>(
    a: &GroupAction,
    t: &TwistedComplex,
    f: impl Fn(&[Matrix<LaurentPoly>]) -> Vec<T> + Sync,
) -> Result<Vec<Vec<T>>> {
    let order = a.group().order();
    thread::scope(|scope| {
        let handles: Vec<_> = (0..order)
            .map(|g| {
                let f = &f;
                scope.spawn(move || chain_action(a, t, g).map(|m| f(&m)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("trace worker panicked")).collect()
    })
}

fn assemble(
    table: &CharacterTable,
    at: Option<Rational>,
    dimensions: Vec<usize>,
    per_element: Vec<Vec<Rational>>,
) -> Result<IsotypicReport> {
    let degrees = dimensions.len();
    let traces: Vec<Vec<Rational>> = (0..degrees).map(|i| per_element.iter().map(|tr| tr[i].clone()).collect()).collect();
    let mut multiplicities = Vec::with_capacity(degrees);
    for (i, row) in traces.iter().enumerate() {
        let mut per_rep = Vec::with_capacity(table.len());
        for chi in table.characters() {
            let m = pair_with_character(row, &chi.values).map_err(|_| {
                Error::IntegralityFault(format!("multiplicity of {} in degree {i} is not a nonnegative integer", chi.name))
            })?;
            per_rep.push(m);
        }
        let weighted: usize = per_rep.iter().enumerate().map(|(r, m)| table.degree(r) * m).sum();
        if weighted != dimensions[i] {
            return Err(Error::IntegralityFault(format!(
                "isotypic parts in degree {i} add up to {weighted}, not {}",
                dimensions[i]
            )));
        }
        multiplicities.push(per_rep);
    }
    Ok(IsotypicReport {
        representations: table.characters().iter().map(|c| c.name.clone()).collect(),
        representation_degrees: (0..table.len()).map(|r| table.degree(r)).collect(),
        at,
        dimensions,
        traces,
        multiplicities,
    })
}

fn check_table(a: &GroupAction, table: &CharacterTable) -> Result<()> {
    if table.group() != a.group() {
        return Err(Error::Precondition("character table belongs to a different group".into()));
    }
    Ok(())
}

/// Background character of `G` on each `H^i(K, E_θ)`: `result[g][i]`.
pub fn twisted_character(a: &GroupAction, t: &TwistedComplex) -> Result<Vec<Vec<Rational>>> {
    check_compatible(a, t)?;
    let traces = collect_traces(a, t, |m| generic_traces(t, m))?;
    let mut per_element = Vec::with_capacity(traces.len());
    for (g, row) in traces.into_iter().enumerate() {
        let consts = row
            .into_iter()
            .enumerate()
            .map(|(i, tr)| {
                tr.as_constant().ok_or_else(|| {
                    Error::IntegralityFault(format!("trace of {} in degree {i} is {tr}", a.group().label(g)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        per_element.push(consts);
    }
    Ok(per_element)
}

/// `(1/|G|) Σ_g χ(g)·tr(g)` for a class function `χ`, required to be a
/// nonnegative integer.
pub fn pair_with_character(traces: &[Rational], chi: &[CyclotomicNumber]) -> Result<usize> {
    let order = chi.first().map_or(1, CyclotomicNumber::order);
    let inv = Rational::new(1.into(), (traces.len() as i64).into());
    let total = traces
        .iter()
        .zip(chi)
        .fold(CyclotomicNumber::zero(order), |acc, (tr, x)| acc.add(&x.scale(tr)))
        .scale(&inv);
    total
        .as_rational()
        .filter(|q| q.is_integer() && !q.is_negative())
        .map(|q| q.to_integer().try_into().expect("small multiplicity"))
        .ok_or_else(|| Error::IntegralityFault(format!("character pairing is {total}")))
}

/// Background multiplicities `β_i^G(ξ, ρ) = (1/|G|) Σ_g χ_ρ(g)·tr(g | H^i)`.
pub fn isotypic_multiplicities(a: &GroupAction, t: &TwistedComplex, table: &CharacterTable) -> Result<IsotypicReport> {
    check_table(a, table)?;
    let per_element = twisted_character(a, t)?;
    assemble(table, None, background_betti(t), per_element)
}

/// Multiplicities of the isotypic parts of `H^*(K, E_θ)` at `s = s₀`.
pub fn isotypic_multiplicities_at(
    a: &GroupAction,
    t: &TwistedComplex,
    table: &CharacterTable,
    s0: &Rational,
) -> Result<IsotypicReport> {
    check_compatible(a, t)?;
    check_table(a, table)?;
    let dims = specialize(t, s0)?;
    let per_element = collect_traces(a, t, |m| specialized_traces(t, m, s0))?;
    assemble(table, Some(s0.clone()), dims, per_element)
}

/// `β_i^G(ξ, ρ)` for each degree `i`.
pub fn equivariant_novikov_numbers(report: &IsotypicReport, rep: &str) -> Result<Vec<usize>> {
    let r = report
        .representations
        .iter()
        .position(|n| n == rep)
        .ok_or_else(|| Error::UnknownRepresentation(rep.to_string()))?;
    Ok(report.multiplicities.iter().map(|row| row[r]).collect())
}

/// `Σ_ρ dim V_ρ · β_i^G(ξ, ρ)`, the numbers of the regular representation.
pub fn regular_novikov_numbers(report: &IsotypicReport) -> Vec<usize> {
    report
        .multiplicities
        .iter()
        .map(|row| row.iter().zip(&report.representation_degrees).map(|(m, d)| m * d).sum())
        .collect()
}
