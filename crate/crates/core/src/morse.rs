//! Morse counting series of declared critical components, Novikov series of
//! computed Novikov numbers, and the divisibility test
//! `M(λ) - N(λ) = (1 + λ) Q(λ)` with `Q ≥ 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{rat, CountingSeries, CyclotomicNumber, Rational};
use crate::complex::{IntegerCocycle, SignCocycle, SimplicialComplex, Subcomplex};
use crate::error::{Error, Result};
use crate::group::{
    isotypic_multiplicities, pair_with_character, twisted_character, CharacterTable, GroupAction, IsotypicReport,
};
use crate::local_system::{background_betti, build_twisted, TwistedComplex};

/// Equivariant Poincaré data of a critical component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PoincareData {
    /// The same series for every representation.
    Uniform(CountingSeries),
    /// One series per irreducible representation, by name.
    PerRepresentation(BTreeMap<String, CountingSeries>),
}

/// A connected component of the critical set, as declared data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalComponent {
    pub id: String,
    pub index: usize,
    /// `|G : G_Z|`, the size of the orbit of the component.
    pub stabilizer_index: usize,
    pub poincare: PoincareData,
    /// Components sharing an orbit label are reported together.
    pub orbit: Option<String>,
}

impl CriticalComponent {
    /// A component with trivial stabilizer data, e.g. a nondegenerate critical point.
    pub fn point(id: &str, index: usize) -> Self {
        CriticalComponent {
            id: id.to_string(),
            index,
            stabilizer_index: 1,
            poincare: PoincareData::Uniform(CountingSeries::from_ints(&[1])),
            orbit: None,
        }
    }

    pub fn validate(&self, group_order: usize) -> Result<()> {
        if self.stabilizer_index == 0 || !group_order.is_multiple_of(self.stabilizer_index) {
            return Err(Error::Precondition(format!(
                "{}: stabilizer index {} does not divide {group_order}",
                self.id, self.stabilizer_index
            )));
        }
        let series: Vec<&CountingSeries> = match &self.poincare {
            PoincareData::Uniform(p) => vec![p],
            PoincareData::PerRepresentation(m) => m.values().collect(),
        };
        if series.iter().any(|p| !p.is_integral() || !p.is_admissible()) {
            return Err(Error::Precondition(format!(
                "{}: Poincaré coefficients must be nonnegative integers",
                self.id
            )));
        }
        Ok(())
    }

    pub fn poincare_for(&self, rep: Option<&str>) -> Result<&CountingSeries> {
        match (&self.poincare, rep) {
            (PoincareData::Uniform(p), _) => Ok(p),
            (PoincareData::PerRepresentation(m), Some(r)) => m
                .get(r)
                .ok_or_else(|| Error::UnknownRepresentation(format!("{r} (component {})", self.id))),
            (PoincareData::PerRepresentation(_), None) => Err(Error::Precondition(format!(
                "{} has per-representation data; name a representation",
                self.id
            ))),
        }
    }

    fn orbit_label(&self) -> &str {
        self.orbit.as_deref().unwrap_or(&self.id)
    }
}

/// Dimensions of the `χ`-isotypic part of `H^*(Z, o)` under the stabilizer
/// action, as a series in `λ`. Without a character the invariant part is taken.
pub fn poincare_of_component(
    stab: &GroupAction,
    o: Option<&SignCocycle>,
    character: Option<&[CyclotomicNumber]>,
) -> Result<CountingSeries> {
    let z = stab.complex();
    let t = build_twisted(z, &IntegerCocycle::zero(z), o)?;
    let traces = twisted_character(stab, &t)?;
    let order = stab.group().exponent();
    let trivial: Vec<CyclotomicNumber> =
        (0..stab.group().order()).map(|_| CyclotomicNumber::from_rational(order, rat(1))).collect();
    let chi = character.unwrap_or(&trivial);
    if chi.len() != stab.group().order() {
        return Err(Error::InvalidRestriction("character length differs from the stabilizer order".into()));
    }
    let counts = (0..t.degrees())
        .map(|i| {
            let row: Vec<Rational> = traces.iter().map(|tr| tr[i].clone()).collect();
            pair_with_character(&row, chi)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CountingSeries::from_counts(&counts))
}

/// Restriction of the sign cocycle `o` on `k` to the complex of `z`.
fn restrict_sign(k: &SimplicialComplex, o: &SignCocycle, zc: &SimplicialComplex, vmap: &[usize]) -> Result<SignCocycle> {
    let values = zc.simplices(1).iter().map(|e| o.value(k, vmap[e[0]], vmap[e[1]])).collect();
    SignCocycle::new(zc, values)
}

/// The orbit of the component `z` under `a`, with per-representation
/// Poincaré data computed from the stabilizer action on `H^*(z, o)`.
///
/// `normal_signs[g] = ±1` records whether a stabilizer element preserves or
/// reverses the orientation of the negative normal directions; it twists the
/// stabilizer character accordingly (entries of non-stabilizing elements are
/// ignored).
pub fn components_from_subcomplex(
    a: &GroupAction,
    table: &CharacterTable,
    z: &Subcomplex,
    o: Option<&SignCocycle>,
    normal_signs: Option<&[i8]>,
    id: &str,
    index: usize,
) -> Result<Vec<CriticalComponent>> {
    if normal_signs.is_some_and(|n| n.len() != a.group().order() || n.iter().any(|&x| x != 1 && x != -1)) {
        return Err(Error::InvalidRestriction(format!("{id}: normal signs need one ±1 per group element")));
    }
    let k = a.complex();
    z.validate(k)?;
    if z.is_empty() {
        return Err(Error::InvalidRestriction(format!("{id} is empty")));
    }
    let stab = a.stabilizer(z);
    let (stab_action, zc, embed) = a.restrict(&stab, z)?;
    let local_o = o.map(|o| restrict_sign(k, o, &zc, &z.members(0).collect::<Vec<_>>())).transpose()?;
    let mut per_rep = BTreeMap::new();
    for chi in table.characters() {
        let restricted: Vec<CyclotomicNumber> = embed
            .iter()
            .map(|&g| {
                let sign = normal_signs.map_or(1, |n| n[g]);
                chi.values[g].scale(&rat(sign as i64))
            })
            .collect();
        per_rep.insert(chi.name.clone(), poincare_of_component(&stab_action, local_o.as_ref(), Some(&restricted))?);
    }
    let stabilizer_index = a.group().order() / stab.len();
    // one representative element per coset g·G_Z
    let mut seen: Vec<usize> = Vec::new();
    let mut members = Vec::new();
    for g in 0..a.group().order() {
        if seen.contains(&g) {
            continue;
        }
        seen.extend(stab.iter().map(|&h| a.group().mul(g, h)));
        members.push(g);
    }
    Ok(members
        .iter()
        .enumerate()
        .map(|(n, &g)| CriticalComponent {
            id: if n == 0 { id.to_string() } else { format!("{id}@{}", a.group().label(g)) },
            index,
            stabilizer_index,
            poincare: PoincareData::PerRepresentation(per_rep.clone()),
            orbit: Some(id.to_string()),
        })
        .collect())
}

/// Weighted sum `Σ_Z λ^{ind Z} |G:G_Z|⁻¹ P_Z(λ)`, with its per-orbit parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseSeries {
    pub total: CountingSeries,
    pub integral: bool,
    pub orbits: Vec<(String, CountingSeries)>,
}

pub fn morse_series(components: &[CriticalComponent], rep: Option<&str>) -> Result<MorseSeries> {
    let mut orbits: Vec<(String, CountingSeries)> = Vec::new();
    for c in components {
        let weight = Rational::new(1.into(), (c.stabilizer_index.max(1) as i64).into());
        let term = c.poincare_for(rep)?.shift(c.index).scale(&weight);
        match orbits.iter_mut().find(|(label, _)| label == c.orbit_label()) {
            Some((_, s)) => *s = s.add(&term),
            None => orbits.push((c.orbit_label().to_string(), term)),
        }
    }
    let total = orbits.iter().fold(CountingSeries::default(), |acc, (_, s)| acc.add(s));
    Ok(MorseSeries { integral: total.is_integral(), total, orbits })
}

/// `Σ_i β_i λ^i`.
pub fn novikov_series(numbers: &[usize]) -> CountingSeries {
    CountingSeries::from_counts(numbers)
}

/// Orientation of the difference that must be divisible by `1 + λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `M - N = (1 + λ) Q`
    MorseMinusNovikov,
    /// `N - M = (1 + λ) Q`
    NovikovMinusMorse,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::MorseMinusNovikov => "M - N",
            Convention::NovikovMinusMorse => "N - M",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    NonzeroRemainder(Rational),
    NegativeCoefficient { degree: usize, value: Rational },
    NonIntegerCoefficient { degree: usize, value: Rational },
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReason::NonzeroRemainder(r) => write!(f, "not divisible by 1 + λ (remainder {r})"),
            FailureReason::NegativeCoefficient { degree, value } => {
                write!(f, "quotient coefficient of λ^{degree} is negative ({value})")
            }
            FailureReason::NonIntegerCoefficient { degree, value } => {
                write!(f, "quotient coefficient of λ^{degree} is not an integer ({value})")
            }
        }
    }
}

/// Result of testing one Novikov-type inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityVerdict {
    pub convention: Convention,
    pub morse: CountingSeries,
    pub novikov: CountingSeries,
    pub quotient: CountingSeries,
    pub remainder: Rational,
    pub holds: bool,
    pub failure: Option<FailureReason>,
}

/// `Q = (M - N) / (1 + λ)`; holds iff the division is exact and `Q` has
/// nonnegative integer coefficients.
pub fn check_inequality(morse: &CountingSeries, novikov: &CountingSeries) -> InequalityVerdict {
    check_with_convention(morse, novikov, Convention::MorseMinusNovikov)
}

pub fn check_with_convention(morse: &CountingSeries, novikov: &CountingSeries, convention: Convention) -> InequalityVerdict {
    let diff = match convention {
        Convention::MorseMinusNovikov => morse.sub(novikov),
        Convention::NovikovMinusMorse => novikov.sub(morse),
    };
    let (quotient, remainder) = diff.divide_by_one_plus_lambda();
    let failure = if !remainder.is_zero() {
        Some(FailureReason::NonzeroRemainder(remainder.clone()))
    } else if let Some((degree, value)) = quotient.coeffs().iter().enumerate().find(|(_, c)| !c.is_integer()) {
        Some(FailureReason::NonIntegerCoefficient { degree, value: value.clone() })
    } else if let Some((degree, value)) = quotient.coeffs().iter().enumerate().find(|(_, c)| c.is_negative()) {
        Some(FailureReason::NegativeCoefficient { degree, value: value.clone() })
    } else {
        None
    };
    let verdict = InequalityVerdict {
        convention,
        morse: morse.clone(),
        novikov: novikov.clone(),
        quotient,
        remainder,
        holds: failure.is_none(),
        failure,
    };
    if verdict.holds {
        let c = consequences(&verdict);
        assert!(c.euler_identity && c.value_at_one && c.morse_bounds, "consequences of a valid quotient: {c:?}");
    }
    verdict
}

/// Identities implied by a valid quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Consequences {
    /// `M(-1) = N(-1)`
    pub euler_identity: bool,
    /// `M(1) - N(1) = 2 Q(1) ≥ 0` (with the convention's orientation)
    pub value_at_one: bool,
    /// `m_i ≥ β_i` and `Σ_{j ≤ i} (-1)^{i-j} (m_j - β_j) ≥ 0` (oriented likewise)
    pub morse_bounds: bool,
}

pub fn consequences(v: &InequalityVerdict) -> Consequences {
    let (big, small) = match v.convention {
        Convention::MorseMinusNovikov => (&v.morse, &v.novikov),
        Convention::NovikovMinusMorse => (&v.novikov, &v.morse),
    };
    let minus_one = rat(-1);
    let euler_identity = big.eval(&minus_one) == small.eval(&minus_one);
    let one = Rational::one();
    let gap = big.eval(&one) - small.eval(&one);
    let value_at_one = gap == rat(2) * v.quotient.eval(&one) && !gap.is_negative();
    let n = big.len().max(small.len());
    let mut morse_bounds = true;
    let mut partial = Rational::zero();
    for i in 0..n {
        let d = big.coeff(i) - small.coeff(i);
        partial = d.clone() - partial;
        morse_bounds &= !d.is_negative() && !partial.is_negative();
    }
    Consequences { euler_identity, value_at_one, morse_bounds }
}

/// Verdicts of the inequalities for every irreducible representation and
/// for the regular representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationChecks {
    pub isotypic: IsotypicReport,
    pub verdicts: Vec<(String, InequalityVerdict)>,
    pub regular: InequalityVerdict,
}

impl RepresentationChecks {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| v.holds) && self.regular.holds
    }
}

pub fn per_representation_check(
    a: &GroupAction,
    t: &TwistedComplex,
    table: &CharacterTable,
    components: &[CriticalComponent],
) -> Result<RepresentationChecks> {
    for c in components {
        c.validate(a.group().order())?;
    }
    let isotypic = isotypic_multiplicities(a, t, table)?;
    let mut verdicts = Vec::with_capacity(table.len());
    let mut regular_morse = CountingSeries::default();
    let mut regular_novikov = CountingSeries::default();
    for (r, chi) in table.characters().iter().enumerate() {
        let m = morse_series(components, Some(&chi.name))?;
        if !m.integral {
            return Err(Error::Precondition(format!(
                "Morse series for {} has non-integral coefficients {}; orbit data is inconsistent",
                chi.name, m.total
            )));
        }
        let numbers: Vec<usize> = isotypic.multiplicities.iter().map(|row| row[r]).collect();
        let n = novikov_series(&numbers);
        let weight = rat(table.degree(r) as i64);
        regular_morse = regular_morse.add(&m.total.scale(&weight));
        regular_novikov = regular_novikov.add(&n.scale(&weight));
        verdicts.push((chi.name.clone(), check_inequality(&m.total, &n)));
    }
    debug_assert_eq!(regular_novikov, novikov_series(&background_betti(t)));
    let regular = check_inequality(&regular_morse, &regular_novikov);
    Ok(RepresentationChecks { isotypic, verdicts, regular })
}
