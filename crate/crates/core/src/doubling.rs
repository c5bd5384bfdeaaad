//! Doubles of complexes along a boundary subcomplex, the reflection action,
//! the isotypic splitting of the twisted cohomology of the double, and the
//! boundary Morse counting polynomials.

use std::collections::{BTreeSet, HashMap};

use crate::algebra::{CountingSeries, Rational};
use crate::complex::{IntegerCocycle, Simplex, SimplicialComplex, Subcomplex};
use crate::error::{Error, Result};
use crate::group::{isotypic_multiplicities, isotypic_multiplicities_at, CharacterTable, FiniteGroup, GroupAction};
use crate::local_system::{background_betti, build_relative_twisted, build_twisted, specialize};
use crate::morse::{check_with_convention, novikov_series, Convention, InequalityVerdict};

/// Barycentric subdivision. Vertex `i` of the result is the barycenter of the
/// `origins[i] = (k, idx)` simplex; vertices come first, in their old order.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> (SimplicialComplex, Vec<(usize, usize)>) {
    let dims = k.dim().map_or(0, |d| d + 1);
    let origins: Vec<(usize, usize)> = (0..dims).flat_map(|d| (0..k.count(d)).map(move |i| (d, i))).collect();
    let position: HashMap<(usize, usize), usize> = origins.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let labels = origins
        .iter()
        .map(|&(d, i)| if d == 0 { k.labels()[i].clone() } else { format!("b{}", k.simplex_name(k.simplex(d, i))) })
        .collect();
    // maximal simplices: not a face of any simplex one dimension up
    let mut covered: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); dims];
    for d in 1..dims {
        for i in 0..k.count(d) {
            for (f, _) in k.faces(d, i) {
                covered[d - 1].insert(f);
            }
        }
    }
    let mut facets: Vec<Simplex> = Vec::new();
    for d in 0..dims {
        for i in (0..k.count(d)).filter(|i| !covered[d].contains(i)) {
            for order in permutations(k.simplex(d, i)) {
                let flag = (1..=order.len())
                    .map(|m| {
                        let mut face = order[..m].to_vec();
                        face.sort_unstable();
                        position[&(m - 1, k.index_of(&face).expect("face present"))]
                    })
                    .collect();
                facets.push(flag);
            }
        }
    }
    let sd = SimplicialComplex::from_facets(labels, facets).expect("flags of a complex");
    (sd, origins)
}

fn permutations(v: &[usize]) -> Vec<Vec<usize>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// `(M, Γ, θ)` after one barycentric subdivision; the cocycle transports
/// between least vertices of the simplices whose barycenters are joined.
fn subdivide(k: &SimplicialComplex, gamma: &Subcomplex, theta: &IntegerCocycle) -> Result<(SimplicialComplex, Subcomplex, IntegerCocycle)> {
    let (sd, origins) = barycentric_subdivision(k);
    let min_vertex = |v: usize| {
        let (d, i) = origins[v];
        k.simplex(d, i)[0]
    };
    let entries: Vec<(usize, usize, i64)> = sd
        .simplices(1)
        .iter()
        .map(|e| (e[0], e[1], theta.value(k, min_vertex(e[0]), min_vertex(e[1]))))
        .collect();
    let sd_theta = IntegerCocycle::from_oriented(&sd, &entries)?;
    let dims = sd.dim().map_or(0, |d| d + 1);
    let members = (0..dims)
        .map(|d| {
            (0..sd.count(d))
                .filter(|&i| sd.simplex(d, i).iter().all(|&v| gamma.contains(origins[v].0, origins[v].1)))
                .collect()
        })
        .collect();
    let sd_gamma = Subcomplex::new(&sd, members)?;
    Ok((sd, sd_gamma, sd_theta))
}

/// Two copies of `M` glued along `Γ`, with the reflection swapping them.
#[derive(Clone, Debug)]
pub struct DoubledComplex {
    /// The (possibly subdivided) complex that was doubled.
    pub base: SimplicialComplex,
    pub boundary: Subcomplex,
    pub base_cocycle: IntegerCocycle,
    pub subdivided: bool,
    pub double: SimplicialComplex,
    /// Vertex maps of the two copies of `base` into `double`.
    pub embeddings: [Vec<usize>; 2],
    pub action: GroupAction,
    pub cocycle: IntegerCocycle,
}

/// Builds the double of `(K, Γ)` carrying the mirrored cocycle. One
/// barycentric subdivision is applied first when some simplex outside `Γ`
/// has all its vertices in `Γ`.
pub fn build_double(k: &SimplicialComplex, gamma: &Subcomplex, theta: &IntegerCocycle) -> Result<DoubledComplex> {
    gamma.validate(k)?;
    theta.ensure_cocycle(k)?;
    let dims = k.dim().map_or(0, |d| d + 1);
    let needs_subdivision = (1..dims)
        .any(|d| (0..k.count(d)).any(|i| !gamma.contains(d, i) && k.simplex(d, i).iter().all(|&v| gamma.contains_vertex(v))));
    let (base, boundary, base_cocycle) = if needs_subdivision {
        subdivide(k, gamma, theta)?
    } else {
        (k.clone(), gamma.clone(), theta.clone())
    };
    let n = base.vertex_count();
    let mut labels = base.labels().to_vec();
    let mut mirror: Vec<usize> = (0..n).collect();
    for v in (0..n).filter(|&v| !boundary.contains_vertex(v)) {
        mirror[v] = labels.len();
        labels.push(format!("{}'", base.labels()[v]));
    }
    let dims = base.dim().map_or(0, |d| d + 1);
    let mut simplices: Vec<Simplex> = Vec::new();
    for d in 0..dims {
        for (i, s) in base.simplices(d).iter().enumerate() {
            simplices.push(s.clone());
            if !boundary.contains(d, i) {
                let mut image: Simplex = s.iter().map(|&v| mirror[v]).collect();
                image.sort_unstable();
                simplices.push(image);
            }
        }
    }
    let double = SimplicialComplex::new(labels, simplices)?;
    let total = double.vertex_count();
    let mut swap: Vec<usize> = (0..total).collect();
    for v in 0..n {
        swap[v] = mirror[v];
        swap[mirror[v]] = v;
    }
    let action = GroupAction::new(&FiniteGroup::cyclic(2), &double, vec![(0..total).collect(), swap])?;
    let mut entries: Vec<(usize, usize, i64)> = Vec::new();
    for e in base.simplices(1) {
        let value = base_cocycle.value(&base, e[0], e[1]);
        entries.push((e[0], e[1], value));
        entries.push((mirror[e[0]], mirror[e[1]], value));
    }
    entries.sort_unstable();
    entries.dedup();
    let cocycle = IntegerCocycle::from_oriented(&double, &entries)?;
    crate::group::verify_invariance(&action, &cocycle).into_result()?;
    let doubled = DoubledComplex {
        base,
        boundary,
        base_cocycle,
        subdivided: needs_subdivision,
        double,
        embeddings: [(0..n).collect(), mirror],
        action,
        cocycle,
    };
    let (gc, _) = doubled.boundary.to_complex(&doubled.base);
    assert_eq!(
        doubled.double.euler_characteristic(),
        2 * doubled.base.euler_characteristic() - gc.euler_characteristic(),
        "Euler characteristic of a double"
    );
    Ok(doubled)
}

/// One degree of the comparison between the reflection-isotypic parts of
/// the double and the absolute and relative cohomology of `(M, Γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaRow {
    pub degree: usize,
    pub invariant: usize,
    pub absolute: usize,
    pub anti_invariant: usize,
    pub relative: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    /// `None` for generic `s`.
    pub at: Option<Rational>,
    pub rows: Vec<LemmaRow>,
    pub holds: bool,
    pub first_mismatch: Option<usize>,
}

fn lemma_report(at: Option<Rational>, triv: &[usize], abs: &[usize], sign: &[usize], rel: &[usize]) -> LemmaReport {
    let n = triv.len().max(abs.len()).max(rel.len());
    let get = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let rows: Vec<LemmaRow> = (0..n)
        .map(|i| LemmaRow {
            degree: i,
            invariant: get(triv, i),
            absolute: get(abs, i),
            anti_invariant: get(sign, i),
            relative: get(rel, i),
        })
        .collect();
    let first_mismatch = rows.iter().position(|r| r.invariant != r.absolute || r.anti_invariant != r.relative);
    LemmaReport { at, holds: first_mismatch.is_none(), first_mismatch, rows }
}

/// Invariant and anti-invariant twisted cohomology of the double against
/// `H^*(M, E)` and `H^*(M, Γ, E)`, generically in `s`.
pub fn lemma_check(d: &DoubledComplex) -> Result<LemmaReport> {
    let (_, table) = CharacterTable::builtin("Z2").expect("bundled table");
    let (iso, abs, rel) = std::thread::scope(|scope| {
        let iso = scope.spawn(|| {
            let t = build_twisted(&d.double, &d.cocycle, None)?;
            isotypic_multiplicities(&d.action, &t, &table)
        });
        let abs = scope.spawn(|| build_twisted(&d.base, &d.base_cocycle, None).map(|t| background_betti(&t)));
        let rel = scope.spawn(|| {
            build_relative_twisted(&d.base, &d.boundary, &d.base_cocycle, None).map(|t| background_betti(&t))
        });
        (iso.join().expect("worker"), abs.join().expect("worker"), rel.join().expect("worker"))
    });
    let iso = iso?;
    let column = |r: usize| iso.multiplicities.iter().map(|row| row[r]).collect::<Vec<_>>();
    Ok(lemma_report(None, &column(0), &abs?, &column(1), &rel?))
}

/// The same comparison at `s = s₀`.
pub fn lemma_check_at(d: &DoubledComplex, s0: &Rational) -> Result<LemmaReport> {
    let (_, table) = CharacterTable::builtin("Z2").expect("bundled table");
    let t = build_twisted(&d.double, &d.cocycle, None)?;
    let iso = isotypic_multiplicities_at(&d.action, &t, &table, s0)?;
    let abs = specialize(&build_twisted(&d.base, &d.base_cocycle, None)?, s0)?;
    let rel = specialize(&build_relative_twisted(&d.base, &d.boundary, &d.base_cocycle, None)?, s0)?;
    let column = |r: usize| iso.multiplicities.iter().map(|row| row[r]).collect::<Vec<_>>();
    Ok(lemma_report(Some(s0.clone()), &column(0), &abs, &column(1), &rel))
}

/// Position of a critical component relative to the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryClass {
    Interior,
    Positive,
    Negative,
    Crossing,
}

impl BoundaryClass {
    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "interior" | "in" => Some(BoundaryClass::Interior),
            "positive" | "+" => Some(BoundaryClass::Positive),
            "negative" | "-" => Some(BoundaryClass::Negative),
            "boundary" | "bd" | "crossing" => Some(BoundaryClass::Crossing),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BoundaryClass::Interior => "interior",
            BoundaryClass::Positive => "positive",
            BoundaryClass::Negative => "negative",
            BoundaryClass::Crossing => "boundary",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryComponent {
    pub id: String,
    pub class: BoundaryClass,
    pub ind_plus: usize,
    pub ind_minus: usize,
    pub poincare: CountingSeries,
    /// Poincaré series of the component relative to its intersection with
    /// the boundary; used for components crossing the boundary.
    pub poincare_relative: Option<CountingSeries>,
}

/// `(M⁺, M⁻)`: sums of `λ^{ind_±} P` over interior, crossing and
/// positive (respectively negative) components.
pub fn boundary_morse_polynomials(data: &[BoundaryComponent]) -> (CountingSeries, CountingSeries) {
    let mut plus = CountingSeries::default();
    let mut minus = CountingSeries::default();
    for c in data {
        if c.class != BoundaryClass::Negative {
            plus = plus.add(&c.poincare.shift(c.ind_plus));
        }
        if c.class != BoundaryClass::Positive {
            minus = minus.add(&c.poincare.shift(c.ind_minus));
        }
    }
    (plus, minus)
}

/// Verdicts for one of `M⁺`, `M⁻` in both orientations of the difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryVerdicts {
    pub morse_minus_novikov: InequalityVerdict,
    pub novikov_minus_morse: InequalityVerdict,
}

impl BoundaryVerdicts {
    fn new(morse: &CountingSeries, novikov: &CountingSeries) -> Self {
        BoundaryVerdicts {
            morse_minus_novikov: check_with_convention(morse, novikov, Convention::MorseMinusNovikov),
            novikov_minus_morse: check_with_convention(morse, novikov, Convention::NovikovMinusMorse),
        }
    }

    /// Orientations under which the quotient is valid.
    pub fn valid_conventions(&self) -> Vec<Convention> {
        [&self.morse_minus_novikov, &self.novikov_minus_morse]
            .into_iter()
            .filter(|v| v.holds)
            .map(|v| v.convention)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryReport {
    pub novikov: CountingSeries,
    pub plus: BoundaryVerdicts,
    pub minus: BoundaryVerdicts,
}

impl BoundaryReport {
    /// Both inequalities hold with `M - N = (1 + λ) Q`.
    pub fn holds(&self) -> bool {
        self.plus.morse_minus_novikov.holds && self.minus.morse_minus_novikov.holds
    }
}

fn validate_boundary_data(data: &[BoundaryComponent]) -> Result<()> {
    let mut ids = BTreeSet::new();
    for c in data {
        if !ids.insert(&c.id) {
            return Err(Error::Precondition(format!("component {} is declared twice", c.id)));
        }
        let all = std::iter::once(&c.poincare).chain(c.poincare_relative.as_ref());
        for p in all {
            if !p.is_integral() || !p.is_admissible() {
                return Err(Error::Precondition(format!("{}: Poincaré coefficients must be nonnegative integers", c.id)));
            }
        }
    }
    Ok(())
}

/// Compares `M^±` with the Novikov series of the absolute twisted cohomology
/// of `K`, in both orientations.
pub fn theorem10_check(k: &SimplicialComplex, gamma: &Subcomplex, theta: &IntegerCocycle, data: &[BoundaryComponent]) -> Result<BoundaryReport> {
    gamma.validate(k)?;
    validate_boundary_data(data)?;
    let novikov = novikov_series(&background_betti(&build_twisted(k, theta, None)?));
    let (plus, minus) = boundary_morse_polynomials(data);
    Ok(BoundaryReport {
        plus: BoundaryVerdicts::new(&plus, &novikov),
        minus: BoundaryVerdicts::new(&minus, &novikov),
        novikov,
    })
}

/// The inequalities on the double, one per representation of the reflection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleRouteReport {
    pub invariant: InequalityVerdict,
    pub anti_invariant: InequalityVerdict,
}

impl DoubleRouteReport {
    pub fn holds(&self) -> bool {
        self.invariant.holds && self.anti_invariant.holds
    }
}

/// Morse series of the critical set of the double per reflection
/// representation, checked against its isotypic Novikov numbers.
///
/// An interior component and its mirror image form a free orbit and count
/// once in each representation. A positive component lies on the fixed set
/// with the reflection preserving its unstable directions, so it counts in the
/// invariant part only; a negative one has the reflection reversing an
/// unstable direction and counts in the anti-invariant part only. A component
/// crossing the boundary doubles to a reflection-symmetric manifold whose
/// invariant and anti-invariant cohomology are its absolute and relative
/// cohomology.
pub fn double_route_check(d: &DoubledComplex, data: &[BoundaryComponent]) -> Result<DoubleRouteReport> {
    validate_boundary_data(data)?;
    let mut triv = CountingSeries::default();
    let mut sign = CountingSeries::default();
    for c in data {
        match c.class {
            BoundaryClass::Interior => {
                triv = triv.add(&c.poincare.shift(c.ind_plus));
                sign = sign.add(&c.poincare.shift(c.ind_minus));
            }
            BoundaryClass::Positive => triv = triv.add(&c.poincare.shift(c.ind_plus)),
            BoundaryClass::Negative => sign = sign.add(&c.poincare.shift(c.ind_minus)),
            BoundaryClass::Crossing => {
                let rel = c.poincare_relative.as_ref().ok_or_else(|| {
                    Error::Precondition(format!("{} crosses the boundary but has no relative Poincaré series", c.id))
                })?;
                triv = triv.add(&c.poincare.shift(c.ind_plus));
                sign = sign.add(&rel.shift(c.ind_minus));
            }
        }
    }
    let (_, table) = CharacterTable::builtin("Z2").expect("bundled table");
    let t = build_twisted(&d.double, &d.cocycle, None)?;
    let iso = isotypic_multiplicities(&d.action, &t, &table)?;
    let column = |r: usize| novikov_series(&iso.multiplicities.iter().map(|row| row[r]).collect::<Vec<_>>());
    Ok(DoubleRouteReport {
        invariant: check_with_convention(&triv, &column(0), Convention::MorseMinusNovikov),
        anti_invariant: check_with_convention(&sign, &column(1), Convention::MorseMinusNovikov),
    })
}
