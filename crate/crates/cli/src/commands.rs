//! Commands over a validated problem document.

use std::str::FromStr;

use thiserror::Error;

use novikov_core::algebra::{parse_rational, rat, refine_root, Rational};
use novikov_core::doubling::{build_double, double_route_check, lemma_check, theorem10_check, BoundaryVerdicts};
use novikov_core::group::{equivariant_novikov_numbers, isotypic_multiplicities, isotypic_multiplicities_at, regular_novikov_numbers};
use novikov_core::local_system::{background_betti, build_twisted, jump_profile, sample_dimensions, TwistedComplex};
use novikov_core::morse::{morse_series, per_representation_check};

use crate::document::ProblemDocument;
use crate::report::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Betti,
    Twisted,
    Jumps,
    Sample,
    Equivariant,
    MorseCheck,
    DoubleCheck,
    Report,
}

impl Command {
    pub const ALL: [&'static str; 8] =
        ["betti", "twisted", "jumps", "sample", "equivariant", "morse-check", "double-check", "report"];

    pub fn name(&self) -> &'static str {
        match self {
            Command::Betti => "betti",
            Command::Twisted => "twisted",
            Command::Jumps => "jumps",
            Command::Sample => "sample",
            Command::Equivariant => "equivariant",
            Command::MorseCheck => "morse-check",
            Command::DoubleCheck => "double-check",
            Command::Report => "report",
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "betti" => Command::Betti,
            "twisted" => Command::Twisted,
            "jumps" => Command::Jumps,
            "sample" => Command::Sample,
            "equivariant" => Command::Equivariant,
            "morse-check" => Command::MorseCheck,
            "double-check" => Command::DoubleCheck,
            "report" => Command::Report,
            _ => return Err(format!("unknown command {s:?}; expected one of {}", Command::ALL.join(", "))),
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub rep: Option<String>,
    pub grid: Option<Vec<Rational>>,
    pub at: Option<Rational>,
}

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("the document has no {0} section")]
    MissingSection(&'static str),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] novikov_core::Error),
}

/// Parses `a,b,c` or `start:stop:step` into grid points.
pub fn parse_grid(text: &str) -> Result<Vec<Rational>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() == 3 {
        let read = |t: &str| parse_rational(t).ok_or_else(|| format!("cannot read {t:?} as a rational number"));
        let (start, stop, step) = (read(parts[0])?, read(parts[1])?, read(parts[2])?);
        if step <= rat(0) {
            return Err("grid step must be positive".into());
        }
        let mut out = Vec::new();
        let mut x = start;
        while x <= stop {
            out.push(x.clone());
            x += &step;
            if out.len() > 100_000 {
                return Err("grid has more than 100000 points".into());
            }
        }
        return Ok(out);
    }
    text.split(',')
        .map(|t| parse_rational(t).ok_or_else(|| format!("cannot read {t:?} as a rational number")))
        .collect()
}

fn twisted(doc: &ProblemDocument) -> Result<TwistedComplex, CommandError> {
    Ok(build_twisted(&doc.complex, &doc.cocycle, doc.sign_cocycle.as_ref())?)
}

fn approx(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

fn jumps_section(doc: &ProblemDocument, t: &TwistedComplex) -> Vec<JumpSection> {
    let width = Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 14));
    let scale = doc.cocycle_scale as f64;
    jump_profile(t)
        .degrees
        .iter()
        .map(|j| {
            let radical = j.jump_polynomial();
            let positive_real_jumps = j
                .positive_real_jumps
                .iter()
                .map(|(lo, hi)| {
                    let (a, b) = refine_root(&radical, lo, hi, &width);
                    let s = approx(&((&a + &b) / rat(2)));
                    JumpPoint {
                        lo: lo.to_string(),
                        hi: hi.to_string(),
                        exact: lo == hi,
                        approx_s: format!("{s:.12}"),
                        approx_t: format!("{:.12}", scale * s.ln()),
                    }
                })
                .collect();
            JumpSection {
                degree: j.degree,
                background: j.background,
                factors: j
                    .jump_factors
                    .iter()
                    .map(|(p, m)| JumpFactor { polynomial: p.clone(), display: p.display_in("s"), multiplicity: *m })
                    .collect(),
                positive_real_jumps,
                negative_real_jumps: j.negative_real_jumps,
                complex_jumps: j.complex_jumps,
            }
        })
        .collect()
}

fn sample_section(t: &TwistedComplex, grid: &[Rational]) -> Result<Vec<SampleEntry>, CommandError> {
    Ok(sample_dimensions(t, grid)?
        .into_iter()
        .map(|r| SampleEntry { s: r.s.to_string(), dims: r.dims, on_jump_locus: r.on_jump_locus })
        .collect())
}

fn equivariant_section(doc: &ProblemDocument, t: &TwistedComplex, opts: &Options) -> Result<EquivariantSection, CommandError> {
    let sym = doc.symmetry.as_ref().ok_or(CommandError::MissingSection("group"))?;
    let iso = match &opts.at {
        Some(s0) => isotypic_multiplicities_at(&sym.action, t, &sym.table, s0)?,
        None => isotypic_multiplicities(&sym.action, t, &sym.table)?,
    };
    let mut representations = Vec::new();
    for (name, &degree) in iso.representations.iter().zip(&iso.representation_degrees) {
        if opts.rep.as_ref().is_some_and(|r| r != name) {
            continue;
        }
        representations.push(RepresentationEntry {
            name: name.clone(),
            degree,
            novikov_numbers: equivariant_novikov_numbers(&iso, name)?,
        });
    }
    if let Some(r) = &opts.rep {
        sym.table.index_of(r)?;
    }
    let regular = regular_novikov_numbers(&iso);
    Ok(EquivariantSection {
        elements: sym.action.group().labels().to_vec(),
        at: iso.at.as_ref().map(ToString::to_string),
        regular_identity: regular == iso.dimensions,
        dimensions: iso.dimensions,
        traces: iso.traces.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect(),
        representations,
        regular,
    })
}

fn morse_section(doc: &ProblemDocument, t: &TwistedComplex, opts: &Options) -> Result<MorseSection, CommandError> {
    let components = doc.critical.as_ref().ok_or(CommandError::MissingSection("critical"))?;
    let sym = doc.symmetry_or_trivial();
    if let Some(r) = &opts.rep {
        sym.table.index_of(r)?;
    }
    let checks = per_representation_check(&sym.action, t, &sym.table, components)?;
    let mut representations = Vec::new();
    for (name, v) in &checks.verdicts {
        if opts.rep.as_ref().is_some_and(|r| r != name) {
            continue;
        }
        let orbits = morse_series(components, Some(name))?
            .orbits
            .into_iter()
            .map(|(orbit, series)| OrbitEntry { orbit, series })
            .collect();
        representations.push(MorseEntry { representation: name.clone(), orbits, verdict: v.into() });
    }
    let trivial_group = sym.action.group().order() == 1;
    let regular = (opts.rep.is_none() && !trivial_group).then(|| Verdict::from(&checks.regular));
    let holds = representations.iter().all(|e| e.verdict.holds) && regular.as_ref().is_none_or(|v| v.holds);
    Ok(MorseSection { representations, regular, holds })
}

fn pair(v: &BoundaryVerdicts) -> ConventionPair {
    ConventionPair {
        morse_minus_novikov: (&v.morse_minus_novikov).into(),
        novikov_minus_morse: (&v.novikov_minus_morse).into(),
        valid_conventions: v.valid_conventions().iter().map(ToString::to_string).collect(),
    }
}

fn double_section(doc: &ProblemDocument, notes: &mut Vec<String>) -> Result<DoubleSection, CommandError> {
    let gamma = doc.boundary.as_ref().ok_or(CommandError::MissingSection("boundary"))?;
    if doc.sign_cocycle.as_ref().is_some_and(|e| !e.is_trivial()) {
        return Err(CommandError::Usage("doubling supports an integer cocycle without a sign cocycle".into()));
    }
    let d = build_double(&doc.complex, gamma, &doc.cocycle)?;
    let lemma = lemma_check(&d)?;
    let lemma = LemmaSection {
        rows: lemma
            .rows
            .iter()
            .map(|r| LemmaEntry {
                degree: r.degree,
                invariant: r.invariant,
                absolute: r.absolute,
                anti_invariant: r.anti_invariant,
                relative: r.relative,
            })
            .collect(),
        holds: lemma.holds,
        first_mismatch: lemma.first_mismatch,
    };
    let (boundary_morse, double_route) = match &doc.boundary_critical {
        None => (None, None),
        Some(data) => {
            let b = theorem10_check(&doc.complex, gamma, &doc.cocycle, data)?;
            let boundary = BoundarySection {
                novikov: b.novikov.clone(),
                plus: pair(&b.plus),
                minus: pair(&b.minus),
                holds: b.holds(),
            };
            let route = match double_route_check(&d, data) {
                Ok(r) => Some(DoubleRouteSection {
                    invariant: (&r.invariant).into(),
                    anti_invariant: (&r.anti_invariant).into(),
                    holds: r.holds(),
                }),
                Err(novikov_core::Error::Precondition(why)) => {
                    notes.push(format!("double route skipped: {why}"));
                    None
                }
                Err(e) => return Err(e.into()),
            };
            (Some(boundary), route)
        }
    };
    Ok(DoubleSection {
        subdivided: d.subdivided,
        double_counts: d.double.counts(),
        lemma,
        boundary_morse,
        double_route,
    })
}

/// Runs `cmd` and returns its report; verdict failures are reported, not raised.
pub fn run(cmd: Command, doc: &ProblemDocument, opts: &Options) -> Result<Report, CommandError> {
    let mut r = Report::new(cmd.name(), doc.cocycle_scale);
    match cmd {
        Command::Betti => r.betti = Some(doc.complex.betti_numbers()),
        Command::Twisted => r.twisted = Some(background_betti(&twisted(doc)?)),
        Command::Jumps => r.jumps = Some(jumps_section(doc, &twisted(doc)?)),
        Command::Sample => {
            let grid = opts.grid.as_ref().ok_or_else(|| CommandError::Usage("sample needs --grid".into()))?;
            r.sample = Some(sample_section(&twisted(doc)?, grid)?);
        }
        Command::Equivariant => r.equivariant = Some(equivariant_section(doc, &twisted(doc)?, opts)?),
        Command::MorseCheck => r.morse = Some(morse_section(doc, &twisted(doc)?, opts)?),
        Command::DoubleCheck => r.double = Some(double_section(doc, &mut r.notes)?),
        Command::Report => {
            let t = twisted(doc)?;
            r.betti = Some(doc.complex.betti_numbers());
            r.twisted = Some(background_betti(&t));
            r.jumps = Some(jumps_section(doc, &t));
            if let Some(grid) = &opts.grid {
                r.sample = Some(sample_section(&t, grid)?);
            }
            if doc.symmetry.is_some() {
                r.equivariant = Some(equivariant_section(doc, &t, opts)?);
            }
            if doc.critical.is_some() {
                r.morse = Some(morse_section(doc, &t, opts)?);
            }
            if doc.boundary.is_some() {
                r.double = Some(double_section(doc, &mut r.notes)?);
            }
        }
    }
    Ok(r)
}
