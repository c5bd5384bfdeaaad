//! Report documents and their human rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use novikov_core::algebra::{CountingSeries, Poly};
use novikov_core::morse::InequalityVerdict;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// Rational cocycle values were multiplied by this before computing.
    pub cocycle_scale: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twisted: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jumps: Option<Vec<JumpSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<Vec<SampleEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivariant: Option<EquivariantSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morse: Option<MorseSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub double: Option<DoubleSection>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str, cocycle_scale: u64) -> Self {
        Report {
            command: command.to_string(),
            cocycle_scale,
            betti: None,
            twisted: None,
            jumps: None,
            sample: None,
            equivariant: None,
            morse: None,
            double: None,
            notes: Vec::new(),
        }
    }

    /// False when a checked inequality or identity fails.
    pub fn verdicts_hold(&self) -> bool {
        self.morse.as_ref().is_none_or(|m| m.holds) && self.double.as_ref().is_none_or(DoubleSection::holds)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JumpSection {
    pub degree: usize,
    pub background: usize,
    pub factors: Vec<JumpFactor>,
    pub positive_real_jumps: Vec<JumpPoint>,
    pub negative_real_jumps: usize,
    pub complex_jumps: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JumpFactor {
    pub polynomial: Poly,
    pub display: String,
    pub multiplicity: u32,
}

/// A positive real jump point, exact or in an isolating interval.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JumpPoint {
    pub lo: String,
    pub hi: String,
    pub exact: bool,
    pub approx_s: String,
    pub approx_t: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleEntry {
    pub s: String,
    pub dims: Vec<usize>,
    pub on_jump_locus: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivariantSection {
    pub elements: Vec<String>,
    /// Specialization point, or absent for the generic fibre.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
    pub dimensions: Vec<usize>,
    /// `traces[i][g]`.
    pub traces: Vec<Vec<String>>,
    pub representations: Vec<RepresentationEntry>,
    pub regular: Vec<usize>,
    pub regular_identity: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationEntry {
    pub name: String,
    pub degree: usize,
    pub novikov_numbers: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub convention: String,
    pub morse: CountingSeries,
    pub novikov: CountingSeries,
    pub quotient: CountingSeries,
    pub remainder: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl From<&InequalityVerdict> for Verdict {
    fn from(v: &InequalityVerdict) -> Self {
        Verdict {
            convention: v.convention.to_string(),
            morse: v.morse.clone(),
            novikov: v.novikov.clone(),
            quotient: v.quotient.clone(),
            remainder: v.remainder.to_string(),
            holds: v.holds,
            failure: v.failure.as_ref().map(ToString::to_string),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorseSection {
    pub representations: Vec<MorseEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regular: Option<Verdict>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorseEntry {
    pub representation: String,
    pub orbits: Vec<OrbitEntry>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub orbit: String,
    pub series: CountingSeries,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DoubleSection {
    pub subdivided: bool,
    pub double_counts: Vec<usize>,
    pub lemma: LemmaSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_morse: Option<BoundarySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub double_route: Option<DoubleRouteSection>,
}

impl DoubleSection {
    pub fn holds(&self) -> bool {
        self.lemma.holds
            && self.boundary_morse.as_ref().is_none_or(|b| b.holds)
            && self.double_route.as_ref().is_none_or(|d| d.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaSection {
    pub rows: Vec<LemmaEntry>,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaEntry {
    pub degree: usize,
    pub invariant: usize,
    pub absolute: usize,
    pub anti_invariant: usize,
    pub relative: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundarySection {
    pub novikov: CountingSeries,
    pub plus: ConventionPair,
    pub minus: ConventionPair,
    /// Both inequalities hold with Morse minus Novikov.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConventionPair {
    pub morse_minus_novikov: Verdict,
    pub novikov_minus_morse: Verdict,
    pub valid_conventions: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DoubleRouteSection {
    pub invariant: Verdict,
    pub anti_invariant: Verdict,
    pub holds: bool,
}

fn numbers(v: &[usize], degree: Option<usize>) -> String {
    match degree {
        Some(i) => v.get(i).copied().unwrap_or(0).to_string(),
        None => v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
    }
}

fn verdict_line(out: &mut String, label: &str, v: &Verdict) {
    let status = if v.holds { "holds" } else { "FAILS" };
    let _ = writeln!(
        out,
        "{label} [{}]: M = {}, N = {}, quotient {}, remainder {}: {status}",
        v.convention,
        v.morse.display(),
        v.novikov.display(),
        v.quotient.display(),
        v.remainder
    );
    if let Some(f) = &v.failure {
        let _ = writeln!(out, "  {f}");
    }
}

/// Text rendering; `degree` restricts per-degree lists to one degree.
pub fn render_human(r: &Report, degree: Option<usize>) -> String {
    let mut out = String::new();
    let sections = [r.betti.is_some(), r.twisted.is_some()].iter().filter(|x| **x).count()
        + [r.jumps.is_some(), r.sample.is_some(), r.equivariant.is_some(), r.morse.is_some(), r.double.is_some()]
            .iter()
            .filter(|x| **x)
            .count();
    let titled = sections > 1;
    if r.cocycle_scale != 1 {
        let _ = writeln!(
            out,
            "note: cocycle scaled by {}; s is taken for the scaled cocycle and t = {}·ln s",
            r.cocycle_scale, r.cocycle_scale
        );
    }
    if let Some(b) = &r.betti {
        if titled {
            out.push_str("betti: ");
        }
        let _ = writeln!(out, "{}", numbers(b, degree));
    }
    if let Some(b) = &r.twisted {
        if titled {
            out.push_str("twisted: ");
        }
        let _ = writeln!(out, "{}", numbers(b, degree));
    }
    if let Some(jumps) = &r.jumps {
        if titled {
            out.push_str("jumps:\n");
        }
        for j in jumps.iter().filter(|j| degree.is_none_or(|d| d == j.degree)) {
            let _ = writeln!(out, "degree {}: background {}", j.degree, j.background);
            if j.factors.is_empty() {
                out.push_str("  no jumps\n");
                continue;
            }
            for f in &j.factors {
                let _ = writeln!(out, "  jump factor {} (multiplicity {})", f.display, f.multiplicity);
            }
            for p in &j.positive_real_jumps {
                if p.exact {
                    let _ = writeln!(out, "  positive real jump s = {}, t ≈ {} (approx)", p.lo, p.approx_t);
                } else {
                    let _ = writeln!(
                        out,
                        "  positive real jump s in [{}, {}], s ≈ {}, t ≈ {} (approx)",
                        p.lo, p.hi, p.approx_s, p.approx_t
                    );
                }
            }
            let _ = writeln!(
                out,
                "  negative real jumps: {}, non-real jumps: {}",
                j.negative_real_jumps, j.complex_jumps
            );
        }
    }
    if let Some(rows) = &r.sample {
        if titled {
            out.push_str("sample:\n");
        }
        out.push_str(&render_csv(rows));
    }
    if let Some(e) = &r.equivariant {
        if titled {
            out.push_str("equivariant:\n");
        }
        if let Some(at) = &e.at {
            let _ = writeln!(out, "at s = {at}");
        }
        let _ = writeln!(out, "dimensions: {}", numbers(&e.dimensions, degree));
        for rep in &e.representations {
            let _ = writeln!(out, "{} (degree {}): {}", rep.name, rep.degree, numbers(&rep.novikov_numbers, degree));
        }
        let status = if e.regular_identity { "holds" } else { "FAILS" };
        let _ = writeln!(out, "regular: {} (sum over representations {status})", numbers(&e.regular, degree));
    }
    if let Some(m) = &r.morse {
        if titled {
            out.push_str("morse:\n");
        }
        for entry in &m.representations {
            verdict_line(&mut out, &entry.representation, &entry.verdict);
            for o in &entry.orbits {
                let _ = writeln!(out, "  orbit {}: {}", o.orbit, o.series.display());
            }
        }
        if let Some(v) = &m.regular {
            verdict_line(&mut out, "regular", v);
        }
    }
    if let Some(d) = &r.double {
        if titled {
            out.push_str("double:\n");
        }
        let counts: Vec<String> = d.double_counts.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "double has simplex counts {}{}",
            counts.join(" "),
            if d.subdivided { " (base subdivided first)" } else { "" }
        );
        let status = if d.lemma.holds { "holds" } else { "FAILS" };
        let _ = writeln!(out, "invariant = absolute, anti-invariant = relative: {status}");
        for row in d.lemma.rows.iter().filter(|r| degree.is_none_or(|i| i == r.degree)) {
            let _ = writeln!(
                out,
                "  degree {}: invariant {} absolute {} | anti-invariant {} relative {}",
                row.degree, row.invariant, row.absolute, row.anti_invariant, row.relative
            );
        }
        if let Some(b) = &d.boundary_morse {
            let _ = writeln!(out, "boundary Morse inequalities, N = {}", b.novikov.display());
            for (name, pair) in [("M+", &b.plus), ("M-", &b.minus)] {
                verdict_line(&mut out, name, &pair.morse_minus_novikov);
                verdict_line(&mut out, name, &pair.novikov_minus_morse);
                let valid = if pair.valid_conventions.is_empty() {
                    "none".to_string()
                } else {
                    pair.valid_conventions.join(", ")
                };
                let _ = writeln!(out, "  valid conventions: {valid}");
            }
        }
        if let Some(dr) = &d.double_route {
            verdict_line(&mut out, "invariant part of the double", &dr.invariant);
            verdict_line(&mut out, "anti-invariant part of the double", &dr.anti_invariant);
        }
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

/// `s,dim0,dim1,…` rows, one per grid point.
pub fn render_csv(rows: &[SampleEntry]) -> String {
    let width = rows.iter().map(|r| r.dims.len()).max().unwrap_or(0);
    let mut out = String::from("s");
    for i in 0..width {
        let _ = write!(out, ",dim{i}");
    }
    out.push('\n');
    for r in rows {
        out.push_str(&r.s);
        for i in 0..width {
            let _ = write!(out, ",{}", r.dims.get(i).copied().unwrap_or(0));
        }
        out.push('\n');
    }
    out
}
