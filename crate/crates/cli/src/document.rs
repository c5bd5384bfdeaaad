//! Problem documents: JSON input with every validation error collected.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Deserialize;
use serde_json::Value;

use novikov_core::algebra::{parse_rational, CountingSeries, CyclotomicNumber, Rational};
use novikov_core::complex::{IntegerCocycle, SignCocycle, Simplex, SimplicialComplex, Subcomplex};
use novikov_core::doubling::{BoundaryClass, BoundaryComponent};
use novikov_core::group::{parse_cyclotomic, Character, CharacterTable, FiniteGroup, GroupAction};
use novikov_core::morse::{components_from_subcomplex, CriticalComponent, PoincareData};

/// A problem rejected with a field path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldError {
    pub path: String,
    pub reason: String,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.reason)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    vertices: Option<Value>,
    #[serde(default)]
    simplices: Vec<Vec<Value>>,
    cocycle: Option<Vec<RawEdgeValue>>,
    sign_cocycle: Option<Vec<RawEdgeValue>>,
    boundary: Option<Vec<Vec<Value>>>,
    group: Option<RawGroup>,
    action: Option<BTreeMap<String, BTreeMap<String, Value>>>,
    characters: Option<Vec<RawCharacter>>,
    critical: Option<Vec<RawCritical>>,
    boundary_critical: Option<Vec<RawBoundaryCritical>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdgeValue {
    edge: Vec<Value>,
    value: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    builtin: Option<String>,
    elements: Option<Vec<String>>,
    table: Option<Vec<Vec<String>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCharacter {
    name: String,
    values: Vec<Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCritical {
    id: String,
    index: usize,
    stabilizer_index: Option<usize>,
    poincare: Option<Value>,
    orbit: Option<String>,
    subcomplex: Option<Vec<Vec<Value>>>,
    orientation: Option<Vec<RawEdgeValue>>,
    normal_signs: Option<BTreeMap<String, i8>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBoundaryCritical {
    id: String,
    class: String,
    #[serde(default)]
    ind_plus: usize,
    #[serde(default)]
    ind_minus: usize,
    poincare: Option<Vec<Value>>,
    poincare_relative: Option<Vec<Value>>,
}

/// Group, action and character table of a document.
#[derive(Clone, Debug)]
pub struct Symmetry {
    pub action: GroupAction,
    pub table: CharacterTable,
}

/// A validated problem.
#[derive(Clone, Debug)]
pub struct ProblemDocument {
    pub complex: SimplicialComplex,
    pub boundary: Option<Subcomplex>,
    pub cocycle: IntegerCocycle,
    /// Rational cocycle values were multiplied by this to make them integral.
    pub cocycle_scale: u64,
    pub sign_cocycle: Option<SignCocycle>,
    pub symmetry: Option<Symmetry>,
    pub critical: Option<Vec<CriticalComponent>>,
    pub boundary_critical: Option<Vec<BoundaryComponent>>,
}

impl ProblemDocument {
    /// The document's symmetry, or the trivial group.
    pub fn symmetry_or_trivial(&self) -> Symmetry {
        self.symmetry.clone().unwrap_or_else(|| Symmetry {
            action: GroupAction::trivial(&self.complex),
            table: CharacterTable::builtin("Z1").expect("bundled table").1,
        })
    }
}

struct Collector {
    errors: Vec<FieldError>,
}

impl Collector {
    fn push(&mut self, path: impl Into<String>, reason: impl Into<String>) {
        self.errors.push(FieldError { path: path.into(), reason: reason.into() });
    }
}

fn value_text(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

fn value_rational(v: &Value) -> Option<Rational> {
    value_text(v).and_then(|t| parse_rational(&t))
}

struct Vertices {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Vertices {
    fn resolve(&self, v: &Value) -> Option<usize> {
        value_text(v).and_then(|t| self.index.get(&t).copied())
    }

    fn simplex(&self, list: &[Value], path: &str, c: &mut Collector) -> Option<Simplex> {
        let mut out = Vec::with_capacity(list.len());
        let mut ok = true;
        for (j, v) in list.iter().enumerate() {
            match self.resolve(v) {
                Some(i) => out.push(i),
                None => {
                    c.push(format!("{path}[{j}]"), format!("unknown vertex {v}"));
                    ok = false;
                }
            }
        }
        if list.is_empty() {
            c.push(path, "empty simplex");
            ok = false;
        }
        ok.then_some(out)
    }
}

fn parse_vertices(raw: &Option<Value>, c: &mut Collector) -> Option<Vertices> {
    let labels: Vec<String> = match raw {
        None => {
            c.push("vertices", "missing");
            return None;
        }
        Some(Value::Number(n)) => match n.as_u64() {
            Some(k) => (0..k).map(|i| i.to_string()).collect(),
            None => {
                c.push("vertices", "expected a vertex count or a list of labels");
                return None;
            }
        },
        Some(Value::Array(items)) => {
            let mut labels = Vec::new();
            for (i, v) in items.iter().enumerate() {
                match value_text(v) {
                    Some(t) => labels.push(t),
                    None => c.push(format!("vertices[{i}]"), "labels must be strings or numbers"),
                }
            }
            labels
        }
        Some(_) => {
            c.push("vertices", "expected a vertex count or a list of labels");
            return None;
        }
    };
    let mut index = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            c.push(format!("vertices[{i}]"), format!("label {l:?} repeats"));
        }
    }
    Some(Vertices { labels, index })
}

fn resolve_edge(
    k: &SimplicialComplex,
    verts: &Vertices,
    e: &RawEdgeValue,
    path: &str,
    c: &mut Collector,
) -> Option<(usize, usize)> {
    if e.edge.len() != 2 {
        c.push(format!("{path}.edge"), "an edge has exactly two endpoints");
        return None;
    }
    let ends = verts.simplex(&e.edge, &format!("{path}.edge"), c)?;
    let (u, v) = (ends[0], ends[1]);
    if u == v || k.edge(u, v).is_none() {
        c.push(format!("{path}.edge"), format!("[{},{}] is not an edge", verts.labels[u], verts.labels[v]));
        return None;
    }
    Some((u, v))
}

fn parse_cocycle(
    k: &SimplicialComplex,
    verts: &Vertices,
    raw: &Option<Vec<RawEdgeValue>>,
    c: &mut Collector,
) -> (IntegerCocycle, u64) {
    let Some(list) = raw else {
        return (IntegerCocycle::zero(k), 1);
    };
    let before = c.errors.len();
    let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
    for (i, e) in list.iter().enumerate() {
        let path = format!("cocycle[{i}]");
        let edge = resolve_edge(k, verts, e, &path, c);
        let value = value_rational(&e.value);
        if value.is_none() {
            c.push(format!("{path}.value"), "expected an integer or rational number");
        }
        if let (Some((u, v)), Some(q)) = (edge, value) {
            entries.push((u, v, q));
        }
    }
    let scale = entries.iter().fold(BigInt::one(), |acc, (_, _, q)| acc.lcm(q.denom()));
    let Some(scale_u64) = scale.to_u64() else {
        c.push("cocycle", "denominators are too large");
        return (IntegerCocycle::zero(k), 1);
    };
    let mut ints = Vec::new();
    for (u, v, q) in entries {
        match (q * Rational::from_integer(scale.clone())).to_integer().to_i64() {
            Some(x) => ints.push((u, v, x)),
            None => c.push("cocycle", "value out of range"),
        }
    }
    let mut seen = BTreeMap::new();
    for &(u, v, x) in &ints {
        let (idx, sign) = k.edge(u, v).expect("resolved");
        if let Some(prev) = seen.insert(idx, sign as i64 * x) {
            if prev != sign as i64 * x {
                c.push("cocycle", format!("conflicting values on {}", k.simplex_name(k.simplex(1, idx))));
            }
        }
    }
    if c.errors.len() > before {
        return (IntegerCocycle::zero(k), 1);
    }
    let theta = IntegerCocycle::from_oriented(k, &ints).unwrap_or_else(|_| IntegerCocycle::zero(k));
    let check = theta.verify(k);
    if !check.holds {
        let names: Vec<String> = check.violators.iter().map(|&t| k.simplex_name(k.simplex(2, t))).collect();
        c.push("cocycle", format!("not a cocycle on {}", names.join(", ")));
    }
    (theta, scale_u64)
}

fn parse_signs(
    k: &SimplicialComplex,
    verts: &Vertices,
    list: &[RawEdgeValue],
    path: &str,
    c: &mut Collector,
) -> Option<SignCocycle> {
    let mut values = vec![1i8; k.count(1)];
    let before = c.errors.len();
    for (i, e) in list.iter().enumerate() {
        let p = format!("{path}[{i}]");
        let edge = resolve_edge(k, verts, e, &p, c);
        let sign = match e.value.as_i64() {
            Some(1) => Some(1),
            Some(-1) => Some(-1),
            _ => {
                c.push(format!("{p}.value"), "expected 1 or -1");
                None
            }
        };
        if let (Some((u, v)), Some(s)) = (edge, sign) {
            values[k.edge(u, v).expect("resolved").0] = s;
        }
    }
    if c.errors.len() > before {
        return None;
    }
    let eps = SignCocycle::new(k, values).expect("±1 values");
    let check = eps.verify(k);
    if !check.holds {
        let names: Vec<String> = check.violators.iter().map(|&t| k.simplex_name(k.simplex(2, t))).collect();
        c.push(path, format!("not a sign cocycle on {}", names.join(", ")));
        return None;
    }
    Some(eps)
}

fn parse_subcomplex(
    k: &SimplicialComplex,
    verts: &Vertices,
    list: &[Vec<Value>],
    path: &str,
    c: &mut Collector,
) -> Option<Subcomplex> {
    let mut simplices = Vec::new();
    let before = c.errors.len();
    for (i, s) in list.iter().enumerate() {
        if let Some(simplex) = verts.simplex(s, &format!("{path}[{i}]"), c) {
            simplices.push(simplex);
        }
    }
    if c.errors.len() > before {
        return None;
    }
    match Subcomplex::closure_of(k, &simplices) {
        Ok(z) => Some(z),
        Err(e) => {
            c.push(path, e.to_string());
            None
        }
    }
}

fn parse_series(list: &[Value], path: &str, c: &mut Collector) -> Option<CountingSeries> {
    let mut coeffs = Vec::new();
    for (i, v) in list.iter().enumerate() {
        match value_rational(v) {
            Some(q) if q.is_integer() && q >= Rational::from_integer(0.into()) => coeffs.push(q),
            _ => {
                c.push(format!("{path}[{i}]"), "expected a nonnegative integer coefficient");
                return None;
            }
        }
    }
    Some(CountingSeries::new(coeffs))
}

fn parse_group(raw: &RawDocument, k: &SimplicialComplex, verts: &Vertices, c: &mut Collector) -> Option<Symmetry> {
    let g = raw.group.as_ref()?;
    let (group, builtin_table) = match (&g.builtin, &g.elements, &g.table) {
        (Some(name), None, None) => match CharacterTable::builtin(name) {
            Some((group, table)) => (group, Some(table)),
            None => {
                c.push("group.builtin", format!("unknown group {name:?}; bundled: Z1, Z2, Z3, Z4, Z2xZ2, S3"));
                return None;
            }
        },
        (None, Some(elements), Some(table)) => {
            let index: HashMap<&String, usize> = elements.iter().enumerate().map(|(i, l)| (l, i)).collect();
            let mut rows = Vec::new();
            for (a, row) in table.iter().enumerate() {
                let mut r = Vec::new();
                for (b, l) in row.iter().enumerate() {
                    match index.get(l) {
                        Some(&x) => r.push(x),
                        None => {
                            c.push(format!("group.table[{a}][{b}]"), format!("unknown element {l:?}"));
                            return None;
                        }
                    }
                }
                rows.push(r);
            }
            match FiniteGroup::new(elements.clone(), rows) {
                Ok(group) => (group, None),
                Err(e) => {
                    c.push("group", e.to_string());
                    return None;
                }
            }
        }
        _ => {
            c.push("group", "give either \"builtin\" or both \"elements\" and \"table\"");
            return None;
        }
    };
    let table = match (&raw.characters, builtin_table) {
        (Some(chars), _) => {
            let order = group.exponent();
            let mut characters = Vec::new();
            for (i, ch) in chars.iter().enumerate() {
                let mut values = Vec::new();
                for (j, v) in ch.values.iter().enumerate() {
                    match value_text(v).and_then(|t| parse_cyclotomic(order, &t)) {
                        Some(x) => values.push(x),
                        None => {
                            c.push(format!("characters[{i}].values[{j}]"), format!("cannot read {v} as an element of ℚ(z), z^{order} = 1"));
                            values.push(CyclotomicNumber::zero(order));
                        }
                    }
                }
                characters.push(Character { name: ch.name.clone(), values });
            }
            match CharacterTable::new(&group, characters) {
                Ok(t) => t,
                Err(e) => {
                    c.push("characters", e.to_string());
                    return None;
                }
            }
        }
        (None, Some(t)) => t,
        (None, None) => {
            c.push("characters", "required for a group given by its table");
            return None;
        }
    };
    let Some(action) = &raw.action else {
        c.push("action", "required when a group is given");
        return None;
    };
    let mut maps = Vec::new();
    for a in 0..group.order() {
        let label = group.label(a);
        let mut map: Vec<usize> = (0..verts.labels.len()).collect();
        match action.get(label) {
            Some(pairs) => {
                for (from, to) in pairs {
                    let path = format!("action.{label}.{from}");
                    match (verts.index.get(from), verts.resolve(to)) {
                        (Some(&u), Some(v)) => map[u] = v,
                        _ => c.push(path, format!("unknown vertex in {from} -> {to}")),
                    }
                }
            }
            None if a == group.identity() => {}
            None => c.push(format!("action.{label}"), "missing vertex map"),
        }
        maps.push(map);
    }
    for key in action.keys() {
        if group.index_of(key).is_none() {
            c.push(format!("action.{key}"), "not an element of the group");
        }
    }
    match GroupAction::new(&group, k, maps) {
        Ok(action) => Some(Symmetry { action, table }),
        Err(e) => {
            c.push("action", e.to_string());
            None
        }
    }
}

fn parse_critical(
    raw: &[RawCritical],
    k: &SimplicialComplex,
    verts: &Vertices,
    symmetry: &Symmetry,
    c: &mut Collector,
) -> Vec<CriticalComponent> {
    let mut out = Vec::new();
    let group = symmetry.action.group();
    for (i, r) in raw.iter().enumerate() {
        let path = format!("critical[{i}]");
        if let Some(list) = &r.subcomplex {
            let Some(z) = parse_subcomplex(k, verts, list, &format!("{path}.subcomplex"), c) else { continue };
            let o = match &r.orientation {
                Some(o) => match parse_signs(k, verts, o, &format!("{path}.orientation"), c) {
                    Some(o) => Some(o),
                    None => continue,
                },
                None => None,
            };
            let normal = match &r.normal_signs {
                Some(map) => {
                    let mut signs = vec![1i8; group.order()];
                    for (label, &s) in map {
                        match group.index_of(label) {
                            Some(g) => signs[g] = s,
                            None => c.push(format!("{path}.normal_signs.{label}"), "not an element of the group"),
                        }
                    }
                    Some(signs)
                }
                None => None,
            };
            match components_from_subcomplex(&symmetry.action, &symmetry.table, &z, o.as_ref(), normal.as_deref(), &r.id, r.index) {
                Ok(list) => out.extend(list),
                Err(e) => c.push(&path, e.to_string()),
            }
            continue;
        }
        let poincare = match &r.poincare {
            None => PoincareData::Uniform(CountingSeries::from_ints(&[1])),
            Some(Value::Array(list)) => match parse_series(list, &format!("{path}.poincare"), c) {
                Some(p) => PoincareData::Uniform(p),
                None => continue,
            },
            Some(Value::Object(map)) => {
                let mut per_rep = BTreeMap::new();
                for (name, v) in map {
                    let p = format!("{path}.poincare.{name}");
                    if symmetry.table.index_of(name).is_err() {
                        c.push(&p, "unknown representation");
                        continue;
                    }
                    match v.as_array().and_then(|l| parse_series(l, &p, c)) {
                        Some(s) => {
                            per_rep.insert(name.clone(), s);
                        }
                        None => c.push(&p, "expected a coefficient list"),
                    }
                }
                PoincareData::PerRepresentation(per_rep)
            }
            Some(_) => {
                c.push(format!("{path}.poincare"), "expected a coefficient list or an object keyed by representation");
                continue;
            }
        };
        let component = CriticalComponent {
            id: r.id.clone(),
            index: r.index,
            stabilizer_index: r.stabilizer_index.unwrap_or(1),
            poincare,
            orbit: r.orbit.clone(),
        };
        match component.validate(group.order()) {
            Ok(()) => out.push(component),
            Err(e) => c.push(&path, e.to_string()),
        }
    }
    out
}

fn parse_boundary_critical(raw: &[RawBoundaryCritical], c: &mut Collector) -> Vec<BoundaryComponent> {
    let mut out = Vec::new();
    for (i, r) in raw.iter().enumerate() {
        let path = format!("boundary_critical[{i}]");
        let Some(class) = BoundaryClass::parse(&r.class) else {
            c.push(format!("{path}.class"), "expected interior, positive, negative or boundary");
            continue;
        };
        let poincare = match &r.poincare {
            Some(list) => parse_series(list, &format!("{path}.poincare"), c),
            None => Some(CountingSeries::from_ints(&[1])),
        };
        let relative = match &r.poincare_relative {
            Some(list) => parse_series(list, &format!("{path}.poincare_relative"), c).map(Some),
            None => Some(None),
        };
        if let (Some(poincare), Some(poincare_relative)) = (poincare, relative) {
            out.push(BoundaryComponent {
                id: r.id.clone(),
                class,
                ind_plus: r.ind_plus,
                ind_minus: r.ind_minus,
                poincare,
                poincare_relative,
            });
        }
    }
    out
}

/// Parses and validates a problem document, reporting every problem found.
pub fn parse_problem(text: &str) -> Result<ProblemDocument, Vec<FieldError>> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| {
        vec![FieldError { path: format!("line {} column {}", e.line(), e.column()), reason: e.to_string() }]
    })?;
    let mut c = Collector { errors: Vec::new() };
    let verts = parse_vertices(&raw.vertices, &mut c);
    let Some(verts) = verts else {
        return Err(c.errors);
    };
    let mut facets = Vec::new();
    for (i, s) in raw.simplices.iter().enumerate() {
        if let Some(simplex) = verts.simplex(s, &format!("simplices[{i}]"), &mut c) {
            facets.push(simplex);
        }
    }
    let complex = match SimplicialComplex::from_facets(verts.labels.clone(), facets) {
        Ok(k) => k,
        Err(e) => {
            c.push("simplices", e.to_string());
            return Err(c.errors);
        }
    };
    let boundary = raw.boundary.as_ref().and_then(|b| parse_subcomplex(&complex, &verts, b, "boundary", &mut c));
    let (cocycle, cocycle_scale) = parse_cocycle(&complex, &verts, &raw.cocycle, &mut c);
    let sign_cocycle = raw
        .sign_cocycle
        .as_ref()
        .and_then(|list| parse_signs(&complex, &verts, list, "sign_cocycle", &mut c));
    if raw.group.is_none() && raw.action.is_some() {
        c.push("action", "given without a group");
    }
    if raw.group.is_none() && raw.characters.is_some() {
        c.push("characters", "given without a group");
    }
    let symmetry = parse_group(&raw, &complex, &verts, &mut c);
    let mut doc = ProblemDocument {
        complex,
        boundary,
        cocycle,
        cocycle_scale,
        sign_cocycle,
        symmetry,
        critical: None,
        boundary_critical: None,
    };
    if let Some(list) = &raw.critical {
        if raw.group.is_some() && doc.symmetry.is_none() {
            c.push("critical", "skipped: the group section is invalid");
        } else {
            let sym = doc.symmetry_or_trivial();
            doc.critical = Some(parse_critical(list, &doc.complex, &verts, &sym, &mut c));
        }
    }
    if let Some(list) = &raw.boundary_critical {
        doc.boundary_critical = Some(parse_boundary_critical(list, &mut c));
    }
    if c.errors.is_empty() {
        Ok(doc)
    } else {
        Err(c.errors)
    }
}
