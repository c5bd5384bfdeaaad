//! Finite oriented simplicial complexes, subcomplexes, untwisted (relative)
//! Betti numbers and integer 1-cocycles.
//!
//! Every simplex is stored as a strictly increasing list of vertex indices and
//! carries the orientation given by that order.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_traits::Zero;

use crate::algebra::{rat, Matrix, RankOverField, Rational};
use crate::error::{Error, Result};

pub type Simplex = Vec<usize>;

/// Sorts `vertices` and returns the sign of the sorting permutation, or
/// `None` when a vertex repeats.
pub fn normalize_simplex(vertices: &[usize]) -> Option<(Simplex, i8)> {
    let mut v = vertices.to_vec();
    let mut sign = 1i8;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    simplices: Vec<Vec<Simplex>>,
    lookup: HashMap<Simplex, usize>,
}

impl SimplicialComplex {
    /// Builds a complex from an explicit list of simplices; every face of every
    /// simplex must be listed too. Vertices `0..labels.len()` are always present.
    pub fn new(labels: Vec<String>, simplices: Vec<Simplex>) -> Result<Self> {
        Self::build(labels, simplices, false)
    }

    /// Builds the smallest complex containing the given simplices.
    pub fn from_facets(labels: Vec<String>, facets: Vec<Simplex>) -> Result<Self> {
        Self::build(labels, facets, true)
    }

    /// Complex with vertices labelled `0, 1, …, n-1`.
    pub fn from_facets_unlabelled(n: usize, facets: Vec<Simplex>) -> Result<Self> {
        Self::from_facets((0..n).map(|i| i.to_string()).collect(), facets)
    }

    fn build(labels: Vec<String>, input: Vec<Simplex>, close: bool) -> Result<Self> {
        let n = labels.len();
        let unique: BTreeSet<&String> = labels.iter().collect();
        if unique.len() != n {
            return Err(Error::InvalidComplex("duplicate vertex label".into()));
        }
        let mut all: BTreeSet<(usize, Simplex)> = (0..n).map(|v| (0, vec![v])).collect();
        let mut seen = BTreeSet::new();
        for raw in &input {
            if raw.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            if let Some(&v) = raw.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidComplex(format!("vertex index {v} out of range")));
            }
            let (s, _) = normalize_simplex(raw)
                .ok_or_else(|| Error::InvalidComplex(format!("repeated vertex in {raw:?}")))?;
            if !seen.insert(s.clone()) && !close {
                return Err(Error::InvalidComplex(format!("duplicate simplex {}", name_of(&labels, &s))));
            }
            if close {
                for face in all_faces(&s) {
                    all.insert((face.len() - 1, face));
                }
            } else {
                all.insert((s.len() - 1, s));
            }
        }
        if !close {
            for (_, s) in &all {
                if s.len() < 2 {
                    continue;
                }
                for i in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(i);
                    if !all.contains(&(f.len() - 1, f.clone())) {
                        return Err(Error::InvalidComplex(format!(
                            "face {} of {} is missing",
                            name_of(&labels, &f),
                            name_of(&labels, s)
                        )));
                    }
                }
            }
        }
        let top = all.iter().map(|(d, _)| *d).max();
        let mut simplices: Vec<Vec<Simplex>> = vec![Vec::new(); top.map_or(0, |d| d + 1)];
        for (d, s) in all {
            simplices[d].push(s);
        }
        let mut lookup = HashMap::new();
        for level in &simplices {
            for (i, s) in level.iter().enumerate() {
                lookup.insert(s.clone(), i);
            }
        }
        Ok(SimplicialComplex { labels, simplices, lookup })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Top dimension; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    /// Number of `k`-simplices.
    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn simplex(&self, k: usize, idx: usize) -> &Simplex {
        &self.simplices[k][idx]
    }

    /// Index of a simplex given by sorted vertices.
    pub fn index_of(&self, sorted: &[usize]) -> Option<usize> {
        self.lookup.get(sorted).copied()
    }

    /// Index of the edge joining `u` and `v`, with `+1` when `u < v`.
    pub fn edge(&self, u: usize, v: usize) -> Option<(usize, i8)> {
        if u < v {
            self.index_of(&[u, v]).map(|i| (i, 1))
        } else {
            self.index_of(&[v, u]).map(|i| (i, -1))
        }
    }

    pub fn simplex_name(&self, s: &[usize]) -> String {
        name_of(&self.labels, s)
    }

    /// Codimension-one faces of the `k`-simplex `idx` with incidence signs.
    pub fn faces(&self, k: usize, idx: usize) -> Vec<(usize, i8)> {
        let s = &self.simplices[k][idx];
        if k == 0 {
            return Vec::new();
        }
        (0..s.len())
            .map(|i| {
                let mut f = s.clone();
                f.remove(i);
                let fi = self.index_of(&f).expect("complex is closed under faces");
                (fi, if i % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    }

    /// Boundary `∂_k : C_k → C_{k-1}` as a `count(k-1) × count(k)` matrix.
    pub fn boundary_matrix(&self, k: usize) -> Result<Matrix<Rational>> {
        let max = self.dim().unwrap_or(0);
        if k == 0 || k > max {
            return Err(Error::DimensionOutOfRange { k, max });
        }
        let mut m = Matrix::zeros(self.count(k - 1), self.count(k));
        for j in 0..self.count(k) {
            for (i, sign) in self.faces(k, j) {
                m[(i, j)] = rat(sign as i64);
            }
        }
        Ok(m)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, l)| if k % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// `b_k = dim ker ∂_k − rank ∂_{k+1}` over ℚ, for `k = 0..=dim`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        relative_betti(self, &Subcomplex::empty(self)).expect("empty subcomplex is valid")
    }

    /// Vertices adjacent to `v`, in increasing order.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .simplices(1)
            .iter()
            .filter_map(|e| {
                if e[0] == v {
                    Some(e[1])
                } else if e[1] == v {
                    Some(e[0])
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

fn name_of(labels: &[String], s: &[usize]) -> String {
    let names: Vec<&str> = s.iter().map(|&v| labels.get(v).map_or("?", String::as_str)).collect();
    format!("[{}]", names.join(","))
}

fn all_faces(s: &[usize]) -> Vec<Simplex> {
    let n = s.len();
    (1u64..(1u64 << n))
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect())
        .collect()
}

/// A set of simplices of a parent complex that is closed under faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    members: Vec<BTreeSet<usize>>,
}

impl Subcomplex {
    pub fn empty(parent: &SimplicialComplex) -> Self {
        Subcomplex { members: vec![BTreeSet::new(); parent.simplices.len()] }
    }

    /// Validates that the given simplices (per dimension, by index) form a
    /// subcomplex of `parent`.
    pub fn new(parent: &SimplicialComplex, members: Vec<BTreeSet<usize>>) -> Result<Self> {
        let mut padded = members;
        if padded.len() > parent.simplices.len() {
            if padded[parent.simplices.len()..].iter().any(|m| !m.is_empty()) {
                return Err(Error::NotSubcomplex("simplex dimension exceeds the parent".into()));
            }
            padded.truncate(parent.simplices.len());
        }
        padded.resize(parent.simplices.len(), BTreeSet::new());
        let sub = Subcomplex { members: padded };
        sub.validate(parent)?;
        Ok(sub)
    }

    /// Closure of the given vertex lists; each must name a simplex of `parent`.
    pub fn closure_of(parent: &SimplicialComplex, simplices: &[Simplex]) -> Result<Self> {
        let mut members = vec![BTreeSet::new(); parent.simplices.len()];
        for raw in simplices {
            let (s, _) = normalize_simplex(raw)
                .ok_or_else(|| Error::NotSubcomplex(format!("repeated vertex in {raw:?}")))?;
            if s.is_empty() || parent.index_of(&s).is_none() {
                return Err(Error::NotSubcomplex(format!("{} is not a simplex of the complex", parent.simplex_name(&s))));
            }
            for f in all_faces(&s) {
                let idx = parent.index_of(&f).expect("faces of a simplex are present");
                members[f.len() - 1].insert(idx);
            }
        }
        Ok(Subcomplex { members })
    }

    /// Checks that every member exists in `parent` and every face of a member is a member.
    pub fn validate(&self, parent: &SimplicialComplex) -> Result<()> {
        if self.members.len() > parent.simplices.len() {
            return Err(Error::NotSubcomplex("simplex dimension exceeds the parent".into()));
        }
        for (k, set) in self.members.iter().enumerate() {
            for &i in set {
                if i >= parent.count(k) {
                    return Err(Error::NotSubcomplex(format!("no {k}-simplex with index {i}")));
                }
                for (f, _) in parent.faces(k, i) {
                    if !self.members[k - 1].contains(&f) {
                        return Err(Error::NotSubcomplex(format!(
                            "{} lacks its face {}",
                            parent.simplex_name(parent.simplex(k, i)),
                            parent.simplex_name(parent.simplex(k - 1, f))
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, k: usize, idx: usize) -> bool {
        self.members.get(k).is_some_and(|m| m.contains(&idx))
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.contains(0, v)
    }

    pub fn members(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        self.members.get(k).into_iter().flatten().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.members.iter().all(BTreeSet::is_empty)
    }

    /// The subcomplex as a complex in its own right, with the map from its
    /// vertex indices to parent vertex indices.
    pub fn to_complex(&self, parent: &SimplicialComplex) -> (SimplicialComplex, Vec<usize>) {
        let verts: Vec<usize> = self.members(0).collect();
        let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = verts.iter().map(|&v| parent.labels[v].clone()).collect();
        let simplices = self
            .members
            .iter()
            .enumerate()
            .flat_map(|(k, set)| set.iter().map(move |&i| (k, i)))
            .map(|(k, i)| parent.simplex(k, i).iter().map(|v| local[v]).collect())
            .collect();
        let complex = SimplicialComplex::new(labels, simplices).expect("subcomplex is closed");
        (complex, verts)
    }
}

/// Kept cell indices per dimension for the quotient chain complex `C(K)/C(A)`.
pub(crate) fn relative_cells(k: &SimplicialComplex, a: &Subcomplex) -> Vec<Vec<usize>> {
    (0..k.simplices.len())
        .map(|d| (0..k.count(d)).filter(|&i| !a.contains(d, i)).collect())
        .collect()
}

/// Dimensions of `H^i(K, A; ℚ)` for `i = 0..=dim K`, from the quotient chain complex.
pub fn relative_betti(k: &SimplicialComplex, a: &Subcomplex) -> Result<Vec<usize>> {
    a.validate(k)?;
    let cells = relative_cells(k, a);
    let ranks: Vec<usize> = (0..=cells.len())
        .map(|d| {
            if d == 0 || d >= cells.len() {
                return 0;
            }
            let pos: HashMap<usize, usize> = cells[d - 1].iter().enumerate().map(|(i, &c)| (c, i)).collect();
            let mut m = Matrix::zeros(cells[d - 1].len(), cells[d].len());
            for (j, &c) in cells[d].iter().enumerate() {
                for (f, sign) in k.faces(d, c) {
                    if let Some(&i) = pos.get(&f) {
                        m[(i, j)] = rat(sign as i64);
                    }
                }
            }
            m.rank()
        })
        .collect();
    Ok((0..cells.len()).map(|d| cells[d].len() - ranks[d] - ranks[d + 1]).collect())
}

/// Integer-valued 1-cochain, one value per edge in its increasing orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerCocycle {
    values: Vec<i64>,
}

/// Outcome of a cocycle-condition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleCheck {
    pub holds: bool,
    /// Offending 2-simplices, by index.
    pub violators: Vec<usize>,
}

impl IntegerCocycle {
    pub fn new(k: &SimplicialComplex, values: Vec<i64>) -> Result<Self> {
        if values.len() != k.count(1) {
            return Err(Error::InvalidComplex(format!(
                "cochain has {} values for {} edges",
                values.len(),
                k.count(1)
            )));
        }
        Ok(IntegerCocycle { values })
    }

    pub fn zero(k: &SimplicialComplex) -> Self {
        IntegerCocycle { values: vec![0; k.count(1)] }
    }

    /// Builds a cochain from oriented edge values `(u, v, θ(u→v))`; unspecified edges get 0.
    pub fn from_oriented(k: &SimplicialComplex, entries: &[(usize, usize, i64)]) -> Result<Self> {
        let mut values = vec![0; k.count(1)];
        for &(u, v, val) in entries {
            let (idx, sign) = k.edge(u, v).ok_or_else(|| {
                Error::InvalidComplex(format!("no edge {}", k.simplex_name(&[u.min(v), u.max(v)])))
            })?;
            values[idx] = sign as i64 * val;
        }
        Ok(IntegerCocycle { values })
    }

    /// The coboundary `δf`, `(δf)(u→v) = f(v) − f(u)`.
    pub fn coboundary(k: &SimplicialComplex, f: &[i64]) -> Self {
        IntegerCocycle { values: k.simplices(1).iter().map(|e| f[e[1]] - f[e[0]]).collect() }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `θ(u→v)` for the edge `{u, v}`; zero when `u == v`.
    pub fn value(&self, k: &SimplicialComplex, u: usize, v: usize) -> i64 {
        if u == v {
            return 0;
        }
        let (idx, sign) = k.edge(u, v).expect("vertices span an edge");
        sign as i64 * self.values[idx]
    }

    pub fn scaled(&self, factor: i64) -> Self {
        IntegerCocycle { values: self.values.iter().map(|v| v * factor).collect() }
    }

    pub fn plus(&self, other: &Self) -> Self {
        IntegerCocycle { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `θ(v₁v₂) − θ(v₀v₂) + θ(v₀v₁) = 0` on every 2-simplex.
    pub fn verify(&self, k: &SimplicialComplex) -> CocycleCheck {
        let violators: Vec<usize> = k
            .simplices(2)
            .iter()
            .enumerate()
            .filter(|(_, t)| {
                self.value(k, t[1], t[2]) - self.value(k, t[0], t[2]) + self.value(k, t[0], t[1]) != 0
            })
            .map(|(i, _)| i)
            .collect();
        CocycleCheck { holds: violators.is_empty(), violators }
    }

    /// Like [`verify`](Self::verify) but as a `Result` naming the violators.
    pub fn ensure_cocycle(&self, k: &SimplicialComplex) -> Result<()> {
        let check = self.verify(k);
        if check.holds {
            return Ok(());
        }
        Err(Error::NotCocycle(check.violators.iter().map(|&i| k.simplex_name(k.simplex(2, i))).collect()))
    }

    /// Periods on a basis of `H_1(K; ℚ)` made of fundamental cycles of a
    /// spanning forest.
    pub fn periods(&self, k: &SimplicialComplex) -> Periods {
        let cycles = homology_cycle_basis(k);
        let values = cycles
            .iter()
            .map(|c| c.iter().map(|&(e, coef)| coef * self.values[e]).sum())
            .collect();
        Periods { cycles, values }
    }
}

/// Periods of a cocycle on a homology basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Periods {
    /// Each cycle as `(edge index, coefficient)` pairs.
    pub cycles: Vec<Vec<(usize, i64)>>,
    pub values: Vec<i64>,
}

/// Fundamental cycles of a BFS spanning forest, reduced to a basis of
/// `H_1(K; ℚ)` by discarding those dependent on boundaries.
pub fn homology_cycle_basis(k: &SimplicialComplex) -> Vec<Vec<(usize, i64)>> {
    let n = k.vertex_count();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n]; // (parent vertex, edge)
    let mut visited = vec![false; n];
    let mut tree_edges = BTreeSet::new();
    let adjacency: Vec<Vec<usize>> = (0..n).map(|v| k.neighbours(v)).collect();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adjacency[u] {
                if !visited[w] {
                    visited[w] = true;
                    let (e, _) = k.edge(u, w).expect("adjacent");
                    parent[w] = Some((u, e));
                    tree_edges.insert(e);
                    queue.push_back(w);
                }
            }
        }
    }
    // Oriented path from x up to its root, as edge coefficients.
    let to_root = |mut x: usize| {
        let mut path: HashMap<usize, i64> = HashMap::new();
        while let Some((p, e)) = parent[x] {
            *path.entry(e).or_default() += if x < p { 1 } else { -1 };
            x = p;
        }
        path
    };
    let non_tree: Vec<usize> = (0..k.count(1)).filter(|e| !tree_edges.contains(e)).collect();
    let position: HashMap<usize, usize> = non_tree.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    // Boundaries of triangles in non-tree coordinates.
    let mut generators: Vec<Vec<Rational>> = (0..k.count(2))
        .map(|t| {
            let mut col = vec![Rational::zero(); non_tree.len()];
            for (e, sign) in k.faces(2, t) {
                if let Some(&i) = position.get(&e) {
                    col[i] = rat(sign as i64);
                }
            }
            col
        })
        .collect();
    let rank_of = |cols: &Vec<Vec<Rational>>| -> usize {
        if cols.is_empty() || non_tree.is_empty() {
            return 0;
        }
        Matrix::from_rows(cols.clone()).rank()
    };
    let mut current = rank_of(&generators);
    let mut basis = Vec::new();
    for (i, &e) in non_tree.iter().enumerate() {
        let mut unit = vec![Rational::zero(); non_tree.len()];
        unit[i] = rat(1);
        generators.push(unit);
        let r = rank_of(&generators);
        if r > current {
            current = r;
            let edge = k.simplex(1, e);
            let (u, v) = (edge[0], edge[1]);
            let mut cycle: HashMap<usize, i64> = HashMap::from([(e, 1)]);
            for (te, c) in to_root(v) {
                *cycle.entry(te).or_default() += c;
            }
            for (te, c) in to_root(u) {
                *cycle.entry(te).or_default() -= c;
            }
            let mut cycle: Vec<(usize, i64)> = cycle.into_iter().filter(|&(_, c)| c != 0).collect();
            cycle.sort_unstable();
            basis.push(cycle);
        } else {
            generators.pop();
        }
    }
    basis
}

/// A `±1`-valued multiplicative 1-cocycle, modelling an orientation line system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignCocycle {
    values: Vec<i8>,
}

impl SignCocycle {
    pub fn new(k: &SimplicialComplex, values: Vec<i8>) -> Result<Self> {
        if values.len() != k.count(1) {
            return Err(Error::InvalidComplex(format!(
                "sign cochain has {} values for {} edges",
                values.len(),
                k.count(1)
            )));
        }
        if values.iter().any(|&v| v != 1 && v != -1) {
            return Err(Error::InvalidComplex("sign values must be +1 or -1".into()));
        }
        Ok(SignCocycle { values })
    }

    pub fn trivial(k: &SimplicialComplex) -> Self {
        SignCocycle { values: vec![1; k.count(1)] }
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// Sign transported along `u → v`; orientation does not matter for `±1`.
    pub fn value(&self, k: &SimplicialComplex, u: usize, v: usize) -> i8 {
        if u == v {
            return 1;
        }
        let (idx, _) = k.edge(u, v).expect("vertices span an edge");
        self.values[idx]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }

    pub fn verify(&self, k: &SimplicialComplex) -> CocycleCheck {
        let violators: Vec<usize> = k
            .simplices(2)
            .iter()
            .enumerate()
            .filter(|(_, t)| self.value(k, t[0], t[1]) * self.value(k, t[1], t[2]) * self.value(k, t[0], t[2]) != 1)
            .map(|(i, _)| i)
            .collect();
        CocycleCheck { holds: violators.is_empty(), violators }
    }

    pub fn ensure_cocycle(&self, k: &SimplicialComplex) -> Result<()> {
        let check = self.verify(k);
        if check.holds {
            return Ok(());
        }
        Err(Error::NotSignCocycle(check.violators.iter().map(|&i| k.simplex_name(k.simplex(2, i))).collect()))
    }
}
