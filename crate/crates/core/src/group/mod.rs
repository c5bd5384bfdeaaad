//! Finite groups given by multiplication tables, their characters, simplicial
//! actions, the induced action on twisted cohomology and free quotients.

mod action;
mod characters;
mod equivariant;
mod quotient;

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub use action::{verify_invariance, GroupAction, InvarianceCheck};
pub use characters::{parse_cyclotomic, Character, CharacterTable};
pub use equivariant::{
    equivariant_novikov_numbers, isotypic_multiplicities, isotypic_multiplicities_at, pair_with_character,
    regular_novikov_numbers, twisted_character,
    trace_on_twisted_cohomology, twisted_action_matrix, IsotypicReport,
};
pub use quotient::{descend_cocycle, quotient_complex, Quotient};

/// Finite group with elements `0..order`, given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    exponent: u32,
}

impl FiniteGroup {
    /// `table[a][b]` is the index of `a·b`.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidGroup("a group has at least one element".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGroup(format!("multiplication table must be {n}×{n}")));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidGroup("element labels repeat".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{} has no inverse", labels[a])))?;
            inverses.push(inv);
        }
        // Exhaustive up to 24 elements, a fixed stride of triples beyond.
        let stride = if n <= 24 { 1 } else { 7 };
        for a in (0..n).step_by(stride) {
            for b in 0..n {
                for c in (0..n).step_by(stride) {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative on ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let mut g = FiniteGroup { labels, table, identity, inverses, exponent: 1 };
        g.exponent = (0..n).map(|a| g.element_order(a)).fold(1, lcm);
        Ok(g)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `ℤ_n` with element `k` standing for `g^k`.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("g{k}") }).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(labels, table).expect("cyclic group table")
    }

    /// Direct product; element `(a, b)` has index `a·|H| + b`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let m = h.order();
        let n = g.order() * m;
        let labels = (0..n).map(|x| format!("({},{})", g.label(x / m), h.label(x % m))).collect();
        let table = (0..n)
            .map(|x| (0..n).map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m)).collect())
            .collect();
        Self::new(labels, table).expect("product of groups")
    }

    /// `S_3` acting on `{0, 1, 2}`; elements are the permutations in
    /// lexicographic order of their one-line notation, composed as maps
    /// (`(ab)(x) = a(b(x))`).
    pub fn symmetric3() -> Self {
        let perms = permutations3();
        let labels = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c = [a[b[0]], a[b[1]], a[b[2]]];
                        perms.iter().position(|p| *p == c).expect("closed")
                    })
                    .collect()
            })
            .collect();
        Self::new(labels, table).expect("symmetric group table")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn element_order(&self, a: usize) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let class: BTreeSet<usize> =
                (0..n).map(|g| self.mul(self.mul(g, a), self.inverse(g))).collect();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        set.contains(&self.identity)
            && set.iter().all(|&a| set.contains(&self.inverse(a)))
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    /// The subgroup on `elements` as a group in its own right, with the
    /// embedding of its element indices into `self`.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(elements) {
            return Err(Error::InvalidRestriction("elements do not form a subgroup".into()));
        }
        let embed: Vec<usize> = elements.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let pos = |x: usize| embed.iter().position(|&y| y == x).expect("closed");
        let labels = embed.iter().map(|&a| self.labels[a].clone()).collect();
        let table = embed.iter().map(|&a| embed.iter().map(|&b| pos(self.mul(a, b))).collect()).collect();
        Ok((FiniteGroup::new(labels, table)?, embed))
    }
}

fn permutations3() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups() {
        let g = FiniteGroup::cyclic(4);
        assert_eq!(g.exponent(), 4);
        assert_eq!(g.inverse(1), 3);
        assert_eq!(g.conjugacy_classes().len(), 4);
        assert_eq!(FiniteGroup::trivial().order(), 1);
    }

    #[test]
    fn klein_and_s3() {
        let k = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(k.exponent(), 2);
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.exponent(), 6);
        let sizes: Vec<usize> = s3.conjugacy_classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    #[test]
    fn rejects_non_groups() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteGroup::new(labels.clone(), vec![vec![0, 0], vec![0, 1]]).is_err());
        assert!(FiniteGroup::new(labels, vec![vec![0, 1]]).is_err());
        // a Latin square with identity that is not associative
        let labels: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::new(labels, table), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn subgroups() {
        let s3 = FiniteGroup::symmetric3();
        let rotations: Vec<usize> = ["012", "120", "201"].iter().map(|l| s3.index_of(l).unwrap()).collect();
        let (c3, embed) = s3.subgroup(&rotations).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(embed.len(), 3);
        assert!(s3.subgroup(&[0, 1, 3]).is_err());
    }
}
