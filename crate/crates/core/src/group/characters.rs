use num_traits::{One, Zero};

use super::FiniteGroup;
use crate::algebra::{parse_rational, rat, CyclotomicNumber, Rational};
use crate::error::{Error, Result};

/// Irreducible character, valued in ℚ(ζ_n) with `n` the group exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    /// Value at each group element.
    pub values: Vec<CyclotomicNumber>,
}

impl Character {
    pub fn degree(&self, group: &FiniteGroup) -> usize {
        let v = self.values[group.identity()].as_rational().expect("validated degree");
        v.to_integer().try_into().expect("validated degree")
    }
}

/// Complete table of irreducible characters of a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    group: FiniteGroup,
    classes: Vec<Vec<usize>>,
    characters: Vec<Character>,
}

impl CharacterTable {
    /// Validates a table given by values at every element.
    pub fn new(group: &FiniteGroup, characters: Vec<Character>) -> Result<Self> {
        let n = group.order();
        let order = group.exponent();
        let bad = |msg: String| Err(Error::InvalidCharacterTable(msg));
        let classes = group.conjugacy_classes();
        for chi in &characters {
            if chi.values.len() != n {
                return bad(format!("{} has {} values, expected {n}", chi.name, chi.values.len()));
            }
            if chi.values.iter().any(|v| v.order() != order) {
                return bad(format!("{} is not written over the exponent-{order} cyclotomic field", chi.name));
            }
            for class in &classes {
                if class.iter().any(|&g| chi.values[g] != chi.values[class[0]]) {
                    return bad(format!("{} is not constant on conjugacy classes", chi.name));
                }
            }
            let deg = chi.values[group.identity()].as_rational();
            if !deg.is_some_and(|d| d.is_integer() && d > Rational::zero()) {
                return bad(format!("{} has no positive integer degree", chi.name));
            }
        }
        let mut names: Vec<&String> = characters.iter().map(|c| &c.name).collect();
        names.sort();
        names.dedup();
        if names.len() != characters.len() {
            return bad("character names repeat".into());
        }
        if characters.len() != classes.len() {
            return bad(format!("{} characters for {} conjugacy classes", characters.len(), classes.len()));
        }
        let inv_order = Rational::new(1.into(), (n as i64).into());
        for (i, a) in characters.iter().enumerate() {
            for (j, b) in characters.iter().enumerate() {
                let inner = (0..n)
                    .fold(CyclotomicNumber::zero(order), |acc, g| acc.add(&a.values[g].mul(&b.values[g].conj())))
                    .scale(&inv_order);
                let expected = if i == j { Rational::one() } else { Rational::zero() };
                if inner != CyclotomicNumber::from_rational(order, expected) {
                    return bad(format!("{} and {} violate orthogonality", a.name, b.name));
                }
            }
        }
        let table = CharacterTable { group: group.clone(), classes, characters };
        let squares: usize = (0..table.characters.len()).map(|i| table.degree(i).pow(2)).sum();
        if squares != n {
            return bad(format!("squared degrees sum to {squares}, not {n}"));
        }
        Ok(table)
    }

    /// Table given by one value per conjugacy class (classes as in
    /// [`FiniteGroup::conjugacy_classes`]).
    pub fn from_class_values(group: &FiniteGroup, rows: Vec<(String, Vec<CyclotomicNumber>)>) -> Result<Self> {
        let classes = group.conjugacy_classes();
        let mut characters = Vec::new();
        for (name, per_class) in rows {
            if per_class.len() != classes.len() {
                return Err(Error::InvalidCharacterTable(format!(
                    "{name} has {} class values, expected {}",
                    per_class.len(),
                    classes.len()
                )));
            }
            let mut values = vec![CyclotomicNumber::zero(group.exponent()); group.order()];
            for (class, v) in classes.iter().zip(&per_class) {
                for &g in class {
                    values[g] = v.clone();
                }
            }
            characters.push(Character { name, values });
        }
        Self::new(group, characters)
    }

    /// `χ_j(g^k) = ζ^{jk}` on the cyclic group of [`FiniteGroup::cyclic`].
    pub fn cyclic(n: usize) -> (FiniteGroup, Self) {
        let g = FiniteGroup::cyclic(n);
        let order = g.exponent();
        let characters = (0..n)
            .map(|j| Character {
                name: if j == 0 { "trivial".to_string() } else { format!("chi{j}") },
                values: (0..n).map(|k| CyclotomicNumber::zeta_pow(order, (j * k) as i64)).collect(),
            })
            .collect();
        let table = Self::new(&g, characters).expect("cyclic characters");
        (g, table)
    }

    /// Bundled tables: `Z1`, `Z2`, `Z3`, `Z4`, `Z2xZ2`, `S3`.
    pub fn builtin(name: &str) -> Option<(FiniteGroup, Self)> {
        match name {
            "Z1" => Some(Self::cyclic(1)),
            "Z2" => {
                let (g, mut t) = Self::cyclic(2);
                t.characters[1].name = "sign".into();
                Some((g, t))
            }
            "Z3" => Some(Self::cyclic(3)),
            "Z4" => Some(Self::cyclic(4)),
            "Z2xZ2" => {
                let z2 = FiniteGroup::cyclic(2);
                let g = FiniteGroup::product(&z2, &z2);
                let characters = (0..4)
                    .map(|c: usize| Character {
                        name: if c == 0 { "trivial".to_string() } else { format!("chi{}{}", c / 2, c % 2) },
                        values: (0..4)
                            .map(|x: usize| {
                                let e = (c / 2) * (x / 2) + (c % 2) * (x % 2);
                                CyclotomicNumber::from_rational(2, rat(if e.is_multiple_of(2) { 1 } else { -1 }))
                            })
                            .collect(),
                    })
                    .collect();
                let t = Self::new(&g, characters).expect("Klein characters");
                Some((g, t))
            }
            "S3" => {
                let g = FiniteGroup::symmetric3();
                let order = g.exponent();
                let perms: Vec<Vec<usize>> = g
                    .labels()
                    .iter()
                    .map(|l| l.chars().map(|c| c.to_digit(10).expect("digit") as usize).collect())
                    .collect();
                let fixed = |p: &Vec<usize>| (0..3).filter(|&i| p[i] == i).count() as i64;
                let sign = |p: &Vec<usize>| if matches!(fixed(p), 1) { -1 } else { 1 };
                let q = |v: i64| CyclotomicNumber::from_rational(order, rat(v));
                let characters = vec![
                    Character { name: "trivial".into(), values: perms.iter().map(|_| q(1)).collect() },
                    Character { name: "sign".into(), values: perms.iter().map(|p| q(sign(p))).collect() },
                    Character { name: "standard".into(), values: perms.iter().map(|p| q(fixed(p) - 1)).collect() },
                ];
                let t = Self::new(&g, characters).expect("S3 characters");
                Some((g, t))
            }
            _ => None,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.characters[i].degree(&self.group)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.characters
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::UnknownRepresentation(name.to_string()))
    }

    /// Index of the dual representation, `χ*(g) = conj χ(g)`.
    pub fn dual(&self, i: usize) -> usize {
        let conj: Vec<CyclotomicNumber> = self.characters[i].values.iter().map(CyclotomicNumber::conj).collect();
        self.characters.iter().position(|c| c.values == conj).expect("a complete table is closed under duals")
    }
}

/// Parses an element of ℚ(ζ_n) written in `z`, such as `1`, `-1/2`, `z^2`,
/// `-1 - z` or `3*z^4 + 1/2*z`. Exponents are reduced mod `n`.
pub fn parse_cyclotomic(order: u32, text: &str) -> Option<CyclotomicNumber> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return None;
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in compact.char_indices() {
        if (c == '+' || c == '-') && i > 0 && !compact[..i].ends_with('^') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    let mut acc = CyclotomicNumber::zero(order);
    for term in terms {
        let (negative, body) = match term.as_bytes().first()? {
            b'-' => (true, &term[1..]),
            b'+' => (false, &term[1..]),
            _ => (false, term),
        };
        let (coeff, power) = match body.find('z') {
            None => (parse_rational(body)?, 0i64),
            Some(p) => {
                let head = body[..p].trim_end_matches('*');
                let coeff = if head.is_empty() { rat(1) } else { parse_rational(head)? };
                let tail = &body[p + 1..];
                let power = if tail.is_empty() { 1 } else { tail.strip_prefix('^')?.parse().ok()? };
                (coeff, power)
            }
        };
        let coeff = if negative { -coeff } else { coeff };
        acc = acc.add(&CyclotomicNumber::zeta_pow(order, power).scale(&coeff));
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for (name, count) in [("Z1", 1), ("Z2", 2), ("Z3", 3), ("Z4", 4), ("Z2xZ2", 4), ("S3", 3)] {
            let (g, t) = CharacterTable::builtin(name).unwrap();
            assert_eq!(t.len(), count, "{name}");
            let squares: usize = (0..t.len()).map(|i| t.degree(i).pow(2)).sum();
            assert_eq!(squares, g.order());
        }
        assert!(CharacterTable::builtin("A5").is_none());
    }

    #[test]
    fn duals() {
        let (_, t) = CharacterTable::builtin("Z3").unwrap();
        assert_eq!(t.dual(0), 0);
        assert_eq!(t.dual(1), 2);
        let (_, t) = CharacterTable::builtin("S3").unwrap();
        assert!((0..3).all(|i| t.dual(i) == i));
    }

    #[test]
    fn rejects_bad_tables() {
        let g = FiniteGroup::cyclic(2);
        let q = |v: i64| CyclotomicNumber::from_rational(2, rat(v));
        let twice_trivial = vec![
            ("a".to_string(), vec![q(1), q(1)]),
            ("b".to_string(), vec![q(1), q(1)]),
        ];
        assert!(matches!(
            CharacterTable::from_class_values(&g, twice_trivial),
            Err(Error::InvalidCharacterTable(_))
        ));
        let incomplete = vec![("a".to_string(), vec![q(1), q(1)])];
        assert!(CharacterTable::from_class_values(&g, incomplete).is_err());
        let ok = vec![("a".to_string(), vec![q(1), q(1)]), ("b".to_string(), vec![q(1), q(-1)])];
        assert!(CharacterTable::from_class_values(&g, ok).is_ok());
    }

    #[test]
    fn parses_cyclotomic_text() {
        let z3 = |k| CyclotomicNumber::zeta_pow(3, k);
        assert_eq!(parse_cyclotomic(3, "z^2"), Some(z3(2)));
        // 1 + z + z^2 = 0 in ℚ(ζ_3)
        assert_eq!(parse_cyclotomic(3, "-1 - z"), Some(z3(2)));
        assert_eq!(parse_cyclotomic(3, "1/2*z"), Some(z3(1).scale(&crate::algebra::ratio(1, 2))));
        assert_eq!(parse_cyclotomic(4, "z^5"), Some(CyclotomicNumber::zeta_pow(4, 1)));
        assert_eq!(parse_cyclotomic(2, "-1"), Some(CyclotomicNumber::from_rational(2, rat(-1))));
        assert_eq!(parse_cyclotomic(3, "y"), None);
        assert_eq!(parse_cyclotomic(3, ""), None);
    }
}
