use std::collections::BTreeSet;

use super::{verify_invariance, GroupAction};
use crate::complex::{IntegerCocycle, SimplicialComplex};
use crate::error::{Error, Result};

/// Orbit complex `K/G` of a free action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub complex: SimplicialComplex,
    /// Quotient vertex of every vertex of `K`.
    pub vertex_map: Vec<usize>,
    /// Least vertex of each orbit.
    pub representatives: Vec<usize>,
}

/// `K/G` for an action that is free on simplices and whose orbit
/// identification is simplicial.
pub fn quotient_complex(a: &GroupAction) -> Result<Quotient> {
    let k = a.complex();
    let group = a.group();
    let dims = k.dim().map_or(0, |d| d + 1);
    for g in (0..group.order()).filter(|&g| g != group.identity()) {
        for d in 0..dims {
            if let Some(i) = (0..k.count(d)).find(|&i| a.image(g, d, i).0 == i) {
                return Err(Error::NotFree(format!("{} fixes {}", group.label(g), k.simplex_name(k.simplex(d, i)))));
            }
        }
    }
    let n = k.vertex_count();
    let mut vertex_map = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for v in 0..n {
        if vertex_map[v] != usize::MAX {
            continue;
        }
        for g in 0..group.order() {
            vertex_map[a.vertex_image(g, v)] = representatives.len();
        }
        representatives.push(v);
    }
    let mut simplices: Vec<Vec<usize>> = Vec::new();
    for d in 0..dims {
        let mut images = BTreeSet::new();
        for s in k.simplices(d) {
            let image: BTreeSet<usize> = s.iter().map(|&v| vertex_map[v]).collect();
            if image.len() != s.len() {
                return Err(Error::NotAdmissible(format!("{} collapses in the quotient", k.simplex_name(s))));
            }
            images.insert(image.into_iter().collect::<Vec<_>>());
        }
        if images.len() * group.order() != k.count(d) {
            return Err(Error::NotAdmissible(format!(
                "distinct orbits of {d}-simplices are identified; subdivide further"
            )));
        }
        simplices.extend(images);
    }
    let labels = representatives.iter().map(|&v| k.labels()[v].clone()).collect();
    let complex = SimplicialComplex::new(labels, simplices)?;
    Ok(Quotient { complex, vertex_map, representatives })
}

/// The cocycle induced on `K/G` by an invariant cocycle on `K`.
pub fn descend_cocycle(a: &GroupAction, q: &Quotient, theta: &IntegerCocycle) -> Result<IntegerCocycle> {
    verify_invariance(a, theta).into_result()?;
    let k = a.complex();
    let mut entries = Vec::with_capacity(q.complex.count(1));
    for e in k.simplices(1) {
        let (u, v) = (e[0], e[1]);
        entries.push((q.vertex_map[u], q.vertex_map[v], theta.value(k, u, v)));
    }
    entries.sort();
    entries.dedup();
    IntegerCocycle::from_oriented(&q.complex, &entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn ngon(n: usize) -> SimplicialComplex {
        SimplicialComplex::from_facets_unlabelled(n, (0..n).map(|i| vec![i, (i + 1) % n]).collect()).unwrap()
    }

    fn rotation(k: &SimplicialComplex, step: usize, order: usize) -> GroupAction {
        let n = k.vertex_count();
        let maps = (0..order).map(|g| (0..n).map(|v| (v + g * step) % n).collect()).collect();
        GroupAction::new(&FiniteGroup::cyclic(order), k, maps).unwrap()
    }

    #[test]
    fn trivial_group_quotient_is_identity() {
        let k = ngon(4);
        let q = quotient_complex(&GroupAction::trivial(&k)).unwrap();
        assert_eq!(q.complex, k);
    }

    #[test]
    fn antipodal_hexagon_descends_to_triangle() {
        let k = ngon(6);
        let a = rotation(&k, 3, 2);
        let q = quotient_complex(&a).unwrap();
        assert_eq!(q.complex.counts(), vec![3, 3]);
        let theta = IntegerCocycle::from_oriented(&k, &[(0, 1, 1), (3, 4, 1)]).unwrap();
        let down = descend_cocycle(&a, &q, &theta).unwrap();
        let up = theta.periods(&k).values;
        let below = down.periods(&q.complex).values;
        assert_eq!(up.len(), 1);
        assert_eq!(below.len(), 1);
        assert_eq!(below[0].abs() * 2, up[0].abs());
    }

    #[test]
    fn z3_on_nonagon() {
        let k = ngon(9);
        let q = quotient_complex(&rotation(&k, 3, 3)).unwrap();
        assert_eq!(q.complex.betti_numbers(), vec![1, 1]);
        assert_eq!(q.complex.counts(), vec![3, 3]);
    }

    #[test]
    fn rejects_fixed_points_and_collapse() {
        let k = ngon(6);
        let reflection: Vec<usize> = (0..6).map(|v| (6 - v) % 6).collect();
        let a = GroupAction::new(&FiniteGroup::cyclic(2), &k, vec![(0..6).collect(), reflection]).unwrap();
        assert!(matches!(quotient_complex(&a), Err(Error::NotFree(_))));
        let square = ngon(4);
        assert!(matches!(quotient_complex(&rotation(&square, 2, 2)), Err(Error::NotAdmissible(_))));
    }
}
