use std::collections::BTreeSet;

use super::FiniteGroup;
use crate::complex::{normalize_simplex, IntegerCocycle, SignCocycle, SimplicialComplex, Subcomplex};
use crate::error::{Error, Result};

/// Simplicial action of a finite group, induced by permutations of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    group: FiniteGroup,
    complex: SimplicialComplex,
    vertex_maps: Vec<Vec<usize>>,
    /// `images[g][k][i] = (j, ε)` when `g` maps the `i`-th `k`-simplex onto the
    /// `j`-th with orientation sign `ε`.
    images: Vec<Vec<Vec<(usize, i8)>>>,
}

impl GroupAction {
    /// `vertex_maps[g][v]` is the image of vertex `v` under element `g`.
    pub fn new(group: &FiniteGroup, complex: &SimplicialComplex, vertex_maps: Vec<Vec<usize>>) -> Result<Self> {
        let n = complex.vertex_count();
        let bad = |msg: String| Err(Error::InvalidAction(msg));
        if vertex_maps.len() != group.order() {
            return bad(format!("{} vertex maps for a group of order {}", vertex_maps.len(), group.order()));
        }
        for (g, map) in vertex_maps.iter().enumerate() {
            let distinct: BTreeSet<usize> = map.iter().copied().collect();
            if map.len() != n || distinct.len() != n || map.iter().any(|&v| v >= n) {
                return bad(format!("{} does not permute the vertices", group.label(g)));
            }
        }
        let identity = &vertex_maps[group.identity()];
        if identity.iter().enumerate().any(|(v, &w)| v != w) {
            return bad("the identity moves a vertex".into());
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                let ab = group.mul(a, b);
                if (0..n).any(|v| vertex_maps[ab][v] != vertex_maps[a][vertex_maps[b][v]]) {
                    return bad(format!(
                        "not a homomorphism at ({}, {})",
                        group.label(a),
                        group.label(b)
                    ));
                }
            }
        }
        let dims = complex.dim().map_or(0, |d| d + 1);
        let mut images = Vec::with_capacity(group.order());
        for (g, map) in vertex_maps.iter().enumerate() {
            let mut per_dim = Vec::with_capacity(dims);
            for k in 0..dims {
                let mut list = Vec::with_capacity(complex.count(k));
                for s in complex.simplices(k) {
                    let moved: Vec<usize> = s.iter().map(|&v| map[v]).collect();
                    let (sorted, sign) = normalize_simplex(&moved).expect("bijective vertex map");
                    let Some(j) = complex.index_of(&sorted) else {
                        return bad(format!(
                            "{} maps {} to {}, which is not a simplex",
                            group.label(g),
                            complex.simplex_name(s),
                            complex.simplex_name(&sorted)
                        ));
                    };
                    list.push((j, sign));
                }
                per_dim.push(list);
            }
            images.push(per_dim);
        }
        Ok(GroupAction { group: group.clone(), complex: complex.clone(), vertex_maps, images })
    }

    /// The trivial group acting on `complex`.
    pub fn trivial(complex: &SimplicialComplex) -> Self {
        let identity = (0..complex.vertex_count()).collect();
        Self::new(&FiniteGroup::trivial(), complex, vec![identity]).expect("identity action")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn vertex_image(&self, g: usize, v: usize) -> usize {
        self.vertex_maps[g][v]
    }

    pub fn vertex_maps(&self) -> &[Vec<usize>] {
        &self.vertex_maps
    }

    /// Image of the `idx`-th `k`-simplex under `g`, with its orientation sign.
    pub fn image(&self, g: usize, k: usize, idx: usize) -> (usize, i8) {
        self.images[g][k][idx]
    }

    /// Elements mapping `z` onto itself.
    pub fn stabilizer(&self, z: &Subcomplex) -> Vec<usize> {
        let dims = self.complex.dim().map_or(0, |d| d + 1);
        (0..self.group.order())
            .filter(|&g| (0..dims).all(|k| z.members(k).all(|i| z.contains(k, self.image(g, k, i).0))))
            .collect()
    }

    /// Action of the subgroup on `elements` on the subcomplex `z`, with the
    /// subcomplex re-indexed as by [`Subcomplex::to_complex`].
    pub fn restrict(&self, elements: &[usize], z: &Subcomplex) -> Result<(GroupAction, SimplicialComplex, Vec<usize>)> {
        z.validate(&self.complex)?;
        let stab = self.stabilizer(z);
        if let Some(&g) = elements.iter().find(|g| !stab.contains(g)) {
            return Err(Error::InvalidRestriction(format!("{} does not preserve the subcomplex", self.group.label(g))));
        }
        let (sub, embed) = self.group.subgroup(elements)?;
        let (zc, vmap) = z.to_complex(&self.complex);
        let local = |v: usize| vmap.iter().position(|&w| w == v).expect("stabilized vertex");
        let maps = embed
            .iter()
            .map(|&g| vmap.iter().map(|&v| local(self.vertex_image(g, v))).collect())
            .collect();
        let action = GroupAction::new(&sub, &zc, maps)?;
        Ok((action, zc, embed))
    }
}

/// Outcome of an invariance test, with the offending `g·[u,v]` named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceCheck {
    pub holds: bool,
    pub violators: Vec<String>,
}

impl InvarianceCheck {
    pub fn into_result(self) -> Result<()> {
        if self.holds {
            Ok(())
        } else {
            Err(Error::NotInvariant(self.violators))
        }
    }
}

fn check_edges(a: &GroupAction, same: impl Fn(usize, usize, usize, usize) -> bool) -> InvarianceCheck {
    let k = a.complex();
    let mut violators = Vec::new();
    for g in 0..a.group().order() {
        for e in k.simplices(1) {
            let (u, v) = (e[0], e[1]);
            if !same(u, v, a.vertex_image(g, u), a.vertex_image(g, v)) {
                violators.push(format!("{}·{}", a.group().label(g), k.simplex_name(e)));
            }
        }
    }
    InvarianceCheck { holds: violators.is_empty(), violators }
}

/// Whether `θ(g·u → g·v) = θ(u → v)` for every edge and every group element.
pub fn verify_invariance(a: &GroupAction, theta: &IntegerCocycle) -> InvarianceCheck {
    let k = a.complex();
    check_edges(a, |u, v, gu, gv| theta.value(k, gu, gv) == theta.value(k, u, v))
}

pub(crate) fn verify_sign_invariance(a: &GroupAction, eps: &SignCocycle) -> InvarianceCheck {
    let k = a.complex();
    check_edges(a, |u, v, gu, gv| eps.value(k, gu, gv) == eps.value(k, u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hexagon() -> SimplicialComplex {
        SimplicialComplex::from_facets_unlabelled(6, (0..6).map(|i| vec![i, (i + 1) % 6]).collect()).unwrap()
    }

    fn rotation_action(k: &SimplicialComplex, step: usize, order: usize) -> GroupAction {
        let n = k.vertex_count();
        let maps = (0..order).map(|g| (0..n).map(|v| (v + g * step) % n).collect()).collect();
        GroupAction::new(&FiniteGroup::cyclic(order), k, maps).unwrap()
    }

    fn cyclic_ones(k: &SimplicialComplex) -> IntegerCocycle {
        let n = k.vertex_count();
        let entries: Vec<(usize, usize, i64)> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
        IntegerCocycle::from_oriented(k, &entries).unwrap()
    }

    #[test]
    fn trivial_group_is_invariant() {
        let k = hexagon();
        let a = GroupAction::trivial(&k);
        assert!(verify_invariance(&a, &cyclic_ones(&k)).holds);
    }

    #[test]
    fn rotation_preserves_cyclic_cocycle() {
        let k = hexagon();
        let a = rotation_action(&k, 2, 3);
        assert!(verify_invariance(&a, &cyclic_ones(&k)).holds);
    }

    #[test]
    fn reflection_reverses_cyclic_cocycle() {
        let k = hexagon();
        let reflection: Vec<usize> = (0..6).map(|v| (6 - v) % 6).collect();
        let a = GroupAction::new(&FiniteGroup::cyclic(2), &k, vec![(0..6).collect(), reflection.clone()]).unwrap();
        let check = verify_invariance(&a, &cyclic_ones(&k));
        // oracle: enumerate edges [i, i+1] and compare θ on the reflected pair
        let theta = cyclic_ones(&k);
        let expected: Vec<String> = k
            .simplices(1)
            .iter()
            .filter(|e| theta.value(&k, reflection[e[0]], reflection[e[1]]) != theta.value(&k, e[0], e[1]))
            .map(|e| format!("g1·{}", k.simplex_name(e)))
            .collect();
        assert!(!check.holds);
        assert_eq!(check.violators, expected);
        assert_eq!(expected.len(), 6);
    }

    #[test]
    fn rejects_bad_actions() {
        let k = hexagon();
        let g = FiniteGroup::cyclic(2);
        // a transposition of two vertices is not simplicial on the hexagon
        let swap01: Vec<usize> = vec![1, 0, 2, 3, 4, 5];
        let swap03: Vec<usize> = vec![3, 1, 2, 0, 4, 5];
        assert!(GroupAction::new(&g, &k, vec![(0..6).collect(), swap03]).is_err());
        // rotation by one step does not square to the identity
        let rot: Vec<usize> = (0..6).map(|v| (v + 1) % 6).collect();
        assert!(matches!(GroupAction::new(&g, &k, vec![(0..6).collect(), rot]), Err(Error::InvalidAction(_))));
        assert!(GroupAction::new(&g, &k, vec![swap01.clone(), swap01]).is_err());
    }

    #[test]
    fn restriction_to_invariant_subcomplex() {
        let k = hexagon();
        let a = rotation_action(&k, 3, 2);
        let pair = Subcomplex::closure_of(&k, &[vec![0], vec![3]]).unwrap();
        assert_eq!(a.stabilizer(&pair), vec![0, 1]);
        let (r, zc, _) = a.restrict(&[0, 1], &pair).unwrap();
        assert_eq!(zc.vertex_count(), 2);
        assert_eq!(r.vertex_image(1, 0), 1);
        let point = Subcomplex::closure_of(&k, &[vec![0]]).unwrap();
        assert_eq!(a.stabilizer(&point), vec![0]);
        assert!(a.restrict(&[0, 1], &point).is_err());
    }
}
