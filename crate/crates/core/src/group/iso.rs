use serde::{Deserialize, Serialize};

use super::{conjugacy_classes, ElementId, FiniteGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsoKind {
    Isomorphism,
    AntiIsomorphism,
}

/// A bijection `G → H` that preserves or reverses products.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub kind: IsoKind,
    pub map: Vec<ElementId>,
}

impl IsoWitness {
    pub fn identity(n: usize, kind: IsoKind) -> Self {
        IsoWitness { kind, map: (0..n).map(ElementId::from).collect() }
    }

    pub fn apply(&self, g: ElementId) -> ElementId {
        self.map[g.index()]
    }

    /// Checks bijectivity and the product law for every pair.
    pub fn verify(&self, g: &FiniteGroup, h: &FiniteGroup) -> bool {
        let n = g.order();
        if h.order() != n || self.map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in &self.map {
            if m.index() >= n || std::mem::replace(&mut hit[m.index()], true) {
                return false;
            }
        }
        g.elements().all(|a| {
            g.elements().all(|b| {
                let image = self.apply(g.mul(a, b));
                match self.kind {
                    IsoKind::Isomorphism => image == h.mul(self.apply(a), self.apply(b)),
                    IsoKind::AntiIsomorphism => image == h.mul(self.apply(b), self.apply(a)),
                }
            })
        })
    }
}

/// Per-element invariants preserved by any isomorphism.
fn element_profile(g: &FiniteGroup) -> Vec<(u32, usize)> {
    let cc = conjugacy_classes(g);
    g.elements().map(|a| (g.element_order(a), cc.size(cc.class_of(a)))).collect()
}

/// Backtracking over images of a generating set, pruned by element order
/// and class size. Exhaustive: `None` means the groups are not isomorphic.
pub fn isomorphism_search(g: &FiniteGroup, h: &FiniteGroup) -> Option<IsoWitness> {
    let n = g.order();
    if h.order() != n {
        return None;
    }
    let pg = element_profile(g);
    let ph = element_profile(h);
    let mut sg = pg.clone();
    let mut sh = ph.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }
    let gens = g.generating_set();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|s| (1..n).filter(|&y| ph[y] == pg[s.index()]).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    let map = extend(g, h, &gens, &candidates, &mut images)?;
    let witness = IsoWitness { kind: IsoKind::Isomorphism, map: map.into_iter().map(ElementId::from).collect() };
    debug_assert!(witness.verify(g, h));
    Some(witness)
}

/// An anti-isomorphism `G → H` is an isomorphism `G → Hᵒᵖ`.
pub fn anti_isomorphism_search(g: &FiniteGroup, h: &FiniteGroup) -> Option<IsoWitness> {
    isomorphism_search(g, &h.opposite()).map(|w| IsoWitness { kind: IsoKind::AntiIsomorphism, map: w.map })
}

fn extend(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[ElementId],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = images.len();
    if k == gens.len() {
        let map = closure_map(g, h, gens, images)?;
        return (map.len() == g.order() && map.iter().all(|&m| m != usize::MAX)).then_some(map);
    }
    for &y in &candidates[k] {
        images.push(y);
        if closure_map(g, h, &gens[..=k], images).is_some() {
            if let Some(map) = extend(g, h, gens, candidates, images) {
                return Some(map);
            }
        }
        images.pop();
    }
    None
}

/// Extends generator images to the generated subgroup, or fails on the
/// first inconsistency or collision.
fn closure_map(g: &FiniteGroup, h: &FiniteGroup, gens: &[ElementId], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (s, &t) in gens.iter().zip(images) {
            let y = g.mul_idx(x, s.index());
            let want = h.mul_idx(map[x], t);
            if map[y] == usize::MAX {
                if used[want] {
                    return None;
                }
                map[y] = want;
                used[want] = true;
                queue.push(y);
            } else if map[y] != want {
                return None;
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupFamilySpec};

    fn grp(s: &str) -> FiniteGroup {
        build_group(&s.parse::<GroupFamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn self_isomorphism() {
        let g = grp("dihedral(12)");
        let w = isomorphism_search(&g, &g).unwrap();
        assert!(w.verify(&g, &g));
    }

    #[test]
    fn element_orders_separate_c4_from_klein() {
        assert!(isomorphism_search(&grp("cyclic(4)"), &grp("product(cyclic(2),cyclic(2))")).is_none());
    }

    #[test]
    fn d4_and_q8_not_isomorphic() {
        assert!(isomorphism_search(&grp("dihedral(8)"), &grp("quaternion(8)")).is_none());
    }

    /// Independent oracle: all 8! bijections fixing nothing in particular.
    #[test]
    fn d4_q8_exhaustive_bijections() {
        let d4 = grp("dihedral(8)");
        let q8 = grp("quaternion(8)");
        let mut perm: Vec<usize> = (0..8).collect();
        let mut found = false;
        heap_permutations(&mut perm, 8, &mut |p| {
            let w = IsoWitness { kind: IsoKind::Isomorphism, map: p.iter().map(|&i| ElementId::from(i)).collect() };
            found |= w.verify(&d4, &q8);
        });
        assert!(!found);
    }

    fn heap_permutations(a: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == 1 {
            f(a);
            return;
        }
        for i in 0..k {
            heap_permutations(a, k - 1, f);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }

    #[test]
    fn groups_are_isomorphic_to_their_opposites() {
        for s in ["symmetric(3)", "quaternion(8)", "heisenberg(3)", "symmetric(4)"] {
            let g = grp(s);
            let op = g.opposite();
            let w = isomorphism_search(&g, &op).unwrap();
            assert!(w.verify(&g, &op));
            let inv = IsoWitness { kind: IsoKind::AntiIsomorphism, map: g.inverse_map() };
            assert!(inv.verify(&g, &g));
            assert!(anti_isomorphism_search(&g, &g).unwrap().verify(&g, &g));
        }
    }

    #[test]
    fn dihedral_six_matches_symmetric_three() {
        assert!(isomorphism_search(&grp("dihedral(6)"), &grp("symmetric(3)")).is_some());
        assert!(isomorphism_search(&grp("dihedral(6)"), &grp("cyclic(6)")).is_none());
    }
}
