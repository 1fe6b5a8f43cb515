use super::{ElementId, FiniteGroup};

/// Partition of a group into conjugacy classes.
///
/// Classes are ordered by their least element, so class 0 is `{e}`; the
/// representative of each class is its least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<ElementId>>,
    class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<ElementId>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[ElementId] {
        &self.classes[c]
    }

    pub fn class_of(&self, g: ElementId) -> usize {
        self.class_of[g.index()]
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn representative(&self, c: usize) -> ElementId {
        self.classes[c][0]
    }

    pub fn representatives(&self) -> Vec<ElementId> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjugacyClasses {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = Vec::new();
        for x in 0..n {
            let y = g.mul_idx(g.mul_idx(g.inv_idx(x), a), x);
            if class_of[y] == usize::MAX {
                class_of[y] = c;
                members.push(ElementId::from(y));
            }
        }
        members.sort();
        classes.push(members);
    }
    ConjugacyClasses { classes, class_of }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupFamilySpec};

    fn sizes(spec: GroupFamilySpec) -> Vec<usize> {
        let g = build_group(&spec).unwrap();
        let cc = conjugacy_classes(&g);
        (0..cc.len()).map(|c| cc.size(c)).collect()
    }

    #[test]
    fn abelian_classes_are_singletons() {
        assert_eq!(sizes(GroupFamilySpec::Cyclic(9)), vec![1; 9]);
    }

    #[test]
    fn symmetric_three_classes() {
        let g = build_group(&GroupFamilySpec::Symmetric(3)).unwrap();
        let cc = conjugacy_classes(&g);
        let mut by_order: Vec<(u32, usize)> =
            (0..cc.len()).map(|c| (g.element_order(cc.representative(c)), cc.size(c))).collect();
        by_order.sort();
        assert_eq!(by_order, vec![(1, 1), (2, 3), (3, 2)]);
    }

    #[test]
    fn dihedral_eight_has_five_classes() {
        assert_eq!(sizes(GroupFamilySpec::Dihedral(8)).len(), 5);
    }

    #[test]
    fn class_sizes_divide_order() {
        for spec in ["symmetric(4)", "heisenberg(3)", "quaternion(16)"] {
            let g = build_group(&spec.parse().unwrap()).unwrap();
            let cc = conjugacy_classes(&g);
            assert_eq!(cc.class_of(ElementId::IDENTITY), 0);
            assert_eq!(cc.class(0), &[ElementId::IDENTITY]);
            let total: usize = (0..cc.len()).map(|c| cc.size(c)).sum();
            assert_eq!(total, g.order());
            for c in 0..cc.len() {
                assert_eq!(g.order() % cc.size(c), 0);
                assert_eq!(cc.representative(c), *cc.class(c).iter().min().unwrap());
            }
        }
    }
}
