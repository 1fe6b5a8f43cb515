use crate::group::{conjugacy_classes, ConjugacyClasses, FiniteGroup};

/// Structure constants of the class algebra.
///
/// `get(i, j, k)` counts the pairs `(x, y)` with `x` in class `i`, `y` in
/// class `j` and `xy` equal to a fixed element of class `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassConstants {
    r: usize,
    a: Vec<u64>,
}

impl ClassConstants {
    pub fn len(&self) -> usize {
        self.r
    }

    pub fn is_empty(&self) -> bool {
        self.r == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.a[(i * self.r + j) * self.r + k]
    }
}

pub fn class_constants(g: &FiniteGroup) -> ClassConstants {
    class_constants_for(g, &conjugacy_classes(g))
}

pub(crate) fn class_constants_for(g: &FiniteGroup, classes: &ConjugacyClasses) -> ClassConstants {
    let r = classes.len();
    let mut a = vec![0u64; r * r * r];
    for k in 0..r {
        let z = classes.representative(k).index();
        for x in 0..g.order() {
            let y = g.mul_idx(g.inv_idx(x), z);
            let i = classes.class_of(x.into());
            let j = classes.class_of(y.into());
            a[(i * r + j) * r + k] += 1;
        }
    }
    ClassConstants { r, a }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupFamilySpec};

    fn constants(s: &str) -> (FiniteGroup, ConjugacyClasses, ClassConstants) {
        let g = build_group(&s.parse::<GroupFamilySpec>().unwrap()).unwrap();
        let cc = conjugacy_classes(&g);
        let a = class_constants(&g);
        (g, cc, a)
    }

    #[test]
    fn trivial_group() {
        let (_, _, a) = constants("cyclic(1)");
        assert_eq!(a.get(0, 0, 0), 1);
    }

    #[test]
    fn cyclic_two_square_is_identity() {
        let (_, _, a) = constants("cyclic(2)");
        assert_eq!(a.get(1, 1, 0), 1);
        assert_eq!(a.get(1, 1, 1), 0);
    }

    #[test]
    fn symmetric_three_transpositions() {
        let (g, cc, a) = constants("symmetric(3)");
        let t = (0..cc.len()).find(|&c| g.element_order(cc.representative(c)) == 2).unwrap();
        assert_eq!(a.get(t, t, 0), 3);
    }

    #[test]
    fn weighted_sums_match_class_sizes() {
        for s in ["symmetric(4)", "heisenberg(3)", "quaternion(8)"] {
            let (_, cc, a) = constants(s);
            let r = cc.len();
            for i in 0..r {
                for j in 0..r {
                    let lhs: u64 = (0..r).map(|k| a.get(i, j, k) * cc.size(k) as u64).sum();
                    assert_eq!(lhs, (cc.size(i) * cc.size(j)) as u64);
                }
            }
        }
    }
}
