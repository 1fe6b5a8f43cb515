//! Every group of order at most 12, plus the larger test groups.

use super::{build_group, FiniteGroup, GroupFamilySpec};

/// A catalogued group: short label plus the family recipe that builds it.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub label: &'static str,
    pub spec: &'static str,
}

impl NamedGroup {
    pub fn build(&self) -> FiniteGroup {
        let spec: GroupFamilySpec = self.spec.parse().expect("catalog spec parses");
        build_group(&spec).expect("catalog group builds").with_name(self.label)
    }
}

const CATALOG: &[(usize, &str, &str)] = &[
    (1, "C1", "cyclic(1)"),
    (2, "C2", "cyclic(2)"),
    (3, "C3", "cyclic(3)"),
    (4, "C4", "cyclic(4)"),
    (4, "C2xC2", "product(cyclic(2),cyclic(2))"),
    (5, "C5", "cyclic(5)"),
    (6, "C6", "cyclic(6)"),
    (6, "S3", "symmetric(3)"),
    (7, "C7", "cyclic(7)"),
    (8, "C8", "cyclic(8)"),
    (8, "C4xC2", "product(cyclic(4),cyclic(2))"),
    (8, "C2xC2xC2", "product(cyclic(2),product(cyclic(2),cyclic(2)))"),
    (8, "D4", "dihedral(8)"),
    (8, "Q8", "quaternion(8)"),
    (9, "C9", "cyclic(9)"),
    (9, "C3xC3", "product(cyclic(3),cyclic(3))"),
    (10, "C10", "cyclic(10)"),
    (10, "D5", "dihedral(10)"),
    (11, "C11", "cyclic(11)"),
    (12, "C12", "cyclic(12)"),
    (12, "C2xC6", "product(cyclic(2),cyclic(6))"),
    (12, "D6", "dihedral(12)"),
    (12, "A4", "perms(4: (0 1 2), (0 1)(2 3))"),
    (12, "Dic3", "perms(7: (0 1 2), (1 2)(3 4 5 6))"),
];

/// All groups of order `n` up to isomorphism, for `n ≤ 12`.
pub fn groups_of_order(n: usize) -> Vec<NamedGroup> {
    CATALOG
        .iter()
        .filter(|(order, _, _)| *order == n)
        .map(|&(_, label, spec)| NamedGroup { label, spec })
        .collect()
}

/// Every group of order at most 12, then `heisenberg(3)` and `S4`.
pub fn acceptance_suite() -> Vec<NamedGroup> {
    let mut out: Vec<NamedGroup> =
        CATALOG.iter().map(|&(_, label, spec)| NamedGroup { label, spec }).collect();
    out.push(NamedGroup { label: "Heis3", spec: "heisenberg(3)" });
    out.push(NamedGroup { label: "S4", spec: "symmetric(4)" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::isomorphism_search;

    /// Known counts of groups of order 1..=12.
    #[test]
    fn catalog_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| groups_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5]);
    }

    #[test]
    fn catalog_groups_are_pairwise_non_isomorphic() {
        for n in 1..=12 {
            let groups: Vec<_> = groups_of_order(n).iter().map(|g| (g.label, g.build())).collect();
            for (label, g) in &groups {
                assert_eq!(g.order(), n, "{label}");
            }
            for i in 0..groups.len() {
                for j in i + 1..groups.len() {
                    assert!(
                        isomorphism_search(&groups[i].1, &groups[j].1).is_none(),
                        "{} ≅ {}",
                        groups[i].0,
                        groups[j].0
                    );
                }
            }
        }
    }
}
