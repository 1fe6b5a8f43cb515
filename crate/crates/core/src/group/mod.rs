//! Finite groups given by their Cayley tables.
//!
//! Every group in this crate is a concrete multiplication table on the
//! indices `0..n`, with index 0 the identity. Families, closure of
//! permutation generators and JSON loading all end in
//! [`FiniteGroup::from_table`], which validates the group axioms.

mod catalog;
mod classes;
mod families;
mod iso;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use catalog::{acceptance_suite, groups_of_order, NamedGroup};
pub use classes::{conjugacy_classes, ConjugacyClasses};
pub use families::{build_group, build_group_capped, from_generators, from_generators_capped, GroupFamilySpec, Permutation};
pub use iso::{anti_isomorphism_search, isomorphism_search, IsoKind, IsoWitness};

/// Default cap on group order.
pub const DEFAULT_MAX_ORDER: usize = 4096;

/// An element of a [`FiniteGroup`], addressed by its row in the Cayley table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId(i as u32)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A validated finite group.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    element_orders: Vec<u32>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates `rows` as a group table and builds the group, using the
    /// default order cap.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_table_capped(name, rows, DEFAULT_MAX_ORDER)
    }

    pub fn from_table_capped(
        name: impl Into<String>,
        rows: &[Vec<usize>],
        max_order: usize,
    ) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup { axiom: "non-empty", indices: vec![] });
        }
        if n > max_order {
            return Err(Error::OrderTooLarge { order: n, cap: max_order });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup { axiom: "square table", indices: vec![i] });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidGroup { axiom: "entries in range", indices: vec![i, j] });
                }
                table.push(v as u32);
            }
        }
        Self::from_flat(name.into(), n, table)
    }

    pub(crate) fn from_flat(name: String, n: usize, table: Vec<u32>) -> Result<Self> {
        validate_identity(n, &table)?;
        validate_latin(n, &table)?;
        validate_associativity(n, &table)?;
        Ok(Self::from_flat_unchecked(name, n, table))
    }

    /// Caller guarantees `table` is a valid group table.
    pub(crate) fn from_flat_unchecked(name: String, n: usize, table: Vec<u32>) -> Self {
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverses[a] = b as u32;
                    break;
                }
            }
        }
        let mut element_orders = vec![0u32; n];
        for a in 0..n {
            let mut k = 1u32;
            let mut x = a;
            while x != 0 {
                x = table[x * n + a] as usize;
                k += 1;
            }
            element_orders[a] = k;
        }
        FiniteGroup { name, order: n, table, inverses, element_orders }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.order).map(ElementId::from)
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.table[a.index() * self.order + b.index()])
    }

    #[inline]
    pub(crate) fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: ElementId) -> ElementId {
        ElementId(self.inverses[a.index()])
    }

    #[inline]
    pub(crate) fn inv_idx(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// Table of inverses, indexed by element.
    pub fn inverse_map(&self) -> Vec<ElementId> {
        self.inverses.iter().map(|&i| ElementId(i)).collect()
    }

    pub fn element_order(&self, a: ElementId) -> u32 {
        self.element_orders[a.index()]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        self.element_orders
            .iter()
            .fold(1u32, |acc, &o| num_integer::lcm(acc, o))
    }

    /// `x⁻¹ a x`.
    pub fn conjugate(&self, a: ElementId, by: ElementId) -> ElementId {
        self.mul(self.mul(self.inverse(by), a), by)
    }

    pub fn pow(&self, a: ElementId, k: u32) -> ElementId {
        let mut acc = ElementId::IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.table[a * n + b] == self.table[b * n + a]))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub(crate) fn flat_table(&self) -> &[u32] {
        &self.table
    }

    /// The group with multiplication reversed: `a ∘ b = b·a`.
    pub fn opposite(&self) -> FiniteGroup {
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.table[b * n + a];
            }
        }
        FiniteGroup::from_flat_unchecked(format!("{}^op", self.name), n, table)
    }

    /// Applies a relabeling `perm` (old index → new index) that fixes the
    /// identity.
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteGroup> {
        let n = self.order;
        if perm.len() != n || perm.first() != Some(&0) {
            return Err(Error::InvalidParameter("relabeling must fix the identity".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("relabeling is not a bijection".into()));
            }
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.table[a * n + b] as usize] as u32;
            }
        }
        Ok(FiniteGroup::from_flat_unchecked(self.name.clone(), n, table))
    }

    /// A generating set found greedily, preferring elements of large order.
    pub fn generating_set(&self) -> Vec<ElementId> {
        let n = self.order;
        let mut by_order: Vec<usize> = (1..n).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_orders[a]), a));
        let mut gens = Vec::new();
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut members = vec![0usize];
        for a in by_order {
            if members.len() == n {
                break;
            }
            if inside[a] {
                continue;
            }
            gens.push(ElementId::from(a));
            // BFS closure under right multiplication by the generators.
            members = vec![0];
            inside.iter_mut().for_each(|x| *x = false);
            inside[0] = true;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for g in &gens {
                    let y = self.mul_idx(x, g.index());
                    if !inside[y] {
                        inside[y] = true;
                        members.push(y);
                    }
                }
            }
        }
        gens
    }
}

fn validate_identity(n: usize, t: &[u32]) -> Result<()> {
    for j in 0..n {
        if t[j] as usize != j {
            return Err(Error::InvalidGroup { axiom: "left identity", indices: vec![0, j] });
        }
        if t[j * n] as usize != j {
            return Err(Error::InvalidGroup { axiom: "right identity", indices: vec![j, 0] });
        }
    }
    Ok(())
}

fn validate_latin(n: usize, t: &[u32]) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..n {
            let v = t[i * n + j] as usize;
            if seen[v] == i {
                return Err(Error::InvalidGroup { axiom: "latin rows", indices: vec![i, j] });
            }
            seen[v] = i;
        }
    }
    seen.iter_mut().for_each(|s| *s = usize::MAX);
    for j in 0..n {
        for i in 0..n {
            let v = t[i * n + j] as usize;
            if seen[v] == j {
                return Err(Error::InvalidGroup { axiom: "latin columns", indices: vec![i, j] });
            }
            seen[v] = j;
        }
    }
    Ok(())
}

/// Light's test: the set of `z` with `(xy)z = x(yz)` for all `x, y` is closed
/// under the product, so it is enough to test `z` in a set that generates
/// the whole table as a magma.
fn validate_associativity(n: usize, t: &[u32]) -> Result<()> {
    let mul = |a: usize, b: usize| t[a * n + b] as usize;
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut members = vec![0usize];
    let mut probes = Vec::new();
    for cand in 1..n {
        if inside[cand] {
            continue;
        }
        probes.push(cand);
        inside[cand] = true;
        members.push(cand);
        // Close under all pairwise products.
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            let mut k = 0;
            while k < members.len() {
                let y = members[k];
                for z in [mul(x, y), mul(y, x)] {
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                    }
                }
                k += 1;
            }
        }
        if members.len() == n {
            break;
        }
    }
    for &z in &probes {
        for x in 0..n {
            for y in 0..n {
                if mul(mul(x, y), z) != mul(x, mul(y, z)) {
                    return Err(Error::InvalidGroup { axiom: "associativity", indices: vec![x, y, z] });
                }
            }
        }
    }
    Ok(())
}

/// Exhaustive triple loop over all associativity instances.
pub fn is_associative_exhaustive(g: &FiniteGroup) -> bool {
    let n = g.order();
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| g.mul_idx(g.mul_idx(a, b), c) == g.mul_idx(a, g.mul_idx(b, c))))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_identity() {
        let err = FiniteGroup::from_table("bad", &[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::InvalidGroup { axiom: "left identity", .. }));
    }

    #[test]
    fn rejects_non_latin() {
        let rows = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        let err = FiniteGroup::from_table("bad", &rows).unwrap_err();
        assert!(matches!(err, Error::InvalidGroup { axiom: "latin rows", indices } if indices == vec![1, 1]));
    }

    #[test]
    fn rejects_non_associative_loop() {
        // The smallest non-associative loop (order 5) passes the Latin and
        // identity checks.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table("loop", &rows).unwrap_err();
        assert!(matches!(err, Error::InvalidGroup { axiom: "associativity", .. }));
    }

    #[test]
    fn order_cap_enforced() {
        let rows = vec![vec![0, 1], vec![1, 0]];
        let err = FiniteGroup::from_table_capped("c2", &rows, 1).unwrap_err();
        assert!(matches!(err, Error::OrderTooLarge { order: 2, cap: 1 }));
    }

    #[test]
    fn opposite_is_an_involution() {
        let s3 = build_group(&GroupFamilySpec::Symmetric(3)).unwrap();
        assert_eq!(s3.opposite().opposite().flat_table(), s3.flat_table());
        assert!(s3.opposite().is_valid_for_tests());
        let c6 = build_group(&GroupFamilySpec::Cyclic(6)).unwrap();
        assert_eq!(c6.opposite().flat_table(), c6.flat_table());
    }

    #[test]
    fn inverse_examples() {
        let c4 = build_group(&GroupFamilySpec::Cyclic(4)).unwrap();
        assert_eq!(c4.inverse(ElementId(1)), ElementId(3));
        assert_eq!(c4.inverse(ElementId::IDENTITY), ElementId::IDENTITY);
        let q8 = build_group(&GroupFamilySpec::Quaternion(8)).unwrap();
        let involutions = q8
            .elements()
            .filter(|&g| !g.is_identity() && q8.inverse(g) == g)
            .count();
        assert_eq!(involutions, 1);
        for g in q8.elements() {
            assert!(q8.mul(g, q8.inverse(g)).is_identity());
            assert_eq!(q8.inverse(q8.inverse(g)), g);
        }
    }

    impl FiniteGroup {
        fn is_valid_for_tests(&self) -> bool {
            FiniteGroup::from_table("t", &self.rows()).is_ok() && is_associative_exhaustive(self)
        }
    }
}
