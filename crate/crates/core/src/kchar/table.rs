use super::explicit;
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::group::ElementId;
use crate::num::Cyclotomic;

/// Largest group order for which k-character tables are materialized.
pub const MAX_TABLE_ORDER: usize = 64;

/// Number of sorted k-tuples (multisets) over `n` elements, `k ≤ 3`.
pub fn multiset_count(n: usize, k: usize) -> usize {
    match k {
        0 => 1,
        1 => n,
        2 => n * (n + 1) / 2,
        3 => n * (n + 1) * (n + 2) / 6,
        _ => panic!("multiset tables cover k ≤ 3"),
    }
}

/// Position of a sorted tuple `a ≤ b ≤ c` in the combinatorial number
/// system. Enumerating `c`, then `b ≤ c`, then `a ≤ b` visits indices in
/// order.
pub fn multiset_index(sorted: &[usize]) -> usize {
    match *sorted {
        [] => 0,
        [a] => a,
        [a, b] => a + b * (b + 1) / 2,
        [a, b, c] => a + b * (b + 1) / 2 + c * (c + 1) * (c + 2) / 6,
        _ => panic!("multiset tables cover k ≤ 3"),
    }
}

pub(crate) fn for_each_multiset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    match k {
        0 => f(&[]),
        1 => (0..n).for_each(|a| f(&[a])),
        2 => {
            for b in 0..n {
                for a in 0..=b {
                    f(&[a, b]);
                }
            }
        }
        3 => {
            for c in 0..n {
                for b in 0..=c {
                    for a in 0..=b {
                        f(&[a, b, c]);
                    }
                }
            }
        }
        _ => panic!("multiset tables cover k ≤ 3"),
    }
}

/// Number of ordered tuples with the given sorted content: `k!/Π mᵢ!`.
pub(crate) fn permutation_weight(sorted: &[usize]) -> i64 {
    match *sorted {
        [] | [_] => 1,
        [a, b] => if a == b { 1 } else { 2 },
        [a, b, c] => match (a == b, b == c) {
            (true, true) => 1,
            (false, false) => 6,
            _ => 3,
        },
        _ => panic!("multiset tables cover k ≤ 3"),
    }
}

/// All values of one k-character, `k ∈ {1, 2, 3}`.
///
/// k-characters are symmetric in their arguments, so values are stored
/// once per multiset of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KCharTable {
    group: String,
    character: usize,
    k: usize,
    order: usize,
    conductor: u32,
    values: Vec<Cyclotomic>,
}

impl KCharTable {
    pub fn build(t: &CharacterTable, j: usize, k: usize) -> Result<Self> {
        let g = t.group();
        let n = g.order();
        if j >= t.len() {
            return Err(Error::InvalidParameter(format!("character index {j} out of range (table has {})", t.len())));
        }
        if !(1..=3).contains(&k) {
            return Err(Error::InvalidParameter(format!("k-character tables need k in 1..=3, got {k}")));
        }
        if n > MAX_TABLE_ORDER {
            return Err(Error::Unsupported(format!("k-character tables need order ≤ {MAX_TABLE_ORDER}, got {n}")));
        }
        let chi = t.element_values(j);
        let mut values = Vec::with_capacity(multiset_count(n, k));
        for_each_multiset(n, k, |tuple| values.push(explicit(g, |x| &chi[x], tuple)));
        Ok(Self::from_values(g.name(), j, k, n, t.conductor(), values))
    }

    pub(crate) fn from_values(group: &str, character: usize, k: usize, order: usize, conductor: u32, values: Vec<Cyclotomic>) -> Self {
        debug_assert_eq!(values.len(), multiset_count(order, k));
        KCharTable { group: group.to_string(), character, k, order, conductor, values }
    }

    pub fn group_name(&self) -> &str {
        &self.group
    }

    pub fn character(&self) -> usize {
        self.character
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Value on any ordering of the tuple.
    pub fn get(&self, tuple: &[ElementId]) -> &Cyclotomic {
        assert_eq!(tuple.len(), self.k, "tuple length must equal k");
        let mut s: Vec<usize> = tuple.iter().map(|g| g.index()).collect();
        s.sort_unstable();
        &self.values[multiset_index(&s)]
    }

    pub(crate) fn get_sorted(&self, sorted: &[usize]) -> &Cyclotomic {
        &self.values[multiset_index(sorted)]
    }

    /// `(sorted tuple, value)` in index order.
    pub fn entries(&self) -> Vec<(Vec<ElementId>, &Cyclotomic)> {
        let mut out = Vec::with_capacity(self.values.len());
        for_each_multiset(self.order, self.k, |t| {
            out.push((t.iter().map(|&i| ElementId::from(i)).collect(), &self.values[multiset_index(t)]));
        });
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }
}

/// `Σ_{tuples ∈ Gᵏ} a · conj(b)`, each multiset weighted by the number of
/// its orderings.
pub fn orthogonality_sum_tables(a: &KCharTable, b: &KCharTable) -> Cyclotomic {
    assert_eq!((a.order, a.k), (b.order, b.k), "tables must share group order and k");
    let e = num_integer::lcm(a.conductor, b.conductor);
    let mut acc = Cyclotomic::zero(e);
    let mut idx = 0;
    for_each_multiset(a.order, a.k, |t| {
        let (x, y) = (&a.values[idx], &b.values[idx]);
        idx += 1;
        if x.is_zero() || y.is_zero() {
            return;
        }
        acc += &(x * &y.conjugate()).scale_int(permutation_weight(t));
    });
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_is_sequential() {
        for k in 0..=3 {
            let mut next = 0;
            for_each_multiset(7, k, |t| {
                assert_eq!(multiset_index(t), next);
                next += 1;
            });
            assert_eq!(next, multiset_count(7, k));
        }
    }

    #[test]
    fn weights_count_orderings() {
        let n = 5;
        let mut total = 0;
        for_each_multiset(n, 3, |t| total += permutation_weight(t));
        assert_eq!(total, 125);
    }
}
