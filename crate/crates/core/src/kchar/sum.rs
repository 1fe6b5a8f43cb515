use super::table::{for_each_multiset, multiset_count, KCharTable};
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::num::Cyclotomic;

/// k-characters of `ρ ⊕ σ` from those of `ρ` and `σ`:
/// `(ρ⊕σ)⁽ᵏ⁾(T) = Σ_{S ⊆ T} ρ⁽|S|⁾(S) · σ⁽ᵏ⁻|S|⁾(T∖S)`, with `ρ⁽⁰⁾ = 1`.
///
/// `a[k-1]` and `b[k-1]` hold level `k`; both lists must cover the same
/// levels `1..=K` of the same group.
pub fn direct_sum_k_tables(a: &[KCharTable], b: &[KCharTable]) -> Result<Vec<KCharTable>> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::InvalidParameter("direct sums need matching, non-empty level lists".into()));
    }
    for (k, (x, y)) in a.iter().zip(b).enumerate() {
        if x.k() != k + 1 || y.k() != k + 1 || x.order() != y.order() {
            return Err(Error::InvalidParameter(format!("level {} tables do not line up", k + 1)));
        }
    }
    let e = num_integer::lcm(a[0].conductor(), b[0].conductor());
    let n = a[0].order();
    let out = (1..=a.len())
        .map(|k| {
            let mut values = Vec::with_capacity(multiset_count(n, k));
            for_each_multiset(n, k, |t| values.push(convolve(a, b, t, e)));
            KCharTable::from_values(a[0].group_name(), usize::MAX, k, n, e, values)
        })
        .collect();
    Ok(out)
}

fn convolve(a: &[KCharTable], b: &[KCharTable], t: &[usize], e: u32) -> Cyclotomic {
    let k = t.len();
    let mut acc = Cyclotomic::zero(e);
    let mut left = Vec::with_capacity(k);
    let mut right = Vec::with_capacity(k);
    for mask in 0u32..(1 << k) {
        left.clear();
        right.clear();
        for (i, &x) in t.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(x);
            } else {
                right.push(x);
            }
        }
        let term = match (left.len(), right.len()) {
            (0, r) => b[r - 1].get_sorted(&right).clone(),
            (l, 0) => a[l - 1].get_sorted(&left).clone(),
            (l, r) => a[l - 1].get_sorted(&left) * b[r - 1].get_sorted(&right),
        };
        acc += &term;
    }
    acc
}

/// `χ_reg⁽¹⁾, χ_reg⁽²⁾, χ_reg⁽³⁾` assembled from the irreducible k-characters
/// alone, through `χ_reg = ⊕ deg(χ_j)·χ_j`.
pub fn regular_k_tables_from_irreducibles(t: &CharacterTable) -> Result<Vec<KCharTable>> {
    let mut acc: Option<Vec<KCharTable>> = None;
    for j in 0..t.len() {
        let levels = (1..=3).map(|k| KCharTable::build(t, j, k)).collect::<Result<Vec<_>>>()?;
        for _ in 0..t.degree(j) {
            acc = Some(match acc {
                None => levels.clone(),
                Some(prev) => direct_sum_k_tables(&prev, &levels)?,
            });
        }
    }
    acc.ok_or_else(|| Error::InvalidTable("empty character table".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::group::{build_group, ElementId, GroupFamilySpec};
    use crate::kchar::regular_k_character;

    #[test]
    fn regular_tables_match_closed_form() {
        for s in ["cyclic(3)", "symmetric(3)", "quaternion(8)"] {
            let g = build_group(&s.parse::<GroupFamilySpec>().unwrap()).unwrap();
            let t = character_table(&g, 0).unwrap();
            let reg = regular_k_tables_from_irreducibles(&t).unwrap();
            for table in &reg {
                for (tuple, v) in table.entries() {
                    let expected = regular_k_character(&g, &tuple).unwrap();
                    assert_eq!(*v, Cyclotomic::from_integer(1, expected), "{s} {tuple:?}");
                }
            }
            let e = ElementId::IDENTITY;
            let n = g.order() as i64;
            assert_eq!(*reg[2].get(&[e, e, e]), Cyclotomic::from_integer(1, n * n * n - 3 * n * n + 2 * n));
        }
    }
}
