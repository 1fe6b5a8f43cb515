//! Frobenius k-characters.
//!
//! For a character `χ`, the k-characters are
//!
//! ```text
//! χ⁽¹⁾(g)       = χ(g)
//! χ⁽²⁾(g,h)     = χ(g)χ(h) − χ(gh)
//! χ⁽³⁾(g,h,m)   = χ(g)χ(h)χ(m) − χ(g)χ(hm) − χ(h)χ(gm) − χ(m)χ(gh) + χ(ghm) + χ(gmh)
//! ```
//!
//! and in general `χ⁽ᵏ⁺¹⁾(g₁,…,gₖ,g) = χ⁽ᵏ⁾(g₁,…,gₖ)χ(g) − Σᵢ χ⁽ᵏ⁾(g₁,…,gᵢg,…,gₖ)`.
//! A k-character vanishes identically when `k` exceeds the degree.

mod equivalence;
mod sum;
mod table;

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};
use crate::num::Cyclotomic;

pub use equivalence::{equivalence_search, parse_levels, EquivalenceVerdict, EquivalenceWitness};
pub use sum::{direct_sum_k_tables, regular_k_tables_from_irreducibles};
pub(crate) use table::permutation_weight;
pub use table::{multiset_count, multiset_index, orthogonality_sum_tables, KCharTable};

/// `χ_j⁽ᵏ⁾` by the explicit formulas, `k = tuple.len() ∈ {1, 2, 3}`.
pub fn k_character(t: &CharacterTable, j: usize, tuple: &[ElementId]) -> Result<Cyclotomic> {
    check_index(t, j)?;
    let idx: Vec<usize> = tuple.iter().map(|g| g.index()).collect();
    match idx.len() {
        1..=3 => Ok(explicit(t.group(), |x| t.value(j, x.into()), &idx)),
        k => Err(Error::InvalidParameter(format!("explicit k-characters need k in 1..=3, got {k}"))),
    }
}

/// `χ_j⁽ᵏ⁾` by the recursion, for any `k ≥ 1`. Returns zero without
/// recursing when `k > deg χ_j + 1`.
pub fn k_character_general(t: &CharacterTable, j: usize, tuple: &[ElementId]) -> Result<Cyclotomic> {
    check_index(t, j)?;
    if tuple.is_empty() {
        return Err(Error::InvalidParameter("k-characters need k ≥ 1".into()));
    }
    if tuple.len() > t.degree(j) as usize + 1 {
        return Ok(Cyclotomic::zero(t.conductor()));
    }
    k_character_recursive(t, j, tuple)
}

/// The recursion alone, with no shortcut.
pub fn k_character_recursive(t: &CharacterTable, j: usize, tuple: &[ElementId]) -> Result<Cyclotomic> {
    check_index(t, j)?;
    if tuple.is_empty() {
        return Err(Error::InvalidParameter("k-characters need k ≥ 1".into()));
    }
    let idx: Vec<usize> = tuple.iter().map(|g| g.index()).collect();
    Ok(recursive(t.group(), &|x| t.value(j, x.into()), &idx))
}

/// The explicit formulas applied to an arbitrary class function, given by
/// its values on elements.
pub fn k_character_of(g: &FiniteGroup, chi: &[Cyclotomic], tuple: &[ElementId]) -> Result<Cyclotomic> {
    if chi.len() != g.order() {
        return Err(Error::InvalidParameter(format!("class function has {} values for order {}", chi.len(), g.order())));
    }
    let idx: Vec<usize> = tuple.iter().map(|x| x.index()).collect();
    match idx.len() {
        1..=3 => Ok(explicit(g, |x| &chi[x], &idx)),
        k => Err(Error::InvalidParameter(format!("explicit k-characters need k in 1..=3, got {k}"))),
    }
}

fn check_index(t: &CharacterTable, j: usize) -> Result<()> {
    if j >= t.len() {
        return Err(Error::InvalidParameter(format!("character index {j} out of range (table has {})", t.len())));
    }
    Ok(())
}

pub(crate) fn explicit<'a>(g: &FiniteGroup, chi: impl Fn(usize) -> &'a Cyclotomic, t: &[usize]) -> Cyclotomic {
    let m = |a, b| g.mul_idx(a, b);
    match *t {
        [a] => chi(a).clone(),
        [a, b] => &(chi(a) * chi(b)) - chi(m(a, b)),
        [a, b, c] => {
            let (x, y, z) = (chi(a), chi(b), chi(c));
            let mut acc = &(x * y) * z;
            acc = &acc - &(x * chi(m(b, c)));
            acc = &acc - &(y * chi(m(a, c)));
            acc = &acc - &(z * chi(m(a, b)));
            acc += chi(m(m(a, b), c));
            acc += chi(m(m(a, c), b));
            acc
        }
        _ => unreachable!("explicit formulas cover k ≤ 3"),
    }
}

fn recursive<'a>(g: &FiniteGroup, chi: &dyn Fn(usize) -> &'a Cyclotomic, t: &[usize]) -> Cyclotomic {
    let (&last, init) = t.split_last().expect("non-empty tuple");
    if init.is_empty() {
        return chi(last).clone();
    }
    let mut acc = &recursive(g, chi, init) * chi(last);
    let mut shifted = init.to_vec();
    for i in 0..init.len() {
        shifted[i] = g.mul_idx(init[i], last);
        acc = &acc - &recursive(g, chi, &shifted);
        shifted[i] = init[i];
    }
    acc
}

/// `χ_reg⁽ᵏ⁾` in closed form, where `χ_reg(g) = n·[g = e]`.
pub fn regular_k_character(g: &FiniteGroup, tuple: &[ElementId]) -> Result<i64> {
    let n = g.order() as i64;
    let e = |x: usize| i64::from(x == 0);
    let m = |a, b| g.mul_idx(a, b);
    let t: Vec<usize> = tuple.iter().map(|x| x.index()).collect();
    Ok(match *t.as_slice() {
        [a] => n * e(a),
        [a, b] => n * n * e(a) * e(b) - n * e(m(a, b)),
        [a, b, c] => {
            n * n * n * e(a) * e(b) * e(c) - n * n * (e(a) * e(m(b, c)) + e(b) * e(m(a, c)) + e(c) * e(m(a, b)))
                + n * (e(m(m(a, b), c)) + e(m(m(a, c), b)))
        }
        _ => return Err(Error::InvalidParameter(format!("regular k-characters need k in 1..=3, got {}", t.len()))),
    })
}

/// `Σ_{tuples ∈ Gᵏ} χ_i⁽ᵏ⁾ · conj(χ_j⁽ᵏ⁾)`.
pub fn orthogonality_sum(t: &CharacterTable, i: usize, j: usize, k: usize) -> Result<Cyclotomic> {
    let a = KCharTable::build(t, i, k)?;
    if i == j {
        return Ok(orthogonality_sum_tables(&a, &a));
    }
    let b = KCharTable::build(t, j, k)?;
    Ok(orthogonality_sum_tables(&a, &b))
}
