//! Rebuilding a group from the 1-, 2- and 3-characters of its regular
//! representation.
//!
//! The pipeline sees the regular k-characters only through
//! [`RegularCharacters`], a value oracle. From it we read off the identity
//! and inverses, then the unordered pair `{gh, hg}` for every `g, h`, and
//! finally search for a group table compatible with those pairs. Any such
//! table is isomorphic or anti-isomorphic to the source, and so isomorphic
//! to it.

mod products;
mod search;

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::group::{isomorphism_search, ElementId, FiniteGroup, IsoKind, IsoWitness};
use crate::kchar::{multiset_index, regular_k_character, regular_k_tables_from_irreducibles};

pub use products::SymmetrizedProducts;
pub use search::{reconstruct_group, Reconstruction, ReconstructionResult};

/// Black-box access to `χ_reg⁽¹⁾`, `χ_reg⁽²⁾`, `χ_reg⁽³⁾` on element labels
/// `0..order()`.
pub trait RegularCharacters {
    fn order(&self) -> usize;
    fn chi1(&self, g: ElementId) -> i64;
    fn chi2(&self, g: ElementId, h: ElementId) -> i64;
    fn chi3(&self, g: ElementId, h: ElementId, m: ElementId) -> i64;
}

/// Closed-form regular k-characters of a group.
pub struct ClosedFormOracle<'a> {
    group: &'a FiniteGroup,
}

impl<'a> ClosedFormOracle<'a> {
    pub fn new(group: &'a FiniteGroup) -> Self {
        ClosedFormOracle { group }
    }
}

impl RegularCharacters for ClosedFormOracle<'_> {
    fn order(&self) -> usize {
        self.group.order()
    }

    fn chi1(&self, g: ElementId) -> i64 {
        regular_k_character(self.group, &[g]).expect("k = 1")
    }

    fn chi2(&self, g: ElementId, h: ElementId) -> i64 {
        regular_k_character(self.group, &[g, h]).expect("k = 2")
    }

    fn chi3(&self, g: ElementId, h: ElementId, m: ElementId) -> i64 {
        regular_k_character(self.group, &[g, h, m]).expect("k = 3")
    }
}

/// Regular k-characters tabulated from the irreducible k-characters of a
/// character table. Values can be overwritten to build broken oracles.
#[derive(Clone, Debug)]
pub struct TabulatedOracle {
    n: usize,
    levels: [Vec<i64>; 3],
}

impl TabulatedOracle {
    pub fn from_character_table(t: &CharacterTable) -> Result<Self> {
        let tables = regular_k_tables_from_irreducibles(t)?;
        let mut levels: [Vec<i64>; 3] = Default::default();
        for (k, table) in tables.iter().enumerate() {
            levels[k] = table
                .entries()
                .into_iter()
                .map(|(tuple, v)| {
                    v.to_integer().and_then(|x| i64::try_from(x).ok()).ok_or_else(|| {
                        Error::InconsistentOracle(format!("regular {}-character at {tuple:?} is not an integer: {v}", k + 1))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
        }
        Ok(TabulatedOracle { n: t.group().order(), levels })
    }

    fn slot(tuple: &[ElementId]) -> usize {
        let mut s: Vec<usize> = tuple.iter().map(|g| g.index()).collect();
        s.sort_unstable();
        multiset_index(&s)
    }

    /// Overwrites the value on `tuple` (and all its reorderings).
    pub fn set(&mut self, tuple: &[ElementId], value: i64) {
        let k = tuple.len();
        assert!((1..=3).contains(&k), "tuple length must be 1, 2 or 3");
        self.levels[k - 1][Self::slot(tuple)] = value;
    }

    fn get(&self, tuple: &[ElementId]) -> i64 {
        self.levels[tuple.len() - 1][Self::slot(tuple)]
    }
}

impl RegularCharacters for TabulatedOracle {
    fn order(&self) -> usize {
        self.n
    }

    fn chi1(&self, g: ElementId) -> i64 {
        self.get(&[g])
    }

    fn chi2(&self, g: ElementId, h: ElementId) -> i64 {
        self.get(&[g, h])
    }

    fn chi3(&self, g: ElementId, h: ElementId, m: ElementId) -> i64 {
        self.get(&[g, h, m])
    }
}

/// The identity is the unique `g` with `χ_reg⁽¹⁾(g) ≠ 0`; for `g ≠ e` the
/// inverse is the unique `h` with `χ_reg⁽²⁾(g, h) = −n`.
pub fn extract_identity_and_inverses(oracle: &dyn RegularCharacters) -> Result<(ElementId, Vec<ElementId>)> {
    let n = oracle.order();
    let ids = || (0..n).map(ElementId::from);
    let nonzero: Vec<ElementId> = ids().filter(|&g| oracle.chi1(g) != 0).collect();
    let e = match nonzero.as_slice() {
        [e] => *e,
        other => {
            return Err(Error::InconsistentOracle(format!(
                "expected exactly one element with nonzero regular character, found {}: {other:?}",
                other.len()
            )))
        }
    };
    let minus_n = -(n as i64);
    let mut inverse = vec![e; n];
    for g in ids().filter(|&g| g != e) {
        let hits: Vec<ElementId> = ids().filter(|&h| oracle.chi2(g, h) == minus_n).collect();
        match hits.as_slice() {
            [h] if *h != e => inverse[g.index()] = *h,
            _ => {
                return Err(Error::InconsistentOracle(format!(
                    "element {g} has {} candidate inverses {hits:?}",
                    hits.len()
                )))
            }
        }
    }
    for g in ids() {
        if inverse[inverse[g.index()].index()] != g {
            return Err(Error::InconsistentOracle(format!("inverse map is not an involution at {g}")));
        }
    }
    Ok((e, inverse))
}

/// For each `h ≤ m`, the weights
/// `c(g) = (χ_reg⁽³⁾(g,h,m) − n³[g=h=m=e] + n²([g=e][hm=e] + [h=e][gm=e] + [m=e][gh=e])) / n`
/// equal `[ghm = e] + [gmh = e]`, so their support is `{(hm)⁻¹, (mh)⁻¹}`.
pub fn extract_symmetrized_products(
    oracle: &dyn RegularCharacters,
    identity: ElementId,
    inverse: &[ElementId],
) -> Result<SymmetrizedProducts> {
    let n = oracle.order();
    if inverse.len() != n {
        return Err(Error::InvalidParameter(format!("inverse map has {} entries for order {n}", inverse.len())));
    }
    let ni = n as i64;
    let is_e = |x: ElementId| i64::from(x == identity);
    // [xy = e] ⟺ y = x⁻¹
    let prod_e = |x: ElementId, y: ElementId| i64::from(inverse[x.index()] == y);
    let mut pairs = Vec::with_capacity(n * (n + 1) / 2);
    for m in (0..n).map(ElementId::from) {
        for h in (0..=m.index()).map(ElementId::from) {
            let mut support = Vec::with_capacity(2);
            for g in (0..n).map(ElementId::from) {
                let raw = oracle.chi3(g, h, m) - ni * ni * ni * is_e(g) * is_e(h) * is_e(m)
                    + ni * ni * (is_e(g) * prod_e(h, m) + is_e(h) * prod_e(g, m) + is_e(m) * prod_e(g, h));
                if raw % ni != 0 {
                    return Err(Error::InconsistentOracle(format!("3-character data at ({g},{h},{m}) is not divisible by {n}")));
                }
                let c = raw / ni;
                if !(0..=2).contains(&c) {
                    return Err(Error::InconsistentOracle(format!("weight {c} at ({g},{h},{m}) outside 0..=2")));
                }
                for _ in 0..c {
                    support.push(inverse[g.index()]);
                }
            }
            if support.len() != 2 {
                return Err(Error::InconsistentOracle(format!("weights for ({h},{m}) sum to {} instead of 2", support.len())));
            }
            pairs.push((h, m, support[0], support[1]));
        }
    }
    SymmetrizedProducts::from_pairs(n, &pairs)
}

/// The whole pipeline on a group: oracle, extraction, reconstruction, and
/// an isomorphism back to the source.
pub fn roundtrip(g: &FiniteGroup) -> Result<ReconstructionResult> {
    roundtrip_with(g, &ClosedFormOracle::new(g))
}

/// [`roundtrip`] with a caller-supplied oracle for `g`'s regular
/// k-characters. `g` is used only to certify the result.
pub fn roundtrip_with(g: &FiniteGroup, oracle: &dyn RegularCharacters) -> Result<ReconstructionResult> {
    let (e, inverse) = extract_identity_and_inverses(oracle)?;
    let products = extract_symmetrized_products(oracle, e, &inverse)?;
    let mut result = match reconstruct_group(&products)? {
        Reconstruction::Found(r) => r,
        Reconstruction::Infeasible { search_nodes } => {
            return Err(Error::Internal(format!("no table fits products extracted from {} ({search_nodes} nodes)", g.name())))
        }
    };
    let identity = IsoWitness::identity(g.order(), IsoKind::Isomorphism);
    let witness = if identity.verify(&result.table, g) { Some(identity) } else { isomorphism_search(&result.table, g) };
    let witness: IsoWitness = witness
        .ok_or_else(|| Error::Internal(format!("reconstructed table is not isomorphic to {}", g.name())))?;
    if !witness.verify(&result.table, g) {
        return Err(Error::Internal("isomorphism witness fails verification".into()));
    }
    result.witness = Some(witness);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::group::{acceptance_suite, build_group, GroupFamilySpec};

    fn grp(s: &str) -> FiniteGroup {
        build_group(&s.parse::<GroupFamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn identity_and_inverses() {
        let g = grp("cyclic(4)");
        let (e, inv) = extract_identity_and_inverses(&ClosedFormOracle::new(&g)).unwrap();
        assert_eq!(e, ElementId(0));
        assert_eq!(ClosedFormOracle::new(&g).chi1(e), 4);
        assert_eq!(inv[1], ElementId(3));
        assert_eq!(inv, g.inverse_map());
    }

    #[test]
    fn corrupted_identity_is_rejected() {
        let g = grp("symmetric(3)");
        let mut oracle = TabulatedOracle::from_character_table(&character_table(&g, 0).unwrap()).unwrap();
        assert!(extract_identity_and_inverses(&oracle).is_ok());
        oracle.set(&[ElementId(2)], 6);
        assert!(matches!(extract_identity_and_inverses(&oracle), Err(Error::InconsistentOracle(_))));
    }

    #[test]
    fn corrupted_three_character_is_rejected() {
        let g = grp("symmetric(3)");
        let mut oracle = TabulatedOracle::from_character_table(&character_table(&g, 0).unwrap()).unwrap();
        let (e, inv) = extract_identity_and_inverses(&oracle).unwrap();
        oracle.set(&[ElementId(1), ElementId(2), ElementId(3)], 12);
        assert!(extract_symmetrized_products(&oracle, e, &inv).is_err());
    }

    #[test]
    fn extraction_matches_direct_products() {
        for named in acceptance_suite() {
            let g = named.build();
            let (e, inv) = extract_identity_and_inverses(&ClosedFormOracle::new(&g)).unwrap();
            let p = extract_symmetrized_products(&ClosedFormOracle::new(&g), e, &inv).unwrap();
            assert_eq!(p, SymmetrizedProducts::from_group(&g), "{}", named.label);
        }
    }

    #[test]
    fn tabulated_oracle_agrees_with_closed_form() {
        for s in ["quaternion(8)", "symmetric(4)"] {
            let g = grp(s);
            let tab = TabulatedOracle::from_character_table(&character_table(&g, 0).unwrap()).unwrap();
            let closed = ClosedFormOracle::new(&g);
            for a in g.elements() {
                assert_eq!(tab.chi1(a), closed.chi1(a));
                for b in g.elements() {
                    assert_eq!(tab.chi2(a, b), closed.chi2(a, b));
                    for c in g.elements().step_by(5) {
                        assert_eq!(tab.chi3(a, b, c), closed.chi3(a, b, c));
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_three_pair() {
        let g = grp("symmetric(3)");
        let p = SymmetrizedProducts::from_group(&g);
        let involutions: Vec<ElementId> = g.elements().filter(|&x| g.element_order(x) == 2).collect();
        let (t1, t2) = (involutions[0], involutions[1]);
        let (a, b) = p.get(t1, t2);
        assert_ne!(a, b);
        assert_eq!(g.element_order(a), 3);
        assert_eq!(g.element_order(b), 3);
        for x in g.elements() {
            assert_eq!(p.get(x, g.inverse(x)), (ElementId(0), ElementId(0)));
        }
    }

    #[test]
    fn roundtrips() {
        for s in ["cyclic(6)", "symmetric(3)", "dihedral(8)", "quaternion(8)"] {
            let g = grp(s);
            let r = roundtrip(&g).unwrap();
            assert!(r.witness.as_ref().unwrap().verify(&r.table, &g), "{s}");
        }
        let c12 = grp("cyclic(12)");
        assert_eq!(roundtrip(&c12).unwrap().witness.unwrap(), IsoWitness::identity(12, IsoKind::Isomorphism));
    }

    #[test]
    fn roundtrip_from_irreducible_characters() {
        let g = grp("perms(7: (0 1 2), (1 2)(3 4 5 6))");
        let oracle = TabulatedOracle::from_character_table(&character_table(&g, 0).unwrap()).unwrap();
        let r = roundtrip_with(&g, &oracle).unwrap();
        assert!(r.witness.unwrap().verify(&r.table, &g));
    }
}
