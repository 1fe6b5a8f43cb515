//! Property tests: field axioms, conductor coercion, k-character symmetries
//! and file round-trips.

use groupchar::chartab::character_table;
use groupchar::detform::Assignment;
use groupchar::group::{acceptance_suite, ElementId, FiniteGroup};
use groupchar::io;
use groupchar::kchar::{k_character, KCharTable};
use groupchar::num::{rat, Cyclotomic};
use groupchar::recon::SymmetrizedProducts;
use proptest::prelude::*;

const CONDUCTORS: &[u32] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15];

fn cyclotomic_in(e: u32) -> impl Strategy<Value = Cyclotomic> {
    (prop::collection::vec((0..e as i64, -4i64..=4), 0..6), 1i64..=5).prop_map(move |(terms, den)| {
        let mut z = Cyclotomic::zero(e);
        for (k, c) in terms {
            z += &Cyclotomic::root_of_unity(e, k).scale_int(c);
        }
        z.scale(&rat(1, den))
    })
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    prop::sample::select(CONDUCTORS).prop_flat_map(cyclotomic_in)
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    let suite = acceptance_suite();
    (0..suite.len()).prop_map(move |i| acceptance_suite()[i].build())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &Cyclotomic::zero(1));
        prop_assert_eq!(&a * &Cyclotomic::one(1), a.clone());
    }

    #[test]
    fn inverses(a in cyclotomic()) {
        if a.is_zero() {
            prop_assert!(a.inverse().is_err());
        } else {
            prop_assert_eq!(&a * &a.inverse().unwrap(), Cyclotomic::one(1));
        }
    }

    #[test]
    fn conjugation_is_an_involution(a in cyclotomic(), b in cyclotomic()) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        let r = Cyclotomic::from_rational(1, &rat(3, 7));
        prop_assert_eq!(r.conjugate(), r);
        // a·conj(a) is fixed by conjugation.
        let norm = &a * &a.conjugate();
        prop_assert_eq!(norm.conjugate(), norm);
    }

    #[test]
    fn coercion_commutes(a in cyclotomic_in(3), b in cyclotomic_in(4), m in 1u32..=3) {
        let target = 12 * m;
        let (la, lb) = (a.lift(target).unwrap(), b.lift(target).unwrap());
        prop_assert_eq!((&a + &b).lift(target).unwrap(), &la + &lb);
        prop_assert_eq!((&a * &b).lift(target).unwrap(), &la * &lb);
        prop_assert_eq!(la.clone(), a.clone());
        prop_assert_eq!(la.lift(target * 2).unwrap(), a);
    }

    #[test]
    fn two_characters_symmetric_and_class_invariant(g in small_group(), seed in 0u64..1000) {
        let t = character_table(&g, 0).unwrap();
        let n = g.order();
        let pick = |s: u64| ElementId::from((s as usize) % n);
        let (x, y, z) = (pick(seed), pick(seed / 7 + 3), pick(seed / 49 + 5));
        for j in 0..t.len() {
            let a = k_character(&t, j, &[x, y]).unwrap();
            prop_assert_eq!(&a, &k_character(&t, j, &[y, x]).unwrap());
            let b = k_character(&t, j, &[x, y, z]).unwrap();
            prop_assert_eq!(&b, &k_character(&t, j, &[z, x, y]).unwrap());
            prop_assert_eq!(&b, &k_character(&t, j, &[y, x, z]).unwrap());
            let c = g.conjugate(x, z);
            let d = g.conjugate(y, z);
            prop_assert_eq!(&a, &k_character(&t, j, &[c, d]).unwrap());
        }
    }

    #[test]
    fn group_file_roundtrip(g in small_group()) {
        let text = io::group_to_json(&g);
        let back = io::group_from_json(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(io::group_to_json(&back), text);
    }

    #[test]
    fn products_file_roundtrip(g in small_group()) {
        let p = SymmetrizedProducts::from_group(&g);
        prop_assert_eq!(SymmetrizedProducts::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn assignment_json_roundtrip(n in 1usize..30, seed in any::<u64>()) {
        let a = Assignment::seeded_points(n, seed, 1).pop().unwrap();
        let text = serde_json::to_string(&a).unwrap();
        let back: Assignment = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn table_files_roundtrip() {
    for named in acceptance_suite() {
        let g = named.build();
        let t = character_table(&g, 0).unwrap();
        let text = io::chartab_to_json(&t);
        let back = io::chartab_from_json(&text, &g).unwrap();
        assert_eq!(back.rows(), t.rows(), "{}", named.label);
        assert_eq!(io::chartab_to_json(&back), text);
        if g.order() <= 12 {
            let j = t.len() - 1;
            let k = KCharTable::build(&t, j, 2).unwrap();
            assert_eq!(io::kchar_table_from_json(&io::kchar_table_to_json(&k, None)).unwrap(), k);
        }
    }
}

#[test]
fn cyclotomic_json_roundtrip() {
    let z = &Cyclotomic::root_of_unity(12, 5) + &Cyclotomic::from_rational(12, &rat(-2, 3));
    let text = serde_json::to_string(&z).unwrap();
    assert_eq!(serde_json::from_str::<Cyclotomic>(&text).unwrap(), z);
}
