//! JSON file formats.
//!
//! * group: `{"name", "order", "table"}`
//! * character table: `{"group", "classes", "rows": [{"degree", "values"}]}`
//! * k-character table: `{"group", "character", "k", "order", "entries": [{"tuple", "value"}]}`
//! * symmetrized products: see [`SymmetrizedProducts::to_json`]

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup, DEFAULT_MAX_ORDER};
use crate::kchar::{multiset_count, multiset_index, KCharTable};
use crate::num::Cyclotomic;
pub use crate::recon::SymmetrizedProducts;

#[derive(Serialize, Deserialize)]
struct GroupFile {
    name: String,
    order: usize,
    table: Vec<Vec<usize>>,
}

pub fn group_to_json(g: &FiniteGroup) -> String {
    serde_json::to_string(&GroupFile { name: g.name().to_string(), order: g.order(), table: g.rows() })
        .expect("group serializes")
}

pub fn group_from_json(text: &str) -> Result<FiniteGroup> {
    group_from_json_capped(text, DEFAULT_MAX_ORDER)
}

pub fn group_from_json_capped(text: &str, max_order: usize) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(text)?;
    if file.order != file.table.len() {
        return Err(Error::Format(format!("order {} but table has {} rows", file.order, file.table.len())));
    }
    FiniteGroup::from_table_capped(file.name, &file.table, max_order)
}

pub fn load_group(path: impl AsRef<Path>, max_order: usize) -> Result<FiniteGroup> {
    group_from_json_capped(&read(path.as_ref())?, max_order)
}

pub(crate) fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub fn save_group(path: impl AsRef<Path>, g: &FiniteGroup) -> Result<()> {
    Ok(std::fs::write(path, group_to_json(g))?)
}

#[derive(Serialize, Deserialize)]
struct RowFile {
    degree: u32,
    values: Vec<Cyclotomic>,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    group: String,
    classes: Vec<ElementId>,
    rows: Vec<RowFile>,
}

pub fn chartab_to_json(t: &CharacterTable) -> String {
    let file = TableFile {
        group: t.group().name().to_string(),
        classes: t.classes().representatives(),
        rows: (0..t.len()).map(|j| RowFile { degree: t.degree(j), values: t.row(j).to_vec() }).collect(),
    };
    serde_json::to_string(&file).expect("table serializes")
}

/// Reads a table for `g`. Class representatives must match `g`'s classes
/// and each recorded degree must equal the value at the identity.
pub fn chartab_from_json(text: &str, g: &FiniteGroup) -> Result<CharacterTable> {
    let file: TableFile = serde_json::from_str(text)?;
    let reps = crate::group::conjugacy_classes(g).representatives();
    if file.classes != reps {
        return Err(Error::InvalidTable(format!("class representatives {:?} do not match the group's {reps:?}", file.classes)));
    }
    let degrees: Vec<u32> = file.rows.iter().map(|r| r.degree).collect();
    let t = CharacterTable::from_rows(g, file.rows.into_iter().map(|r| r.values).collect())?;
    if let Some(j) = (0..t.len()).find(|&j| t.degree(j) != degrees[j]) {
        return Err(Error::InvalidTable(format!("row {j} declares degree {} but has {} at the identity", degrees[j], t.degree(j))));
    }
    Ok(t)
}

#[derive(Serialize, Deserialize)]
struct KEntry {
    tuple: Vec<ElementId>,
    value: Cyclotomic,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orbit_size: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct KFile {
    group: String,
    /// `null` for tables that are sums of several characters.
    character: Option<usize>,
    k: usize,
    order: usize,
    entries: Vec<KEntry>,
}

/// Sorted tuples that are least among the sorted forms of their
/// simultaneous conjugates, with orbit sizes (counted on multisets).
pub fn conjugation_orbit_representatives(g: &FiniteGroup, k: usize) -> Vec<(Vec<ElementId>, usize)> {
    let n = g.order();
    let mut seen = vec![false; multiset_count(n, k)];
    let mut out = Vec::new();
    for idx_tuple in sorted_tuples(n, k) {
        if seen[multiset_index(&idx_tuple)] {
            continue;
        }
        let mut size = 0;
        for x in g.elements() {
            let mut image: Vec<usize> =
                idx_tuple.iter().map(|&a| g.conjugate(ElementId::from(a), x).index()).collect();
            image.sort_unstable();
            let slot = &mut seen[multiset_index(&image)];
            if !*slot {
                *slot = true;
                size += 1;
            }
        }
        out.push((idx_tuple.into_iter().map(ElementId::from).collect(), size));
    }
    out
}

fn sorted_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(multiset_count(n, k));
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// All entries, or only conjugation-orbit representatives when `orbits_of`
/// is given.
pub fn kchar_table_to_json(t: &KCharTable, orbits_of: Option<&FiniteGroup>) -> String {
    let character = (t.character() != usize::MAX).then_some(t.character());
    let entries = match orbits_of {
        None => t
            .entries()
            .into_iter()
            .map(|(tuple, v)| KEntry { tuple, value: v.clone(), orbit_size: None })
            .collect(),
        Some(g) => conjugation_orbit_representatives(g, t.k())
            .into_iter()
            .map(|(tuple, size)| KEntry { value: t.get(&tuple).clone(), tuple, orbit_size: Some(size) })
            .collect(),
    };
    let file = KFile { group: t.group_name().to_string(), character, k: t.k(), order: t.order(), entries };
    serde_json::to_string(&file).expect("k-table serializes")
}

/// Reads a full (not orbit-restricted) k-character table.
pub fn kchar_table_from_json(text: &str) -> Result<KCharTable> {
    let file: KFile = serde_json::from_str(text)?;
    if !(1..=3).contains(&file.k) {
        return Err(Error::Format(format!("k must be 1, 2 or 3, got {}", file.k)));
    }
    let count = multiset_count(file.order, file.k);
    if file.entries.len() != count {
        return Err(Error::Format(format!("expected {count} entries, found {}", file.entries.len())));
    }
    let conductor = file.entries.iter().fold(1, |acc, e| num_integer::lcm(acc, e.value.conductor()));
    let mut values: Vec<Option<Cyclotomic>> = vec![None; count];
    for e in file.entries {
        let mut s: Vec<usize> = e.tuple.iter().map(|x| x.index()).collect();
        if s.len() != file.k || s.iter().any(|&x| x >= file.order) {
            return Err(Error::Format(format!("bad tuple {:?}", e.tuple)));
        }
        s.sort_unstable();
        let slot = &mut values[multiset_index(&s)];
        if slot.is_some() {
            return Err(Error::Format(format!("duplicate tuple {:?}", e.tuple)));
        }
        *slot = Some(e.value.lift(conductor)?);
    }
    let values = values.into_iter().map(|v| v.expect("all slots filled")).collect();
    Ok(KCharTable::from_values(
        &file.group,
        file.character.unwrap_or(usize::MAX),
        file.k,
        file.order,
        conductor,
        values,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::group::{build_group, GroupFamilySpec};

    fn grp(s: &str) -> FiniteGroup {
        build_group(&s.parse::<GroupFamilySpec>().unwrap()).unwrap().with_name(s)
    }

    #[test]
    fn group_file() {
        let g = grp("cyclic(2)");
        let text = group_to_json(&g);
        assert_eq!(text, r#"{"name":"cyclic(2)","order":2,"table":[[0,1],[1,0]]}"#);
        assert_eq!(group_from_json(&text).unwrap(), g);
    }

    #[test]
    fn bad_group_file_names_axiom() {
        let err = group_from_json(r#"{"name":"x","order":2,"table":[[0,1],[1,1]]}"#).unwrap_err();
        assert!(err.to_string().contains("latin"), "{err}");
        assert!(group_from_json(r#"{"name":"x","order":3,"table":[[0]]}"#).is_err());
        assert!(matches!(group_from_json_capped(&group_to_json(&grp("cyclic(5)")), 4), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn chartab_file() {
        let g = grp("cyclic(3)");
        let t = character_table(&g, 0).unwrap();
        let text = chartab_to_json(&t);
        assert!(text.starts_with(r#"{"group":"cyclic(3)","classes":[0,1,2],"rows":[{"degree":1,"values":[{"conductor":3"#));
        let back = chartab_from_json(&text, &g).unwrap();
        assert_eq!(back.rows(), t.rows());
        assert_eq!(chartab_to_json(&back), text);
        assert!(chartab_from_json(&text, &grp("cyclic(4)")).is_err());
    }

    #[test]
    fn kchar_file() {
        let g = grp("symmetric(3)");
        let t = character_table(&g, 0).unwrap();
        let k = KCharTable::build(&t, 2, 2).unwrap();
        let text = kchar_table_to_json(&k, None);
        assert_eq!(kchar_table_from_json(&text).unwrap(), k);
        let reps = kchar_table_to_json(&k, Some(&g));
        let parsed: serde_json::Value = serde_json::from_str(&reps).unwrap();
        let sizes: usize = parsed["entries"].as_array().unwrap().iter().map(|e| e["orbit_size"].as_u64().unwrap() as usize).sum();
        assert_eq!(sizes, multiset_count(6, 2));
        assert!(kchar_table_from_json(&reps).is_err());
    }

    #[test]
    fn orbit_sizes_cover_multisets() {
        let g = grp("quaternion(8)");
        for k in 1..=3 {
            let reps = conjugation_orbit_representatives(&g, k);
            assert_eq!(reps.iter().map(|r| r.1).sum::<usize>(), multiset_count(8, k));
        }
        assert_eq!(conjugation_orbit_representatives(&g, 1).len(), 5);
    }
}
