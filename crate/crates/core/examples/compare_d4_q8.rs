//! D4 and Q8 share a character table but not their 3-characters.

use groupchar::chartab::character_table;
use groupchar::group::build_group;
use groupchar::kchar::equivalence_search;

fn main() -> groupchar::Result<()> {
    let d4 = character_table(&build_group(&"dihedral(8)".parse()?)?, 0)?;
    let q8 = character_table(&build_group(&"quaternion(8)".parse()?)?, 0)?;
    for levels in [vec![1], vec![1, 2], vec![1, 2, 3]] {
        let v = equivalence_search(&d4, &q8, &levels)?;
        println!(
            "levels {levels:?}: equivalent {}  nodes {}  {}",
            v.equivalent,
            v.nodes,
            v.reason.as_deref().unwrap_or("")
        );
    }
    Ok(())
}
