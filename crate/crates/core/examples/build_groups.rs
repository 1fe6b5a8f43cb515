//! Builds a few groups from family recipes and prints their basic invariants.

use groupchar::group::{build_group, conjugacy_classes, isomorphism_search, GroupFamilySpec};

fn main() -> groupchar::Result<()> {
    for spec in ["cyclic(6)", "dihedral(8)", "quaternion(8)", "perms(4: (0 1 2), (0 1)(2 3))", "heisenberg(3)"] {
        let g = build_group(&spec.parse::<GroupFamilySpec>()?)?;
        let classes = conjugacy_classes(&g);
        println!(
            "{spec:32} order {:2}  exponent {:2}  classes {:2}  abelian {}",
            g.order(),
            g.exponent(),
            classes.len(),
            g.is_abelian()
        );
    }
    let d4 = build_group(&"dihedral(8)".parse()?)?;
    let q8 = build_group(&"quaternion(8)".parse()?)?;
    println!("D4 ≅ Q8: {}", isomorphism_search(&d4, &q8).is_some());
    println!("D4 ≅ D4^op: {}", isomorphism_search(&d4, &d4.opposite()).is_some());
    Ok(())
}
