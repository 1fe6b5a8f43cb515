//! Character tables by the Dixon–Schneider method.

use groupchar::chartab::character_table;
use groupchar::group::{build_group, GroupFamilySpec};

fn main() -> groupchar::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "symmetric(4)".to_string());
    let g = build_group(&spec.parse::<GroupFamilySpec>()?)?;
    let t = character_table(&g, 0)?;
    println!("{spec}: {} classes, conductor {}", t.len(), t.conductor());
    let classes = t.classes();
    print!("{:>8}", "size");
    for c in 0..classes.len() {
        print!("{:>14}", classes.size(c));
    }
    println!();
    for j in 0..t.len() {
        print!("{:>8}", format!("χ{j}"));
        for v in t.row(j) {
            print!("{:>14}", v.to_string());
        }
        println!();
    }
    println!("orthogonality clean: {}", t.verify_orthogonality().is_clean());
    Ok(())
}
