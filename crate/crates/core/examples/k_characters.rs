//! 2- and 3-characters, their vanishing, and orthogonality.

use groupchar::chartab::character_table;
use groupchar::group::{build_group, ElementId};
use groupchar::kchar::{k_character, orthogonality_sum, regular_k_character, KCharTable};

fn main() -> groupchar::Result<()> {
    let g = build_group(&"symmetric(3)".parse()?)?;
    let t = character_table(&g, 0)?;
    let e = ElementId(0);
    for j in 0..t.len() {
        let two = k_character(&t, j, &[e, e])?;
        let three = KCharTable::build(&t, j, 3)?;
        println!("χ{j}: degree {}, χ⁽²⁾(e,e) = {two}, χ⁽³⁾ identically zero: {}", t.degree(j), three.is_zero());
    }
    for k in 1..=3 {
        let sums: Vec<String> =
            (0..t.len()).map(|j| orthogonality_sum(&t, 0, j, k).map(|v| v.to_string())).collect::<Result<_, _>>()?;
        println!("k = {k}: Σ χ₀⁽ᵏ⁾·conj(χⱼ⁽ᵏ⁾) = {sums:?}");
    }
    println!("χ_reg⁽³⁾(e,e,e) = {}", regular_k_character(&g, &[e, e, e])?);
    Ok(())
}
