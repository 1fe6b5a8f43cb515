//! Group determinant at rational points: factorization into per-character
//! factors and the regular 2-, 3-character identities for s₂, s₃.

use groupchar::chartab::character_table;
use groupchar::detform::{factorization_check, group_matrix, norm_coefficients, regular_identity_check, Assignment};
use groupchar::group::build_group;

fn main() -> groupchar::Result<()> {
    let g = build_group(&"symmetric(3)".parse()?)?;
    let m = group_matrix(&g);
    println!("group matrix of S3:");
    for row in m.rows() {
        println!("  {:?}", row.iter().map(|x| x.0).collect::<Vec<_>>());
    }
    let t = character_table(&g, 0)?;
    let points = Assignment::seeded_points(g.order(), 0, 3);
    for r in factorization_check(&t, &points)? {
        println!("det = {}  product matches: {}", r.det.0, r.matches);
    }
    for r in regular_identity_check(&g, &points)? {
        println!("s2 = {}  s3 = {}  match: {}", r.s2.0, r.s3.0, r.matches);
    }
    let s = norm_coefficients(&g, &Assignment::identity(6))?;
    println!("at the identity point: s1 = {}, s2 = {}, s3 = {}", s.s1, s.s2, s.s3);
    Ok(())
}
