//! Exact arithmetic in cyclotomic fields.

use groupchar::num::{rat, Cyclotomic};

fn main() -> groupchar::Result<()> {
    let w = Cyclotomic::root_of_unity(3, 1);
    let w2 = &w * &w;
    println!("1 + w + w² = {}", &(&Cyclotomic::one(3) + &w) + &w2);
    println!("w · conj(w) = {}", &w * &w.conjugate());

    // i = ζ₄ lives in ℚ(ζ₁₂) together with ζ₃.
    let i = Cyclotomic::root_of_unity(4, 1);
    let mixed = &i + &w;
    println!("i + w has conductor {} and value {}", mixed.conductor(), mixed);

    let z = &Cyclotomic::from_rational(5, &rat(1, 2)) + &Cyclotomic::root_of_unity(5, 2);
    let inv = z.inverse()?;
    println!("z · z⁻¹ = {}", &z * &inv);
    println!("galois(z, 2) = {}", z.galois(2));
    Ok(())
}
