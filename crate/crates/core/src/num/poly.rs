use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Euler's totient.
pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `e`-th cyclotomic polynomial, coefficients from the constant term up.
///
/// Computed by dividing `xᵉ − 1` exactly by `Φ_d` for every proper divisor
/// `d` of `e`.
pub fn cyclotomic_polynomial(e: u32) -> Vec<BigInt> {
    assert!(e >= 1, "conductor must be positive");
    let mut memo: Vec<Option<Vec<BigInt>>> = vec![None; e as usize + 1];
    phi_rec(e, &mut memo)
}

fn phi_rec(e: u32, memo: &mut Vec<Option<Vec<BigInt>>>) -> Vec<BigInt> {
    if let Some(p) = &memo[e as usize] {
        return p.clone();
    }
    let mut poly = vec![BigInt::zero(); e as usize + 1];
    poly[0] = -BigInt::one();
    poly[e as usize] = BigInt::one();
    for d in 1..e {
        if e.is_multiple_of(d) {
            let divisor = phi_rec(d, memo);
            poly = exact_div_monic(&poly, &divisor);
        }
    }
    memo[e as usize] = Some(poly.clone());
    poly
}

/// Quotient of `a` by the monic polynomial `b`; the remainder must vanish.
fn exact_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db].clone();
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: Vec<BigInt>) -> Vec<i64> {
        p.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(ints(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(ints(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(ints(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degree_is_totient() {
        for e in 1..=120 {
            assert_eq!(cyclotomic_polynomial(e).len() - 1, euler_phi(e) as usize, "e = {e}");
        }
    }

    /// Φ₁₀₅ is the first with a coefficient of absolute value 2.
    #[test]
    fn phi_105_has_a_minus_two() {
        let p = ints(cyclotomic_polynomial(105));
        assert_eq!(p.iter().map(|c| c.abs()).max(), Some(2));
        assert_eq!(p[7], -2);
    }
}
