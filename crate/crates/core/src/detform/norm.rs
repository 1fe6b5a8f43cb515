use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{check_len, group_matrix, Assignment};
use crate::error::Result;
use crate::group::{ElementId, FiniteGroup};
use crate::kchar::regular_k_character;
use crate::num::{rat, Rational, RationalJson};

/// `s₂ = C2 · Σ χ_reg⁽²⁾(g,h)a(g)a(h)`. Pinned by the principal-minor
/// oracle on C2 and C3 in this module's tests.
pub const C2: (i64, i64) = (1, 2);
/// `s₃ = C3 · Σ χ_reg⁽³⁾(g,h,m)a(g)a(h)a(m)`. Pinned by the same oracle on C3.
pub const C3: (i64, i64) = (1, 6);

/// Coefficients of `det(λ − X_G(a)) = λⁿ − s₁λⁿ⁻¹ + s₂λⁿ⁻² − s₃λⁿ⁻³ + ⋯`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormCoefficients {
    pub s1: Rational,
    pub s2: Rational,
    pub s3: Rational,
}

/// `s₁, s₂, s₃` from the power traces `t_k = tr(X_G(a)ᵏ)` by Newton's
/// identities.
pub fn norm_coefficients(g: &FiniteGroup, a: &Assignment) -> Result<NormCoefficients> {
    check_len(g, a)?;
    let (m, l) = group_matrix(g).scaled(a);
    let n = m.len();
    let mut t1 = BigInt::zero();
    let mut t2 = BigInt::zero();
    let mut t3 = BigInt::zero();
    let mut sq = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        t1 += &m[i][i];
        for k in 0..n {
            if m[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                sq[i][j] += &m[i][k] * &m[k][j];
            }
        }
    }
    for i in 0..n {
        t2 += &sq[i][i];
        for k in 0..n {
            t3 += &sq[i][k] * &m[k][i];
        }
    }
    let scale = |t: BigInt, p: usize| Rational::new(t, num_traits::pow(l.clone(), p));
    let (t1, t2, t3) = (scale(t1, 1), scale(t2, 2), scale(t3, 3));
    let s2 = (&t1 * &t1 - &t2) / Rational::from_integer(2.into());
    let s3 = (&t1 * &t1 * &t1 - Rational::from_integer(3.into()) * &t1 * &t2 + Rational::from_integer(2.into()) * &t3)
        / Rational::from_integer(6.into());
    Ok(NormCoefficients { s1: t1, s2, s3 })
}

/// `s₂` and `s₃` next to the regular 2- and 3-character sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularIdentityReport {
    pub point: Assignment,
    pub s2: RationalJson,
    pub s2_from_characters: RationalJson,
    pub s3: RationalJson,
    pub s3_from_characters: RationalJson,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// `Σ_{tuples ∈ Gᵏ} χ_reg⁽ᵏ⁾(tuple)·Π a`, `k ∈ {2, 3}`.
fn regular_sum(g: &FiniteGroup, ints: &[BigInt], l: &BigInt, k: usize) -> Result<Rational> {
    let n = g.order();
    let mut acc = BigInt::zero();
    let e = ElementId::from;
    match k {
        2 => {
            for x in 0..n {
                for y in 0..n {
                    let v = regular_k_character(g, &[e(x), e(y)])?;
                    if v != 0 {
                        acc += &ints[x] * &ints[y] * v;
                    }
                }
            }
        }
        _ => {
            for x in 0..n {
                for y in 0..n {
                    let xy = &ints[x] * &ints[y];
                    for z in 0..n {
                        let v = regular_k_character(g, &[e(x), e(y), e(z)])?;
                        if v != 0 {
                            acc += &xy * &ints[z] * v;
                        }
                    }
                }
            }
        }
    }
    Ok(Rational::new(acc, num_traits::pow(l.clone(), k)))
}

pub fn regular_identity_check(g: &FiniteGroup, points: &[Assignment]) -> Result<Vec<RegularIdentityReport>> {
    points
        .iter()
        .map(|a| {
            let s = norm_coefficients(g, a)?;
            let (ints, l) = a.scaled();
            let r2 = regular_sum(g, &ints, &l, 2)? * rat(C2.0, C2.1);
            let r3 = regular_sum(g, &ints, &l, 3)? * rat(C3.0, C3.1);
            let matches = s.s2 == r2 && s.s3 == r3;
            Ok(RegularIdentityReport {
                point: a.clone(),
                s2: RationalJson(s.s2),
                s2_from_characters: RationalJson(r2),
                s3: RationalJson(s.s3),
                s3_from_characters: RationalJson(r3),
                matches,
            })
        })
        .collect()
}
