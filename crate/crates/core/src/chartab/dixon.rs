//! Dixon–Schneider: common eigenvectors of the class matrices modulo a
//! prime, then discrete-Fourier lifting to cyclotomic values.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::class_constants::class_constants_for;
use super::CharacterTable;
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, ConjugacyClasses, FiniteGroup};
use crate::num::modp::{is_prime, PrimeField};
use crate::num::Cyclotomic;

/// Random combinations tried on a subspace before falling back to the
/// individual class matrices.
const RANDOM_ATTEMPTS: usize = 16;

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2⌊√n⌋`.
pub fn dixon_prime(n: usize, e: u32) -> u64 {
    let bound = 2 * isqrt(n as u64);
    let e = u64::from(e);
    let mut p = e + 1;
    while p <= bound || !is_prime(p) {
        p += e;
    }
    p
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// The irreducible characters of `g`. The seed only drives eigenspace
/// splitting; the sorted result does not depend on it.
pub fn character_table(g: &FiniteGroup, seed: u64) -> Result<CharacterTable> {
    let n = g.order();
    let e = g.exponent();
    let classes = conjugacy_classes(g);
    let r = classes.len();
    let consts = class_constants_for(g, &classes);
    let f = PrimeField::new(dixon_prime(n, e));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mats: Vec<Vec<Vec<u64>>> = (0..r)
        .map(|i| (0..r).map(|j| (0..r).map(|k| f.reduce(consts.get(i, j, k))).collect()).collect())
        .collect();
    let eigenvectors = common_eigenvectors(&f, &mats, r, &mut rng)?;

    let inverse_class: Vec<usize> =
        (0..r).map(|k| classes.class_of(g.inverse(classes.representative(k)))).collect();
    let z = f.pow(f.primitive_root(), (f.p - 1) / u64::from(e));
    let sqrt_n = isqrt(n as u64);

    let mut rows = Vec::with_capacity(r);
    for v in eigenvectors {
        let norm = f.inv(v[0]);
        let v: Vec<u64> = v.iter().map(|&x| f.mul(x, norm)).collect();
        let d = degree_mod_p(&f, &v, &classes, &inverse_class, n, sqrt_n)?;
        let theta: Vec<u64> = (0..r)
            .map(|k| f.mul(f.mul(d, v[k]), f.inv(f.reduce(classes.size(k) as u64))))
            .collect();
        rows.push(lift_row(g, &classes, &f, z, e, d, &theta)?);
    }

    let mut table = CharacterTable::from_rows(g, rows)?;
    table.sort_rows();
    let report = table.verify_orthogonality();
    if !report.is_clean() {
        return Err(Error::Internal(format!("computed character table of {} fails orthogonality: {report:?}", g.name())));
    }
    Ok(table)
}

/// `d² = n / Σ_k v_k v_{k*} / |C_k|`, solved for `1 ≤ d ≤ ⌊√n⌋`.
fn degree_mod_p(
    f: &PrimeField,
    v: &[u64],
    classes: &ConjugacyClasses,
    inverse_class: &[usize],
    n: usize,
    sqrt_n: u64,
) -> Result<u64> {
    let mut s = 0;
    for k in 0..v.len() {
        let t = f.mul(v[k], v[inverse_class[k]]);
        s = f.add(s, f.mul(t, f.inv(f.reduce(classes.size(k) as u64))));
    }
    if s == 0 {
        return Err(Error::Internal("degenerate eigenvector in class algebra".into()));
    }
    let d2 = f.mul(f.reduce(n as u64), f.inv(s));
    (1..=sqrt_n)
        .find(|&d| f.mul(d, d) == d2)
        .ok_or_else(|| Error::Internal(format!("no admissible degree with square {d2} mod {}", f.p)))
}

/// Recovers `χ(x) = Σ_s m_s ζ_o^s` on each class from the values mod p.
fn lift_row(
    g: &FiniteGroup,
    classes: &ConjugacyClasses,
    f: &PrimeField,
    z: u64,
    e: u32,
    d: u64,
    theta: &[u64],
) -> Result<Vec<Cyclotomic>> {
    let mut row = Vec::with_capacity(theta.len());
    for k in 0..theta.len() {
        let x = classes.representative(k);
        let o = g.element_order(x);
        let step = e / o;
        let zo = f.pow(z, u64::from(step));
        let o_inv = f.inv(u64::from(o));
        let powers: Vec<u64> = (0..o).map(|l| theta[classes.class_of(g.pow(x, l))]).collect();
        let mut exponents = Vec::new();
        for s in 0..o {
            let mut m = 0;
            for (l, &t) in powers.iter().enumerate() {
                // ζ_o^{-sl}
                let w = f.pow(zo, u64::from((o - s % o) % o) * l as u64 % u64::from(o));
                m = f.add(m, f.mul(t, w));
            }
            let m = f.mul(m, o_inv);
            if m > d {
                return Err(Error::Internal(format!("multiplicity {m} exceeds degree {d} while lifting class {k}")));
            }
            exponents.extend(std::iter::repeat_n(i64::from(step * s), m as usize));
        }
        row.push(Cyclotomic::sum_of_roots(e, &exponents));
    }
    Ok(row)
}

/// Splits `𝔽_p^r` into the one-dimensional common eigenspaces of `mats`.
fn common_eigenvectors(f: &PrimeField, mats: &[Vec<Vec<u64>>], r: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<u64>>> {
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
    let mut pending = vec![identity];
    let mut done = Vec::with_capacity(r);
    while let Some(space) = pending.pop() {
        if space.len() == 1 {
            done.push(space.into_iter().next().expect("one vector"));
            continue;
        }
        let mut parts = None;
        for _ in 0..RANDOM_ATTEMPTS {
            let coeffs: Vec<u64> = (0..mats.len()).map(|_| rng.random_range(0..f.p)).collect();
            let combo = combine(f, mats, &coeffs, r);
            if let Some(p) = split(f, &combo, &space)? {
                parts = Some(p);
                break;
            }
        }
        if parts.is_none() {
            for m in mats {
                if let Some(p) = split(f, m, &space)? {
                    parts = Some(p);
                    break;
                }
            }
        }
        let parts = parts.ok_or_else(|| Error::Internal(format!("eigenspace of dimension {} does not split", space.len())))?;
        pending.extend(parts);
    }
    Ok(done)
}

fn combine(f: &PrimeField, mats: &[Vec<Vec<u64>>], coeffs: &[u64], r: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![0u64; r]; r];
    for (m, &c) in mats.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (orow, mrow) in out.iter_mut().zip(m) {
            for (o, &x) in orow.iter_mut().zip(mrow) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
    }
    out
}

fn apply(f: &PrimeField, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    m.iter().map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))).collect()
}

/// Eigenspaces of `m` restricted to the invariant subspace spanned by
/// `space`, or `None` when `m` acts as a scalar there.
fn split(f: &PrimeField, m: &[Vec<u64>], space: &[Vec<u64>]) -> Result<Option<Vec<Vec<Vec<u64>>>>> {
    let dim = space.len();
    let images: Vec<Vec<u64>> = space.iter().map(|b| apply(f, m, b)).collect();
    let coords = f
        .coordinates(space, &images)
        .ok_or_else(|| Error::Internal("class matrix does not preserve an eigenspace".into()))?;
    // restricted[i][t] = i-th coordinate of m·b_t
    let restricted: Vec<Vec<u64>> = (0..dim).map(|i| (0..dim).map(|t| coords[t][i]).collect()).collect();
    let cp = f.char_poly(&restricted);
    let roots: Vec<u64> = (0..f.p).filter(|&x| f.eval(&cp, x) == 0).collect();
    if roots.len() < 2 {
        return Ok(None);
    }
    let mut parts = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().enumerate().map(|(j, &x)| if i == j { f.sub(x, lambda) } else { x }).collect())
            .collect();
        let kernel = f.null_space(&shifted, dim);
        total += kernel.len();
        let vectors: Vec<Vec<u64>> = kernel
            .iter()
            .map(|c| {
                let mut v = vec![0u64; space[0].len()];
                for (coef, b) in c.iter().zip(space) {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = f.add(*x, f.mul(*coef, y));
                    }
                }
                v
            })
            .collect();
        parts.push(vectors);
    }
    if total != dim {
        return Err(Error::Internal("class matrix is not diagonalizable modulo p".into()));
    }
    Ok(Some(parts))
}
