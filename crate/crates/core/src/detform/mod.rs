//! The group matrix and group determinant, evaluated at exact rational
//! points.

mod factor;
mod norm;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};
use crate::num::{Rational, RationalJson};

pub use factor::{factorization_check, frobenius_factor_eval, ExactValue, FactorizationReport, FrobeniusFactors};
pub use norm::{norm_coefficients, regular_identity_check, NormCoefficients, RegularIdentityReport, C2, C3};

/// `X_G` with entry `(i, j)` the element `g_i g_j⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl GroupMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> ElementId {
        ElementId(self.entries[i * self.n + j])
    }

    pub fn rows(&self) -> Vec<Vec<ElementId>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Substitutes `a`, with every row scaled by the common denominator `L`
    /// of `a`. Returns the integer matrix and `L`.
    fn scaled(&self, a: &Assignment) -> (Vec<Vec<BigInt>>, BigInt) {
        let (ints, l) = a.scaled();
        let m = (0..self.n).map(|i| (0..self.n).map(|j| ints[self.entries[i * self.n + j] as usize].clone()).collect()).collect();
        (m, l)
    }
}

pub fn group_matrix(g: &FiniteGroup) -> GroupMatrix {
    let n = g.order();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(g.mul_idx(i, g.inv_idx(j)) as u32);
        }
    }
    let m = GroupMatrix { n, entries };
    debug_assert!(is_latin(&m));
    m
}

fn is_latin(m: &GroupMatrix) -> bool {
    let n = m.n;
    (0..n).all(|i| {
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        (0..n).all(|j| {
            !std::mem::replace(&mut row[m.entry(i, j).index()], true)
                && !std::mem::replace(&mut col[m.entry(j, i).index()], true)
        })
    })
}

/// A point `x_g ↦ a(g)` at which group-algebra polynomials are evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<Rational>,
}

impl Assignment {
    pub fn new(values: Vec<Rational>) -> Self {
        Assignment { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Assignment { values: values.iter().map(|&v| Rational::from_integer(v.into())).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Assignment { values: vec![Rational::zero(); n] }
    }

    /// `x_e = 1`, all other variables 0.
    pub fn identity(n: usize) -> Self {
        let mut a = Self::zero(n);
        if n > 0 {
            a.values[0] = Rational::one();
        }
        a
    }

    /// Numerators uniform in `[−10⁴, 10⁴]`, denominators in `1..=16`.
    pub fn random(n: usize, rng: &mut ChaCha8Rng) -> Self {
        let values = (0..n)
            .map(|_| {
                let num: i64 = rng.random_range(-10_000..=10_000);
                let den: i64 = rng.random_range(1..=16);
                Rational::new(num.into(), den.into())
            })
            .collect();
        Assignment { values }
    }

    /// `count` random points drawn from one generator seeded with `seed`.
    pub fn seeded_points(n: usize, seed: u64, count: usize) -> Vec<Assignment> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| Self::random(n, &mut rng)).collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, g: ElementId) -> &Rational {
        &self.values[g.index()]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `c(g) = Σ_h a(h)·b(h⁻¹g)`, so that `X(c) = X(a)·X(b)`.
    pub fn convolve(g: &FiniteGroup, a: &Assignment, b: &Assignment) -> Result<Assignment> {
        let n = g.order();
        if a.len() != n || b.len() != n {
            return Err(Error::InvalidParameter("assignment length differs from group order".into()));
        }
        let mut c = vec![Rational::zero(); n];
        for h in 0..n {
            if a.values[h].is_zero() {
                continue;
            }
            let hinv = g.inv_idx(h);
            for (x, cx) in c.iter_mut().enumerate() {
                let y = &b.values[g.mul_idx(hinv, x)];
                if !y.is_zero() {
                    *cx += &a.values[h] * y;
                }
            }
        }
        Ok(Assignment { values: c })
    }

    /// Values as integers over the common denominator `L`.
    fn scaled(&self) -> (Vec<BigInt>, BigInt) {
        let l = self.values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let ints = self.values.iter().map(|v| v.numer() * (&l / v.denom())).collect();
        (ints, l)
    }

    /// Same point with variables renamed by `perm` (old index → new index).
    pub fn relabel(&self, perm: &[usize]) -> Assignment {
        let mut values = vec![Rational::zero(); self.values.len()];
        for (old, &new) in perm.iter().enumerate() {
            values[new] = self.values[old].clone();
        }
        Assignment { values }
    }
}

impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wrapped: Vec<RationalJson> = self.values.iter().cloned().map(RationalJson).collect();
        wrapped.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Assignment {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wrapped: Vec<RationalJson> = Vec::deserialize(d)?;
        Ok(Assignment { values: wrapped.into_iter().map(|r| r.0).collect() })
    }
}

fn check_len(g: &FiniteGroup, a: &Assignment) -> Result<()> {
    if a.len() != g.order() {
        return Err(Error::InvalidParameter(format!("assignment has {} values for order {}", a.len(), g.order())));
    }
    Ok(())
}

/// `det X_G(a)`, by fraction-free elimination after clearing denominators.
pub fn determinant_eval(m: &GroupMatrix, a: &Assignment) -> Result<Rational> {
    if a.len() != m.n {
        return Err(Error::InvalidParameter(format!("assignment has {} values for order {}", a.len(), m.n)));
    }
    let (ints, l) = m.scaled(a);
    let det = bareiss(ints);
    Ok(Rational::new(det, num_traits::pow(l, m.n)))
}

/// Determinant of a square integer matrix by Bareiss elimination, with
/// row swaps on zero pivots.
pub fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else { return BigInt::zero() };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
        for row in m.iter_mut().skip(k + 1) {
            row[k] = BigInt::zero();
        }
    }
    let det = m[n - 1][n - 1].clone();
    if sign.is_negative() {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupFamilySpec};
    use crate::num::rat;

    fn grp(s: &str) -> FiniteGroup {
        build_group(&s.parse::<GroupFamilySpec>().unwrap()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Vec<BigInt>> {
        let n = (v.len() as f64).sqrt() as usize;
        v.chunks(n).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn group_matrix_examples() {
        let m = group_matrix(&grp("cyclic(2)"));
        assert_eq!(m.rows(), vec![vec![ElementId(0), ElementId(1)], vec![ElementId(1), ElementId(0)]]);
        let c3 = grp("cyclic(3)");
        let m3 = group_matrix(&c3);
        assert_eq!(m3.rows()[0], vec![ElementId(0), ElementId(2), ElementId(1)]);
        let s4 = group_matrix(&grp("symmetric(4)"));
        assert!((0..24).all(|i| s4.entry(i, i).is_identity()));
        assert!(is_latin(&s4));
    }

    #[test]
    fn bareiss_small_matrices() {
        assert_eq!(bareiss(ints(&[2, 1, 1, 2])), BigInt::from(3));
        assert_eq!(bareiss(ints(&[0, 1, 1, 0])), BigInt::from(-1));
        assert_eq!(bareiss(ints(&[1, 2, 3, 4, 5, 6, 7, 8, 10])), BigInt::from(-3));
        assert_eq!(bareiss(ints(&[0, 0, 1, 0, 1, 0, 1, 0, 0])), BigInt::from(-1));
        assert_eq!(bareiss(ints(&[1, 2, 2, 4])), BigInt::zero());
    }

    #[test]
    fn cyclic_two_determinants() {
        let m = group_matrix(&grp("cyclic(2)"));
        assert_eq!(determinant_eval(&m, &Assignment::from_integers(&[1, 0])).unwrap(), rat(1, 1));
        assert_eq!(determinant_eval(&m, &Assignment::from_integers(&[2, 1])).unwrap(), rat(3, 1));
        let half = Assignment::new(vec![rat(1, 2), rat(1, 3)]);
        assert_eq!(determinant_eval(&m, &half).unwrap(), rat(1, 4) - rat(1, 9));
    }

    #[test]
    fn identity_point_gives_one() {
        for s in ["symmetric(4)", "heisenberg(3)", "quaternion(8)"] {
            let g = grp(s);
            let m = group_matrix(&g);
            assert_eq!(determinant_eval(&m, &Assignment::identity(g.order())).unwrap(), rat(1, 1));
        }
    }

    #[test]
    fn relabeling_leaves_determinant_unchanged() {
        let g = grp("symmetric(3)");
        let m = group_matrix(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for perm in [vec![0, 2, 1, 4, 5, 3], vec![0, 5, 4, 3, 2, 1], vec![0, 3, 1, 2, 5, 4]] {
            let h = g.relabel(&perm).unwrap();
            let mh = group_matrix(&h);
            for _ in 0..3 {
                let a = Assignment::random(6, &mut rng);
                assert_eq!(determinant_eval(&m, &a).unwrap(), determinant_eval(&mh, &a.relabel(&perm)).unwrap());
            }
        }
    }

    #[test]
    fn determinant_is_multiplicative_under_convolution() {
        for s in ["symmetric(3)", "quaternion(8)", "cyclic(5)"] {
            let g = grp(s);
            let m = group_matrix(&g);
            let pts = Assignment::seeded_points(g.order(), 11, 6);
            for pair in pts.chunks(2) {
                let c = Assignment::convolve(&g, &pair[0], &pair[1]).unwrap();
                let lhs = determinant_eval(&m, &c).unwrap();
                let rhs = determinant_eval(&m, &pair[0]).unwrap() * determinant_eval(&m, &pair[1]).unwrap();
                assert_eq!(lhs, rhs, "{s}");
            }
        }
    }

    #[test]
    fn seeded_points_are_reproducible() {
        assert_eq!(Assignment::seeded_points(5, 9, 3), Assignment::seeded_points(5, 9, 3));
        assert_ne!(Assignment::seeded_points(5, 9, 3), Assignment::seeded_points(5, 10, 3));
    }

    #[test]
    fn assignment_json() {
        let a = Assignment::new(vec![rat(1, 2), rat(-3, 1)]);
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, "[[1,2],[-3,1]]");
        assert_eq!(serde_json::from_str::<Assignment>(&text).unwrap(), a);
    }
}
