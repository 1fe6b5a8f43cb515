use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{cyclotomic_polynomial, euler_phi};
use super::rational::{Rational, RationalJson};
use crate::error::{Error, Result};

/// Per-conductor data: `Φ_e` and the reductions of `ζᵏ` for `0 ≤ k < e`.
#[derive(Debug)]
struct Field {
    conductor: u32,
    degree: usize,
    powers: Vec<Vec<BigInt>>,
}

impl Field {
    fn build(e: u32) -> Field {
        let phi = cyclotomic_polynomial(e);
        let degree = phi.len() - 1;
        debug_assert_eq!(degree, euler_phi(e) as usize);
        let mut powers = Vec::with_capacity(e as usize);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..e {
            powers.push(cur.clone());
            // Multiply by ζ and reduce with the monic Φ_e.
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * &phi[i];
                }
            }
        }
        Field { conductor: e, degree, powers }
    }
}

fn field(e: u32) -> Arc<Field> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().expect("field cache poisoned").get(&e) {
        return f.clone();
    }
    let built = Arc::new(Field::build(e));
    cache.lock().expect("field cache poisoned").entry(e).or_insert(built).clone()
}

/// An exact element of `ℚ(ζₑ)`.
///
/// Stored in the power basis `1, ζ, …, ζ^{φ(e)−1}` as integer numerators
/// over one positive common denominator, with the content removed. The
/// representation is canonical for a fixed conductor, so equality is a
/// comparison of vectors. Values with different conductors compare equal
/// when they agree after lifting to the least common multiple.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<Field>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    pub fn zero(conductor: u32) -> Self {
        let field = field(conductor.max(1));
        let num = vec![BigInt::zero(); field.degree];
        Cyclotomic { field, num, den: BigInt::one() }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_integer(conductor, 1)
    }

    pub fn from_integer(conductor: u32, v: i64) -> Self {
        Self::from_rational(conductor, &Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(conductor: u32, v: &Rational) -> Self {
        let mut z = Self::zero(conductor);
        z.num[0] = v.numer().clone();
        z.den = v.denom().clone();
        z
    }

    /// `ζₑᵏ`.
    pub fn root_of_unity(conductor: u32, k: i64) -> Self {
        let field = field(conductor.max(1));
        let e = field.conductor as i64;
        let num = field.powers[k.rem_euclid(e) as usize].clone();
        Cyclotomic { field, num, den: BigInt::one() }
    }

    /// `Σ ζₑ^{exponents[i]}`.
    pub fn sum_of_roots(conductor: u32, exponents: &[i64]) -> Self {
        let f = field(conductor.max(1));
        let e = f.conductor as i64;
        let mut num = vec![BigInt::zero(); f.degree];
        for &k in exponents {
            for (acc, c) in num.iter_mut().zip(&f.powers[k.rem_euclid(e) as usize]) {
                *acc += c;
            }
        }
        Cyclotomic { field: f, num, den: BigInt::one() }
    }

    /// Builds from rational coefficients in the power basis; the vector must
    /// have length `φ(e)`.
    pub fn from_coeffs(conductor: u32, coeffs: &[Rational]) -> Result<Self> {
        let field = field(conductor.max(1));
        if coeffs.len() != field.degree {
            return Err(Error::Format(format!(
                "conductor {conductor} needs {} coefficients, got {}",
                field.degree,
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Cyclotomic { field, num, den }.normalized())
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    /// Coefficients in the power basis, each in lowest terms.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num.iter().map(|c| Rational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    fn normalized(mut self) -> Self {
        if self.is_zero() {
            self.den = BigInt::one();
            return self;
        }
        if self.den.is_negative() {
            self.den = -self.den;
            self.num.iter_mut().for_each(|c| *c = -&*c);
        }
        if !self.den.is_one() {
            let g = self.num.iter().fold(self.den.clone(), |acc, c| acc.gcd(c));
            if !g.is_one() {
                self.den /= &g;
                self.num.iter_mut().for_each(|c| *c /= &g);
            }
        }
        self
    }

    /// Reduces a polynomial in `ζ` of any degree.
    fn reduce(field: &Arc<Field>, poly: &[BigInt], den: BigInt) -> Self {
        let d = field.degree;
        let e = field.conductor as usize;
        let mut num = vec![BigInt::zero(); d];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < d {
                num[k] += c;
            } else {
                for (acc, p) in num.iter_mut().zip(&field.powers[k % e]) {
                    if !p.is_zero() {
                        *acc += c * p;
                    }
                }
            }
        }
        Cyclotomic { field: field.clone(), num, den }.normalized()
    }

    /// Image in `ℚ(ζ_E)` for a multiple `E` of the conductor.
    pub fn lift(&self, conductor: u32) -> Result<Self> {
        let e = self.conductor();
        if conductor == e {
            return Ok(self.clone());
        }
        if !conductor.is_multiple_of(e) {
            return Err(Error::ConductorMismatch(e, conductor));
        }
        let target = field(conductor);
        let step = (conductor / e) as usize;
        let mut poly = vec![BigInt::zero(); (self.num.len().saturating_sub(1)) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(Self::reduce(&target, &poly, self.den.clone()))
    }

    fn aligned<'a>(a: &'a Cyclotomic, b: &'a Cyclotomic) -> (std::borrow::Cow<'a, Cyclotomic>, std::borrow::Cow<'a, Cyclotomic>) {
        use std::borrow::Cow;
        if a.conductor() == b.conductor() {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let l = num_integer::lcm(a.conductor(), b.conductor());
        (
            Cow::Owned(a.lift(l).expect("lcm is a multiple")),
            Cow::Owned(b.lift(l).expect("lcm is a multiple")),
        )
    }

    /// Image under `ζ ↦ ζ^{e−1}`, which is complex conjugation under every
    /// embedding.
    pub fn conjugate(&self) -> Self {
        self.galois(self.conductor() as i64 - 1)
    }

    /// Image under `ζ ↦ ζᵏ` for `k` coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let f = &self.field;
        let e = f.conductor as i64;
        let mut num = vec![BigInt::zero(); f.degree];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = &f.powers[(k * i as i64).rem_euclid(e) as usize];
            for (acc, p) in num.iter_mut().zip(img) {
                if !p.is_zero() {
                    *acc += c * p;
                }
            }
        }
        Cyclotomic { field: f.clone(), num, den: self.den.clone() }.normalized()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| c * r.numer()).collect(),
            den: &self.den * r.denom(),
        }
        .normalized()
    }

    pub fn scale_int(&self, k: i64) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| c * k).collect(),
            den: self.den.clone(),
        }
        .normalized()
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm on the
    /// coefficient polynomial modulo `Φ_e`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let e = self.conductor();
        let modulus: Vec<Rational> = cyclotomic_polynomial(e).into_iter().map(Rational::from_integer).collect();
        let a: Vec<Rational> = self.coeffs();
        let inv = qpoly::inverse_mod(&a, &modulus).ok_or_else(|| {
            Error::Internal(format!("element of ℚ(ζ_{e}) has no inverse modulo Φ_{e}"))
        })?;
        let mut coeffs = inv;
        coeffs.resize(self.field.degree, Rational::zero());
        Self::from_coeffs(e, &coeffs)
    }

    pub fn checked_div(&self, other: &Cyclotomic) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// A total order on values of one conductor: numerically by power-basis
    /// coefficient, first index first.
    pub fn canonical_cmp(&self, other: &Cyclotomic) -> Ordering {
        let (a, b) = Self::aligned(self, other);
        for (x, y) in a.num.iter().zip(&b.num) {
            let ord = (x * &b.den).cmp(&(y * &a.den));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    /// Floating-point image under `ζₑ ↦ exp(2πi/e)`. Display only.
    pub fn approx(&self) -> (f64, f64) {
        let e = self.conductor() as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let angle = std::f64::consts::TAU * k as f64 / e;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::aligned(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.conductor();
        let mut terms = Vec::new();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = Rational::new(c.clone(), self.den.clone());
            let mag = coeff.abs();
            let sign = if coeff.is_negative() { "-" } else { "+" };
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => format!("z{e}"),
                (1, false) => format!("{mag}*z{e}"),
                (_, true) => format!("z{e}^{k}"),
                (_, false) => format!("{mag}*z{e}^{k}"),
            };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (sign, body)) in terms.iter().enumerate() {
            match (i, *sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                (_, s) => write!(f, " {s} {body}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::aligned(self, rhs);
        if a.den == b.den {
            let num = a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect();
            return Cyclotomic { field: a.field.clone(), num, den: a.den.clone() }.normalized();
        }
        let num = a.num.iter().zip(&b.num).map(|(x, y)| x * &b.den + y * &a.den).collect();
        Cyclotomic { field: a.field.clone(), num, den: &a.den * &b.den }.normalized()
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::aligned(self, rhs);
        if a.field.degree == 1 {
            let num = vec![&a.num[0] * &b.num[0]];
            return Cyclotomic { field: a.field.clone(), num, den: &a.den * &b.den }.normalized();
        }
        let mut poly = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Cyclotomic::reduce(&a.field, &poly, &a.den * &b.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

/// Serialized form `{"conductor": e, "coeffs": [[num, den], …]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CyclotomicJson {
    pub conductor: u32,
    pub coeffs: Vec<RationalJson>,
}

impl From<&Cyclotomic> for CyclotomicJson {
    fn from(z: &Cyclotomic) -> Self {
        CyclotomicJson { conductor: z.conductor(), coeffs: z.coeffs().into_iter().map(RationalJson).collect() }
    }
}

impl TryFrom<CyclotomicJson> for Cyclotomic {
    type Error = Error;
    fn try_from(j: CyclotomicJson) -> Result<Self> {
        if j.conductor == 0 {
            return Err(Error::Format("conductor must be positive".into()));
        }
        let coeffs: Vec<Rational> = j.coeffs.into_iter().map(|r| r.0).collect();
        Cyclotomic::from_coeffs(j.conductor, &coeffs)
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CyclotomicJson::deserialize(d)?;
        Cyclotomic::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// Dense polynomials over ℚ, just enough for modular inversion.
mod qpoly {
    use super::Rational;
    use num_traits::Zero;

    fn trim(p: &mut Vec<Rational>) {
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    fn deg(p: &[Rational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }

    fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let db = deg(b).expect("division by zero polynomial");
        let mut rem = a.to_vec();
        let mut quot = vec![Rational::zero(); a.len().max(db + 1) - db];
        while let Some(dr) = deg(&rem) {
            if dr < db {
                break;
            }
            let c = &rem[dr] / &b[db];
            for (j, bj) in b[..=db].iter().enumerate() {
                let t = &c * bj;
                rem[dr - db + j] -= t;
            }
            quot[dr - db] = c;
        }
        trim(&mut rem);
        (quot, rem)
    }

    fn mul_sub(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = a.to_vec();
        let len = (q.len() + b.len()).saturating_sub(1).max(a.len());
        out.resize(len, Rational::zero());
        for (i, x) in q.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] -= x * y;
            }
        }
        trim(&mut out);
        out
    }

    /// `u` with `u·a ≡ 1 (mod m)`, if `gcd(a, m)` is a constant.
    pub(super) fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::from_integer(1.into())]);
        trim(&mut r1);
        while deg(&r1).is_some_and(|d| d > 0) {
            let (q, r) = divrem(&r0, &r1);
            let s = mul_sub(&s0, &q, &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let c = r1.first().cloned().filter(|c| !c.is_zero())?;
        Some(s1.iter().map(|x| x / &c).collect())
    }
}
