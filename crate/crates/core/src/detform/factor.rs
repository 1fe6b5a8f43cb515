use serde::Serialize;

use super::{check_len, determinant_eval, group_matrix, Assignment, GroupMatrix};
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::kchar::{permutation_weight, KCharTable};
use crate::num::{Cyclotomic, Rational, RationalJson};

/// Largest degree for which factors are evaluated by summing over tuples.
pub const MAX_FACTOR_DEGREE: u32 = 3;

/// A value that is printed as a rational when it is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ExactValue {
    Rational(RationalJson),
    Cyclotomic(Cyclotomic),
}

impl From<Cyclotomic> for ExactValue {
    fn from(z: Cyclotomic) -> Self {
        match z.to_rational() {
            Some(r) => ExactValue::Rational(RationalJson(r)),
            None => ExactValue::Cyclotomic(z),
        }
    }
}

/// The factors `φ_j(a) = (1/f!) Σ_{tuples ∈ Gᶠ} χ_j⁽ᶠ⁾(g₁,…,g_f)·a(g₁)⋯a(g_f)`,
/// `f = deg χ_j`, with the k-character tables computed once.
pub struct FrobeniusFactors {
    tables: Vec<KCharTable>,
    degrees: Vec<u32>,
    conductor: u32,
}

impl FrobeniusFactors {
    pub fn new(t: &CharacterTable) -> Result<Self> {
        if let Some(&d) = t.degrees().iter().find(|&&d| d > MAX_FACTOR_DEGREE) {
            return Err(Error::Unsupported(format!("factor evaluation needs degrees ≤ {MAX_FACTOR_DEGREE}, found {d}")));
        }
        let tables = (0..t.len()).map(|j| KCharTable::build(t, j, t.degree(j) as usize)).collect::<Result<Vec<_>>>()?;
        Ok(FrobeniusFactors { tables, degrees: t.degrees().to_vec(), conductor: t.conductor() })
    }

    pub fn eval(&self, j: usize, a: &Assignment) -> Result<Cyclotomic> {
        let table = &self.tables[j];
        if a.len() != table.order() {
            return Err(Error::InvalidParameter(format!("assignment has {} values for order {}", a.len(), table.order())));
        }
        let f = self.degrees[j] as usize;
        let factorial: i64 = (1..=f as i64).product();
        let mut acc = Cyclotomic::zero(self.conductor);
        for (tuple, value) in table.entries() {
            if value.is_zero() {
                continue;
            }
            let mut weight = Rational::from_integer(permutation_weight(&tuple.iter().map(|g| g.index()).collect::<Vec<_>>()).into());
            for g in &tuple {
                weight *= a.get(*g);
            }
            acc += &value.scale(&weight);
        }
        Ok(acc.scale(&Rational::new(1.into(), factorial.into())))
    }

    /// `Π_j φ_j(a)^{deg χ_j}`.
    pub fn product(&self, a: &Assignment) -> Result<Cyclotomic> {
        let mut acc = Cyclotomic::one(self.conductor);
        for j in 0..self.tables.len() {
            let phi = self.eval(j, a)?;
            for _ in 0..self.degrees[j] {
                acc = &acc * &phi;
            }
        }
        Ok(acc)
    }
}

pub fn frobenius_factor_eval(t: &CharacterTable, j: usize, a: &Assignment) -> Result<Cyclotomic> {
    if j >= t.len() {
        return Err(Error::InvalidParameter(format!("character index {j} out of range (table has {})", t.len())));
    }
    let f = t.degree(j);
    if f > MAX_FACTOR_DEGREE {
        return Err(Error::Unsupported(format!("factor evaluation needs degree ≤ {MAX_FACTOR_DEGREE}, got {f}")));
    }
    let single = FrobeniusFactors {
        tables: vec![KCharTable::build(t, j, f as usize)?],
        degrees: vec![f],
        conductor: t.conductor(),
    };
    single.eval(0, a)
}

/// Both sides of `det X_G(a) = Π φ_j(a)^{deg χ_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub point: Assignment,
    pub det: RationalJson,
    pub product: ExactValue,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn factorization_check(t: &CharacterTable, points: &[Assignment]) -> Result<Vec<FactorizationReport>> {
    let g = t.group();
    let m: GroupMatrix = group_matrix(g);
    let factors = FrobeniusFactors::new(t)?;
    points
        .iter()
        .map(|a| {
            check_len(g, a)?;
            let det = determinant_eval(&m, a)?;
            let product = factors.product(a)?;
            let matches = product == Cyclotomic::from_rational(1, &det);
            Ok(FactorizationReport { point: a.clone(), det: RationalJson(det), product: product.into(), matches })
        })
        .collect()
}
