//! Ordinary character tables with exact cyclotomic values.

mod class_constants;
mod dixon;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, ConjugacyClasses, ElementId, FiniteGroup};
use crate::num::Cyclotomic;

pub use class_constants::{class_constants, ClassConstants};
pub use dixon::{character_table, dixon_prime};

/// The irreducible characters of a group, as class functions.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: FiniteGroup,
    classes: ConjugacyClasses,
    conductor: u32,
    rows: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u32>,
}

impl CharacterTable {
    /// Assembles a table from rows indexed by class. Shapes and degrees are
    /// checked; orthogonality is not (see [`CharacterTable::verify_orthogonality`]).
    pub fn from_rows(group: &FiniteGroup, rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let classes = conjugacy_classes(group);
        let r = classes.len();
        if rows.len() != r {
            return Err(Error::InvalidTable(format!("{} rows for {r} classes", rows.len())));
        }
        let conductor = rows
            .iter()
            .flatten()
            .fold(group.exponent(), |acc, z| num_integer::lcm(acc, z.conductor()));
        let mut lifted = Vec::with_capacity(r);
        let mut degrees = Vec::with_capacity(r);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != r {
                return Err(Error::InvalidTable(format!("row {i} has {} values for {r} classes", row.len())));
            }
            let degree = row[0]
                .to_integer()
                .and_then(|d| u32::try_from(d).ok())
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::InvalidTable(format!("row {i} has non-positive-integer degree {}", row[0])))?;
            degrees.push(degree);
            lifted.push(row.iter().map(|z| z.lift(conductor)).collect::<Result<Vec<_>>>()?);
        }
        Ok(CharacterTable { group: group.clone(), classes, conductor, rows: lifted, degrees })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    /// Number of irreducible characters (= number of classes).
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Common conductor of every value in the table.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self, j: usize) -> u32 {
        self.degrees[j]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn row(&self, j: usize) -> &[Cyclotomic] {
        &self.rows[j]
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    /// `χ_j(g)`.
    pub fn value(&self, j: usize, g: ElementId) -> &Cyclotomic {
        &self.rows[j][self.classes.class_of(g)]
    }

    /// `χ_j` as a function on elements.
    pub fn element_values(&self, j: usize) -> Vec<Cyclotomic> {
        self.group.elements().map(|g| self.value(j, g).clone()).collect()
    }

    /// Same table with every value lifted to a multiple of the conductor.
    pub fn lifted(&self, conductor: u32) -> Result<Self> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|z| z.lift(conductor)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable { rows, conductor, ..self.clone() })
    }

    /// Overwrites one value. Used to build deliberately broken tables.
    pub fn set_value(&mut self, j: usize, class: usize, value: Cyclotomic) -> Result<()> {
        self.rows[j][class] = value.lift(self.conductor)?;
        Ok(())
    }

    /// Degree ascending, then values in descending canonical order, so the
    /// trivial character always comes first.
    pub(crate) fn sort_rows(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by(|&a, &b| {
            self.degrees[a].cmp(&self.degrees[b]).then_with(|| {
                for (x, y) in self.rows[a].iter().zip(&self.rows[b]) {
                    match y.canonical_cmp(x) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
        });
        self.rows = order.iter().map(|&i| self.rows[i].clone()).collect();
        self.degrees = order.iter().map(|&i| self.degrees[i]).collect();
    }

    /// Exact row and column orthogonality plus the degree-square sum.
    pub fn verify_orthogonality(&self) -> OrthogonalityReport {
        let n = self.group.order() as i64;
        let r = self.len();
        let e = self.conductor;
        let mut report = OrthogonalityReport::default();
        let conj: Vec<Vec<Cyclotomic>> = self.rows.iter().map(|row| row.iter().map(Cyclotomic::conjugate).collect()).collect();
        for i in 0..r {
            for j in i..r {
                let mut acc = Cyclotomic::zero(e);
                for c in 0..r {
                    acc += &(&self.rows[i][c] * &conj[j][c]).scale_int(self.classes.size(c) as i64);
                }
                let expected = Cyclotomic::from_integer(e, if i == j { n } else { 0 });
                if acc != expected {
                    report.row_violations.push((i, j));
                }
            }
        }
        for c in 0..r {
            for d in c..r {
                let mut acc = Cyclotomic::zero(e);
                for i in 0..r {
                    acc += &(&self.rows[i][c] * &conj[i][d]);
                }
                let expected = if c == d { n / self.classes.size(c) as i64 } else { 0 };
                if acc != Cyclotomic::from_integer(e, expected) {
                    report.column_violations.push((c, d));
                }
            }
        }
        let sum: u64 = self.degrees.iter().map(|&d| u64::from(d) * u64::from(d)).sum();
        report.degree_square_sum_ok = sum == n as u64;
        report
    }
}

/// Outcome of [`CharacterTable::verify_orthogonality`]. Violations list
/// index pairs `(i, j)` with `i ≤ j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub row_violations: Vec<(usize, usize)>,
    pub column_violations: Vec<(usize, usize)>,
    pub degree_square_sum_ok: bool,
}

impl OrthogonalityReport {
    pub fn is_clean(&self) -> bool {
        self.row_violations.is_empty() && self.column_violations.is_empty() && self.degree_square_sum_ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupFamilySpec};

    fn grp(s: &str) -> FiniteGroup {
        build_group(&s.parse::<GroupFamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn perturbed_table_is_reported() {
        let g = grp("symmetric(3)");
        let mut t = character_table(&g, 0).unwrap();
        assert!(t.verify_orthogonality().is_clean());
        let bumped = &t.row(2)[1].clone() + &Cyclotomic::one(1);
        t.set_value(2, 1, bumped).unwrap();
        let report = t.verify_orthogonality();
        assert!(!report.is_clean());
        assert!(!report.row_violations.is_empty());
    }

    /// χ₁ = (1, ζ, ζ²) and χ₂ = (1, ζ², ζ) on C3:
    /// Σ χ₁·χ̄₂ = 1 + ζ·ζ + ζ²·ζ² = 1 + ζ² + ζ = 0.
    #[test]
    fn cyclic_three_nontrivial_rows_are_orthogonal() {
        let w = Cyclotomic::root_of_unity(3, 1);
        let w2 = Cyclotomic::root_of_unity(3, 2);
        let sum = &(&Cyclotomic::one(3) + &(&w * &w2.conjugate())) + &(&w2 * &w.conjugate());
        assert!(sum.is_zero());
        let t = character_table(&grp("cyclic(3)"), 0).unwrap();
        assert!(t.verify_orthogonality().row_violations.is_empty());
    }

    #[test]
    fn from_rows_rejects_bad_shapes() {
        let g = grp("cyclic(2)");
        let one = Cyclotomic::one(1);
        assert!(CharacterTable::from_rows(&g, vec![vec![one.clone(), one.clone()]]).is_err());
        let bad_degree = vec![vec![-&one, one.clone()], vec![one.clone(), -&one]];
        assert!(CharacterTable::from_rows(&g, bad_degree).is_err());
    }
}
