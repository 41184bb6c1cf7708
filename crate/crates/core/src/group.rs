//! Finite groups given by Cayley tables.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Axiom, Result};

/// A validated finite group. Index 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
}

/// Checks that `rows` is a non-empty square table with entries in range and
/// flattens it.
pub(crate) fn flatten_table(rows: &[Vec<usize>], what: &str) -> Result<(usize, Vec<u32>)> {
    let n = rows.len();
    if n == 0 {
        return Err(AlgebraError::Domain(format!("{what} table is empty")));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(AlgebraError::Domain(format!(
                "{what} table row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(AlgebraError::Domain(format!(
                    "{what} table entry ({i}, {j}) = {v} is out of range [0, {n})"
                )));
            }
            flat.push(v as u32);
        }
    }
    Ok((n, flat))
}

impl FiniteGroup {
    /// Validates a Cayley table, checking identity, associativity and
    /// inverses in that order.
    pub fn new(cayley: &[Vec<usize>]) -> Result<Self> {
        let (m, table) = flatten_table(cayley, "group")?;
        let group = Self { order: m, table };
        group.check_axioms()?;
        Ok(group)
    }

    /// The trivial group of order 1.
    pub fn trivial() -> Self {
        Self {
            order: 1,
            table: alloc::vec![0],
        }
    }

    /// Cyclic group ℤ_m with `op(a, b) = (a + b) mod m`.
    pub fn cyclic(m: usize) -> Self {
        assert!(m > 0, "cyclic group of order 0");
        let table = (0..m)
            .flat_map(|a| (0..m).map(move |b| ((a + b) % m) as u32))
            .collect();
        Self { order: m, table }
    }

    fn check_axioms(&self) -> Result<()> {
        let m = self.order;
        for g in 0..m {
            if self.op(0, g) != g || self.op(g, 0) != g {
                return Err(AlgebraError::violation(Axiom::GroupIdentity, &[g]));
            }
        }
        for a in 0..m {
            for b in 0..m {
                let ab = self.op(a, b);
                for c in 0..m {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Err(AlgebraError::violation(
                            Axiom::GroupAssociativity,
                            &[a, b, c],
                        ));
                    }
                }
            }
        }
        for g in 0..m {
            if !(0..m).any(|h| self.op(g, h) == 0) {
                return Err(AlgebraError::violation(Axiom::GroupInverse, &[g]));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order)
            .find(|&h| self.op(g, h) == 0)
            .expect("validated group has inverses")
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn z3_is_a_group() {
        let g = FiniteGroup::new(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g, FiniteGroup::cyclic(3));
        assert_eq!(g.inverse(1), 2);
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::new(&[vec![0]]).unwrap();
        assert_eq!(g, FiniteGroup::trivial());
    }

    #[test]
    fn missing_inverse_reports_witness_one() {
        let err = FiniteGroup::new(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::AxiomViolation {
                axiom: Axiom::GroupInverse,
                witness: vec![1]
            }
        );
    }

    #[test]
    fn shape_and_range_errors() {
        assert!(matches!(
            FiniteGroup::new(&[]),
            Err(AlgebraError::Domain(_))
        ));
        assert!(matches!(
            FiniteGroup::new(&[vec![0, 1], vec![1]]),
            Err(AlgebraError::Domain(_))
        ));
        assert!(matches!(
            FiniteGroup::new(&[vec![0, 2], vec![1, 0]]),
            Err(AlgebraError::Domain(_))
        ));
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // A loop of order 5 with identity and inverses that is not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::new(&t).unwrap_err();
        assert!(matches!(
            err,
            AlgebraError::AxiomViolation {
                axiom: Axiom::GroupAssociativity,
                ..
            }
        ));
    }
}
