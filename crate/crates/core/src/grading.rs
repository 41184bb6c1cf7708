//! Group gradings of finite rings.
//!
//! A grading assigns an additive subgroup `S_g` to every element `g` of a
//! finite group such that the ring is the internal direct sum of the `S_g`
//! and `S_g · S_h ⊆ S_{gh}`. Validation checks all three conditions
//! exhaustively and caches the unique homogeneous decomposition of every
//! element.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Axiom, Result};
use crate::group::FiniteGroup;
use crate::ring::FiniteRing;
use crate::set::ElementSet;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedRing {
    ring: FiniteRing,
    group: FiniteGroup,
    components: Vec<ElementSet>,
    /// `decomposition[x * m + g]` is the `g`-component of `x`.
    decomposition: Vec<u32>,
    homogeneous: ElementSet,
    /// Degree of each non-zero homogeneous element.
    degree: Vec<u32>,
}

impl GradedRing {
    /// Validates `components[g]` as the degree-`g` part of `ring`.
    ///
    /// Checks, in order: one component per group element, each component is
    /// an additive subgroup, the direct-sum decomposition is unique and
    /// exhaustive, `S_g S_h ⊆ S_{gh}`, and the unity (if any) lies in `S_e`.
    pub fn new(ring: FiniteRing, group: FiniteGroup, components: Vec<ElementSet>) -> Result<Self> {
        let n = ring.order();
        let m = group.order();
        if components.len() != m {
            return Err(AlgebraError::Domain(format!(
                "grading has {} components but the group has order {m}",
                components.len()
            )));
        }
        if let Some(bad) = components.iter().position(|s| s.universe() != n) {
            return Err(AlgebraError::Domain(format!(
                "component {bad} is a subset of a ring of order {}, expected {n}",
                components[bad].universe()
            )));
        }

        for (g, s) in components.iter().enumerate() {
            if !s.contains(0) {
                return Err(AlgebraError::violation(Axiom::Subgroup, &[g]));
            }
            for a in s {
                for b in s {
                    if !s.contains(ring.add(a, b)) {
                        return Err(AlgebraError::violation(Axiom::Subgroup, &[g, a, b]));
                    }
                }
            }
        }

        let decomposition = direct_sum_table(&ring, &components)?;

        for g in 0..m {
            for h in 0..m {
                let target = &components[group.op(g, h)];
                for a in &components[g] {
                    for b in &components[h] {
                        if !target.contains(ring.mul(a, b)) {
                            return Err(AlgebraError::violation(
                                Axiom::Multiplicativity,
                                &[g, h, a, b],
                            ));
                        }
                    }
                }
            }
        }

        if let Some(u) = ring.unity() {
            if !components[0].contains(u) {
                return Err(AlgebraError::violation(Axiom::UnityDegree, &[u]));
            }
        }

        let mut homogeneous = ElementSet::empty(n);
        let mut degree = vec![NONE; n];
        for (g, s) in components.iter().enumerate() {
            homogeneous.union_with(s);
            for a in s.iter().filter(|&a| a != 0) {
                degree[a] = g as u32;
            }
        }

        Ok(Self {
            ring,
            group,
            components,
            decomposition,
            homogeneous,
            degree,
        })
    }

    /// The trivial grading: one-element group, `S_e = R`.
    pub fn trivial(ring: FiniteRing) -> Self {
        let n = ring.order();
        Self::new(ring, FiniteGroup::trivial(), vec![ElementSet::full(n)])
            .expect("trivial grading is always valid")
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.ring.order()
    }

    pub fn components(&self) -> &[ElementSet] {
        &self.components
    }

    pub fn component_set(&self, g: usize) -> &ElementSet {
        &self.components[g]
    }

    /// `h(R)`, the union of all components.
    pub fn homogeneous_elements(&self) -> &ElementSet {
        &self.homogeneous
    }

    /// The `g`-component of `x`.
    #[inline]
    pub fn component(&self, x: usize, g: usize) -> usize {
        self.decomposition[x * self.group.order() + g] as usize
    }

    /// Homogeneous components of `x`, indexed by group element.
    pub fn decompose(&self, x: usize) -> Vec<usize> {
        let m = self.group.order();
        self.decomposition[x * m..(x + 1) * m]
            .iter()
            .map(|&v| v as usize)
            .collect()
    }

    /// Degree of a non-zero homogeneous element.
    pub fn degree(&self, x: usize) -> Option<usize> {
        match self.degree[x] {
            NONE => None,
            g => Some(g as usize),
        }
    }

    pub fn is_unital(&self) -> bool {
        self.ring.is_unity_present()
    }
}

/// Builds the decomposition table by summing components one at a time,
/// failing on the first element reached twice or on an element never reached.
fn direct_sum_table(ring: &FiniteRing, components: &[ElementSet]) -> Result<Vec<u32>> {
    let n = ring.order();
    let m = components.len();
    // partial[x] = Some(tuple) when x is a sum over the components seen so far.
    let mut partial: Vec<Option<Vec<u32>>> = vec![None; n];
    partial[0] = Some(Vec::new());
    for s in components {
        let mut next: Vec<Option<Vec<u32>>> = vec![None; n];
        for (x, tuple) in partial.iter().enumerate() {
            let Some(tuple) = tuple else { continue };
            for c in s {
                let y = ring.add(x, c);
                if next[y].is_some() {
                    return Err(AlgebraError::violation(Axiom::DirectSum, &[y]));
                }
                let mut t = tuple.clone();
                t.push(c as u32);
                next[y] = Some(t);
            }
        }
        partial = next;
    }
    let mut table = Vec::with_capacity(n * m);
    for (x, tuple) in partial.into_iter().enumerate() {
        match tuple {
            Some(t) => table.extend(t),
            None => return Err(AlgebraError::violation(Axiom::DirectSum, &[x])),
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(n: usize, items: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, items.iter().copied())
    }

    #[test]
    fn example2_grading_and_decomposition() {
        let gr = catalog::example2();
        assert_eq!(gr.decompose(2), vec![1, 3, 0]);
        assert_eq!(gr.decompose(0), vec![0, 0, 0]);
        assert_eq!(gr.homogeneous_elements(), &set(4, &[0, 1, 3]));
        assert_eq!(gr.degree(3), Some(1));
        assert_eq!(gr.degree(2), None);
    }

    #[test]
    fn wrong_component_breaks_multiplicativity() {
        let gr = catalog::example2();
        let err = GradedRing::new(
            gr.ring().clone(),
            FiniteGroup::cyclic(3),
            vec![set(4, &[0, 1]), set(4, &[0, 2]), set(4, &[0])],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            AlgebraError::AxiomViolation {
                axiom: Axiom::Multiplicativity,
                ..
            }
        ));
    }

    #[test]
    fn direct_sum_failures() {
        let r = catalog::example2().ring().clone();
        // {0,x} + {0,x}: x reached twice.
        let err = GradedRing::new(
            r.clone(),
            FiniteGroup::cyclic(2),
            vec![set(4, &[0, 1]), set(4, &[0, 1])],
        )
        .unwrap_err();
        assert_eq!(err, AlgebraError::violation(Axiom::DirectSum, &[1]));
        // {0,x} + {0}: y never reached.
        let err = GradedRing::new(
            r.clone(),
            FiniteGroup::cyclic(2),
            vec![set(4, &[0, 1]), set(4, &[0])],
        )
        .unwrap_err();
        assert_eq!(err, AlgebraError::violation(Axiom::DirectSum, &[2]));
        // {0,x,y} is not a subgroup.
        let err = GradedRing::new(r, FiniteGroup::trivial(), vec![set(4, &[0, 1, 2])]).unwrap_err();
        assert_eq!(err, AlgebraError::violation(Axiom::Subgroup, &[0, 1, 2]));
    }

    #[test]
    fn trivial_grading_makes_everything_homogeneous() {
        let gr = GradedRing::trivial(catalog::example2().ring().clone());
        assert!(gr.homogeneous_elements().is_full());
        assert_eq!(gr.decompose(2), vec![2]);
    }

    #[test]
    fn swapped_gaussian_components_are_rejected() {
        let gr = catalog::gaussian_mod(3).unwrap();
        let comps = vec![gr.component_set(1).clone(), gr.component_set(0).clone()];
        let err = GradedRing::new(gr.ring().clone(), gr.group().clone(), comps).unwrap_err();
        // i·i = -1 has degree 1 but must have degree 0 + 0.
        assert_eq!(
            err,
            AlgebraError::violation(Axiom::Multiplicativity, &[0, 0, 3, 3])
        );
    }

    #[test]
    fn gaussian_decomposition_and_homogeneous_count() {
        let gr = catalog::gaussian_mod(12).unwrap();
        let enc = |a: usize, b: usize| a + 12 * b;
        assert_eq!(gr.decompose(enc(3, 5)), vec![enc(3, 0), enc(0, 5)]);
        assert_eq!(gr.homogeneous_elements().count(), 23);
    }
}
