//! Graded homomorphisms and graded quotient rings.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Axiom, Result};
use crate::grading::GradedRing;
use crate::ideal;
use crate::ring::FiniteRing;
use crate::set::ElementSet;

/// A grade-preserving ring homomorphism between two rings graded by the
/// same group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedHom {
    source: Arc<GradedRing>,
    target: Arc<GradedRing>,
    map: Vec<u32>,
    surjective: bool,
    kernel: ElementSet,
}

impl GradedHom {
    /// Checks additivity, grade preservation and multiplicativity, in that
    /// order, reporting the first failing index tuple.
    pub fn new(source: Arc<GradedRing>, target: Arc<GradedRing>, map: Vec<usize>) -> Result<Self> {
        if source.group() != target.group() {
            return Err(AlgebraError::Domain(
                "source and target are graded by different groups".into(),
            ));
        }
        let (n, t) = (source.order(), target.order());
        if map.len() != n {
            return Err(AlgebraError::Domain(format!(
                "map has {} entries but the source has order {n}",
                map.len()
            )));
        }
        if let Some(x) = map.iter().position(|&v| v >= t) {
            return Err(AlgebraError::Domain(format!(
                "image of {x} is {} which is outside the target of order {t}",
                map[x]
            )));
        }
        let (r, s) = (source.ring(), target.ring());
        for a in 0..n {
            for b in 0..n {
                if map[r.add(a, b)] != s.add(map[a], map[b]) {
                    return Err(AlgebraError::violation(Axiom::HomAdditivity, &[a, b]));
                }
            }
        }
        for (g, comp) in source.components().iter().enumerate() {
            for a in comp {
                if !target.component_set(g).contains(map[a]) {
                    return Err(AlgebraError::violation(Axiom::HomGrading, &[g, a]));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if map[r.mul(a, b)] != s.mul(map[a], map[b]) {
                    return Err(AlgebraError::violation(Axiom::HomMultiplicativity, &[a, b]));
                }
            }
        }
        let surjective = ElementSet::from_indices(t, map.iter().copied()).is_full();
        let kernel = ElementSet::from_indices(n, (0..n).filter(|&x| map[x] == 0));
        Ok(Self {
            source,
            target,
            map: map.into_iter().map(|v| v as u32).collect(),
            surjective,
            kernel,
        })
    }

    pub fn identity(gr: Arc<GradedRing>) -> Self {
        let n = gr.order();
        Self::new(gr.clone(), gr, (0..n).collect()).expect("identity is a graded homomorphism")
    }

    pub fn source(&self) -> &Arc<GradedRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedRing> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn kernel(&self) -> &ElementSet {
        &self.kernel
    }

    /// `f(I)`, pointwise. Requires an epimorphism.
    pub fn image_set(&self, i: &ElementSet) -> Result<ElementSet> {
        if !self.surjective {
            return Err(AlgebraError::NotEpimorphism);
        }
        Ok(self.pointwise_image(i))
    }

    /// `f(I)` without the epimorphism requirement.
    pub fn pointwise_image(&self, i: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.target.order(), i.iter().map(|x| self.apply(x)))
    }

    /// `f⁻¹(J)`.
    pub fn preimage_set(&self, j: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.source.order(),
            (0..self.source.order()).filter(|&x| j.contains(self.apply(x))),
        )
    }
}

/// `R/K` with its induced grading and the canonical projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: Arc<GradedRing>,
    pub projection: GradedHom,
}

/// Builds `R/K` for a graded two-sided ideal `K`.
///
/// Each coset is represented by its smallest element index, cosets are
/// numbered in ascending order of their representatives (so the coset of 0
/// is 0), and the grading `(S_g + K)/K` is validated from scratch.
pub fn quotient_ring(gr: &Arc<GradedRing>, k: &ElementSet) -> Result<Quotient> {
    if !ideal::is_twosided_ideal(gr, k) {
        return Err(AlgebraError::NotTwoSided);
    }
    if !ideal::is_graded(gr, k) {
        return Err(AlgebraError::NotGraded);
    }
    let r = gr.ring();
    let n = gr.order();
    let members = k.to_vec();
    let representative: Vec<usize> = (0..n)
        .map(|x| members.iter().map(|&c| r.add(x, c)).min().unwrap_or(x))
        .collect();
    let mut reps: Vec<usize> = representative.clone();
    reps.sort_unstable();
    reps.dedup();
    let class_of = |x: usize| {
        reps.binary_search(&representative[x])
            .expect("every representative is listed")
    };
    let projection: Vec<usize> = (0..n).map(class_of).collect();
    let order = reps.len();
    let ring = FiniteRing::from_fn(
        order,
        |a, b| projection[r.add(reps[a], reps[b])],
        |a, b| projection[r.mul(reps[a], reps[b])],
        r.unity().map(|u| projection[u]),
    )?;
    let components = gr
        .components()
        .iter()
        .map(|s| ElementSet::from_indices(order, s.iter().map(|x| projection[x])))
        .collect();
    let target = Arc::new(GradedRing::new(ring, gr.group().clone(), components)?);
    let projection = GradedHom::new(gr.clone(), target.clone(), projection)?;
    Ok(Quotient {
        ring: target,
        projection,
    })
}
