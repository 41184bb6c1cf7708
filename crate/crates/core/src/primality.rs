//! Graded prime, weakly prime and almost prime right ideals.
//!
//! The definitional deciders quantify over every pair `(X, Y)` of graded
//! right ideals (the improper ideal `R` included) and look for a pair with
//! `XY ⊆ P`, `X ⊄ P`, `Y ⊄ P` that also meets the side condition of the
//! property: none for prime, `XY ≠ {0}` for weakly prime and `XY ⊄ P²` for
//! almost prime. The first violating pair in canonical order is the witness.
//!
//! Unital rings have additional element-wise and colon-ideal criteria; these
//! are independent routes used to cross-check the definitional deciders.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::grading::GradedRing;
use crate::ideal::{self, IdealFlags, Reading};
use crate::ring::Limits;
use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Prime,
    WeaklyPrime,
    AlmostPrime,
}

impl Property {
    pub const ALL: [Property; 3] = [
        Property::Prime,
        Property::WeaklyPrime,
        Property::AlmostPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Prime => "prime",
            Property::WeaklyPrime => "weakly-prime",
            Property::AlmostPrime => "almost-prime",
        }
    }
}

/// Which decider produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Pairs of graded right ideals.
    RightIdealPairs(Property),
    /// Pairs of graded two-sided ideals, almost prime only.
    TwoSidedPairs,
    /// `xRy ⊆ P ⇒ x ∈ P or y ∈ P` over homogeneous `x, y`.
    PrimeElementwise,
    /// `xRy ⊆ P, xRy ⊄ P² ⇒ x ∈ P or y ∈ P` over homogeneous `x, y`.
    AlmostPrimeElementwise,
    /// `⟨x⟩⟨y⟩ ⊆ P, ⟨x⟩⟨y⟩ ⊄ P² ⇒ x ∈ P or y ∈ P`.
    AlmostPrimePrincipal(Reading),
    /// `(P:⟨x⟩) = P ∪ (P²:⟨x⟩)` on both sides for homogeneous `x ∉ P`.
    ColonUnion(Reading),
    /// `(P:⟨x⟩) ∈ {P, (P²:⟨x⟩)}` on both sides for homogeneous `x ∉ P`.
    ColonDichotomy(Reading),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColonSide {
    /// `(P:K) = {y : Ky ⊆ P}`
    Right,
    /// `(P:*K) = {y : yK ⊆ P}`
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Ideals { x: ElementSet, y: ElementSet },
    Elements { x: usize, y: usize },
    Colon { x: usize, side: ColonSide },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub value: bool,
    pub witness: Option<Witness>,
    pub method: Method,
}

impl Verdict {
    fn holds(method: Method) -> Self {
        Self {
            value: true,
            witness: None,
            method,
        }
    }

    fn fails(method: Method, witness: Witness) -> Self {
        Self {
            value: false,
            witness: Some(witness),
            method,
        }
    }

    fn from_witness(method: Method, witness: Option<Witness>) -> Self {
        match witness {
            Some(w) => Self::fails(method, w),
            None => Self::holds(method),
        }
    }
}

/// Results of both colon conditions under one reading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColonVerdict {
    pub union_form: Verdict,
    pub dichotomy: Verdict,
}

impl ColonVerdict {
    pub fn value(&self) -> bool {
        self.union_form.value && self.dichotomy.value
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub ideal: ElementSet,
    pub flags: IdealFlags,
    pub prime: Verdict,
    pub weakly_prime: Verdict,
    pub almost_prime: Verdict,
}

/// Verdicts for every proper graded right ideal, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassificationReport {
    pub entries: Vec<ReportEntry>,
}

impl ClassificationReport {
    pub fn all_almost_prime(&self) -> bool {
        self.entries.iter().all(|e| e.almost_prime.value)
    }

    pub fn all_weakly_prime(&self) -> bool {
        self.entries.iter().all(|e| e.weakly_prime.value)
    }

    pub fn all_prime(&self) -> bool {
        self.entries.iter().all(|e| e.prime.value)
    }

    pub fn entry(&self, ideal: &ElementSet) -> Option<&ReportEntry> {
        self.entries
            .binary_search_by(|e| e.ideal.cmp(ideal))
            .ok()
            .map(|i| &self.entries[i])
    }

    pub fn verdict(&self, ideal: &ElementSet, property: Property) -> Option<&Verdict> {
        self.entry(ideal).map(|e| match property {
            Property::Prime => &e.prime,
            Property::WeaklyPrime => &e.weakly_prime,
            Property::AlmostPrime => &e.almost_prime,
        })
    }
}

/// The graded ideal lattice of a ring together with all pairwise products
/// of graded right ideals.
#[derive(Debug, Clone)]
pub struct Lattice {
    gr: Arc<GradedRing>,
    right: Vec<ElementSet>,
    twosided: Vec<ElementSet>,
    products: Vec<ElementSet>,
}

impl Lattice {
    pub fn new(gr: &GradedRing, limits: &Limits) -> Result<Self> {
        Self::shared(Arc::new(gr.clone()), limits)
    }

    /// Like [`Lattice::new`] without copying the ring.
    pub fn shared(gr: Arc<GradedRing>, limits: &Limits) -> Result<Self> {
        let right = ideal::enumerate_graded_right_ideals(&gr, limits)?;
        let twosided = ideal::enumerate_graded_twosided_ideals(&gr, limits)?;
        let mut products = Vec::with_capacity(right.len() * right.len());
        for x in &right {
            for y in &right {
                products.push(ideal::product(&gr, x, y));
            }
        }
        Ok(Self {
            gr,
            right,
            twosided,
            products,
        })
    }

    pub fn ring(&self) -> &GradedRing {
        &self.gr
    }

    pub fn shared_ring(&self) -> &Arc<GradedRing> {
        &self.gr
    }

    /// All graded right ideals including `R`.
    pub fn right_ideals(&self) -> &[ElementSet] {
        &self.right
    }

    /// All graded two-sided ideals including `R`.
    pub fn twosided_ideals(&self) -> &[ElementSet] {
        &self.twosided
    }

    pub fn proper_right_ideals(&self) -> impl Iterator<Item = &ElementSet> {
        self.right.iter().filter(|s| !s.is_full())
    }

    pub fn proper_twosided_ideals(&self) -> impl Iterator<Item = &ElementSet> {
        self.twosided.iter().filter(|s| !s.is_full())
    }

    fn index_of(&self, s: &ElementSet) -> Option<usize> {
        self.right.binary_search(s).ok()
    }

    /// `XY` for two graded right ideals of this lattice.
    pub fn product(&self, x: &ElementSet, y: &ElementSet) -> ElementSet {
        match (self.index_of(x), self.index_of(y)) {
            (Some(i), Some(j)) => self.products[i * self.right.len() + j].clone(),
            _ => ideal::product(&self.gr, x, y),
        }
    }

    fn require_graded_right(&self, p: &ElementSet) -> Result<()> {
        if self.index_of(p).is_none() {
            return Err(AlgebraError::NotGradedRightIdeal);
        }
        if p.is_full() {
            return Err(AlgebraError::NotProper);
        }
        Ok(())
    }

    fn require_graded_twosided(&self, p: &ElementSet) -> Result<()> {
        if self.twosided.binary_search(p).is_err() {
            return Err(AlgebraError::NotTwoSided);
        }
        if p.is_full() {
            return Err(AlgebraError::NotProper);
        }
        Ok(())
    }

    fn require_unity(&self) -> Result<()> {
        if self.gr.is_unital() {
            Ok(())
        } else {
            Err(AlgebraError::NoUnity)
        }
    }

    /// Pair scan over `ideals` (indices into the right-ideal list).
    fn scan_pairs(
        &self,
        p: &ElementSet,
        ideals: &[usize],
        property: Property,
        p_squared: &ElementSet,
    ) -> Option<Witness> {
        let k = self.right.len();
        let outside: Vec<usize> = ideals
            .iter()
            .copied()
            .filter(|&i| !self.right[i].is_subset(p))
            .collect();
        for &i in &outside {
            for &j in &outside {
                let xy = &self.products[i * k + j];
                if !xy.is_subset(p) {
                    continue;
                }
                let violates = match property {
                    Property::Prime => true,
                    Property::WeaklyPrime => xy.count() > 1,
                    Property::AlmostPrime => !xy.is_subset(p_squared),
                };
                if violates {
                    return Some(Witness::Ideals {
                        x: self.right[i].clone(),
                        y: self.right[j].clone(),
                    });
                }
            }
        }
        None
    }

    fn decide_right(
        &self,
        p: &ElementSet,
        property: Property,
        with_improper: bool,
    ) -> Result<Verdict> {
        self.require_graded_right(p)?;
        let p_squared = self.product(p, p);
        let ideals: Vec<usize> = (0..self.right.len())
            .filter(|&i| with_improper || !self.right[i].is_full())
            .collect();
        let witness = self.scan_pairs(p, &ideals, property, &p_squared);
        Ok(Verdict::from_witness(
            Method::RightIdealPairs(property),
            witness,
        ))
    }

    pub fn decide(&self, p: &ElementSet, property: Property) -> Result<Verdict> {
        self.decide_right(p, property, true)
    }

    /// Same as [`Lattice::decide`] but with `X, Y` ranging over proper ideals only.
    pub fn decide_excluding_improper(&self, p: &ElementSet, property: Property) -> Result<Verdict> {
        self.decide_right(p, property, false)
    }

    pub fn is_graded_prime_right(&self, p: &ElementSet) -> Result<Verdict> {
        self.decide(p, Property::Prime)
    }

    pub fn is_graded_weakly_prime_right(&self, p: &ElementSet) -> Result<Verdict> {
        self.decide(p, Property::WeaklyPrime)
    }

    pub fn is_graded_almost_prime_right(&self, p: &ElementSet) -> Result<Verdict> {
        self.decide(p, Property::AlmostPrime)
    }

    /// Almost-primeness with `X, Y` ranging over graded two-sided ideals.
    pub fn is_graded_almost_prime_twosided(&self, p: &ElementSet) -> Result<Verdict> {
        self.require_graded_twosided(p)?;
        let p_squared = self.product(p, p);
        let ideals: Vec<usize> = self
            .twosided
            .iter()
            .map(|s| self.index_of(s).expect("two-sided ideals are right ideals"))
            .collect();
        let witness = self.scan_pairs(p, &ideals, Property::AlmostPrime, &p_squared);
        Ok(Verdict::from_witness(Method::TwoSidedPairs, witness))
    }

    fn homogeneous_outside(&self, p: &ElementSet) -> Vec<usize> {
        self.gr.homogeneous_elements().difference(p).to_vec()
    }

    /// `xRy ⊆ P` implies `x ∈ P` or `y ∈ P` for homogeneous `x, y`.
    pub fn is_graded_prime_elementwise(&self, p: &ElementSet) -> Result<Verdict> {
        self.require_unity()?;
        self.require_graded_right(p)?;
        let outside = self.homogeneous_outside(p);
        let witness = first_pair(&outside, |x, y| xry_subset(&self.gr, x, y, p));
        Ok(Verdict::from_witness(
            Method::PrimeElementwise,
            witness.map(|(x, y)| Witness::Elements { x, y }),
        ))
    }

    /// `xRy ⊆ P` and `xRy ⊄ P²` imply `x ∈ P` or `y ∈ P` for homogeneous `x, y`.
    pub fn is_graded_almost_prime_elementwise(&self, p: &ElementSet) -> Result<Verdict> {
        self.require_unity()?;
        self.require_graded_twosided(p)?;
        let p_squared = self.product(p, p);
        let outside = self.homogeneous_outside(p);
        let witness = first_pair(&outside, |x, y| {
            xry_subset(&self.gr, x, y, p) && !xry_subset(&self.gr, x, y, &p_squared)
        });
        Ok(Verdict::from_witness(
            Method::AlmostPrimeElementwise,
            witness.map(|(x, y)| Witness::Elements { x, y }),
        ))
    }

    /// `⟨x⟩⟨y⟩ ⊆ P` and `⟨x⟩⟨y⟩ ⊄ P²` imply `x ∈ P` or `y ∈ P`.
    pub fn is_graded_almost_prime_principal(
        &self,
        p: &ElementSet,
        reading: Reading,
    ) -> Result<Verdict> {
        self.require_unity()?;
        self.require_graded_twosided(p)?;
        let p_squared = self.product(p, p);
        let outside = self.homogeneous_outside(p);
        let generated: BTreeMap<usize, ElementSet> = outside
            .iter()
            .map(|&x| Ok((x, ideal::principal_twosided(&self.gr, x, reading)?)))
            .collect::<Result<_>>()?;
        let witness = first_pair(&outside, |x, y| {
            let xy = ideal::product(&self.gr, &generated[&x], &generated[&y]);
            xy.is_subset(p) && !xy.is_subset(&p_squared)
        });
        Ok(Verdict::from_witness(
            Method::AlmostPrimePrincipal(reading),
            witness.map(|(x, y)| Witness::Elements { x, y }),
        ))
    }

    /// Both colon-ideal conditions, each on the right and left colon, for
    /// every homogeneous `x ∉ P`.
    pub fn almost_prime_colon_criterion(
        &self,
        p: &ElementSet,
        reading: Reading,
    ) -> Result<ColonVerdict> {
        self.require_unity()?;
        self.require_graded_twosided(p)?;
        let p_squared = self.product(p, p);
        let mut union_witness = None;
        let mut dichotomy_witness = None;
        for x in self.homogeneous_outside(p) {
            let generated = ideal::principal_twosided(&self.gr, x, reading)?;
            for side in [ColonSide::Right, ColonSide::Left] {
                let (union_ok, dichotomy_ok) =
                    colon_conditions(&self.gr, p, &p_squared, &generated, side);
                if !union_ok && union_witness.is_none() {
                    union_witness = Some(Witness::Colon { x, side });
                }
                if !dichotomy_ok && dichotomy_witness.is_none() {
                    dichotomy_witness = Some(Witness::Colon { x, side });
                }
            }
            if union_witness.is_some() && dichotomy_witness.is_some() {
                break;
            }
        }
        Ok(ColonVerdict {
            union_form: Verdict::from_witness(Method::ColonUnion(reading), union_witness),
            dichotomy: Verdict::from_witness(Method::ColonDichotomy(reading), dichotomy_witness),
        })
    }

    pub fn classify(&self, p: &ElementSet) -> Result<ReportEntry> {
        Ok(ReportEntry {
            ideal: p.clone(),
            flags: ideal::classify_subset(&self.gr, p),
            prime: self.decide(p, Property::Prime)?,
            weakly_prime: self.decide(p, Property::WeaklyPrime)?,
            almost_prime: self.decide(p, Property::AlmostPrime)?,
        })
    }

    /// Full report over every proper graded right ideal.
    pub fn classify_all(&self) -> ClassificationReport {
        let entries = self
            .proper_right_ideals()
            .map(|p| {
                self.classify(p)
                    .expect("enumerated ideals are graded right ideals")
            })
            .collect();
        ClassificationReport { entries }
    }
}

/// Builds the lattice and classifies every proper graded right ideal.
pub fn classify_all(gr: &GradedRing, limits: &Limits) -> Result<ClassificationReport> {
    Ok(Lattice::new(gr, limits)?.classify_all())
}

fn first_pair(
    elems: &[usize],
    mut bad: impl FnMut(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    for &x in elems {
        for &y in elems {
            if bad(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// `xRy ⊆ target`.
fn xry_subset(gr: &GradedRing, x: usize, y: usize, target: &ElementSet) -> bool {
    let r = gr.ring();
    (0..gr.order()).all(|t| target.contains(r.mul(r.mul(x, t), y)))
}

fn colon(gr: &GradedRing, p: &ElementSet, k: &ElementSet, side: ColonSide) -> ElementSet {
    match side {
        ColonSide::Right => ideal::colon_right(gr, p, k),
        ColonSide::Left => ideal::colon_left(gr, p, k),
    }
}

/// Returns whether the union form and the dichotomy hold for one generator and side.
fn colon_conditions(
    gr: &GradedRing,
    p: &ElementSet,
    p_squared: &ElementSet,
    generated: &ElementSet,
    side: ColonSide,
) -> (bool, bool) {
    let by_p = colon(gr, p, generated, side);
    let by_square = colon(gr, p_squared, generated, side);
    (by_p == p.union(&by_square), by_p == *p || by_p == by_square)
}

/// Re-checks a verdict's witness against the definitions, recomputing every
/// product, colon and principal ideal from the ring tables.
///
/// Returns `true` when a positive verdict carries no witness, or when a
/// negative verdict's witness really violates the property for `p`.
pub fn replay(gr: &GradedRing, p: &ElementSet, verdict: &Verdict) -> bool {
    let Some(witness) = &verdict.witness else {
        return verdict.value;
    };
    if verdict.value {
        return false;
    }
    let p_squared = ideal::product(gr, p, p);
    match (verdict.method, witness) {
        (Method::RightIdealPairs(property), Witness::Ideals { x, y }) => {
            ideal::is_graded_right_ideal(gr, x)
                && ideal::is_graded_right_ideal(gr, y)
                && ideal_pair_violates(gr, p, &p_squared, x, y, property)
        }
        (Method::TwoSidedPairs, Witness::Ideals { x, y }) => {
            ideal::is_graded_twosided_ideal(gr, x)
                && ideal::is_graded_twosided_ideal(gr, y)
                && ideal_pair_violates(gr, p, &p_squared, x, y, Property::AlmostPrime)
        }
        (Method::PrimeElementwise, &Witness::Elements { x, y }) => {
            homogeneous_outside(gr, p, x, y) && xry_subset(gr, x, y, p)
        }
        (Method::AlmostPrimeElementwise, &Witness::Elements { x, y }) => {
            homogeneous_outside(gr, p, x, y)
                && xry_subset(gr, x, y, p)
                && !xry_subset(gr, x, y, &p_squared)
        }
        (Method::AlmostPrimePrincipal(reading), &Witness::Elements { x, y }) => {
            let (Ok(gx), Ok(gy)) = (
                ideal::principal_twosided(gr, x, reading),
                ideal::principal_twosided(gr, y, reading),
            ) else {
                return false;
            };
            let xy = ideal::product(gr, &gx, &gy);
            homogeneous_outside(gr, p, x, y) && xy.is_subset(p) && !xy.is_subset(&p_squared)
        }
        (Method::ColonUnion(reading), &Witness::Colon { x, side })
        | (Method::ColonDichotomy(reading), &Witness::Colon { x, side }) => {
            if !gr.homogeneous_elements().contains(x) || p.contains(x) {
                return false;
            }
            let Ok(generated) = ideal::principal_twosided(gr, x, reading) else {
                return false;
            };
            let (union_ok, dichotomy_ok) = colon_conditions(gr, p, &p_squared, &generated, side);
            match verdict.method {
                Method::ColonUnion(_) => !union_ok,
                _ => !dichotomy_ok,
            }
        }
        _ => false,
    }
}

fn homogeneous_outside(gr: &GradedRing, p: &ElementSet, x: usize, y: usize) -> bool {
    let h = gr.homogeneous_elements();
    h.contains(x) && h.contains(y) && !p.contains(x) && !p.contains(y)
}

fn ideal_pair_violates(
    gr: &GradedRing,
    p: &ElementSet,
    p_squared: &ElementSet,
    x: &ElementSet,
    y: &ElementSet,
    property: Property,
) -> bool {
    let xy = ideal::product(gr, x, y);
    let side = match property {
        Property::Prime => true,
        Property::WeaklyPrime => xy != ElementSet::zero(gr.order()),
        Property::AlmostPrime => !xy.is_subset(p_squared),
    };
    xy.is_subset(p) && !x.is_subset(p) && !y.is_subset(p) && side
}
