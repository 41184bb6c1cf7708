//! Exhaustive audits of the transfer and equivalence results for graded
//! almost prime right ideals over a corpus of finite graded rings.
//!
//! Each audit enumerates every instance of a result's hypothesis in every
//! corpus ring, decides the conclusion with the definitional deciders and
//! reports the first failing instance. Instances whose structural hypotheses
//! fail (no unity, `K ⊄ I²`, ...) are counted as skipped.
//!
//! Epimorphisms are the canonical projections `R → R/K` over all proper
//! graded two-sided ideals `K`; every graded epimorphism factors through one.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::error::{AlgebraError, Result};
use crate::grading::GradedRing;
use crate::hom::{quotient_ring, Quotient};
use crate::ideal::{self, Reading};
use crate::primality::{ClassificationReport, Lattice, Property};
use crate::ring::Limits;
use crate::set::ElementSet;

/// The audited results, identified by stable slugs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// Unital rings: for a graded two-sided `P`, almost prime over right
    /// ideals iff almost prime over two-sided ideals.
    TwosidedAgreement,
    /// Unital rings, graded two-sided `P`: the pair, principal, element-wise
    /// and colon criteria for almost primeness agree.
    MultiMethod,
    /// Unital rings: `(I²:I) ⊆ I` makes prime and almost prime coincide.
    ColonPrime,
    /// `I² = {0}` makes weakly prime and almost prime coincide.
    SquareZeroIdeal,
    /// `R² = {0}` makes weakly prime and almost prime coincide.
    SquareZeroRing,
    /// Graded two-sided `I`: almost prime iff `I/I²` is weakly prime in `R/I²`.
    QuotientBySquare,
    /// `Ker f ⊆ I`, `I` almost prime ⇒ `f(I)` almost prime.
    EpiImage,
    /// `f⁻¹(J)` almost prime ⇒ `J` almost prime.
    EpiPreimage,
    /// `Ker f ⊆ I²`, `f(I)` almost prime ⇒ `I` almost prime.
    EpiLift,
    /// `J` almost prime, `Ker f ⊆ (f⁻¹(J))²` ⇒ `f⁻¹(J)` almost prime.
    EpiPreimageLift,
    /// `K ⊆ P`, `P` almost prime ⇒ `P/K` almost prime in `R/K`.
    QuotientTransfer,
    /// `I² = {0}` for all `I`: all almost prime iff all weakly prime.
    AllSquareZero,
    /// `R² = {0}`: all almost prime iff all weakly prime.
    RingSquareZero,
    /// All ideals of `R` almost prime ⇒ all ideals of `f(R)` almost prime.
    EpiAllImage,
    /// `Ker f ⊆ P²` for all `P`, all ideals of `T` almost prime ⇒ same for `R`.
    EpiAllLift,
    /// All ideals of `R` almost prime ⇒ all ideals of `R/P` almost prime.
    QuotientAll,
}

impl Theorem {
    pub const ALL: [Theorem; 16] = [
        Theorem::TwosidedAgreement,
        Theorem::MultiMethod,
        Theorem::ColonPrime,
        Theorem::SquareZeroIdeal,
        Theorem::SquareZeroRing,
        Theorem::QuotientBySquare,
        Theorem::EpiImage,
        Theorem::EpiPreimage,
        Theorem::EpiLift,
        Theorem::EpiPreimageLift,
        Theorem::QuotientTransfer,
        Theorem::AllSquareZero,
        Theorem::RingSquareZero,
        Theorem::EpiAllImage,
        Theorem::EpiAllLift,
        Theorem::QuotientAll,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::TwosidedAgreement => "twosided-agreement",
            Theorem::MultiMethod => "multi-method",
            Theorem::ColonPrime => "colon-prime",
            Theorem::SquareZeroIdeal => "square-zero-ideal",
            Theorem::SquareZeroRing => "square-zero-ring",
            Theorem::QuotientBySquare => "quotient-by-square",
            Theorem::EpiImage => "epi-image",
            Theorem::EpiPreimage => "epi-preimage",
            Theorem::EpiLift => "epi-lift",
            Theorem::EpiPreimageLift => "epi-preimage-lift",
            Theorem::QuotientTransfer => "quotient-transfer",
            Theorem::AllSquareZero => "all-square-zero",
            Theorem::RingSquareZero => "ring-square-zero",
            Theorem::EpiAllImage => "epi-all-image",
            Theorem::EpiAllLift => "epi-all-lift",
            Theorem::QuotientAll => "quotient-all",
        }
    }

    pub fn parse(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.id() == id)
            .ok_or_else(|| AlgebraError::UnknownTheorem(id.into()))
    }

    fn needs_unity(self) -> bool {
        matches!(
            self,
            Theorem::TwosidedAgreement | Theorem::MultiMethod | Theorem::ColonPrime
        )
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One instantiation of a result's hypothesis.
///
/// `sets` are labelled subsets: `P`, `I` of the ring itself, `K` for the
/// kernel of a projection, `J` for an ideal of the quotient `R/K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub sets: Vec<(&'static str, ElementSet)>,
    pub reading: Option<Reading>,
}

impl Instance {
    fn ring_wide() -> Self {
        Self {
            sets: Vec::new(),
            reading: None,
        }
    }

    fn of(sets: Vec<(&'static str, ElementSet)>) -> Self {
        Self {
            sets,
            reading: None,
        }
    }

    pub fn get(&self, label: &str) -> Option<&ElementSet> {
        self.sets.iter().find(|(l, _)| *l == label).map(|(_, s)| s)
    }

    fn set(&self, label: &str) -> Result<&ElementSet> {
        self.get(label)
            .ok_or_else(|| AlgebraError::Domain(format!("instance has no set labelled {label}")))
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (label, set) in &self.sets {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{label}={set}")?;
        }
        if let Some(r) = self.reading {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "reading={}", r.name())?;
        }
        if first {
            f.write_str("ring")?;
        }
        Ok(())
    }
}

/// Result of checking one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// A structural hypothesis fails.
    Skipped,
    /// The hypothesis holds and so does the conclusion, or the premise of the
    /// implication is false.
    Holds,
    /// The hypothesis holds but the conclusion fails.
    Fails(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub ring: String,
    pub instance: Instance,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditStatus {
    Passed,
    Counterexample(Counterexample),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditResult {
    pub theorem: Theorem,
    pub checked: usize,
    pub skipped: usize,
    pub status: AuditStatus,
    pub notes: Vec<String>,
}

impl AuditResult {
    pub fn passed(&self) -> bool {
        self.status == AuditStatus::Passed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditOptions {
    pub limits: Limits,
    /// Readings of `⟨x⟩` for the multi-method audit.
    pub readings: Vec<Reading>,
    /// Look for `P` not almost prime with `P/K` almost prime.
    pub converse_search: bool,
}

impl Default for AuditOptions {
    fn default() -> Self {
        Self {
            limits: Limits::default(),
            readings: Reading::BOTH.to_vec(),
            converse_search: true,
        }
    }
}

/// A named ring of the audit corpus.
#[derive(Debug, Clone)]
pub struct CorpusRing {
    pub name: String,
    pub ring: Arc<GradedRing>,
}

impl CorpusRing {
    pub fn new(name: impl Into<String>, ring: GradedRing) -> Self {
        Self {
            name: name.into(),
            ring: Arc::new(ring),
        }
    }
}

/// The catalog's default corpus.
pub fn default_corpus() -> Vec<CorpusRing> {
    crate::catalog::default_corpus()
        .into_iter()
        .map(|(name, ring)| CorpusRing::new(name, ring))
        .collect()
}

/// Lattice and classification report of one ring.
struct Study {
    lattice: Lattice,
    report: ClassificationReport,
}

impl Study {
    fn new(gr: Arc<GradedRing>, limits: &Limits) -> Result<Self> {
        let lattice = Lattice::shared(gr, limits)?;
        let report = lattice.classify_all();
        Ok(Self { lattice, report })
    }

    fn gr(&self) -> &GradedRing {
        self.lattice.ring()
    }

    fn proper_right(&self) -> Vec<ElementSet> {
        self.lattice.proper_right_ideals().cloned().collect()
    }

    fn proper_twosided(&self) -> Vec<ElementSet> {
        self.lattice.proper_twosided_ideals().cloned().collect()
    }

    fn is(&self, p: &ElementSet, property: Property) -> Result<bool> {
        match self.report.verdict(p, property) {
            Some(v) => Ok(v.value),
            None => Ok(self.lattice.decide(p, property)?.value),
        }
    }

    fn almost(&self, p: &ElementSet) -> Result<bool> {
        self.is(p, Property::AlmostPrime)
    }

    fn square(&self, p: &ElementSet) -> ElementSet {
        self.lattice.product(p, p)
    }

    fn is_zero(&self, s: &ElementSet) -> bool {
        s.count() == 1
    }

    fn ring_square_zero(&self) -> bool {
        self.gr().ring().has_zero_multiplication()
    }
}

struct Projection {
    quotient: Quotient,
    study: Study,
}

impl Projection {
    fn image(&self, i: &ElementSet) -> ElementSet {
        self.quotient.projection.pointwise_image(i)
    }

    fn preimage(&self, j: &ElementSet) -> ElementSet {
        self.quotient.projection.preimage_set(j)
    }
}

/// Per-ring state shared by all instances of one audit.
struct Context<'o> {
    base: Study,
    projections: RefCell<BTreeMap<ElementSet, Arc<Projection>>>,
    options: &'o AuditOptions,
}

impl<'o> Context<'o> {
    fn new(gr: &Arc<GradedRing>, options: &'o AuditOptions) -> Result<Self> {
        Ok(Self {
            base: Study::new(gr.clone(), &options.limits)?,
            projections: RefCell::new(BTreeMap::new()),
            options,
        })
    }

    fn projection(&self, k: &ElementSet) -> Result<Arc<Projection>> {
        if let Some(p) = self.projections.borrow().get(k) {
            return Ok(p.clone());
        }
        let quotient = quotient_ring(self.base.lattice.shared_ring(), k)?;
        let study = Study::new(quotient.ring.clone(), &self.options.limits)?;
        let p = Arc::new(Projection { quotient, study });
        self.projections.borrow_mut().insert(k.clone(), p.clone());
        Ok(p)
    }

    fn unital(&self) -> bool {
        self.base.gr().is_unital()
    }

    /// Proper graded two-sided `K` with every proper graded right ideal of
    /// the quotient as `J`.
    fn kernel_quotient_pairs(&self) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        for k in self.base.proper_twosided() {
            let proj = self.projection(&k)?;
            for j in proj.study.proper_right() {
                out.push(Instance::of(vec![("K", k.clone()), ("J", j)]));
            }
        }
        Ok(out)
    }

    /// Proper graded two-sided `K` with every proper graded right ideal `I`.
    fn kernel_ideal_pairs(&self) -> Vec<Instance> {
        let right = self.base.proper_right();
        let mut out = Vec::new();
        for k in self.base.proper_twosided() {
            for i in &right {
                out.push(Instance::of(vec![("K", k.clone()), ("I", i.clone())]));
            }
        }
        out
    }

    fn instances(&self, theorem: Theorem) -> Result<Vec<Instance>> {
        let singles = |label: &'static str, sets: Vec<ElementSet>| {
            sets.into_iter()
                .map(|s| Instance::of(vec![(label, s)]))
                .collect::<Vec<_>>()
        };
        Ok(match theorem {
            Theorem::TwosidedAgreement | Theorem::MultiMethod => {
                singles("P", self.base.proper_twosided())
            }
            Theorem::ColonPrime | Theorem::SquareZeroIdeal | Theorem::SquareZeroRing => {
                singles("I", self.base.proper_right())
            }
            Theorem::QuotientBySquare => singles("I", self.base.proper_twosided()),
            Theorem::EpiImage | Theorem::EpiLift => self.kernel_ideal_pairs(),
            Theorem::QuotientTransfer => self
                .kernel_ideal_pairs()
                .into_iter()
                .map(|mut inst| {
                    inst.sets[1].0 = "P";
                    inst
                })
                .collect(),
            Theorem::EpiPreimage | Theorem::EpiPreimageLift => self.kernel_quotient_pairs()?,
            Theorem::AllSquareZero | Theorem::RingSquareZero => vec![Instance::ring_wide()],
            Theorem::EpiAllImage | Theorem::EpiAllLift => singles("K", self.base.proper_twosided()),
            Theorem::QuotientAll => singles("P", self.base.proper_twosided()),
        })
    }

    fn check(&self, theorem: Theorem, inst: &Instance) -> Result<Outcome> {
        if theorem.needs_unity() && !self.unital() {
            return Ok(Outcome::Skipped);
        }
        let base = &self.base;
        match theorem {
            Theorem::TwosidedAgreement => {
                let p = inst.set("P")?;
                let right = base.almost(p)?;
                let twosided = base.lattice.is_graded_almost_prime_twosided(p)?.value;
                Ok(agree(
                    "right-ideal decider",
                    right,
                    "two-sided decider",
                    twosided,
                ))
            }
            Theorem::MultiMethod => {
                let p = inst.set("P")?;
                let reading = inst.reading.ok_or_else(|| {
                    AlgebraError::Domain("multi-method instances carry a reading".into())
                })?;
                self.multi_method(p, reading)
            }
            Theorem::ColonPrime => {
                let i = inst.set("I")?;
                let colon = ideal::colon_right(base.gr(), &base.square(i), i);
                if !colon.is_subset(i) {
                    return Ok(Outcome::Skipped);
                }
                let prime = base.is(i, Property::Prime)?;
                Ok(agree("prime", prime, "almost prime", base.almost(i)?))
            }
            Theorem::SquareZeroIdeal | Theorem::SquareZeroRing => {
                let i = inst.set("I")?;
                let hypothesis = match theorem {
                    Theorem::SquareZeroIdeal => base.is_zero(&base.square(i)),
                    _ => base.ring_square_zero(),
                };
                if !hypothesis {
                    return Ok(Outcome::Skipped);
                }
                let weak = base.is(i, Property::WeaklyPrime)?;
                Ok(agree("weakly prime", weak, "almost prime", base.almost(i)?))
            }
            Theorem::QuotientBySquare => {
                let i = inst.set("I")?;
                let proj = self.projection(&base.square(i))?;
                let image = proj.image(i);
                let almost = base.almost(i)?;
                let weak = proj.study.is(&image, Property::WeaklyPrime)?;
                Ok(agree(
                    "I almost prime",
                    almost,
                    "I/I² weakly prime in R/I²",
                    weak,
                ))
            }
            Theorem::EpiImage | Theorem::QuotientTransfer => {
                let k = inst.set("K")?;
                let i = inst.get("I").or(inst.get("P")).ok_or_else(|| {
                    AlgebraError::Domain("instance has no ideal of the ring".into())
                })?;
                if !k.is_subset(i) {
                    return Ok(Outcome::Skipped);
                }
                if !base.almost(i)? {
                    return Ok(Outcome::Holds);
                }
                let proj = self.projection(k)?;
                let image = proj.image(i);
                implies(proj.study.almost(&image)?, || {
                    format!("image {image} is not almost prime in R/K")
                })
            }
            Theorem::EpiPreimage => {
                let (k, j) = (inst.set("K")?, inst.set("J")?);
                let proj = self.projection(k)?;
                let pre = proj.preimage(j);
                if !base.almost(&pre)? {
                    return Ok(Outcome::Holds);
                }
                implies(proj.study.almost(j)?, || {
                    format!("preimage {pre} is almost prime but J is not")
                })
            }
            Theorem::EpiLift => {
                let (k, i) = (inst.set("K")?, inst.set("I")?);
                if !k.is_subset(&base.square(i)) {
                    return Ok(Outcome::Skipped);
                }
                let proj = self.projection(k)?;
                if !proj.study.almost(&proj.image(i))? {
                    return Ok(Outcome::Holds);
                }
                implies(base.almost(i)?, || {
                    "f(I) is almost prime but I is not".into()
                })
            }
            Theorem::EpiPreimageLift => {
                let (k, j) = (inst.set("K")?, inst.set("J")?);
                let proj = self.projection(k)?;
                let pre = proj.preimage(j);
                if !k.is_subset(&base.square(&pre)) {
                    return Ok(Outcome::Skipped);
                }
                if !proj.study.almost(j)? {
                    return Ok(Outcome::Holds);
                }
                implies(base.almost(&pre)?, || {
                    format!("J is almost prime but its preimage {pre} is not")
                })
            }
            Theorem::AllSquareZero | Theorem::RingSquareZero => {
                let hypothesis = match theorem {
                    Theorem::AllSquareZero => base
                        .proper_right()
                        .iter()
                        .all(|i| base.is_zero(&base.square(i))),
                    _ => base.ring_square_zero(),
                };
                if !hypothesis {
                    return Ok(Outcome::Skipped);
                }
                Ok(agree(
                    "all almost prime",
                    base.report.all_almost_prime(),
                    "all weakly prime",
                    base.report.all_weakly_prime(),
                ))
            }
            Theorem::EpiAllImage | Theorem::QuotientAll => {
                let k = inst
                    .get("K")
                    .or(inst.get("P"))
                    .ok_or_else(|| AlgebraError::Domain("instance has no kernel".into()))?;
                if !base.report.all_almost_prime() {
                    return Ok(Outcome::Holds);
                }
                let proj = self.projection(k)?;
                implies(proj.study.report.all_almost_prime(), || {
                    "some graded right ideal of the quotient is not almost prime".into()
                })
            }
            Theorem::EpiAllLift => {
                let k = inst.set("K")?;
                let right = base.proper_right();
                if !right.iter().all(|p| k.is_subset(&base.square(p))) {
                    return Ok(Outcome::Skipped);
                }
                let proj = self.projection(k)?;
                if !proj.study.report.all_almost_prime() {
                    return Ok(Outcome::Holds);
                }
                implies(base.report.all_almost_prime(), || {
                    "every ideal of the quotient is almost prime but not every ideal of R".into()
                })
            }
        }
    }

    fn multi_method(&self, p: &ElementSet, reading: Reading) -> Result<Outcome> {
        let lat = &self.base.lattice;
        let colon = lat.almost_prime_colon_criterion(p, reading)?;
        let verdicts = [
            ("pair decider", self.base.almost(p)?),
            (
                "two-sided pair decider",
                lat.is_graded_almost_prime_twosided(p)?.value,
            ),
            (
                "principal",
                lat.is_graded_almost_prime_principal(p, reading)?.value,
            ),
            (
                "element-wise",
                lat.is_graded_almost_prime_elementwise(p)?.value,
            ),
            ("colon union", colon.union_form.value),
            ("colon dichotomy", colon.dichotomy.value),
        ];
        let (name0, v0) = verdicts[0];
        match verdicts.iter().find(|(_, v)| *v != v0) {
            None => Ok(Outcome::Holds),
            Some((name, v)) => Ok(Outcome::Fails(format!("{name0}={v0} but {name}={v}"))),
        }
    }

    /// Almost prime `P/K` over a `P` that is not almost prime.
    fn converse_findings(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for inst in self.kernel_ideal_pairs() {
            let (k, p) = (inst.set("K")?, inst.set("I")?);
            if !k.is_subset(p) || self.base.almost(p)? {
                continue;
            }
            let proj = self.projection(k)?;
            if proj.study.almost(&proj.image(p))? {
                out.push(format!("K={k} P={p}"));
            }
        }
        Ok(out)
    }
}

fn agree(a: &str, va: bool, b: &str, vb: bool) -> Outcome {
    if va == vb {
        Outcome::Holds
    } else {
        Outcome::Fails(format!("{a}={va} but {b}={vb}"))
    }
}

fn implies(conclusion: bool, detail: impl FnOnce() -> String) -> Result<Outcome> {
    Ok(if conclusion {
        Outcome::Holds
    } else {
        Outcome::Fails(detail())
    })
}

#[derive(Default)]
struct Tally {
    checked: usize,
    skipped: usize,
    failure: Option<Counterexample>,
    failures: usize,
}

impl Tally {
    fn record(&mut self, ring: &str, inst: &Instance, outcome: Outcome) {
        match outcome {
            Outcome::Skipped => self.skipped += 1,
            Outcome::Holds => self.checked += 1,
            Outcome::Fails(detail) => {
                self.checked += 1;
                self.failures += 1;
                if self.failure.is_none() {
                    self.failure = Some(Counterexample {
                        ring: ring.into(),
                        instance: inst.clone(),
                        detail,
                    });
                }
            }
        }
    }
}

/// Audits one result over the corpus.
pub fn audit(
    corpus: &[CorpusRing],
    theorem: Theorem,
    options: &AuditOptions,
) -> Result<AuditResult> {
    let contexts = corpus
        .iter()
        .map(|c| Context::new(&c.ring, options))
        .collect::<Result<Vec<_>>>()?;
    audit_with(corpus, &contexts, theorem, options)
}

/// Audits several results, sharing lattices and quotients between them.
pub fn audit_many(
    corpus: &[CorpusRing],
    theorems: &[Theorem],
    options: &AuditOptions,
) -> Result<Vec<AuditResult>> {
    let contexts = corpus
        .iter()
        .map(|c| Context::new(&c.ring, options))
        .collect::<Result<Vec<_>>>()?;
    theorems
        .iter()
        .map(|&t| audit_with(corpus, &contexts, t, options))
        .collect()
}

fn audit_with(
    corpus: &[CorpusRing],
    contexts: &[Context<'_>],
    theorem: Theorem,
    options: &AuditOptions,
) -> Result<AuditResult> {
    if theorem == Theorem::MultiMethod {
        return audit_multi_method(corpus, contexts, options);
    }
    let mut tally = Tally::default();
    let mut notes = Vec::new();
    for (c, ctx) in corpus.iter().zip(contexts) {
        for inst in ctx.instances(theorem)? {
            let outcome = ctx.check(theorem, &inst)?;
            tally.record(&c.name, &inst, outcome);
        }
        if theorem == Theorem::QuotientTransfer && options.converse_search {
            for finding in ctx.converse_findings()? {
                notes.push(format!("converse fails on {}: {finding}", c.name));
            }
        }
    }
    if theorem == Theorem::QuotientTransfer && options.converse_search && notes.is_empty() {
        notes.push("converse search found no instance".into());
    }
    Ok(finish(theorem, tally, notes))
}

/// Runs the multi-method comparison once per requested reading. The audit
/// passes when at least one reading shows no disagreement.
fn audit_multi_method(
    corpus: &[CorpusRing],
    contexts: &[Context<'_>],
    options: &AuditOptions,
) -> Result<AuditResult> {
    if options.readings.is_empty() {
        return Err(AlgebraError::Domain("no reading selected".into()));
    }
    let mut tallies = Vec::new();
    let mut notes = Vec::new();
    for &reading in &options.readings {
        let mut tally = Tally::default();
        for (c, ctx) in corpus.iter().zip(contexts) {
            for mut inst in ctx.instances(Theorem::MultiMethod)? {
                inst.reading = Some(reading);
                let outcome = ctx.check(Theorem::MultiMethod, &inst)?;
                tally.record(&c.name, &inst, outcome);
            }
        }
        notes.push(format!(
            "reading {}: {} checked, {} disagreements",
            reading.name(),
            tally.checked,
            tally.failures
        ));
        tallies.push(tally);
    }
    let best = tallies
        .iter()
        .position(|t| t.failure.is_none())
        .unwrap_or(0);
    let tally = tallies.swap_remove(best);
    Ok(finish(Theorem::MultiMethod, tally, notes))
}

fn finish(theorem: Theorem, tally: Tally, notes: Vec<String>) -> AuditResult {
    AuditResult {
        theorem,
        checked: tally.checked,
        skipped: tally.skipped,
        status: match tally.failure {
            Some(c) => AuditStatus::Counterexample(c),
            None => AuditStatus::Passed,
        },
        notes,
    }
}

/// Checks a single instance from scratch, with fresh lattices and quotients.
pub fn check_instance(
    gr: &Arc<GradedRing>,
    theorem: Theorem,
    instance: &Instance,
    options: &AuditOptions,
) -> Result<Outcome> {
    Context::new(gr, options)?.check(theorem, instance)
}

/// `true` when the counterexample's instance really fails on `gr`.
pub fn replay_counterexample(
    gr: &Arc<GradedRing>,
    theorem: Theorem,
    counterexample: &Counterexample,
    options: &AuditOptions,
) -> Result<bool> {
    Ok(matches!(
        check_instance(gr, theorem, &counterexample.instance, options)?,
        Outcome::Fails(_)
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(n: usize, items: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, items.iter().copied())
    }

    fn one(name: &str, gr: GradedRing) -> Vec<CorpusRing> {
        vec![CorpusRing::new(name, gr)]
    }

    #[test]
    fn ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(Theorem::parse(t.id()).unwrap(), t);
        }
        assert_eq!(
            Theorem::parse("nope").unwrap_err(),
            AlgebraError::UnknownTheorem("nope".into())
        );
    }

    #[test]
    fn square_zero_ideal_on_example2() {
        let corpus = one("example2", catalog::example2());
        let r = audit(&corpus, Theorem::SquareZeroIdeal, &AuditOptions::default()).unwrap();
        assert!(r.passed());
        // {0} and J square to zero; P does not.
        assert_eq!((r.checked, r.skipped), (2, 1));
    }

    #[test]
    fn unital_audits_skip_example2() {
        let corpus = one("example2", catalog::example2());
        let r = audit(&corpus, Theorem::MultiMethod, &AuditOptions::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 0);
        // {0} and J.
        assert_eq!(r.skipped, 2);
        assert_eq!(r.notes.len(), 2);
    }

    #[test]
    fn quotient_by_square_on_gaussian_12() {
        let gr = Arc::new(catalog::gaussian_mod(12).unwrap());
        let four_r = ElementSet::from_indices(
            144,
            (0..144).filter(|x| (x % 12) % 4 == 0 && (x / 12) % 4 == 0),
        );
        let inst = Instance::of(vec![("I", four_r)]);
        let outcome = check_instance(
            &gr,
            Theorem::QuotientBySquare,
            &inst,
            &AuditOptions::default(),
        )
        .unwrap();
        assert_eq!(outcome, Outcome::Holds);
    }

    #[test]
    fn quotient_transfer_by_zero_holds() {
        let gr = Arc::new(catalog::matrix_z2());
        let opts = AuditOptions::default();
        let ctx = Context::new(&gr, &opts).unwrap();
        for p in ctx.base.proper_right() {
            let inst = Instance::of(vec![("K", set(4, &[0])), ("P", p)]);
            assert_eq!(
                ctx.check(Theorem::QuotientTransfer, &inst).unwrap(),
                Outcome::Holds
            );
        }
    }

    #[test]
    fn replay_of_a_non_failing_instance_is_false() {
        let gr = Arc::new(catalog::example2());
        let cx = Counterexample {
            ring: "example2".into(),
            instance: Instance::of(vec![("I", set(4, &[0, 3]))]),
            detail: String::new(),
        };
        let opts = AuditOptions::default();
        assert!(!replay_counterexample(&gr, Theorem::SquareZeroIdeal, &cx, &opts).unwrap());
    }

    #[test]
    fn instance_display() {
        let mut inst = Instance::of(vec![("K", set(4, &[0])), ("J", set(2, &[0, 1]))]);
        assert_eq!(format!("{inst}"), "K={0} J={0,1}");
        inst.reading = Some(Reading::Rxr);
        assert_eq!(format!("{inst}"), "K={0} J={0,1} reading=rxr");
        assert_eq!(format!("{}", Instance::ring_wide()), "ring");
    }
}
