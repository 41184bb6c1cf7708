use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Named axiom checked during validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    GroupIdentity,
    GroupAssociativity,
    GroupInverse,
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveInverse,
    MulAssociativity,
    LeftDistributivity,
    RightDistributivity,
    Unity,
    Subgroup,
    DirectSum,
    Multiplicativity,
    UnityDegree,
    HomAdditivity,
    HomMultiplicativity,
    HomGrading,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::GroupIdentity => "group-identity",
            Axiom::GroupAssociativity => "group-associativity",
            Axiom::GroupInverse => "group-inverse",
            Axiom::AdditiveIdentity => "additive-identity",
            Axiom::AdditiveCommutativity => "additive-commutativity",
            Axiom::AdditiveAssociativity => "additive-associativity",
            Axiom::AdditiveInverse => "additive-inverse",
            Axiom::MulAssociativity => "mul-associativity",
            Axiom::LeftDistributivity => "left-distributivity",
            Axiom::RightDistributivity => "right-distributivity",
            Axiom::Unity => "unity",
            Axiom::Subgroup => "subgroup",
            Axiom::DirectSum => "direct-sum",
            Axiom::Multiplicativity => "multiplicativity",
            Axiom::UnityDegree => "unity-degree",
            Axiom::HomAdditivity => "additivity",
            Axiom::HomMultiplicativity => "hom-multiplicativity",
            Axiom::HomGrading => "grading",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

struct Indices<'a>(&'a [usize]);

impl fmt::Display for Indices<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    /// An axiom fails; `witness` is the lexicographically smallest failing index tuple.
    #[error("axiom {axiom} violated at {}", Indices(.witness))]
    AxiomViolation { axiom: Axiom, witness: Vec<usize> },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("order {order} exceeds configured cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("ring has no unity")]
    NoUnity,

    #[error("ideal is not proper")]
    NotProper,

    #[error("set is not a graded right ideal")]
    NotGradedRightIdeal,

    #[error("set is not a two-sided ideal")]
    NotTwoSided,

    #[error("set is not graded")]
    NotGraded,

    #[error("homomorphism is not surjective")]
    NotEpimorphism,

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("parameter {param} out of range: {reason}")]
    ParamOutOfRange { param: i64, reason: &'static str },
}

impl AlgebraError {
    pub(crate) fn violation(axiom: Axiom, witness: &[usize]) -> Self {
        AlgebraError::AxiomViolation {
            axiom,
            witness: witness.to_vec(),
        }
    }
}

pub type Result<T, E = AlgebraError> = core::result::Result<T, E>;
