use thiserror::Error;

use crate::witness::OrderWitness;

/// A specific failure of the partial-order axioms on a relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderViolation {
    NotReflexive { element: usize },
    NotAntisymmetric { first: usize, second: usize },
    NotTransitive { lower: usize, middle: usize, upper: usize },
}

impl std::fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrderViolation::NotReflexive { element } => {
                write!(f, "element #{element} is not related to itself")
            }
            OrderViolation::NotAntisymmetric { first, second } => {
                write!(f, "#{first} <= #{second} and #{second} <= #{first} but they differ")
            }
            OrderViolation::NotTransitive { lower, middle, upper } => write!(
                f,
                "#{lower} <= #{middle} <= #{upper} but not #{lower} <= #{upper}"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("invalid element name {0:?}: names must be non-empty and contain no whitespace")]
    InvalidName(String),
    #[error("relations contain a cycle: {}", cycle.join(" < "))]
    CycleDetected { cycle: Vec<String> },
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(OrderViolation),
    #[error("{n} elements exceeds the enumeration cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("maps are defined over different posets")]
    BaseMismatch,
    #[error("poset is not a lattice: {0}")]
    NotALattice(OrderWitness),
    #[error("antichain order is not a lattice: {0}")]
    AntichainOrderNotLattice(OrderWitness),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
