use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or checking an algebraic object.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is empty or not square")]
    Shape,
    #[error("table entry add[{row}][{col}] = {value} is out of range for size {size}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("element 0 is not an identity: 0 + {0} != {0}")]
    NotIdentity(usize),
    #[error("not commutative: {0} + {1} != {1} + {0}")]
    NotCommutative(usize, usize),
    #[error("not associative: ({0} + {1}) + {2} != {0} + ({1} + {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {element} is out of range for a monoid of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("image table has length {got}, expected {expected}")]
    ImageLength { expected: usize, got: usize },
    #[error("homomorphism does not send 0 to 0")]
    IdentityNotPreserved,
    #[error("not additive: f({0} + {1}) != f({0}) + f({1})")]
    NotAdditive(usize, usize),
    #[error("source or target mismatch: {0}")]
    Mismatch(&'static str),
    #[error("work budget of {limit} exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("subset {0} is not a submonoid")]
    NotASubmonoid(usize),
    #[error("relation is not a congruence: {0} ~ {1} but {0} + {2} and {1} + {2} are not related")]
    NotACongruence(usize, usize, usize),
    #[error("hypothesis fails: {0} ~ {1} but f({0}) != f({1})")]
    HypothesisFails(usize, usize),
    #[error("the zero semiideal has no period or footing")]
    EmptyIdeal,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("{divisor} does not divide both {a} and {b}")]
    NotDivisible { a: u64, b: u64, divisor: u64 },
    #[error("no certificate found up to bound cap {cap} (unverified candidate C({index},{period}))")]
    BoundCapExceeded { cap: u64, index: u64, period: u64 },
    #[error("map is not balanced: {0}")]
    NotBalanced(String),
    #[error("induced map is not well defined on class {class}")]
    WellDefinednessFailure { class: usize },
    #[error("tensor presentation box volume {volume} exceeds budget {limit}")]
    BoxTooLarge { volume: u128, limit: u64 },
    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// Whether the failure is a resource limit rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::BoundCapExceeded { .. } | Error::BoxTooLarge { .. }
        )
    }
}
