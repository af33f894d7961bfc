use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("{what} needs q = {q}, above the configured limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        q: u64,
        limit: u64,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("q = {0} is not a square")]
    QNotSquare(u64),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("form is not homogeneous")]
    NotHomogeneous,
    #[error("form is identically zero")]
    ZeroForm,
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("points do not span a line")]
    DegenerateLine,
    #[error("form vanishes identically on the plane {0}")]
    IdenticallyZeroOnPlane(String),
    #[error("surface has the rational plane component {0}")]
    PlaneComponent(String),
    #[error("vertex map is not a bijection: {0}")]
    NotBijective(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("form has the rational linear component {0}")]
    ComponentPresent(String),
    #[error("matrix is not alternating")]
    NotAlternating,
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("invalid configuration: {0}")]
    Config(String),
}
