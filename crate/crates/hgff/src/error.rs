use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields (q = {0} and q = {1})")]
    FieldMismatch(u32, u32),
    #[error("discrete logarithm of zero")]
    LogOfZero,
    #[error("F_{big} is not the chosen extension of F_{small}")]
    NotASubfieldPair { big: u32, small: u32 },
    #[error("order {target} is not a multiple of {order}")]
    NotAMultiple { order: u32, target: u32 },
    #[error("value is not a rational integer")]
    NotInteger,
    #[error("q = {q} is not congruent to 1 mod {m}")]
    IncompatibleCongruence { q: u32, m: u64 },
    #[error("character order {order} does not divide {m}")]
    OrderDoesNotDivide { order: u32, m: u64 },
    #[error("spec is not primitive")]
    NotPrimitive,
    #[error("degenerate parameter: {0}")]
    DegenerateLambda(String),
    #[error("genus formula is not integral for these exponents")]
    NonIntegral,
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
