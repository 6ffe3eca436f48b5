use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("invalid step character {character:?} at position {position}")]
    InvalidCharacter { position: usize, character: char },
    #[error("invalid step {0:?}, expected one of N, E, D")]
    InvalidStep(String),
    #[error("patterns must be nonempty")]
    EmptyPattern,
    #[error("cannot diminish a path of length {0}, at least 2 steps are required")]
    TooShortToDiminish(usize),
    #[error("target ({0}, {1}) has a negative coordinate")]
    NegativeTarget(i64, i64),
    #[error("region parameter k must be positive")]
    ZeroRegion,
    #[error("enumeration budget of {0} visited prefixes exceeded")]
    BudgetExceeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("argument {name} = {value} must be nonnegative")]
    NegativeArgument { name: &'static str, value: i64 },
    #[error("argument {name} must be at least {min}, got {value}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        min: i64,
    },
    #[error("multinomial top {top} differs from {a} + {b} + {c}")]
    MultinomialMismatch { top: i64, a: i64, b: i64, c: i64 },
    #[error("formula {formula} produced a non-integral value {value}")]
    NonIntegral {
        formula: &'static str,
        value: String,
    },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("precondition violated for {map}: {condition} (input {input:?})")]
    Precondition {
        map: &'static str,
        condition: &'static str,
        input: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("region parameter k must be positive")]
    ZeroK,
    #[error("composition needs an inner series without constant term")]
    InnerConstantTerm,
    #[error("fixed-point iteration did not stabilise at order {order}")]
    NotConverged { order: usize },
    #[error("identity {identity} fails at coefficient {index}")]
    IdentityViolated {
        identity: &'static str,
        index: usize,
    },
    #[error("closed form {formula} produced a non-integral value {value}")]
    NonIntegral {
        formula: &'static str,
        value: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjectureError {
    #[error("n must be at least 1, got {0}")]
    NonPositive(usize),
    #[error("inversion sequence entry e_{index} = {value} is out of range 0..{index}")]
    EntryOutOfRange { index: usize, value: usize },
    #[error(transparent)]
    Path(#[from] PathError),
}
