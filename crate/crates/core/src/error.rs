use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is below 2")]
    AlphabetTooSmall(usize),
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("symbol {symbol} out of range for alphabet of size {k}")]
    SymbolOutOfRange { symbol: usize, k: usize },
    #[error("point index {index} out of range for {points} points")]
    IndexOutOfRange { index: usize, points: usize },
    #[error("expected a tuple of length {expected}, got {found}")]
    TupleLength { expected: usize, found: usize },
    #[error("image table is not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("image table has length {found}, expected {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("state space of {degree} points exceeds the degree cap of {cap}")]
    CapExceeded { degree: u128, cap: usize },
    #[error("group is not transitive")]
    Intransitive,
    #[error("no field table for order {0}")]
    UnsupportedField(usize),
    #[error("field table for order {0} failed verification: {1}")]
    FieldAxiom(usize, &'static str),
    #[error("points must be pairwise distinct")]
    NotDistinct,
    #[error("{what} needs an alphabet of size at least {min}, got {k}")]
    AlphabetTooSmallFor { what: &'static str, min: usize, k: usize },
    #[error("closure fixpoint did not stabilize within {0} rounds")]
    FixpointDiverged(usize),
    #[error("brute-force closure exceeded the size cap of {0} gates")]
    SizeCapExceeded(usize),
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
}
