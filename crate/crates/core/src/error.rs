use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the 2^24 table guard")]
    FieldTooLarge(u64),
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation requires k = {expected}, matrix has k = {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("matrix does not have full rank {k}")]
    RankDeficient { k: usize },
    #[error("enumeration guard exceeded: n = {n} > {guard}")]
    EnumerationGuard { n: usize, guard: usize },
    #[error("subset size {s} out of range 1..={max}")]
    SubsetSizeOutOfRange { s: usize, max: usize },
    #[error("slope classes {i} and {j} have equal multiplicity {a}; swap gives no improvement")]
    EqualSlopeClasses { i: usize, j: usize, a: usize },
    #[error("degenerate two-dimensional profile (rank < 2)")]
    DegenerateProfile,
    #[error("cannot build a sum-free set of size {size} modulo {modulus}")]
    SumFreeUnattainable { size: usize, modulus: u64 },
    #[error("exponent search exhausted [0, {limit}) after finding {found} of {size} elements; raise q")]
    SearchExhausted { size: usize, found: usize, limit: u64 },
    #[error("construction needs {needed} exponents, got {got}")]
    InsufficientExponents { needed: usize, got: usize },
    #[error("recovery verifier requires column weight <= 2, found weight {0}")]
    ColumnWeightTooLarge(usize),
    #[error("verifier guard exceeded: {0}")]
    VerifierGuard(String),
    #[error("construction requires characteristic 2, field has characteristic {0}")]
    CharacteristicNotTwo(u64),
    #[error("constraint kP + C(k,2)p = 1 violated by {0:e}")]
    ConstraintViolated(f64),
    #[error("divergent series: {0}")]
    DivergentSeries(String),
    #[error("evaluator returned a non-finite value at {0}")]
    NonFiniteObjective(f64),
    #[error("stopping-time cap of {0} rounds hit; input is likely rank deficient")]
    StoppingCap(u64),
    #[error("invalid matrix file: {0}")]
    MatrixFormat(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
