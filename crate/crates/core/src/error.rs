use alloc::string::String;
use num_bigint::BigInt;

/// Everything that can go wrong in the core pipeline.
///
/// Parameter errors are user-facing; the remaining variants flag either a
/// malformed caller-supplied object (a hand-built graph, an arbitrary
/// continued fraction) or an internal inconsistency that valid family
/// parameters never trigger.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("{value} and modulus {modulus} are not coprime")]
    NotInvertible { value: BigInt, modulus: BigInt },
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(BigInt),
    #[error("congruence has the solution 0, which lies outside (0, {0})")]
    ZeroResidue(BigInt),
    #[error("continued fraction needs num > den >= 1 with gcd 1, got {num}/{den}")]
    BadFraction { num: BigInt, den: BigInt },
    #[error("continued fraction has no entries")]
    EmptyExpansion,
    #[error("continued fraction hits a zero denominator")]
    ZeroDenominator,
    #[error("{name} must be at least 2, got {value}")]
    ExponentTooSmall { name: &'static str, value: BigInt },
    #[error("{name} must be at least 14 so every residue class is sampled, got {value}")]
    ScanBoundTooSmall { name: &'static str, value: u64 },
    #[error("p and q must be coprime")]
    NotCoprime,
    #[error("plumbing graph is not a tree: {0}")]
    NotATree(String),
    #[error("expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("internal consistency violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
