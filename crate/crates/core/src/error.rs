use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u64, modulus: u64 },
    #[error("{0} is not an odd prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("order {order} does not divide the group order {group_order}")]
    OrderDoesNotDivide { order: u64, group_order: u64 },
    #[error("{value} is not a quadratic residue modulo {prime}")]
    NotAResidue { value: u64, prime: u64 },
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("{0} is even")]
    InvalidParity(u64),
    #[error("{prime} divides a·b; the explicit formula needs a and b to be units")]
    DividesAB { prime: u64 },
    #[error("{value} is not congruent to {residue} modulo {modulus}")]
    WrongResidueClass { value: u64, residue: u64, modulus: u64 },
    #[error("{prime} - 1 is not 2^{n} times an odd number")]
    BadForm { prime: u64, n: u32 },
    #[error("point is not on the unit circle (|z| = {modulus})")]
    NotOnTorus { modulus: f64 },
    #[error("test vector is zero")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("value does not fit in 64 bits")]
    Overflow,
    #[error("modulus {0} is outside the supported range [2, 2^31)")]
    ModulusOutOfRange(u64),
    #[error("range {start}..{end} is empty or exceeds the modulus {modulus}")]
    BadRange { start: u64, end: u64, modulus: u64 },
    #[error("order of appearance of {0} not found within the scan bound")]
    ScanLimitExceeded(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}
