use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be < 2^16)")]
    ModulusTooLarge(u64),
    #[error("modulus {0} must be an odd prime")]
    OddPrimeRequired(u64),
    #[error("matrix shape mismatch: {0}x{1} against {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("ambient mismatch: dimension {0} (mod {1}) against {2} (mod {3})")]
    AmbientMismatch(usize, u64, usize, u64),
    #[error("second operand is not a subspace of the first")]
    NotASubspace,
    #[error("ground set size {0} exceeds 63")]
    GroundSetTooLarge(usize),
    #[error("degree {0} out of range for ground set of size {1}")]
    DegreeOutOfRange(isize, usize),
    #[error("boundary of a nonzero vector in degree 0")]
    DegreeUnderflow,
    #[error("sequence of length {0} is not a permutation of 1..={0}")]
    InvalidPermutation(usize),
    #[error("standardness level {0} out of range (must be <= min(k, n-k) = {1})")]
    BadStandardnessLevel(usize, usize),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("tableau is not almost standard")]
    NotAlmostStandard,
    #[error("no first-row descent at column {0}")]
    NoDescent(usize),
    #[error("column {0} does not hold a bad entry")]
    NotBadEntry(usize),
    #[error("vector is not a member of the Specht layer")]
    NonMember,
    #[error("(n, k) = ({0}, {1}) violates the window n-(p-1) < 2k <= n for p = {2}")]
    WindowViolation(usize, usize, u64),
    #[error("no basis exists at this position")]
    EmptyBasis,
    #[error("straightening exceeded the step cap of {0}")]
    StraighteningDiverged(u64),
    #[error("invalid matrix payload: {0}")]
    BadMatrixPayload(String),
}

pub type Result<T> = std::result::Result<T, Error>;
