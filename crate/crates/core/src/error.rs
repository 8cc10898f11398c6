use thiserror::Error;

/// Everything that can go wrong in the library. Variants name the violated
/// precondition or invariant so callers can surface them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type {label}: {reason}")]
    InvalidType { label: String, reason: String },

    #[error("index {index} out of range (expected < {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("weight has length {got}, root datum has rank {rank}")]
    RankMismatch { got: usize, rank: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("the zero weight is not a valid highest weight")]
    ZeroWeight,

    #[error("weight {weight} is not minuscule for {cartan_type}")]
    NotMinuscule { cartan_type: String, weight: String },

    #[error("{cartan_type} has no {class} roots")]
    NoSuchClass { cartan_type: String, class: String },

    #[error("{class} root elements do not act quadratically on {rep}")]
    NotQuadratic { rep: String, class: String },

    #[error("{0} is not a positive root")]
    NotPositiveRoot(String),

    #[error("roots {0} and {1} are not orthogonal")]
    NotOrthogonal(String, String),

    #[error("internal consistency: weight {0} left the Weyl orbit")]
    WeightOutsideOrbit(String),

    #[error("matrix is not unipotent: M - 1 is not nilpotent")]
    NotUnipotent,

    #[error("matrices live over different fields ({0} vs {1})")]
    FieldMismatch(String, String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid tensor-lemma parameters: {0}")]
    InvalidTrialSpec(String),

    #[error("dimension 2g = {0} must be even and at least 2")]
    InvalidDimension(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("internal consistency: witness {0} does not satisfy its family's equations")]
    WitnessCheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
