use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("boundary maps do not compose to zero: {0}")]
    NonComposable(String),

    #[error("chain map does not commute with boundaries in degree {degree}")]
    NotAChainMap { degree: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("not a subcomplex: simplex {0:?} of the subcomplex is missing from the total complex")]
    NotSubcomplex(Vec<usize>),

    #[error("vertex map is not simplicial: image of {0:?} is not a simplex")]
    NotSimplicial(Vec<usize>),

    #[error("vertex map does not send the subcomplex into the target subcomplex: {0:?}")]
    NotPairMap(Vec<usize>),

    #[error("oracle violates monotonicity at index set {0:?}")]
    OracleViolation(Vec<usize>),

    #[error("refinement is invalid; offending fine indices {0:?}")]
    InvalidRefinement(Vec<usize>),

    #[error("map cannot produce exact preimages: {0}")]
    UnsupportedMap(String),

    #[error("elements do not cover the space: {0}")]
    NotACover(String),

    #[error("geometry mismatch: {0}")]
    Geometry(String),

    #[error("commuting ladder fails at rung {rung} (degree {degree})")]
    LadderBroken { rung: usize, degree: usize },

    #[error("connecting rectangle fails at rung {rung} (degree {degree})")]
    RectangleBroken { rung: usize, degree: usize },

    #[error("space `{0}` is not compact; Stone-Čech comparison unavailable")]
    NotCompact(String),

    #[error("coefficient group must be nontrivial")]
    TrivialCoefficients,

    #[error("homomorphism is not an isomorphism")]
    NotInvertible,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
