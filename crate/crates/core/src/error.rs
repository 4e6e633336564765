use thiserror::Error;

/// Errors raised by the operad and conformal-algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leaf label {0} appears more than once")]
    DuplicateLabel(u32),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("children are not ordered by increasing minimal leaf")]
    NotShuffleOrdered,
    #[error("relabelling map is not injective on the leaves")]
    NonInjectiveMap,
    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),
    #[error("monomials use operations outside the ordering's signature")]
    MixedSignature,
    #[error("composition position {position} is outside 1..={arity}")]
    BadPosition { position: u32, arity: usize },
    #[error("permutation is not a shuffle of the two input blocks")]
    NotAShuffle,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("leading term of the reducer does not divide the leading term")]
    NotDivisible,
    #[error("degree bound {bound} is below the relation degree {needed}")]
    BoundTooSmall { bound: usize, needed: usize },
    #[error("arity {arity} needs degree {needed}, beyond the completed bound {bound}")]
    BoundExceeded {
        arity: usize,
        needed: usize,
        bound: usize,
    },
    #[error("unknown presentation `{0}`")]
    UnknownName(String),
    #[error("presentation `{0}` needs parameters")]
    MissingParams(String),
    #[error(
        "symmetry declarations are only supported for unary and binary generators (got arity {0})"
    )]
    UnsupportedArity(usize),
    #[error("{line}:{col}: syntax error: {msg}")]
    SyntaxError {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("{line}:{col}: unknown generator `{name}`")]
    UnknownGenerator {
        name: String,
        line: usize,
        col: usize,
    },
    #[error("{line}:{col}: {msg}")]
    ArityError {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("{line}: relation mixes arities {first} and {second}")]
    NonHomogeneousRelation {
        line: usize,
        first: usize,
        second: usize,
    },
    #[error("negative product index {0}")]
    NegativeIndex(i64),
    #[error("algebra has no twisting map")]
    MissingAlpha,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("product does not satisfy the Hom-Novikov identities (1*), (2*)")]
    NotHomNovikov,
    #[error("map is not a morphism of the algebra")]
    NotAMorphism,
}

impl Error {
    /// Variant name, used as a stable tag in reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::NotShuffleOrdered => "NotShuffleOrdered",
            Error::NonInjectiveMap => "NonInjectiveMap",
            Error::InvalidMonomial(_) => "InvalidMonomial",
            Error::MixedSignature => "MixedSignature",
            Error::BadPosition { .. } => "BadPosition",
            Error::NotAShuffle => "NotAShuffle",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotDivisible => "NotDivisible",
            Error::BoundTooSmall { .. } => "BoundTooSmall",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::UnknownName(_) => "UnknownName",
            Error::MissingParams(_) => "MissingParams",
            Error::UnsupportedArity(_) => "UnsupportedArity",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::UnknownGenerator { .. } => "UnknownGenerator",
            Error::ArityError { .. } => "ArityError",
            Error::NonHomogeneousRelation { .. } => "NonHomogeneousRelation",
            Error::NegativeIndex(_) => "NegativeIndex",
            Error::MissingAlpha => "MissingAlpha",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotHomNovikov => "NotHomNovikov",
            Error::NotAMorphism => "NotAMorphism",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
