use thiserror::Error;

/// Failure modes of the capped symbolic operations.
///
/// Every operation in the crate is total: anything that cannot be certified
/// within the degree cap is reported through one of these variants rather
/// than silently truncated or panicked on.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A rewrite step or product left the degree box.
    #[error("degree cap {cap} exceeded: {context}")]
    CapExceeded { cap: u32, context: String },

    /// A relation reduced to a nonzero constant, so no rule can be made of it.
    #[error("relation cannot be oriented into a rule: {0}")]
    NonOrientableRelation(String),

    /// Specialization was asked for but no central degree-1 generator exists.
    #[error("no designated central degree-1 generator: {0}")]
    MissingReesGenerator(String),

    /// Centrality of the proposed symbols could not be certified up to the cap.
    #[error("generator split not certifiable: {0}")]
    SplitNotFound(String),

    /// A structure identity does not have the sorted a|b|c shape.
    #[error("structure extraction failed: {0}")]
    FormExtractionFailed(String),

    /// An asserted identity failed an exact check.
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    /// Structure constants violate antisymmetry or the Jacobi identity.
    #[error("invalid Lie data: {0}")]
    InvalidLieData(String),

    /// The proposed twist does not preserve the base relations.
    #[error("twist is not a homomorphism: {0}")]
    TwistNotHomomorphism(String),

    /// A growth sequence was too short to classify.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// The algebra is not presented as a finite module over the ambient ring.
    #[error("not finite over the ambient ring: {0}")]
    NotFiniteOverAmbient(String),

    /// The differential-finite-type evidence needed by the dimension theory
    /// is absent for this algebra.
    #[error("hypothesis not certified: {0}")]
    HypothesisNotCertified(String),

    /// Malformed input: mismatched lengths, unknown generator names, and such.
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
