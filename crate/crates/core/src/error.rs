use thiserror::Error;

/// Errors raised by word manipulation, presentation builders, proof replay
/// and certificate generation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator `{0}` has no image in the substitution")]
    MissingGenerator(String),

    #[error("generator `{0}` is not part of the presentation")]
    UnknownGenerator(String),

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    #[error("relator {0} is trivial after free reduction")]
    EmptyRelator(usize),

    #[error("invalid slope {m}/{n}: {reason}")]
    InvalidSlope { m: i64, n: i64, reason: &'static str },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("malformed proof at step {step}: {reason}")]
    MalformedProof { step: usize, reason: String },

    #[error("malformed witness: {0}")]
    MalformedWitness(String),

    #[error("cannot parse word: {0}")]
    WordSyntax(String),

    #[error("no finite quotient found up to degree {max_degree}")]
    SearchExhausted { max_degree: usize },

    #[error("internal derivation failure: {0}")]
    Derivation(String),

    #[error("integer {0} does not fit the document encoding")]
    Overflow(String),

    #[error("document error: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
