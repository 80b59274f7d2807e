use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("quiver has a cycle: {0}")]
    CycleFound(String),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertexId(String),
    #[error("duplicate arrow id `{0}`")]
    DuplicateArrowId(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("ideal is not admissible: {0}")]
    NotAdmissible(String),
    #[error("relation is not a combination of parallel paths: {0}")]
    RelationNotParallel(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("operation requires characteristic zero")]
    CharPNotSupported,
    #[error("endomorphism ring is not split: {0}")]
    NotSplit(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid morphism: {0}")]
    InvalidMap(String),
    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("not a generator-cogenerator: {0}")]
    NotGenCogen(String),
    #[error("composition table inconsistent: {0}")]
    CompositionInconsistent(String),
    #[error("isomorphism check failed: {0}")]
    IsoCheckFailed(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("base algebra is not semisimple")]
    NotSemisimple,
    #[error("certificate broken by functor: {0}")]
    CertificateBrokenByFunctor(String),
    #[error("tensor functor not exact on certificates: {0}")]
    TensorNotExactOnCertificates(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unresolved reference `{0}`")]
    UnresolvedReference(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
