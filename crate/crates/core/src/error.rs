use thiserror::Error;

/// Errors raised by the library.
///
/// The variants split into two families: malformed input (bad tables, bad
/// arities, violated simplicial identities) and resource guards (enumeration
/// limits). The CLI maps both to exit code 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
  #[error("arity mismatch: {0}")]
  ArityMismatch(String),

  #[error("invalid Gamma morphism: {0}")]
  InvalidMorphism(String),

  #[error("invalid pointed set: {0}")]
  InvalidPointedSet(String),

  #[error("monoid table is not a commutative monoid: {0}")]
  InvalidMonoid(String),

  #[error("lambda must be positive, got {0}")]
  NonPositiveLambda(String),

  #[error("dimension cap too small: {0}")]
  InsufficientCap(String),

  #[error("index out of range: {0}")]
  IndexOutOfRange(String),

  #[error("simplicial identity violated: {0}")]
  IdentityViolation(String),

  #[error("invalid simplicial set: {0}")]
  InvalidSimplicialSet(String),

  #[error("enumeration bound exceeded in degree {degree}: {size} elements (limit {limit})")]
  EnumerationBound { degree: usize, size: String, limit: u128 },

  #[error("Gamma-set has no finite enumeration: {0}")]
  NotEnumerable(String),

  #[error("induced map does not descend to classes: {0}")]
  Descent(String),

  #[error("functoriality check failed: {0}")]
  Functoriality(String),

  #[error("invalid two-set: {0}")]
  InvalidTwoSet(String),

  #[error("not a subobject: {0}")]
  NotSubobject(String),

  #[error("invalid M-set: {0}")]
  InvalidMSet(String),

  #[error("chain is not a cycle: {0}")]
  NotACycle(String),

  #[error("invalid chain: {0}")]
  InvalidChain(String),

  #[error("linear program is infeasible")]
  Infeasible,

  #[error("linear program is unbounded")]
  Unbounded,

  #[error("linear program is malformed: {0}")]
  MalformedProgram(String),

  #[error("invalid genus {0}: surface models need g >= 2")]
  InvalidGenus(usize),

  #[error("invalid surface chain: {0}")]
  InvalidSurfaceChain(String),

  #[error("surface model verification failed: {0}")]
  ModelVerification(String),

  #[error("certificate system infeasible: {0}")]
  CertificateInfeasible(String),

  #[error("cannot parse rational {0:?}")]
  ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
