use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {label} is outside the ground set {{1,...,{n}}}")]
    InvalidGroundSet { label: usize, n: usize },

    #[error("the void complex (no faces at all) is not a valid input; use a single empty facet for {{∅}}")]
    VoidComplexRejected,

    #[error("skeleton index {index} outside -1..={dim}")]
    SkeletonRange { index: isize, dim: isize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("field characteristic {0} exceeds the supported bound 2^16")]
    UnsupportedField(u64),

    #[error("ground set of size {n} exceeds the enumeration cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("inconsistent Betti table at (i={i}, j={j}): {reason}")]
    InconsistentTable { i: usize, j: usize, reason: String },

    #[error("transfer precondition violated: {0}")]
    TransferPrecondition(String),

    #[error("transfer step {step} failed: {source}")]
    TransferStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("a matroid needs at least one basis")]
    EmptyBasisFamily,

    #[error("bases have mixed cardinalities {0} and {1}")]
    NotEquicardinal(usize, usize),

    #[error("augmentation fails: no element of {larger:?} extends {smaller:?}")]
    NotAMatroid { larger: Vec<usize>, smaller: Vec<usize> },

    #[error("truncation index {index} outside 0..={rank}")]
    TruncationRange { index: usize, rank: usize },

    #[error("elongation index {index} outside 0..={max}")]
    ElongationRange { index: usize, max: usize },

    #[error("matroid Betti numbers differ between GF({0}) and GF({1})")]
    FieldDependenceBug(u32, u32),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid table JSON: {0}")]
    Json(String),

    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
