use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown root datum preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("root datum is not of finite type (positive-root closure exceeded {0} roots)")]
    NonFiniteType(usize),

    #[error("could not parse root datum file: {0}")]
    DatumParse(String),

    #[error("element has length {0}, expected a length-zero element")]
    NotLengthZero(u32),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("weight {0:?} has the wrong rank (expected {1})")]
    RankMismatch(Vec<i64>, usize),

    #[error("no weight pairs to 1 with the coroot {0:?}; the lattice violates the torsion-freeness assumption")]
    NoHalfWeight(Vec<i64>),

    #[error("2*rho-shifted weight {0:?} is not divisible by 2")]
    NonIntegralHalving(Vec<i64>),

    #[error("weight {0:?} is not in the root lattice")]
    NotInRootLattice(Vec<i64>),

    #[error("unknown simple reflection `{0}`")]
    UnknownReflection(String),

    #[error("graded-module oracle does not support {0}")]
    Unsupported(String),

    #[error("modules are defined over different root data")]
    DatumMismatch,

    #[error("Hom series did not stabilise below cutoff {cutoff}: residue {residue}")]
    CutoffTooSmall { cutoff: i32, residue: String },

    #[error("cutoff must be a nonnegative even integer, got {0}")]
    BadCutoff(i32),

    #[error("canonical basis recursion violated triangularity at weight {0:?}")]
    Triangularity(Vec<i64>),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
