use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("cannot reflect in the zero vector")]
    ZeroRoot,
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("root {0} is not almost positive")]
    NotAlmostPositive(usize),
    #[error("vector is not a root of the system")]
    NotARoot,
    #[error("color {color} out of range 1..={m}")]
    ColorOutOfRange { color: u32, m: u32 },
    #[error("group elements belong to different root systems")]
    MixedRootSystems,
    #[error("m must be at least 1 (got {0})")]
    InvalidM(u32),
    #[error("elements are not comparable")]
    NotComparable,
    #[error("chain is not a maximal falling chain from the bottom")]
    NotFalling,
    #[error("compatibility is only defined for distinct roots")]
    EqualRoots,
    #[error("part mixes negative simple roots with positive roots or colors")]
    MixedPart,
    #[error("set is not a face of the complex")]
    NotAFace,
    #[error("coefficient at ({k}, {l}) exceeds total degree {n}")]
    DegreeOverflow { k: u32, l: u32, n: u32 },
    #[error("Catalan product is not an integer: {0}")]
    NonIntegral(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
