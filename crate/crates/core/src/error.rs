use thiserror::Error;

use crate::combinatorics::Composition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),

    #[error("malformed composition {0:?}; expected \"[a1,a2,...]\"")]
    ParseComposition(String),

    #[error("malformed word {0:?}")]
    ParseWord(String),

    #[error("invalid descent set {elements:?} for n = {n}")]
    InvalidDescentSet { n: usize, elements: Vec<usize> },

    #[error("compositions {left} and {right} have different sizes")]
    IncomparableSize { left: Composition, right: Composition },

    #[error("size mismatch: shape has {shape} boxes, content has {content}")]
    SizeMismatch { shape: usize, content: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("word {0} is not a Y-word")]
    NotAYWord(String),

    #[error("expected an expansion in basis {expected}, found {found}")]
    WrongBasis { expected: String, found: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("basis index {index} out of range for a module of dimension {dim}")]
    BasisIndexOutOfRange { index: usize, dim: usize },

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("no separating generator for basis element {index} of V_{alpha}")]
    SeparationFailure { alpha: Composition, index: usize },
}
