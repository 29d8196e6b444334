use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("letter {letter} out of range for rank {n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("sequence is not a permutation of 1..={degree}")]
    NotAPermutation { degree: usize },

    #[error("word is not reduced")]
    NotReduced,

    #[error("word is not a Coxeter word: every letter in 1..={n} must appear exactly once")]
    NotCoxeterWord { n: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("permutation is not a c-singleton for this Coxeter element")]
    NotASingleton,

    #[error("the singleton's order ideal does not contain element 1")]
    IdealWithoutElementOne,

    #[error("y = {y} outside the admissible range for this relation family")]
    RelationRangeError { y: usize },

    #[error("size guard exceeded while {what} (limit {limit})")]
    GuardExceeded { what: &'static str, limit: usize },

    #[error("vector length {got} does not match expected {expected}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("linear system was singular or non-square")]
    SingularSystem,

    #[error("input vector is not the projection of any point in the affine span")]
    InconsistentProjection,

    #[error("affine dimension of an empty point cloud is undefined")]
    EmptyCloud,

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
