//! Free semigroups, the free group of rank two, and the symmetric group `S3`.

mod f2;
mod group;
mod perm;
mod semigroup;

use thiserror::Error;

pub use f2::{verify_f2_counterexample, Case, Check, F2Report};
pub use group::{abelianize, apply_f2_endo, freduce, FWord, Letter};
pub use perm::{s3_image, Perm3};
pub use semigroup::{apply_letter_map, semigroup_extend, SgWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeWordError {
    #[error("{left} source words but {right} target words")]
    CountMismatch { left: usize, right: usize },
    #[error("word {index} has length {left} but its image has length {right}")]
    LengthMismatch { index: usize, left: usize, right: usize },
    #[error("letter x{} would go to both x{} and x{}", .letter + 1, .first + 1, .second + 1)]
    ConflictingAlignment { letter: usize, first: usize, second: usize },
    #[error("letters x{} and x{} would both go to x{}", .letters.0 + 1, .letters.1 + 1, .image + 1)]
    NotInjective { letters: (usize, usize), image: usize },
    #[error("letter x{} is outside the alphabet of size {alphabet}", .letter + 1)]
    LetterOutOfRange { letter: usize, alphabet: usize },
    #[error("semigroup words are non-empty")]
    EmptyWord,
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}
