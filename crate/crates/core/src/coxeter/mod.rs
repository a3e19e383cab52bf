//! Words in the simple transpositions of the symmetric group.

mod braid;
mod official;
mod word;

pub use braid::{apply_moves, braid_path, canonical_word, exchange_rewrite, Exchange, Move};
pub(crate) use braid::{canonicalize, end_with};
pub use official::{official_set, validate_official, OfficialSet};
pub use word::{evaluate, is_reduced, min_rank, Permutation, Word};
pub(crate) use word::{evaluate_unchecked, reduced_prefix_len};
