//! Moves between reduced words of the same permutation.
//!
//! Paths are built constructively: any reduced word can be rewritten to end
//! in a chosen right descent, and repeating this with the largest descent
//! drives every reduced word to one canonical representative. A path from
//! `u` to `v` goes through that representative.

use super::word::{evaluate_unchecked, min_rank, reduced_prefix_len, Permutation, Word};
use crate::error::{Error, Result};

/// An elementary rewrite of a word at a position (0-based).
///
/// Both kinds are involutions: applying the same move again undoes it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// `ab -> ba` at `pos, pos+1` with `|a - b| >= 2`.
    Commute(usize),
    /// `aba -> bab` at `pos..pos+3` with `|a - b| = 1`.
    Braid(usize),
}

impl Move {
    pub fn position(self) -> usize {
        match self {
            Move::Commute(p) | Move::Braid(p) => p,
        }
    }

    /// Applies the move in place, checking it is legal.
    pub fn apply(self, letters: &mut [usize]) -> Result<()> {
        match self {
            Move::Commute(p) => {
                let ok = p + 1 < letters.len() && letters[p].abs_diff(letters[p + 1]) >= 2;
                if !ok {
                    return Err(Error::InvalidInput(format!("illegal commutation at {p}")));
                }
                letters.swap(p, p + 1);
            }
            Move::Braid(p) => {
                let ok = p + 2 < letters.len()
                    && letters[p] == letters[p + 2]
                    && letters[p].abs_diff(letters[p + 1]) == 1;
                if !ok {
                    return Err(Error::InvalidInput(format!("illegal braid move at {p}")));
                }
                let (a, b) = (letters[p], letters[p + 1]);
                letters[p] = b;
                letters[p + 1] = a;
                letters[p + 2] = b;
            }
        }
        Ok(())
    }
}

fn permutation_of(letters: &[usize]) -> Permutation {
    let n = letters.iter().copied().max().map_or(1, |m| m + 1);
    evaluate_unchecked(letters, n)
}

/// Rewrites a reduced word in place so that it ends in `letter`, which must
/// be a right descent of its value. Moves are appended to `moves`.
pub(crate) fn end_with(letters: &mut [usize], letter: usize, moves: &mut Vec<Move>) {
    let m = letters.len();
    debug_assert!(m > 0, "a descent needs a non-empty word");
    let last = letters[m - 1];
    if last == letter {
        return;
    }
    if last.abs_diff(letter) >= 2 {
        end_with(&mut letters[..m - 1], letter, moves);
        let mv = Move::Commute(m - 2);
        mv.apply(letters).expect("commutation is legal by construction");
        moves.push(mv);
    } else {
        // Both letters are descents, so the word can end in the longest
        // element of the rank-two parabolic they generate.
        end_with(&mut letters[..m - 1], letter, moves);
        end_with(&mut letters[..m - 2], last, moves);
        let mv = Move::Braid(m - 3);
        mv.apply(letters).expect("braid move is legal by construction");
        moves.push(mv);
    }
}

/// Rewrites a reduced word in place into the canonical reduced word of its
/// value, recording the moves.
pub(crate) fn canonicalize(letters: &mut [usize], moves: &mut Vec<Move>) {
    let mut len = letters.len();
    let mut perm = permutation_of(letters);
    while len > 0 {
        let top = *perm.right_descents().last().expect("non-identity has a descent");
        end_with(&mut letters[..len], top, moves);
        perm = perm.times_simple(top);
        len -= 1;
    }
}

/// The canonical reduced word: the largest right descent is taken last,
/// recursively.
pub fn canonical_word(perm: &Permutation) -> Word {
    let mut p = perm.clone();
    let mut rev = Vec::with_capacity(p.length());
    while let Some(&top) = p.right_descents().last() {
        rev.push(top);
        p = p.times_simple(top);
    }
    rev.reverse();
    Word(rev)
}

/// A sequence of moves turning the reduced word `u` into the reduced word `v`.
pub fn braid_path(u: &Word, v: &Word) -> Result<Vec<Move>> {
    let n = min_rank(u).max(min_rank(v));
    let pu = evaluate_unchecked(u.letters(), n);
    let pv = evaluate_unchecked(v.letters(), n);
    if pu != pv {
        return Err(Error::InvalidInput(format!("{u} and {v} are different permutations")));
    }
    if reduced_prefix_len(u.letters(), n) != u.len() || reduced_prefix_len(v.letters(), n) != v.len() {
        return Err(Error::InvalidInput(format!("{u} or {v} is not reduced")));
    }
    if u == v {
        return Ok(Vec::new());
    }
    let mut forward = Vec::new();
    canonicalize(&mut u.0.clone(), &mut forward);
    let mut backward = Vec::new();
    canonicalize(&mut v.0.clone(), &mut backward);
    backward.reverse();
    forward.extend(backward);
    Ok(forward)
}

/// Replays moves on a word.
pub fn apply_moves(word: &Word, moves: &[Move]) -> Result<Word> {
    let mut letters = word.0.clone();
    for mv in moves {
        mv.apply(&mut letters)?;
    }
    Ok(Word(letters))
}

/// The outcome of the exchange condition at the first failure of
/// reducedness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exchange {
    /// The reduced prefix rewritten to end in `letter`, with that last
    /// letter removed.
    pub prefix: Word,
    /// The letter that now appears twice in a row.
    pub letter: usize,
    /// The untouched remainder of the word after the repeated letter.
    pub suffix: Word,
    /// Moves that rewrite the original reduced prefix.
    pub moves: Vec<Move>,
}

/// Locates the longest reduced prefix `w|_l` and rewrites it to end in the
/// next letter `w_{l+1}`, exposing a square.
pub fn exchange_rewrite(word: &Word) -> Result<Exchange> {
    let n = min_rank(word);
    let l = reduced_prefix_len(word.letters(), n);
    if l == word.len() {
        return Err(Error::InvalidInput(format!("{word} is already reduced")));
    }
    let letter = word.0[l];
    let mut prefix = word.0[..l].to_vec();
    let mut moves = Vec::new();
    end_with(&mut prefix, letter, &mut moves);
    prefix.pop();
    Ok(Exchange { prefix: Word(prefix), letter, suffix: Word(word.0[l + 1..].to_vec()), moves })
}
