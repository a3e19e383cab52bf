use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the simple transpositions `s_1, ..., s_{n-1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pushed(&self, letter: usize) -> Word {
        let mut v = self.0.clone();
        v.push(letter);
        Word(v)
    }

    /// Checks every letter lies in `1..n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        for &l in &self.0 {
            if l == 0 || l >= n {
                return Err(Error::IndexOutOfRange { index: l, max: n.saturating_sub(1) });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("s{l}")).collect();
        f.write_str(&parts.join(""))
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// A permutation of `{1, ..., n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|x| x - 1).collect() })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `k`, 1-based.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    /// All 1-based images in order.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `self ∘ s_r`, which swaps the images of `r` and `r+1`.
    pub fn times_simple(&self, r: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(r - 1, r);
        Permutation { images }
    }

    /// `self ∘ other` as maps, `other` applied first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `r` is a right descent: `l(self ∘ s_r) < l(self)`.
    pub fn is_right_descent(&self, r: usize) -> bool {
        self.images[r - 1] > self.images[r]
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.images.len()).filter(|&r| self.is_right_descent(r)).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// The permutation `s_{w_1} ∘ s_{w_2} ∘ ... ∘ s_{w_k}` of `{1..n}`.
pub fn evaluate(word: &Word, n: usize) -> Result<Permutation> {
    word.check_range(n)?;
    Ok(evaluate_unchecked(word.letters(), n))
}

pub(crate) fn evaluate_unchecked(letters: &[usize], n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for &r in letters {
        images.swap(r - 1, r);
    }
    Permutation { images }
}

/// The word is a reduced expression of its value.
pub fn is_reduced(word: &Word, n: usize) -> Result<bool> {
    word.check_range(n)?;
    Ok(reduced_prefix_len(word.letters(), n) == word.len())
}

/// Length of the longest reduced prefix.
pub(crate) fn reduced_prefix_len(letters: &[usize], n: usize) -> usize {
    let mut images: Vec<usize> = (0..n).collect();
    for (idx, &r) in letters.iter().enumerate() {
        if images[r - 1] > images[r] {
            return idx;
        }
        images.swap(r - 1, r);
    }
    letters.len()
}

/// Smallest `n` accommodating all letters.
pub fn min_rank(word: &Word) -> usize {
    word.letters().iter().copied().max().map_or(1, |m| m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_convention() {
        assert!(evaluate(&Word::empty(), 4).unwrap().is_identity());
        let s2 = evaluate(&Word::new(vec![2]), 4).unwrap();
        assert_eq!(s2.images(), vec![1, 3, 2, 4]);
        let p = evaluate(&Word::new(vec![1, 3, 2]), 4).unwrap();
        assert_eq!(p.images(), vec![2, 4, 1, 3]);
    }

    #[test]
    fn reducedness() {
        assert!(!is_reduced(&Word::new(vec![1, 1]), 3).unwrap());
        assert!(is_reduced(&Word::new(vec![1, 2, 1]), 3).unwrap());
        assert!(!is_reduced(&Word::new(vec![2, 1, 2, 1]), 3).unwrap());
        assert!(is_reduced(&Word::new(vec![1, 2, 1]), 2).is_err());
    }

    #[test]
    fn permutation_algebra() {
        let p = evaluate(&Word::new(vec![1, 2, 3, 1]), 4).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.length(), 4);
        for r in p.right_descents() {
            assert_eq!(p.times_simple(r).length(), 3);
        }
    }
}
