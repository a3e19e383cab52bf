use std::collections::HashMap;

use super::word::{evaluate_unchecked, reduced_prefix_len, Permutation, Word};
use crate::combinatorics::{enumerate_standard, Multipartition, Tableau};
use crate::error::{Error, Result};

/// A prefix-closed choice of reduced words `d(t)` for every standard
/// tableau of one shape.
#[derive(Debug, Clone)]
pub struct OfficialSet {
    shape: Multipartition,
    tableaux: Vec<Tableau>,
    words: Vec<Word>,
    index: HashMap<Permutation, usize>,
}

impl OfficialSet {
    /// Wraps externally chosen words, one per standard tableau in canonical
    /// order. No validity check is made; see [`validate_official`].
    pub fn from_words(shape: &Multipartition, words: Vec<Word>) -> Result<Self> {
        let tableaux = enumerate_standard(shape);
        if words.len() != tableaux.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} words for {} standard tableaux",
                words.len(),
                tableaux.len()
            )));
        }
        let n = shape.n();
        for w in &words {
            w.check_range(n.max(2))?;
        }
        let index = tableaux.iter().enumerate().map(|(i, t)| (t.permutation(), i)).collect();
        Ok(OfficialSet { shape: shape.clone(), tableaux, words, index })
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, tableau_index: usize) -> &Word {
        &self.words[tableau_index]
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    /// Canonical index of the standard tableau `t^λ ∘ d`, if standard.
    pub fn index_of_permutation(&self, d: &Permutation) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// Index of the initial tableau.
    pub fn initial_index(&self) -> usize {
        self.index[&Permutation::identity(self.shape.n())]
    }
}

/// Builds an official set by induction on length.
///
/// Tableaux are processed by increasing `l(d(t))`, ties in canonical order.
/// Each `t` extends the word of `t ∘ s_i` by `i` for a descent `i` of `t`:
/// seed `0` takes the smallest descent, seed `1` the largest, and larger
/// seeds pick deterministically among all descents.
pub fn official_set(shape: &Multipartition, seed: u64) -> OfficialSet {
    let tableaux = enumerate_standard(shape);
    let perms: Vec<Permutation> = tableaux.iter().map(Tableau::permutation).collect();
    let index: HashMap<Permutation, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut order: Vec<usize> = (0..tableaux.len()).collect();
    order.sort_by_key(|&i| (perms[i].length(), i));

    let mut words: Vec<Option<Word>> = vec![None; tableaux.len()];
    for &i in &order {
        let t = &tableaux[i];
        let descents: Vec<usize> = (1..t.n()).filter(|&k| t.is_descent(k)).collect();
        if descents.is_empty() {
            words[i] = Some(Word::empty());
            continue;
        }
        let pick = match seed {
            0 => descents[0],
            1 => *descents.last().expect("non-empty"),
            s => descents[(mix(s, i as u64) % descents.len() as u64) as usize],
        };
        // A descent of a standard tableau separates two columns, so the
        // swapped tableau is standard and strictly shorter.
        let parent = index[&perms[i].times_simple(pick)];
        let parent_word = words[parent].as_ref().expect("shorter tableaux are processed first");
        words[i] = Some(parent_word.pushed(pick));
    }
    OfficialSet {
        shape: shape.clone(),
        tableaux,
        words: words.into_iter().map(|w| w.expect("every tableau processed")).collect(),
        index,
    }
}

fn mix(seed: u64, salt: u64) -> u64 {
    let mut z = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z ^= z >> 31;
    z.wrapping_mul(0x94D0_49BB_1331_11EB) >> 7
}

/// Checks reducedness, correct values and prefix closure.
pub fn validate_official(set: &OfficialSet) -> bool {
    let n = set.shape.n();
    let known: HashMap<&Word, usize> = set.words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    for (t, w) in set.tableaux.iter().zip(&set.words) {
        if w.letters().iter().any(|&l| l == 0 || l >= n) {
            return false;
        }
        if reduced_prefix_len(w.letters(), n) != w.len() {
            return false;
        }
        if evaluate_unchecked(w.letters(), n) != t.permutation() {
            return false;
        }
        if let Some((_, prefix)) = w.letters().split_last() {
            let prefix = Word::new(prefix.to_vec());
            if !known.contains_key(&prefix) {
                return false;
            }
        }
    }
    true
}
