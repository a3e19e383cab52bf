//! Rewriting in the cell module `W(λ)`.
//!
//! An element `ψ_{U_k} ⋯ ψ_{U_1} e_λ` is expanded in the basis
//! `C_s = ψ*_{d(s)} e_λ` modulo the span of lower cells. Three facts drive
//! the recursion:
//!
//! * a reduced word whose tableau is standard is braided onto the official
//!   word of that tableau;
//! * a reduced word whose tableau is not standard is braided onto a word
//!   passing through a Garnir idempotent, which lies in the lower ideal;
//! * a non-reduced word exposes a square `ψ_r ψ_r`, which expands into
//!   polynomials in the `y`'s, and `y_k e_λ` lies in the lower ideal.
//!
//! Every braid move leaves correction terms on strictly shorter words.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use super::relations::{
    braid_move_corrections, idempotent_below, psi_letters, splice, square_expansion, transpose, y_crossing,
    Letter,
};
use crate::combinatorics::{Multipartition, ResidueSequence, Tableau, Weight};
use crate::coxeter::{
    canonical_word, end_with, evaluate_unchecked, official_set, reduced_prefix_len, Move, OfficialSet, Word,
};
use crate::error::{Error, Result};

/// Default bound on the number of memoised words per context.
pub const DEFAULT_MEMO_CAP: usize = 1 << 20;

/// Everything needed to rewrite inside one cell module.
#[derive(Debug)]
pub struct CellContext {
    shape: Multipartition,
    weight: Weight,
    official: OfficialSet,
    initial: Tableau,
    base: ResidueSequence,
    residues: Vec<ResidueSequence>,
    memo: RefCell<HashMap<Vec<Letter>, Rc<Vec<i64>>>>,
    memo_cap: usize,
}

impl CellContext {
    /// Builds a context with the official set for `seed`.
    pub fn new(shape: &Multipartition, weight: &Weight, seed: u64) -> Result<Self> {
        Self::with_official(weight, official_set(shape, seed))
    }

    pub fn with_official(weight: &Weight, official: OfficialSet) -> Result<Self> {
        let shape = official.shape().clone();
        if shape.r() != weight.rank() {
            return Err(Error::ShapeMismatch(format!(
                "shape {shape} has {} components but the weight has {}",
                shape.r(),
                weight.rank()
            )));
        }
        if shape.non_empty_count() > 2 {
            return Err(Error::UnsupportedShape(format!("{shape} has more than two non-empty components")));
        }
        let initial = Tableau::initial(&shape);
        let base = initial.residue_sequence(weight)?;
        let residues =
            official.tableaux().iter().map(|t| t.residue_sequence(weight)).collect::<Result<Vec<_>>>()?;
        Ok(CellContext {
            shape,
            weight: weight.clone(),
            official,
            initial,
            base,
            residues,
            memo: RefCell::new(HashMap::new()),
            memo_cap: DEFAULT_MEMO_CAP,
        })
    }

    pub fn with_memo_cap(mut self, cap: usize) -> Self {
        self.memo_cap = cap;
        self
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn official(&self) -> &OfficialSet {
        &self.official
    }

    pub fn tableaux(&self) -> &[Tableau] {
        self.official.tableaux()
    }

    pub fn dim(&self) -> usize {
        self.official.len()
    }

    /// Residues of `t^λ`, labelling `e_λ`.
    pub fn base_idempotent(&self) -> &ResidueSequence {
        &self.base
    }

    /// Residue sequence of the `i`-th standard tableau.
    pub fn residue_of(&self, i: usize) -> &ResidueSequence {
        &self.residues[i]
    }

    pub fn initial_index(&self) -> usize {
        self.official.initial_index()
    }

    fn n(&self) -> usize {
        self.shape.n()
    }

    /// Coefficients of `ψ*_U e_λ` in the basis `C_s`, modulo lower cells.
    ///
    /// `ψ*_U = ψ_{U_k} ⋯ ψ_{U_1}`, so `U_1` acts first.
    pub fn normal_form_mod_lower(&self, word: &Word) -> Result<Vec<i64>> {
        word.check_range(self.n().max(2))?;
        let stack: Vec<Letter> = word.letters().iter().map(|&r| Letter::Psi(r)).collect();
        Ok(self.reduce(&stack).as_ref().clone())
    }

    /// Coefficients of an arbitrary stacked word of `ψ`'s and `y`'s applied
    /// to `e_λ`; index `0` acts first.
    pub fn reduce_letters(&self, letters: &[Letter]) -> Result<Vec<i64>> {
        for l in letters {
            match *l {
                Letter::Psi(r) if r == 0 || r >= self.n() => {
                    return Err(Error::IndexOutOfRange { index: r, max: self.n() - 1 })
                }
                Letter::Y(k) if k == 0 || k > self.n() => {
                    return Err(Error::IndexOutOfRange { index: k, max: self.n() })
                }
                _ => {}
            }
        }
        Ok(self.reduce(letters).as_ref().clone())
    }

    /// Gram form value `φ_λ(s, t)`: the coefficient of `e_λ` in
    /// `e_λ ψ_{d(s)} ψ*_{d(t)} e_λ` modulo lower cells.
    pub fn gram_entry(&self, s: usize, t: usize) -> Result<i64> {
        let dim = self.dim();
        if s >= dim || t >= dim {
            return Err(Error::ShapeMismatch(format!(
                "tableau index out of range for {} ({dim} tableaux)",
                self.shape
            )));
        }
        if self.residues[s] != self.residues[t] {
            return Ok(0);
        }
        let mut stack: Vec<Letter> =
            self.official.word(t).letters().iter().map(|&r| Letter::Psi(r)).collect();
        stack.extend(self.official.word(s).letters().iter().rev().map(|&r| Letter::Psi(r)));
        Ok(self.reduce(&stack)[self.initial_index()])
    }

    /// Action of a generator on a vector of `W(λ)` given in the `C_s` basis.
    pub fn act(&self, letter: Letter, vector: &[i64]) -> Result<Vec<i64>> {
        let mut out = vec![0i64; self.dim()];
        for (s, &c) in vector.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut stack: Vec<Letter> =
                self.official.word(s).letters().iter().map(|&r| Letter::Psi(r)).collect();
            stack.push(letter);
            let image = self.reduce_letters(&stack)?;
            for (o, v) in out.iter_mut().zip(image.iter()) {
                *o += c * v;
            }
        }
        Ok(out)
    }

    /// Action of the idempotent `e(i)`: keeps basis vectors with residue
    /// sequence `i`.
    pub fn act_idempotent(&self, idem: &[i64], vector: &[i64]) -> Vec<i64> {
        vector.iter().enumerate().map(|(s, &c)| if self.residues[s] == idem { c } else { 0 }).collect()
    }

    fn zero(&self) -> Vec<i64> {
        vec![0; self.dim()]
    }

    fn reduce(&self, word: &[Letter]) -> Rc<Vec<i64>> {
        if let Some(hit) = self.memo.borrow().get(word) {
            return Rc::clone(hit);
        }
        let result = Rc::new(self.reduce_uncached(word));
        let mut memo = self.memo.borrow_mut();
        if memo.len() >= self.memo_cap {
            memo.clear();
        }
        memo.insert(word.to_vec(), Rc::clone(&result));
        result
    }

    fn accumulate(&self, acc: &mut [i64], coeff: i64, word: &[Letter]) {
        if coeff == 0 {
            return;
        }
        let part = self.reduce(word);
        for (a, p) in acc.iter_mut().zip(part.iter()) {
            *a += coeff * p;
        }
    }

    /// Applies `moves` to the window of `word` starting at `offset`,
    /// collecting braid corrections into `acc`.
    fn replay(&self, word: &mut [Letter], moves: &[Move], offset: usize, acc: &mut [i64]) {
        let m = self.weight.modulus();
        for mv in moves {
            match *mv {
                Move::Commute(p) => word.swap(offset + p, offset + p + 1),
                Move::Braid(p) => {
                    let pos = offset + p;
                    for (c, corr) in braid_move_corrections(m, word, pos, &self.base) {
                        self.accumulate(acc, c, &corr);
                    }
                    let (Letter::Psi(a), Letter::Psi(b)) = (word[pos], word[pos + 1]) else {
                        unreachable!("braid moves act on psi letters");
                    };
                    word[pos] = Letter::Psi(b);
                    word[pos + 1] = Letter::Psi(a);
                    word[pos + 2] = Letter::Psi(b);
                }
            }
        }
    }

    fn reduce_uncached(&self, word: &[Letter]) -> Vec<i64> {
        let m = self.weight.modulus();
        let mut acc = self.zero();

        // A y-letter slides down to e_λ, where it lands in the lower ideal;
        // only the crossing corrections survive.
        if let Some(mut p) = word.iter().position(|l| matches!(l, Letter::Y(_))) {
            let mut w = word.to_vec();
            while p > 0 {
                let (Letter::Y(k), Letter::Psi(r)) = (w[p], w[p - 1]) else {
                    unreachable!("only psi letters sit below the lowest y");
                };
                let idem = idempotent_below(&w, p - 1, &self.base);
                let c = y_crossing(m, &idem, k, r);
                if c != 0 {
                    self.accumulate(&mut acc, c, &splice(&w, p - 1, 2, &[]));
                }
                w[p - 1] = Letter::Y(transpose(k, r));
                w[p] = Letter::Psi(r);
                p -= 1;
            }
            return acc;
        }

        let letters = psi_letters(word).expect("no y letters remain");
        let n = self.n();
        let l = reduced_prefix_len(&letters, n);
        let mut w = word.to_vec();

        if l < letters.len() {
            let r = letters[l];
            let mut prefix = letters[..l].to_vec();
            let mut moves = Vec::new();
            end_with(&mut prefix, r, &mut moves);
            self.replay(&mut w, &moves, 0, &mut acc);
            let idem = idempotent_below(&w, l - 1, &self.base);
            for (c, repl) in square_expansion(m, &idem, r) {
                self.accumulate(&mut acc, c, &splice(&w, l - 1, 2, &repl));
            }
            return acc;
        }

        let d = evaluate_unchecked(&letters, n);
        let (target, standard) = match self.official.index_of_permutation(&d) {
            Some(idx) => (self.official.word(idx).letters().to_vec(), Some(idx)),
            None => {
                let t = self.initial.compose(&d);
                let (garnir, tail) = t.garnir_factor().expect("non-standard filling");
                let mut target = canonical_word(&garnir.permutation()).0;
                target.extend(tail);
                (target, None)
            }
        };
        let moves = crate::coxeter::braid_path(&Word(letters), &Word(target))
            .expect("reduced words of one permutation");
        self.replay(&mut w, &moves, 0, &mut acc);
        if let Some(idx) = standard {
            acc[idx] += 1;
        }
        acc
    }
}
