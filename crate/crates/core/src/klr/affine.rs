//! Exact arithmetic in the (non-cyclotomic) KLR algebra.
//!
//! Elements are kept in the basis `ψ_w y^a e(i)` where `ψ_w` uses the
//! canonical reduced word of `w`. Right multiplication by a generator
//! appends a letter and rewrites back into this basis using the defining
//! relations only, so equalities between normal forms are equalities in
//! the algebra.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use super::relations::{
    braid_move_corrections, idempotent_below, psi_letters, splice, square_expansion, transpose, y_crossing,
    Letter,
};
use crate::combinatorics::{Modulus, ResidueSequence, Weight};
use crate::coxeter::{canonicalize, end_with, reduced_prefix_len, Move, Word};
use crate::error::{Error, Result};

/// Basis label: canonical `ψ` stack, `y` exponents, right idempotent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Key {
    psi_stack: Vec<usize>,
    y: Vec<u32>,
    idempotent: ResidueSequence,
}

/// One basis term `c · ψ_U y^a e(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlrTerm {
    pub coefficient: i64,
    /// `ψ_{U_1} ψ_{U_2} ⋯` read left to right.
    pub psi_word: Word,
    pub y_exponents: Vec<u32>,
    pub idempotent: ResidueSequence,
}

/// An integer combination of basis terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KlrElement {
    terms: BTreeMap<Key, i64>,
}

impl KlrElement {
    pub fn zero() -> Self {
        KlrElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> Vec<KlrTerm> {
        self.terms
            .iter()
            .map(|(k, &c)| KlrTerm {
                coefficient: c,
                psi_word: Word(k.psi_stack.iter().rev().copied().collect()),
                y_exponents: k.y.clone(),
                idempotent: k.idempotent.clone(),
            })
            .collect()
    }

    /// Coefficient of `ψ_U y^a e(i)`, with `U` in left-to-right order.
    pub fn coefficient(&self, psi_word: &Word, y: &[u32], idempotent: &[i64]) -> i64 {
        let key = Key {
            psi_stack: psi_word.letters().iter().rev().copied().collect(),
            y: y.to_vec(),
            idempotent: idempotent.to_vec(),
        };
        self.terms.get(&key).copied().unwrap_or(0)
    }

    fn add_term(&mut self, key: Key, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &KlrElement) -> KlrElement {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &KlrElement) -> KlrElement {
        self.add_scaled(other, -1)
    }

    pub fn scale(&self, c: i64) -> KlrElement {
        KlrElement::zero().add_scaled(self, c)
    }

    fn add_scaled(&self, other: &KlrElement, c: i64) -> KlrElement {
        let mut out = self.clone();
        for (k, &v) in &other.terms {
            out.add_term(k.clone(), c * v);
        }
        out
    }

    /// `x · e(j)`: keeps the terms whose right idempotent is `j`.
    pub fn mul_idempotent_right(&self, j: &[i64]) -> KlrElement {
        KlrElement {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.idempotent == j)
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        }
    }
}

impl fmt::Display for KlrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .iter()
            .map(|t| {
                let mut s = format!("{}", t.coefficient);
                for l in t.psi_word.letters() {
                    s.push_str(&format!("·ψ{l}"));
                }
                for (k, &a) in t.y_exponents.iter().enumerate() {
                    if a > 0 {
                        s.push_str(&format!("·y{}^{a}", k + 1));
                    }
                }
                s.push_str(&format!("·e{:?}", t.idempotent));
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

type Normal = BTreeMap<(Vec<usize>, Vec<u32>), i64>;
type NormalMemo = HashMap<(Vec<Letter>, ResidueSequence), Rc<Normal>>;

/// The KLR algebra of rank `n` over a fixed quiver, with a rewriting memo.
#[derive(Debug)]
pub struct KlrAlgebra {
    n: usize,
    modulus: Modulus,
    memo: RefCell<NormalMemo>,
}

impl KlrAlgebra {
    pub fn new(n: usize, modulus: Modulus) -> Self {
        KlrAlgebra { n, modulus, memo: RefCell::new(HashMap::new()) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// The idempotent `e(i)` as an element.
    pub fn idempotent(&self, i: &[i64]) -> Result<KlrElement> {
        if i.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "residue sequence of length {} in rank {}",
                i.len(),
                self.n
            )));
        }
        let mut x = KlrElement::zero();
        let idem: Vec<i64> = i.iter().map(|&v| self.modulus.reduce(v)).collect();
        x.add_term(Key { psi_stack: Vec::new(), y: vec![0; self.n], idempotent: idem }, 1);
        Ok(x)
    }

    /// `x · ψ_r` rewritten into normal form.
    pub fn mul_psi_right(&self, x: &KlrElement, r: usize) -> Result<KlrElement> {
        if r == 0 || r >= self.n {
            return Err(Error::IndexOutOfRange { index: r, max: self.n.saturating_sub(1) });
        }
        let mut out = KlrElement::zero();
        for (key, &c) in &x.terms {
            let mut stack = vec![Letter::Psi(r)];
            stack.extend(y_letters(&key.y));
            stack.extend(key.psi_stack.iter().map(|&p| Letter::Psi(p)));
            let mut base = key.idempotent.clone();
            base.swap(r - 1, r);
            self.absorb(&mut out, c, &stack, &base);
        }
        Ok(out)
    }

    /// `x · y_k`.
    pub fn mul_y_right(&self, x: &KlrElement, k: usize) -> Result<KlrElement> {
        if k == 0 || k > self.n {
            return Err(Error::IndexOutOfRange { index: k, max: self.n });
        }
        let mut out = KlrElement::zero();
        for (key, &c) in &x.terms {
            let mut key = key.clone();
            key.y[k - 1] += 1;
            out.add_term(key, c);
        }
        Ok(out)
    }

    /// Right multiplication by a word of generators, applied left to right.
    pub fn mul_letters_right(&self, x: &KlrElement, letters: &[Letter]) -> Result<KlrElement> {
        let mut acc = x.clone();
        for l in letters {
            acc = match *l {
                Letter::Psi(r) => self.mul_psi_right(&acc, r)?,
                Letter::Y(k) => self.mul_y_right(&acc, k)?,
            };
        }
        Ok(acc)
    }

    /// Drops terms killed by the cyclotomic relation
    /// `y_1^{(Λ, α_{i_1})} e(i) = 0`.
    pub fn cyclotomic_truncate(&self, x: &KlrElement, weight: &Weight) -> KlrElement {
        KlrElement {
            terms: x
                .terms
                .iter()
                .filter(|(k, _)| (k.y[0] as usize) < weight.multiplicity(k.idempotent[0]))
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        }
    }

    fn absorb(&self, out: &mut KlrElement, c: i64, stack: &[Letter], base: &[i64]) {
        let normal = self.normalize(stack, base);
        for ((psi_stack, y), &v) in normal.iter() {
            out.add_term(
                Key { psi_stack: psi_stack.clone(), y: y.clone(), idempotent: base.to_vec() },
                c * v,
            );
        }
    }

    fn normalize(&self, stack: &[Letter], base: &[i64]) -> Rc<Normal> {
        let key = (stack.to_vec(), base.to_vec());
        if let Some(hit) = self.memo.borrow().get(&key) {
            return Rc::clone(hit);
        }
        let result = Rc::new(self.normalize_uncached(stack, base));
        self.memo.borrow_mut().insert(key, Rc::clone(&result));
        result
    }

    fn merge(&self, acc: &mut Normal, c: i64, stack: &[Letter], base: &[i64]) {
        if c == 0 {
            return;
        }
        let part = self.normalize(stack, base);
        for (k, &v) in part.iter() {
            let e = acc.entry(k.clone()).or_insert(0);
            *e += c * v;
            if *e == 0 {
                acc.remove(k);
            }
        }
    }

    fn replay(&self, word: &mut [Letter], moves: &[Move], offset: usize, base: &[i64], acc: &mut Normal) {
        for mv in moves {
            match *mv {
                Move::Commute(p) => word.swap(offset + p, offset + p + 1),
                Move::Braid(p) => {
                    let pos = offset + p;
                    for (c, corr) in braid_move_corrections(self.modulus, word, pos, base) {
                        self.merge(acc, c, &corr, base);
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

    fn normalize_uncached(&self, stack: &[Letter], base: &[i64]) -> Normal {
        let m = self.modulus;
        let mut acc = Normal::new();
        let mut w = stack.to_vec();

        // Sink every y below all psi letters.
        if let Some(first_psi) = w.iter().position(|l| matches!(l, Letter::Psi(_))) {
            if let Some(mut p) = w[first_psi..].iter().position(|l| matches!(l, Letter::Y(_))) {
                p += first_psi;
                while p > 0 && matches!(w[p - 1], Letter::Psi(_)) {
                    let (Letter::Y(k), Letter::Psi(r)) = (w[p], w[p - 1]) else {
                        unreachable!("checked above");
                    };
                    let idem = idempotent_below(&w, p - 1, base);
                    let c = y_crossing(m, &idem, k, r);
                    if c != 0 {
                        self.merge(&mut acc, c, &splice(&w, p - 1, 2, &[]), base);
                    }
                    w[p - 1] = Letter::Y(transpose(k, r));
                    w[p] = Letter::Psi(r);
                    p -= 1;
                }
                self.merge(&mut acc, 1, &w, base);
                return acc;
            }
        }

        let y_block = w.iter().take_while(|l| matches!(l, Letter::Y(_))).count();
        let letters = psi_letters(&w[y_block..]).expect("y letters are all at the bottom");
        let l = reduced_prefix_len(&letters, self.n);
        if l < letters.len() {
            let r = letters[l];
            let mut prefix = letters[..l].to_vec();
            let mut moves = Vec::new();
            end_with(&mut prefix, r, &mut moves);
            self.replay(&mut w, &moves, y_block, base, &mut acc);
            let at = y_block + l - 1;
            let idem = idempotent_below(&w, at, base);
            for (c, repl) in square_expansion(m, &idem, r) {
                self.merge(&mut acc, c, &splice(&w, at, 2, &repl), base);
            }
            return acc;
        }

        let mut canon = letters.clone();
        let mut moves = Vec::new();
        canonicalize(&mut canon, &mut moves);
        self.replay(&mut w, &moves, y_block, base, &mut acc);
        let mut y = vec![0u32; self.n];
        for l in &w[..y_block] {
            if let Letter::Y(k) = *l {
                y[k - 1] += 1;
            }
        }
        *acc.entry((canon, y)).or_insert(0) += 1;
        acc.retain(|_, v| *v != 0);
        acc
    }
}

fn y_letters(y: &[u32]) -> Vec<Letter> {
    let mut out = Vec::new();
    for (k, &a) in y.iter().enumerate() {
        for _ in 0..a {
            out.push(Letter::Y(k + 1));
        }
    }
    out
}
