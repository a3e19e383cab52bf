//! Local rewriting rules of the KLR algebra.
//!
//! Words are stored as stacks: index `0` is the factor adjacent to the
//! idempotent on the right, higher indices sit further left. The idempotent
//! to the right of any position is obtained by transporting the base
//! residue sequence through the letters below it.

use crate::combinatorics::{Modulus, Residue};
use crate::error::{Error, Result};

/// One generator inside a stacked word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Psi(usize),
    Y(usize),
}

/// Cartan matrix entry `c_{ij}` for the cyclic or linear quiver.
pub fn cartan(i: Residue, j: Residue) -> Result<i64> {
    if i.modulus() != j.modulus() {
        return Err(Error::InvalidInput("residues with different moduli".into()));
    }
    Ok(cartan_value(i.modulus(), i.value(), j.value()))
}

pub(crate) fn cartan_value(m: Modulus, i: i64, j: i64) -> i64 {
    if m.same(i, j) {
        2
    } else if m.arrow(i, j) || m.arrow(j, i) {
        if m.double_arrow() {
            -2
        } else {
            -1
        }
    } else {
        0
    }
}

/// Residue sequence immediately to the right of the letter at `pos`.
pub(crate) fn idempotent_below(word: &[Letter], pos: usize, base: &[i64]) -> Vec<i64> {
    let mut idem = base.to_vec();
    for letter in &word[..pos] {
        if let Letter::Psi(r) = *letter {
            idem.swap(r - 1, r);
        }
    }
    idem
}

/// A linear combination of replacement words for a window.
pub(crate) type Expansion = Vec<(i64, Vec<Letter>)>;

/// `ψ_r ψ_r e(i)` as a polynomial in the `y`'s.
pub(crate) fn square_expansion(m: Modulus, idem: &[i64], r: usize) -> Expansion {
    let (a, b) = (idem[r - 1], idem[r]);
    let (y_r, y_next) = (Letter::Y(r), Letter::Y(r + 1));
    if m.same(a, b) {
        Vec::new()
    } else if m.double_arrow() && m.arrow(a, b) {
        vec![(-1, vec![y_next, y_next]), (2, vec![y_r, y_next]), (-1, vec![y_r, y_r])]
    } else if m.arrow(a, b) {
        vec![(1, vec![y_next]), (-1, vec![y_r])]
    } else if m.arrow(b, a) {
        vec![(1, vec![y_r]), (-1, vec![y_next])]
    } else {
        vec![(1, Vec::new())]
    }
}

/// `(ψ_r ψ_{r+1} ψ_r - ψ_{r+1} ψ_r ψ_{r+1}) e(i)`.
pub(crate) fn braid_defect(m: Modulus, idem: &[i64], r: usize) -> Expansion {
    let (a, b, c) = (idem[r - 1], idem[r], idem[r + 1]);
    if !m.same(a, c) {
        return Vec::new();
    }
    if m.double_arrow() {
        if m.arrow(a, b) {
            return vec![(1, vec![Letter::Y(r)]), (-2, vec![Letter::Y(r + 1)]), (1, vec![Letter::Y(r + 2)])];
        }
        return Vec::new();
    }
    if m.arrow(a, b) {
        vec![(1, Vec::new())]
    } else if m.arrow(b, a) {
        vec![(-1, Vec::new())]
    } else {
        Vec::new()
    }
}

/// Coefficient `c` in `y_k ψ_r e(i) = ψ_r y_{s_r(k)} e(i) + c e(i)`.
pub(crate) fn y_crossing(m: Modulus, idem: &[i64], k: usize, r: usize) -> i64 {
    if !m.same(idem[r - 1], idem[r]) {
        return 0;
    }
    if k == r + 1 {
        1
    } else if k == r {
        -1
    } else {
        0
    }
}

/// Image of `k` under the transposition `s_r`.
pub(crate) fn transpose(k: usize, r: usize) -> usize {
    if k == r {
        r + 1
    } else if k == r + 1 {
        r
    } else {
        k
    }
}

/// Correction words produced when the braid move at `pos` is applied to
/// `word`: the old word equals the new word plus these terms.
pub(crate) fn braid_move_corrections(m: Modulus, word: &[Letter], pos: usize, base: &[i64]) -> Expansion {
    let (Letter::Psi(outer), Letter::Psi(inner)) = (word[pos], word[pos + 1]) else {
        unreachable!("braid moves act on psi letters");
    };
    let r = outer.min(inner);
    let sign = if outer == r { 1 } else { -1 };
    let idem = idempotent_below(word, pos, base);
    braid_defect(m, &idem, r)
        .into_iter()
        .map(|(c, repl)| {
            let mut w = word[..pos].to_vec();
            w.extend(repl);
            w.extend_from_slice(&word[pos + 3..]);
            (sign * c, w)
        })
        .collect()
}

/// Replaces the window `start..start+len` of `word` by `repl`.
pub(crate) fn splice(word: &[Letter], start: usize, len: usize, repl: &[Letter]) -> Vec<Letter> {
    let mut w = word[..start].to_vec();
    w.extend_from_slice(repl);
    w.extend_from_slice(&word[start + len..]);
    w
}

/// The letters of a stack that are `ψ`'s, in order, if there are no `y`'s.
pub(crate) fn psi_letters(word: &[Letter]) -> Option<Vec<usize>> {
    word.iter()
        .map(|l| match l {
            Letter::Psi(r) => Some(*r),
            Letter::Y(_) => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_entries() {
        let inf = Modulus::Infinite;
        let r = |v| Residue::new(v, inf);
        assert_eq!(cartan(r(0), r(0)).unwrap(), 2);
        assert_eq!(cartan(r(0), r(1)).unwrap(), -1);
        assert_eq!(cartan(r(0), r(3)).unwrap(), 0);
        let e2 = Modulus::Finite(2);
        assert_eq!(cartan(Residue::new(0, e2), Residue::new(1, e2)).unwrap(), -2);
        let e5 = Modulus::Finite(5);
        assert_eq!(cartan(Residue::new(4, e5), Residue::new(0, e5)).unwrap(), -1);
    }

    #[test]
    fn square_cases() {
        let inf = Modulus::Infinite;
        assert!(square_expansion(inf, &[0, 0], 1).is_empty());
        assert_eq!(square_expansion(inf, &[0, 5], 1), vec![(1, vec![])]);
        assert_eq!(
            square_expansion(inf, &[0, 1], 1),
            vec![(1, vec![Letter::Y(2)]), (-1, vec![Letter::Y(1)])]
        );
        assert_eq!(
            square_expansion(inf, &[1, 0], 1),
            vec![(1, vec![Letter::Y(1)]), (-1, vec![Letter::Y(2)])]
        );
        assert_eq!(square_expansion(Modulus::Finite(2), &[0, 1], 1).len(), 3);
    }

    #[test]
    fn braid_cases() {
        let inf = Modulus::Infinite;
        assert_eq!(braid_defect(inf, &[0, 1, 0], 1), vec![(1, vec![])]);
        assert_eq!(braid_defect(inf, &[1, 0, 1], 1), vec![(-1, vec![])]);
        assert!(braid_defect(inf, &[0, 1, 2], 1).is_empty());
        assert!(braid_defect(inf, &[0, 5, 0], 1).is_empty());
        assert_eq!(braid_defect(Modulus::Finite(2), &[0, 1, 0], 1).len(), 3);
    }
}
