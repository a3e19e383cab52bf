use std::collections::HashMap;
use std::fmt;

use num::{BigRational, One, Zero};

use super::params::ParamSpec;
use super::shapes::{content, GeneralMultipartition, GeneralTableau};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;

/// The irreducible module of a multipartition in seminormal form: the
/// basis is the standard tableaux, `T_0, ..., T_{n-1}` act by exact
/// matrices.
#[derive(Debug, Clone)]
pub struct SeminormalRep {
    shape: GeneralMultipartition,
    basis: Vec<GeneralTableau>,
    generators: Vec<RatMatrix>,
}

impl SeminormalRep {
    pub fn shape(&self) -> &GeneralMultipartition {
        &self.shape
    }

    pub fn basis(&self) -> &[GeneralTableau] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// Matrix of `T_i`, `0 ≤ i < n`.
    pub fn generator(&self, i: usize) -> &RatMatrix {
        &self.generators[i]
    }

    /// Replaces the matrix of `T_i`; used to test the relation checker.
    pub fn with_generator(mut self, i: usize, matrix: RatMatrix) -> Self {
        self.generators[i] = matrix;
        self
    }

    /// Image of a word `T_{w_1} ⋯ T_{w_k}`.
    pub fn word_matrix(&self, word: &[usize]) -> RatMatrix {
        word.iter().fold(RatMatrix::identity(self.dim()), |acc, &i| {
            acc.mul(&self.generators[i]).expect("square matrices")
        })
    }
}

/// Builds the seminormal representation.
///
/// `T_0` is diagonal with entry `v_c` where `1` lies in component `c`.
/// `T_i` acts by `q` when `i, i+1` share a row, by `-1` when they share a
/// column, and otherwise mixes a tableau `Y` with `Y' = Y(i i+1)`:
/// `T_i Y = (q-1)/Δ(k,x) Y + qΔ(k-1,x)/Δ(k,x) Y'`, with `Δ(k,x) = 1 - q^k x`,
/// `k` the content difference and `x = v_{c(i)} / v_{c(i+1)}`.
pub fn seminormal_rep(shape: &GeneralMultipartition, params: &ParamSpec) -> Result<SeminormalRep> {
    if shape.r() != params.r() {
        return Err(Error::ShapeMismatch(format!(
            "shape {shape} has {} components, parameters have {}",
            shape.r(),
            params.r()
        )));
    }
    let basis = shape.standard_tableaux();
    let index: HashMap<&GeneralTableau, usize> = basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let dim = basis.len();
    let n = shape.n();
    let q = params.q();
    let one = BigRational::one();
    let delta = |k: i64, x: &BigRational| &one - q.pow(k as i32) * x;

    let mut generators = Vec::with_capacity(n);
    let mut t0 = RatMatrix::zeros(dim, dim);
    for (col, t) in basis.iter().enumerate() {
        t0.set(col, col, params.v_of(t.node_of(1).comp).clone());
    }
    generators.push(t0);

    for i in 1..n {
        let mut ti = RatMatrix::zeros(dim, dim);
        for (col, t) in basis.iter().enumerate() {
            let (a, b) = (t.node_of(i), t.node_of(i + 1));
            if a.comp == b.comp && a.row == b.row {
                ti.set(col, col, q.clone());
            } else if a.comp == b.comp && a.col == b.col {
                ti.set(col, col, -one.clone());
            } else {
                let k = content(a) - content(b);
                let x = params.v_of(a.comp) / params.v_of(b.comp);
                let d = delta(k, &x);
                if d.is_zero() {
                    return Err(Error::DegenerateParameters(format!(
                        "Δ({k}, {x}) vanishes for T_{i} on {shape}"
                    )));
                }
                let partner = index[&t.swapped(i)];
                ti.set(col, col, (q - &one) / &d);
                ti.set(partner, col, q * delta(k - 1, &x) / &d);
            }
        }
        generators.push(ti);
    }
    Ok(SeminormalRep { shape: shape.clone(), basis, generators })
}

/// The defining relation that failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationFailure {
    Cyclotomic,
    Quadratic(usize),
    TypeBBraid,
    Braid(usize),
    Commutation(usize, usize),
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationFailure::Cyclotomic => write!(f, "(T0-v1)...(T0-vr) = 0"),
            RelationFailure::Quadratic(i) => write!(f, "(T{i}-q)(T{i}+1) = 0"),
            RelationFailure::TypeBBraid => write!(f, "T0T1T0T1 = T1T0T1T0"),
            RelationFailure::Braid(i) => write!(f, "T{i}T{}T{i} = T{}T{i}T{}", i + 1, i + 1, i + 1),
            RelationFailure::Commutation(i, j) => write!(f, "T{i}T{j} = T{j}T{i}"),
        }
    }
}

/// Checks every defining relation of `H(r,1,n)` exactly; returns the first
/// failing one.
pub fn find_relation_failure(rep: &SeminormalRep, params: &ParamSpec) -> Option<RelationFailure> {
    let dim = rep.dim();
    let id = RatMatrix::identity(dim);
    let n = rep.n();
    if n == 0 {
        return None;
    }
    let t = |i: usize| rep.generator(i);
    let mul = |a: &RatMatrix, b: &RatMatrix| a.mul(b).expect("square matrices");

    let cyclotomic =
        params.v().iter().fold(id.clone(), |acc, v| mul(&acc, &t(0).sub(&id.scale(v)).expect("same size")));
    if !cyclotomic.is_zero() {
        return Some(RelationFailure::Cyclotomic);
    }
    let q = params.q();
    for i in 1..n {
        let lhs = mul(&t(i).sub(&id.scale(q)).expect("same size"), &t(i).add(&id).expect("same size"));
        if !lhs.is_zero() {
            return Some(RelationFailure::Quadratic(i));
        }
    }
    if n >= 2 && rep.word_matrix(&[0, 1, 0, 1]) != rep.word_matrix(&[1, 0, 1, 0]) {
        return Some(RelationFailure::TypeBBraid);
    }
    for i in 1..n.saturating_sub(1) {
        if rep.word_matrix(&[i, i + 1, i]) != rep.word_matrix(&[i + 1, i, i + 1]) {
            return Some(RelationFailure::Braid(i));
        }
    }
    for i in 0..n {
        for j in i + 2..n {
            if rep.word_matrix(&[i, j]) != rep.word_matrix(&[j, i]) {
                return Some(RelationFailure::Commutation(i, j));
            }
        }
    }
    None
}

pub fn verify_relations(rep: &SeminormalRep, params: &ParamSpec) -> bool {
    find_relation_failure(rep, params).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::shapes::enumerate_multipartitions;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn one_dimensional_cases() {
        let p = ParamSpec::generic(2);
        let row = GeneralMultipartition::new(vec![vec![2], vec![]]).unwrap();
        assert_eq!(seminormal_rep(&row, &p).unwrap().generator(1).get(0, 0), &q(2));
        let col = GeneralMultipartition::new(vec![vec![1, 1], vec![]]).unwrap();
        assert_eq!(seminormal_rep(&col, &p).unwrap().generator(1).get(0, 0), &q(-1));
    }

    #[test]
    fn two_by_two_block() {
        let p = ParamSpec::generic(2);
        let shape = GeneralMultipartition::new(vec![vec![1], vec![1]]).unwrap();
        let t1 = seminormal_rep(&shape, &p).unwrap().generator(1).clone();
        let trace = t1.get(0, 0) + t1.get(1, 1);
        let det = t1.get(0, 0) * t1.get(1, 1) - t1.get(0, 1) * t1.get(1, 0);
        assert_eq!(trace, q(1));
        assert_eq!(det, q(-2));
    }

    #[test]
    fn relations_hold_small() {
        for r in 1..=3 {
            let p = ParamSpec::generic(r);
            for n in 1..=3 {
                for shape in enumerate_multipartitions(n, r) {
                    let rep = seminormal_rep(&shape, &p).unwrap();
                    assert_eq!(find_relation_failure(&rep, &p), None, "{shape}");
                }
            }
        }
    }

    #[test]
    fn perturbation_detected() {
        let p = ParamSpec::generic(2);
        let shape = GeneralMultipartition::new(vec![vec![2], vec![1]]).unwrap();
        let rep = seminormal_rep(&shape, &p).unwrap();
        let mut t1 = rep.generator(1).clone();
        let bumped = t1.get(0, 0) + q(1);
        t1.set(0, 0, bumped);
        let broken = rep.with_generator(1, t1);
        assert!(!verify_relations(&broken, &p));
    }
}
