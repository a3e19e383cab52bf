use std::collections::HashSet;

use num::{BigRational, ToPrimitive};

use super::datum::{cell_dimension, CellDatum};
use crate::combinatorics::{dominance_leq, Tableau};
use crate::error::{Error, Result};
use crate::linalg::{unitriangular_solve, RatMatrix};

/// Decomposition numbers `[W(λ) : L(μ)]`, rows and columns in poset order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionMatrix {
    entries: Vec<Vec<u8>>,
}

impl DecompositionMatrix {
    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.entries[row][col]
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == u8::from(i == j)))
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_integers(
            &self.entries.iter().map(|r| r.iter().map(|&x| i64::from(x)).collect()).collect::<Vec<_>>(),
        )
        .expect("square matrix")
    }
}

/// `[W(λ) : L(μ)] = 1` exactly when `λ ⊴ μ` and some standard tableau of
/// shape `λ` has the residue sequence of `t^μ`.
pub fn decomposition_matrix(datum: &CellDatum) -> Result<DecompositionMatrix> {
    let poset = datum.poset();
    let residue_sets: Vec<HashSet<Vec<i64>>> = (0..poset.len())
        .map(|i| {
            datum
                .tableaux(i)
                .iter()
                .map(|t| t.residue_sequence(datum.weight()))
                .collect::<Result<HashSet<_>>>()
        })
        .collect::<Result<_>>()?;
    let initial_residues: Vec<Vec<i64>> = poset
        .iter()
        .map(|shape| Tableau::initial(shape).residue_sequence(datum.weight()))
        .collect::<Result<_>>()?;
    let mut entries = vec![vec![0u8; poset.len()]; poset.len()];
    for (i, lambda) in poset.iter().enumerate() {
        for (j, mu) in poset.iter().enumerate() {
            if dominance_leq(lambda, mu)? && residue_sets[i].contains(&initial_residues[j]) {
                entries[i][j] = 1;
            }
        }
    }
    Ok(DecompositionMatrix { entries })
}

/// `dim L(μ)` for every shape, solving `dim W(λ) = Σ_μ [W(λ):L(μ)] dim L(μ)`.
pub fn dim_simple_decomp(datum: &CellDatum, matrix: &DecompositionMatrix) -> Result<Vec<u128>> {
    let rhs: Vec<BigRational> =
        datum.poset().iter().map(|shape| BigRational::from_integer(cell_dimension(shape).into())).collect();
    let solution = unitriangular_solve(&matrix.to_rational(), &rhs)?;
    solution
        .iter()
        .map(|x| {
            x.is_integer()
                .then(|| x.to_integer().to_u128())
                .flatten()
                .ok_or_else(|| Error::InvalidInput(format!("simple dimension {x} is not a natural number")))
        })
        .collect()
}

/// For shapes with disjoint supports, no simple module occurs in both cell
/// modules.
pub fn hom_vanishing_check(datum: &CellDatum, matrix: &DecompositionMatrix) -> bool {
    let poset = datum.poset();
    let supports: Vec<HashSet<usize>> = poset.iter().map(|s| s.support().into_iter().collect()).collect();
    for a in 0..poset.len() {
        for b in 0..poset.len() {
            if !supports[a].is_disjoint(&supports[b]) {
                continue;
            }
            if (0..poset.len()).any(|c| matrix.entry(a, c) * matrix.entry(b, c) != 0) {
                return false;
            }
        }
    }
    true
}
