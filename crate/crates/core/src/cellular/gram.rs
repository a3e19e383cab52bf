use num::BigRational;
use rayon::prelude::*;

use super::datum::CellDatum;
use crate::combinatorics::Multipartition;
use crate::error::Result;
use crate::klr::{CellContext, DEFAULT_MEMO_CAP};
use crate::linalg::RatMatrix;

/// The Gram matrix of the bilinear form on `W(λ)`, indexed by standard
/// tableaux in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    shape: Multipartition,
    entries: Vec<Vec<i64>>,
}

impl GramMatrix {
    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_rows(
            self.entries
                .iter()
                .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
        .expect("square matrix")
    }

    /// Rank over the rationals, which is `dim L(λ)`.
    pub fn rank(&self) -> usize {
        self.to_rational().rank()
    }
}

/// Tuning for Gram computations.
#[derive(Debug, Clone, Copy)]
pub struct GramOptions {
    pub memo_cap: usize,
    /// Compute both triangles instead of mirroring the upper one.
    pub full: bool,
}

impl Default for GramOptions {
    fn default() -> Self {
        GramOptions { memo_cap: DEFAULT_MEMO_CAP, full: false }
    }
}

/// Gram matrix of the shape at `shape_index` in the datum's poset.
pub fn gram_matrix(datum: &CellDatum, shape_index: usize, options: GramOptions) -> Result<GramMatrix> {
    let ctx = CellContext::with_official(datum.weight(), datum.official(shape_index).clone())?
        .with_memo_cap(options.memo_cap);
    let dim = ctx.dim();
    let mut entries = vec![vec![0i64; dim]; dim];
    let full = options.full;
    let pairs = (0..dim).flat_map(|s| (if full { 0 } else { s }..dim).map(move |t| (s, t)));
    for (s, t) in pairs {
        let value = ctx.gram_entry(s, t)?;
        entries[s][t] = value;
        if !full {
            entries[t][s] = value;
        }
    }
    Ok(GramMatrix { shape: ctx.shape().clone(), entries })
}

/// Gram matrices of every shape, computed in parallel and returned in
/// poset order.
pub fn gram_matrices(datum: &CellDatum, options: GramOptions) -> Result<Vec<GramMatrix>> {
    (0..datum.poset().len()).into_par_iter().map(|i| gram_matrix(datum, i, options)).collect()
}

/// `dim L(λ)` as the rank of the Gram matrix.
pub fn dim_simple_gram(datum: &CellDatum, shape_index: usize) -> Result<usize> {
    Ok(gram_matrix(datum, shape_index, GramOptions::default())?.rank())
}
