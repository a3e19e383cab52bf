use std::collections::BTreeMap;

use crate::combinatorics::{
    enumerate_one_column, standard_count, tableau_degree, Multipartition, Tableau, Weight,
};
use crate::coxeter::{official_set, OfficialSet};
use crate::error::{Error, Result};

/// The cell datum: the one-column shapes with at most two non-empty
/// components, their standard tableaux, official words and degrees.
#[derive(Debug, Clone)]
pub struct CellDatum {
    n: usize,
    weight: Weight,
    seed: u64,
    poset: Vec<Multipartition>,
    official: Vec<OfficialSet>,
    degrees: Vec<Vec<i64>>,
}

/// Builds the cell datum for `TL_{r,1,n}` at `weight`, using the official
/// words generated from `seed`.
pub fn build_cell_datum(n: usize, weight: &Weight, seed: u64) -> Result<CellDatum> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let r = weight.rank();
    let poset = enumerate_one_column(n, r, 2);
    let official: Vec<OfficialSet> = poset.iter().map(|shape| official_set(shape, seed)).collect();
    let degrees = official
        .iter()
        .map(|set| {
            set.tableaux()
                .iter()
                .zip(set.words())
                .map(|(t, w)| tableau_degree(t, weight, w))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CellDatum { n, weight: weight.clone(), seed, poset, official, degrees })
}

impl CellDatum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.weight.rank()
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Shapes in canonical order; every matrix indexed by shapes uses it.
    pub fn poset(&self) -> &[Multipartition] {
        &self.poset
    }

    pub fn position(&self, shape: &Multipartition) -> Option<usize> {
        self.poset.iter().position(|s| s == shape)
    }

    pub fn official(&self, shape_index: usize) -> &OfficialSet {
        &self.official[shape_index]
    }

    pub fn tableaux(&self, shape_index: usize) -> &[Tableau] {
        self.official[shape_index].tableaux()
    }

    pub fn degrees(&self, shape_index: usize) -> &[i64] {
        &self.degrees[shape_index]
    }
}

/// `dim W(λ)`: `C(n, a)` where `a` is the height of the first non-empty
/// component, or `1` for a single column.
pub fn cell_dimension(shape: &Multipartition) -> u128 {
    let n = shape.n() as u128;
    let a = shape.heights().iter().copied().find(|&h| h > 0).unwrap_or(0) as u128;
    binomial(n, a)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_λ |Std(λ)|²` over the poset, counted by enumeration.
pub fn algebra_dimension(n: usize, r: usize) -> Result<u128> {
    if r < 2 {
        return Err(Error::InvalidInput(format!("r must be at least 2, got {r}")));
    }
    Ok(enumerate_one_column(n, r, 2)
        .iter()
        .map(|shape| {
            let d = standard_count(shape);
            d * d
        })
        .sum())
}

/// `C(r,2) C(2n,n) - r² + 2r`.
pub fn algebra_dimension_closed_form(n: usize, r: usize) -> u128 {
    let (n, r) = (n as u128, r as u128);
    binomial(r, 2) * binomial(2 * n, n) + 2 * r - r * r
}

/// Degree statistics of `W(λ)`: how many standard tableaux have each
/// degree.
pub fn graded_dim_cell(datum: &CellDatum, shape_index: usize) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for &d in datum.degrees(shape_index) {
        *out.entry(d).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_standard, Modulus};

    fn weight(res: &[i64]) -> Weight {
        Weight::new(res, Modulus::Infinite).unwrap()
    }

    #[test]
    fn poset_sizes() {
        assert_eq!(build_cell_datum(3, &weight(&[0, 10, 20]), 0).unwrap().poset().len(), 9);
        assert_eq!(build_cell_datum(2, &weight(&[0, 10]), 0).unwrap().poset().len(), 3);
        assert_eq!(build_cell_datum(1, &weight(&[0, 10, 20, 30]), 0).unwrap().poset().len(), 4);
    }

    #[test]
    fn dimensions() {
        assert_eq!(algebra_dimension(3, 3).unwrap(), 57);
        for n in 1..8 {
            assert_eq!(algebra_dimension(n, 2).unwrap(), binomial(2 * n as u128, n as u128));
        }
        for r in 2..7 {
            let r128 = r as u128;
            assert_eq!(algebra_dimension(2, r).unwrap(), 2 * r128 * r128 - r128);
        }
        for n in 1..=8 {
            for r in 2..=5 {
                assert_eq!(algebra_dimension(n, r).unwrap(), algebra_dimension_closed_form(n, r));
            }
        }
    }

    #[test]
    fn cell_dimensions_match_counts() {
        for shape in enumerate_one_column(6, 3, 2) {
            assert_eq!(cell_dimension(&shape), enumerate_standard(&shape).len() as u128);
        }
    }

    #[test]
    fn semisimple_degrees_vanish() {
        let datum = build_cell_datum(4, &weight(&[0, 10, 20]), 0).unwrap();
        for i in 0..datum.poset().len() {
            let graded = graded_dim_cell(&datum, i);
            assert_eq!(graded.keys().collect::<Vec<_>>(), vec![&0]);
        }
    }
}
