//! Dense exact linear algebra over the rationals.
//!
//! Matrices here are small (at most a few hundred rows), so a dense
//! row-major layout is used throughout. Rank is computed by fraction-free
//! elimination on an integer copy; kernels and triangular solves work
//! directly with rationals.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Zero};

use crate::error::{Error, Result};

/// A dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Builds a matrix from rows, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        let n_rows = rows.len();
        Ok(RatMatrix { rows: n_rows, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        other: &RatMatrix,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch("matrix dimensions differ".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &BigRational) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch("vector length differs from column count".into()));
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rank(self)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Rank by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled by the lcm of its denominators so that the
/// elimination runs over the integers; every intermediate entry is then a
/// minor of that integer matrix, which keeps the numbers small.
pub fn rank(m: &RatMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows).map(|i| integer_row(m.row(i))).collect();
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Reduced row echelon form together with its pivot columns.
fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
            continue;
        };
        for j in 0..a.cols {
            a.entries.swap(row * a.cols + j, p * a.cols + j);
        }
        let inv = a.get(row, col).recip();
        for j in 0..a.cols {
            let v = a.get(row, j) * &inv;
            a.set(row, j, v);
        }
        for i in 0..a.rows {
            if i == row || a.get(i, col).is_zero() {
                continue;
            }
            let factor = a.get(i, col).clone();
            for j in 0..a.cols {
                let v = a.get(i, j) - &factor * a.get(row, j);
                a.set(i, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// A basis of the right kernel `{v : m v = 0}`, one vector per free column.
pub fn nullspace_basis(m: &RatMatrix) -> Vec<Vec<BigRational>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); m.cols];
            v[f] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect()
}

/// Solves `m x = rhs` for a matrix that is unitriangular up to a
/// simultaneous permutation of rows and columns.
///
/// The variables are eliminated in an order where each row depends only on
/// variables already known, so both upper and lower unitriangular systems,
/// and systems triangular for any linear extension of a poset, are accepted.
pub fn unitriangular_solve(m: &RatMatrix, rhs: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = m.rows;
    if m.cols != n || rhs.len() != n {
        return Err(Error::ShapeMismatch("unitriangular_solve needs a square system".into()));
    }
    if (0..n).any(|i| !m.get(i, i).is_one()) {
        return Err(Error::InvalidInput("diagonal is not all ones".into()));
    }
    let mut solved: Vec<Option<BigRational>> = vec![None; n];
    for _ in 0..n {
        let next = (0..n).find(|&i| {
            solved[i].is_none() && (0..n).all(|j| j == i || m.get(i, j).is_zero() || solved[j].is_some())
        });
        let Some(i) = next else {
            return Err(Error::InvalidInput("matrix is not unitriangular".into()));
        };
        let mut x = rhs[i].clone();
        for (j, value) in solved.iter().enumerate() {
            if j != i && !m.get(i, j).is_zero() {
                x -= m.get(i, j) * value.as_ref().expect("solved");
            }
        }
        solved[i] = Some(x);
    }
    Ok(solved.into_iter().map(|x| x.expect("all solved")).collect())
}

/// `true` if every entry is an integer; used when reporting dimensions.
pub fn all_integral(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    /// Textbook Gaussian elimination with rational pivots.
    fn naive_rank(m: &RatMatrix) -> usize {
        let mut a: Vec<Vec<BigRational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            if let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) {
                a.swap(rank, p);
                let pivot = a[rank].clone();
                for (i, row) in a.iter_mut().enumerate() {
                    if i != rank {
                        let f = &row[col] / &pivot[col];
                        for (x, p) in row.iter_mut().zip(&pivot) {
                            *x -= &f * p;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn small_ranks() {
        assert_eq!(RatMatrix::identity(4).rank(), 4);
        assert_eq!(RatMatrix::zeros(3, 5).rank(), 0);
        let m = RatMatrix::from_integers(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernels() {
        assert!(nullspace_basis(&RatMatrix::identity(3)).is_empty());
        let m = RatMatrix::from_integers(&[vec![1, 1]]).unwrap();
        assert_eq!(nullspace_basis(&m), vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn triangular_solves() {
        let m = RatMatrix::from_integers(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(unitriangular_solve(&m, &[q(4), q(1)]).unwrap(), vec![q(3), q(1)]);
        let id = RatMatrix::identity(3);
        let rhs = vec![q(2), q(-5), q(7)];
        assert_eq!(unitriangular_solve(&id, &rhs).unwrap(), rhs);
        let bad = RatMatrix::from_integers(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(unitriangular_solve(&bad, &[q(1), q(1)]).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..4, c), r)
                .prop_map(|rows| RatMatrix::from_integers(&rows).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rank_matches_naive(m in small_matrix()) {
            prop_assert_eq!(m.rank(), naive_rank(&m));
        }

        #[test]
        fn rank_of_transpose(m in small_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_under_permutation(m in small_matrix(), seed in any::<u64>()) {
            let mut rows: Vec<usize> = (0..m.rows()).collect();
            let mut cols: Vec<usize> = (0..m.cols()).collect();
            rows.rotate_left((seed as usize) % m.rows());
            cols.reverse();
            let permuted = RatMatrix::from_rows(
                rows.iter().map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect()).collect(),
            ).unwrap();
            prop_assert_eq!(m.rank(), permuted.rank());
        }

        #[test]
        fn kernel_dimension(m in small_matrix()) {
            let kernel = nullspace_basis(&m);
            prop_assert_eq!(kernel.len(), m.cols() - m.rank());
            for v in &kernel {
                prop_assert!(m.apply(v).unwrap().iter().all(Zero::is_zero));
            }
        }
    }
}
