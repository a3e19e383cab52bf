use num::{BigRational, One, Zero};

use crate::combinatorics::Weight;
use crate::error::{Error, Result};

/// Semisimplicity from the weight: every pairwise residue difference,
/// measured circularly when `e > 0`, is at least `n`.
pub fn is_semisimple_weight(n: usize, weight: &Weight) -> bool {
    weight.min_gap() >= n as u64
}

/// Semisimplicity from Hecke parameters: `v_i / v_j ≠ q^l` for `i ≠ j` and
/// `|l| < n`, and `1 + q + ... + q^i ≠ 0` for `1 ≤ i < n`.
pub fn is_semisimple_params(n: usize, q: &BigRational, v: &[BigRational]) -> Result<bool> {
    if q.is_zero() || v.iter().any(Zero::is_zero) {
        return Err(Error::InvalidInput("Hecke parameters must be nonzero".into()));
    }
    let mut partial = BigRational::one();
    let mut power = BigRational::one();
    for _ in 1..n {
        power *= q;
        partial += &power;
        if partial.is_zero() {
            return Ok(false);
        }
    }
    let max_l = n.saturating_sub(1) as i32;
    let powers: Vec<BigRational> = (-max_l..=max_l).map(|l| q.pow(l)).collect();
    for (i, vi) in v.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            if i != j && powers.contains(&(vi / vj)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Modulus;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn weight_examples() {
        let w = Weight::new(&[0, 3], Modulus::Infinite).unwrap();
        assert!(!is_semisimple_weight(4, &w));
        let w = Weight::new(&[0, 10, 20], Modulus::Infinite).unwrap();
        assert!(is_semisimple_weight(3, &w));
        let w = Weight::new(&[0, 3, 6], Modulus::Finite(9)).unwrap();
        assert!(is_semisimple_weight(3, &w));
        assert!(!is_semisimple_weight(4, &w));
    }

    #[test]
    fn parameter_examples() {
        assert!(is_semisimple_params(3, &q(2), &[q(1), q(1 << 10), q(1 << 20)]).unwrap());
        assert!(!is_semisimple_params(4, &q(2), &[q(1), q(8)]).unwrap());
        assert!(is_semisimple_params(3, &q(1), &[q(1), q(5)]).unwrap());
        assert!(!is_semisimple_params(3, &q(-1), &[q(1), q(5)]).unwrap());
        assert!(is_semisimple_params(3, &q(0), &[q(1)]).is_err());
    }
}
