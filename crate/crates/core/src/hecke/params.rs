use num::{BigRational, One, Zero};

use crate::cellular::is_semisimple_params;
use crate::error::{Error, Result};

/// Exact parameters `q, v_1, ..., v_r` of `H(r,1,n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSpec {
    q: BigRational,
    v: Vec<BigRational>,
}

impl ParamSpec {
    pub fn new(q: BigRational, v: Vec<BigRational>) -> Result<Self> {
        if q.is_zero() || v.iter().any(Zero::is_zero) {
            return Err(Error::InvalidInput("Hecke parameters must be nonzero".into()));
        }
        if v.is_empty() {
            return Err(Error::InvalidInput("at least one v parameter is required".into()));
        }
        Ok(ParamSpec { q, v })
    }

    /// `q = 2` and `v_j = 2^{10(j-1)}`, mirroring the weight with residues
    /// `0, 10, 20, ...` at `e = 0`.
    pub fn generic(r: usize) -> Self {
        let two = BigRational::from_integer(2.into());
        let v = (0..r).map(|j| two.pow(10 * j as i32)).collect();
        ParamSpec { q: two, v }
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn v(&self) -> &[BigRational] {
        &self.v
    }

    /// `v_j` for a 1-based component index.
    pub fn v_of(&self, comp: usize) -> &BigRational {
        &self.v[comp - 1]
    }

    pub fn r(&self) -> usize {
        self.v.len()
    }

    /// The restrictions under which the Temperley-Lieb quotient is defined:
    /// `v_i / v_j ∉ {1, q, q²}` for `i ≠ j` and `(1+q)(1+q+q²) ≠ 0`.
    pub fn satisfies_quotient_restrictions(&self) -> bool {
        let one = BigRational::one();
        let q2 = &self.q * &self.q;
        if (&one + &self.q).is_zero() || (&one + &self.q + &q2).is_zero() {
            return false;
        }
        let forbidden = [one, self.q.clone(), q2];
        for (i, a) in self.v.iter().enumerate() {
            for (j, b) in self.v.iter().enumerate() {
                if i != j && forbidden.contains(&(a / b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Semisimplicity of `H(r,1,n)` at these parameters.
    pub fn is_semisimple(&self, n: usize) -> bool {
        is_semisimple_params(n, &self.q, &self.v).unwrap_or(false)
    }
}
