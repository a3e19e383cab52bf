use std::fmt;

use crate::error::{Error, Result};

/// The quantum characteristic: residues live in `Z/eZ`, or in `Z` when
/// the characteristic is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modulus {
    Infinite,
    Finite(u32),
}

impl Modulus {
    /// Reads the usual integer encoding where `0` means infinite.
    pub fn from_e(e: u32) -> Self {
        if e == 0 {
            Modulus::Infinite
        } else {
            Modulus::Finite(e)
        }
    }

    pub fn e(self) -> u32 {
        match self {
            Modulus::Infinite => 0,
            Modulus::Finite(e) => e,
        }
    }

    /// Canonical representative of `value` in this modulus.
    pub fn reduce(self, value: i64) -> i64 {
        match self {
            Modulus::Infinite => value,
            Modulus::Finite(e) => value.rem_euclid(e as i64),
        }
    }

    /// Circular distance between two residues: the minimum of `|c - d|`
    /// over all integer representatives.
    pub fn difference(self, a: i64, b: i64) -> u64 {
        match self {
            Modulus::Infinite => (a - b).unsigned_abs(),
            Modulus::Finite(e) => {
                let d = (a - b).rem_euclid(e as i64) as u64;
                d.min(e as u64 - d)
            }
        }
    }

    /// `a` and `b` are equal residues.
    pub fn same(self, a: i64, b: i64) -> bool {
        self.reduce(a) == self.reduce(b)
    }

    /// There is a quiver arrow `a -> b`, i.e. `b = a + 1`.
    pub fn arrow(self, a: i64, b: i64) -> bool {
        self.same(a + 1, b)
    }

    /// The double arrow case, reachable only when `e = 2`.
    pub fn double_arrow(self) -> bool {
        self == Modulus::Finite(2)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.e())
    }
}

/// A single residue together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: i64,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: i64, modulus: Modulus) -> Self {
        Residue { value: modulus.reduce(value), modulus }
    }

    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn succ(self) -> Self {
        Residue::new(self.value + 1, self.modulus)
    }

    pub fn pred(self) -> Self {
        Residue::new(self.value - 1, self.modulus)
    }
}

/// Circular difference of two residues.
pub fn residue_difference(a: Residue, b: Residue) -> Result<u64> {
    if a.modulus != b.modulus {
        return Err(Error::InvalidInput("residues with different moduli".into()));
    }
    Ok(a.modulus.difference(a.value, b.value))
}

/// A dominant weight `Λ_{i_1} + ... + Λ_{i_r}` with pairwise residue gaps
/// strictly larger than two.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    residues: Vec<i64>,
    modulus: Modulus,
}

impl Weight {
    pub fn new(residues: &[i64], modulus: Modulus) -> Result<Self> {
        if residues.len() < 2 {
            return Err(Error::InvalidWeight(format!(
                "a weight needs at least two residues, got {}",
                residues.len()
            )));
        }
        if let Modulus::Finite(e) = modulus {
            if e < 3 {
                return Err(Error::InvalidWeight(format!("e = {e} is not supported")));
            }
        }
        let residues: Vec<i64> = residues.iter().map(|&v| modulus.reduce(v)).collect();
        for a in 0..residues.len() {
            for b in a + 1..residues.len() {
                let gap = modulus.difference(residues[a], residues[b]);
                if gap <= 2 {
                    return Err(Error::InvalidWeight(format!(
                        "residues {} and {} (components {} and {}) differ by {gap}, need > 2",
                        residues[a],
                        residues[b],
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(Weight { residues, modulus })
    }

    /// Number of components `r`.
    pub fn rank(&self) -> usize {
        self.residues.len()
    }

    pub fn residues(&self) -> &[i64] {
        &self.residues
    }

    /// Residue of component `comp` (1-based).
    pub fn residue(&self, comp: usize) -> i64 {
        self.residues[comp - 1]
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// How often the residue `value` occurs among the weight residues.
    pub fn multiplicity(&self, value: i64) -> usize {
        self.residues.iter().filter(|&&v| self.modulus.same(v, value)).count()
    }

    /// Smallest pairwise circular gap between weight residues.
    pub fn min_gap(&self) -> u64 {
        let mut best = u64::MAX;
        for a in 0..self.residues.len() {
            for b in a + 1..self.residues.len() {
                best = best.min(self.modulus.difference(self.residues[a], self.residues[b]));
            }
        }
        best
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.residues.iter().map(|v| format!("L{v}")).collect();
        write!(f, "{} (e={})", terms.join("+"), self.modulus)
    }
}

/// A residue sequence `(i_1, ..., i_n)`, the label of a KLR idempotent.
pub type ResidueSequence = Vec<i64>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circular_differences() {
        let m5 = Modulus::Finite(5);
        assert_eq!(residue_difference(Residue::new(1, m5), Residue::new(4, m5)).unwrap(), 2);
        let inf = Modulus::Infinite;
        assert_eq!(residue_difference(Residue::new(3, inf), Residue::new(-3, inf)).unwrap(), 6);
        for m in [inf, Modulus::Finite(3), Modulus::Finite(7)] {
            assert_eq!(residue_difference(Residue::new(0, m), Residue::new(0, m)).unwrap(), 0);
        }
    }

    #[test]
    fn successor_wraps() {
        let r = Residue::new(4, Modulus::Finite(5));
        assert_eq!(r.succ().value(), 0);
        assert_eq!(Residue::new(0, Modulus::Finite(5)).pred().value(), 4);
        assert_eq!(Residue::new(0, Modulus::Infinite).pred().value(), -1);
    }

    #[test]
    fn weight_validation() {
        assert!(Weight::new(&[0, 3], Modulus::Infinite).is_ok());
        assert!(Weight::new(&[0, 2], Modulus::Infinite).is_err());
        assert!(Weight::new(&[0], Modulus::Infinite).is_err());
        // 0 and 5 are only 1 apart modulo 6.
        assert!(Weight::new(&[0, 5], Modulus::Finite(6)).is_err());
        assert!(Weight::new(&[0, 3, 6], Modulus::Finite(9)).is_ok());
        assert!(Weight::new(&[0, 3], Modulus::Finite(2)).is_err());
    }
}
