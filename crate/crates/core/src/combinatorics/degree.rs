use super::residue::{ResidueSequence, Weight};
use super::tableau::Tableau;
use crate::coxeter::Word;
use crate::error::{Error, Result};
use crate::klr::cartan_value;

/// Degree of `ψ*_{d(t)} e_λ` read off a reduced word for `d(t)`.
///
/// Letters are absorbed one at a time starting from the residues of `t^λ`;
/// crossing positions `j, j+1` contributes `-c_{i_j, i_{j+1}}` for the
/// residues current at that step.
pub fn tableau_degree(t: &Tableau, weight: &Weight, word: &Word) -> Result<i64> {
    let initial = Tableau::initial(t.shape());
    let mut residues: ResidueSequence = initial.residue_sequence(weight)?;
    word.check_range(t.n().max(2))?;
    let mut degree = 0;
    for &j in word.letters() {
        degree -= cartan_value(weight.modulus(), residues[j - 1], residues[j]);
        residues.swap(j - 1, j);
    }
    if residues != t.residue_sequence(weight)? {
        return Err(Error::InvalidInput(format!("{word} is not a word for d({t})")));
    }
    Ok(degree)
}
