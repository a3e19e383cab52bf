//! Multipartitions, the one-column poset, tableaux and residues.

mod degree;
mod multipartition;
mod residue;
mod tableau;

pub use degree::tableau_degree;
pub use multipartition::{
    dominance_closed_form, dominance_leq, enumerate_one_column, node_compare, Multipartition, Node, NodeSet,
};
pub use residue::{residue_difference, Modulus, Residue, ResidueSequence, Weight};
pub use tableau::{enumerate_standard, node_residue, standard_count, Tableau};
