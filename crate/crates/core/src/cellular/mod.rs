//! Cell data of `TL_{r,1,n}`: Gram matrices, simple dimensions,
//! semisimplicity tests and decomposition numbers.

mod datum;
mod decomposition;
mod gram;
mod semisimple;

pub use datum::{
    algebra_dimension, algebra_dimension_closed_form, build_cell_datum, cell_dimension, graded_dim_cell,
    CellDatum,
};
pub use decomposition::{decomposition_matrix, dim_simple_decomp, hom_vanishing_check, DecompositionMatrix};
pub use gram::{dim_simple_gram, gram_matrices, gram_matrix, GramMatrix, GramOptions};
pub use semisimple::{is_semisimple_params, is_semisimple_weight};
