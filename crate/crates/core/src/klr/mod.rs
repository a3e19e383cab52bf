//! KLR generators, their relations, and the two rewriting engines: exact
//! normal forms in the KLR algebra and expansion in a cell module.

mod affine;
mod cell;
mod relations;

pub use affine::{KlrAlgebra, KlrElement, KlrTerm};
pub use cell::{CellContext, DEFAULT_MEMO_CAP};
pub(crate) use relations::cartan_value;
pub use relations::{cartan, Letter};
