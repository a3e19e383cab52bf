//! Graded cellular structure of the generalised Temperley-Lieb algebras
//! `TL_{r,1,n}` attached to one-column multipartitions.
//!
//! The crate is organised bottom up:
//!
//! * [`combinatorics`]: one-column multipartitions, dominance, tableaux,
//!   residues and Garnir tableaux;
//! * [`coxeter`]: words in simple transpositions, braid paths and official
//!   reduced expressions;
//! * [`klr`]: the KLR relations, exact normal forms, and rewriting inside a
//!   cell module;
//! * [`cellular`]: Gram matrices, simple dimensions, semisimplicity and
//!   decomposition matrices;
//! * [`hecke`]: an independent check through seminormal representations of
//!   the Ariki-Koike algebra;
//! * [`linalg`]: exact rank, kernels and triangular solves;
//! * [`cli`]: the command-line front end.

pub mod cellular;
pub mod cli;
pub mod combinatorics;
pub mod coxeter;
mod error;
pub mod hecke;
pub mod klr;
pub mod linalg;

pub use error::{Error, Result};
