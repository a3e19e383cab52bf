//! An independent check of the quotient through the semisimple
//! Ariki-Koike algebra `H(r,1,n)`.
//!
//! Irreducible modules are built in their seminormal form at exact rational
//! parameters. The generators of the Temperley-Lieb ideal are evaluated in
//! each module; in the semisimple case the quotient is the sum of the
//! matrix blocks on which all of them vanish.

mod params;
mod quotient;
mod seminormal;
mod shapes;

pub use params::ParamSpec;

pub use quotient::{quotient_idempotents, surviving_shapes, HeckeExpr, QuotientGenerator};
pub use seminormal::{
    find_relation_failure, seminormal_rep, verify_relations, RelationFailure, SeminormalRep,
};
pub use shapes::{content, enumerate_multipartitions, GeneralMultipartition, GeneralTableau, HeckeNode};
