//! Generators acting on a cell module, and the same products computed in
//! the affine algebra.

use gentl::combinatorics::{Modulus, Multipartition, Weight};
use gentl::klr::{CellContext, KlrAlgebra, Letter};

fn main() -> gentl::Result<()> {
    let weight = Weight::new(&[0, 3], Modulus::Infinite)?;
    let hook = Multipartition::new(vec![1, 3])?;
    let ctx = CellContext::new(&hook, &weight, 0)?;
    println!("basis of W{hook}:");
    for (i, t) in ctx.tableaux().iter().enumerate() {
        println!("  C{i} = {t}  residues {:?}", ctx.residue_of(i));
    }
    let start: Vec<i64> = (0..ctx.dim()).map(|i| i64::from(i == ctx.initial_index())).collect();
    let mut v = start;
    for r in 1..4 {
        v = ctx.act(Letter::Psi(r), &v)?;
        println!("psi_{r} applied: {v:?}");
    }
    println!("y_4 on that vector: {:?}", ctx.act(Letter::Y(4), &v)?);

    let alg = KlrAlgebra::new(3, Modulus::Infinite);
    for i in [[0, 1, 0], [1, 0, 1], [0, 0, 1], [0, 5, 0]] {
        let e = alg.idempotent(&i)?;
        let square = alg.mul_letters_right(&e, &[Letter::Psi(1), Letter::Psi(1)])?;
        let braid = alg
            .mul_letters_right(&e, &[Letter::Psi(1), Letter::Psi(2), Letter::Psi(1)])?
            .sub(&alg.mul_letters_right(&e, &[Letter::Psi(2), Letter::Psi(1), Letter::Psi(2)])?);
        println!("e{i:?}: psi_1^2 = {square}; braid defect = {braid}");
    }
    Ok(())
}
