//! Decomposition matrix and simple dimensions, optionally for a weight given
//! on the command line: `decomposition <n> <e> <i1,i2,...>`.

use gentl::cellular::{build_cell_datum, decomposition_matrix, dim_simple_decomp, hom_vanishing_check};
use gentl::combinatorics::{Modulus, Weight};

fn main() -> gentl::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (n, e, residues) = match args.as_slice() {
        [n, e, w] => (
            n.parse().expect("n"),
            e.parse().expect("e"),
            w.split(',').map(|x| x.parse().expect("residue")).collect(),
        ),
        _ => (5, 0, vec![0, 3, 7]),
    };
    let weight = Weight::new(&residues, Modulus::from_e(e))?;
    let datum = build_cell_datum(n, &weight, 0)?;
    let d = decomposition_matrix(&datum)?;
    let dims = dim_simple_decomp(&datum, &d)?;
    println!("n = {n}, e = {e}, weight {residues:?}");
    for ((shape, row), dim) in datum.poset().iter().zip(d.entries()).zip(&dims) {
        println!("{:<14} {row:?}  dim L = {dim}", shape.label());
    }
    println!("hom vanishing: {}", hom_vanishing_check(&datum, &d));
    Ok(())
}
