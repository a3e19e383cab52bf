//! Gram matrices of every cell module at n = 4 for the weight Λ0 + Λ3,
//! with their ranks.

use gentl::cellular::{build_cell_datum, gram_matrices, GramOptions};
use gentl::combinatorics::{Modulus, Weight};

fn main() -> gentl::Result<()> {
    let weight = Weight::new(&[0, 3], Modulus::Infinite)?;
    let datum = build_cell_datum(4, &weight, 0)?;
    for gram in gram_matrices(&datum, GramOptions::default())? {
        println!("{} rank {} of {}", gram.shape(), gram.rank(), gram.dim());
        for row in gram.entries() {
            println!("  {row:?}");
        }
    }
    Ok(())
}
