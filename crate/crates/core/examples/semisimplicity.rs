//! The gap criterion on weights against the parameter criterion with
//! q = 2 and v_j = 2^{i_j}.

use gentl::cellular::{is_semisimple_params, is_semisimple_weight};
use gentl::combinatorics::{Modulus, Weight};
use num::BigRational;

fn main() -> gentl::Result<()> {
    let q = BigRational::from_integer(2.into());
    for residues in [[0i64, 3], [0, 4], [0, 6]] {
        let weight = Weight::new(&residues, Modulus::Infinite)?;
        let v: Vec<BigRational> = residues.iter().map(|&i| q.pow(i as i32)).collect();
        for n in 2..=7 {
            println!(
                "weight {residues:?} n = {n}: by gaps {}, by parameters {}",
                is_semisimple_weight(n, &weight),
                is_semisimple_params(n, &q, &v)?
            );
        }
    }
    Ok(())
}
