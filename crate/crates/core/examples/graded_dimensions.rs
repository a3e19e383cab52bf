//! Graded dimensions of the cell modules, from tableau degrees.

use gentl::cellular::{build_cell_datum, graded_dim_cell};
use gentl::combinatorics::{Modulus, Weight};

fn main() -> gentl::Result<()> {
    let weight = Weight::new(&[0, 3, 7], Modulus::Finite(11))?;
    let datum = build_cell_datum(5, &weight, 0)?;
    for (i, shape) in datum.poset().iter().enumerate() {
        let graded: Vec<String> = graded_dim_cell(&datum, i)
            .into_iter()
            .map(|(d, m)| if d == 0 { m.to_string() } else { format!("{m}v^{d}") })
            .collect();
        println!("{:<14} {}", shape.label(), graded.join(" + "));
    }
    Ok(())
}
