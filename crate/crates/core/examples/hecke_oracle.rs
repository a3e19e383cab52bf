//! Quotient of the Ariki-Koike algebra by the idempotent ideal, computed in
//! seminormal form, compared with the cellular dimension count.

use gentl::cellular::algebra_dimension;
use gentl::hecke::{surviving_shapes, ParamSpec};

fn main() -> gentl::Result<()> {
    for (n, r) in [(2, 2), (3, 2), (3, 3), (4, 2)] {
        let params = ParamSpec::generic(r);
        let (shapes, dim) = surviving_shapes(n, r, &params)?;
        let labels: Vec<String> = shapes.iter().map(ToString::to_string).collect();
        println!("n = {n}, r = {r}: quotient dimension {dim}, expected {}", algebra_dimension(n, r)?);
        println!("  surviving: {}", labels.join(" "));
    }
    Ok(())
}
