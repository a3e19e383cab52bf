//! The one-column poset for n = 3, r = 3 with every shape allowed, printed
//! as its Hasse diagram.

use gentl::combinatorics::{dominance_leq, enumerate_one_column};

fn main() -> gentl::Result<()> {
    let shapes = enumerate_one_column(3, 3, 3);
    println!("{} shapes:", shapes.len());
    for s in &shapes {
        println!("  {s}");
    }
    println!("covers (lower -> upper):");
    for a in &shapes {
        for b in &shapes {
            if a == b || !dominance_leq(a, b)? {
                continue;
            }
            let mut is_cover = true;
            for c in &shapes {
                if c != a && c != b && dominance_leq(a, c)? && dominance_leq(c, b)? {
                    is_cover = false;
                    break;
                }
            }
            if is_cover {
                println!("  {a} -> {b}");
            }
        }
    }
    Ok(())
}
