//! Official reduced expressions for ((1²),(1²)) under several seeds, and a
//! hand-written set checked for validity.

use gentl::combinatorics::Multipartition;
use gentl::coxeter::{official_set, validate_official, OfficialSet, Word};

fn main() -> gentl::Result<()> {
    let shape = Multipartition::new(vec![2, 2])?;
    for seed in 0..3 {
        let set = official_set(&shape, seed);
        println!("seed {seed} (valid: {}):", validate_official(&set));
        for (t, w) in set.tableaux().iter().zip(set.words()) {
            println!("  {t:<16} {:?}", w.letters());
        }
    }

    // One word per tableau in canonical order. The prefix (1,3) of the last
    // word is missing from the set, so prefix closure fails.
    let words = [vec![2], vec![], vec![3], vec![1], vec![3, 1], vec![1, 3, 2]];
    let custom = OfficialSet::from_words(&shape, words.into_iter().map(Word::new).collect())?;
    println!("custom set valid: {}", validate_official(&custom));
    Ok(())
}
