//! Derives new balanced functions from the negation, first by hand with
//! paired mutations, then by the bounded search.
//!
//! cargo run --release --example search_functions -- [N] [max_mutations]

use ci_prng::catalog::KNOWN_BALANCED;
use ci_prng::func::{balance_rule_check, is_balanced, mutate_pair, search_functions};
use ci_prng::VectorOfImages;

fn main() -> ci_prng::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(4, |s| s.parse().expect("N"));
    let depth: usize = args.next().map_or(3, |s| s.parse().expect("max_mutations"));

    let negation = VectorOfImages::negation(4)?;
    // flip bit 1 (weight 1) of F_1; the partner F_2 must flip the same bit
    let f1 = mutate_pair(&negation, 1, 1)?;
    let f2 = mutate_pair(&f1, 5, 2)?;
    for (label, f) in [("negation", &negation), ("F'1", &f1), ("F'2", &f2)] {
        println!(
            "{label:>8}: {:?} oracle={} rule={}",
            f.images(),
            is_balanced(f).balanced,
            balance_rule_check(f).balanced
        );
    }
    assert_eq!(f1.images(), KNOWN_BALANCED[0].1);
    assert_eq!(f2.images(), KNOWN_BALANCED[1].1);

    let chaotic = search_functions(n, depth, true)?;
    let all = search_functions(n, depth, false)?;
    println!(
        "N = {n}, up to {depth} paired mutations: {} balanced, {} of them chaotic",
        all.len(),
        chaotic.len()
    );
    for f in chaotic.iter().take(5) {
        println!("  {:?}", f.images());
    }
    Ok(())
}
