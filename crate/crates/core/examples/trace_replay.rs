//! Replays the hand-worked three-round trace with scripted inputs and prints
//! every single-coordinate update.
//!
//! cargo run --example trace_replay

use ci_prng::catalog;
use ci_prng::{Generator, GeneratorConfig, Scripted, VectorOfImages};

fn main() -> ci_prng::Result<()> {
    let f = VectorOfImages::new(4, catalog::TRACE_EXAMPLE.to_vec())?;
    // k = N = 4 is below the strict k > 3N bound, hence compat mode
    let config = GeneratorConfig::new(f, catalog::TRACE_K, catalog::TRACE_SEED_STATE).compat();
    let mut generator = Generator::new(
        config.clone(),
        Scripted::new(catalog::TRACE_M_BITS),
        Scripted::new(catalog::TRACE_STRATEGY),
    )?;

    println!("x0 = {:04b}", generator.state());
    for round in 1..=3 {
        let out = generator.round_observed(|s, x| println!("  S = {s}  x = {x:04b}"))?;
        println!("round {round}: {out} ({out:04b})");
    }

    let mut replay = Generator::new(
        config,
        Scripted::new(catalog::TRACE_M_BITS),
        Scripted::new(catalog::TRACE_STRATEGY),
    )?;
    let bits = replay.bit_stream(3, true)?;
    println!("binary output: {}", ci_prng::bits::to_ascii(&bits));
    Ok(())
}
