//! Runs the statistical battery on a generated stream and on two degenerate
//! ones, plus the chi-square check on the integer outputs.
//!
//! cargo run --release --example battery

use ci_prng::catalog::KNOWN_BALANCED;
use ci_prng::stats::{chi_square_symbols, run_battery, BatteryConfig};
use ci_prng::{Generator, GeneratorConfig, VectorOfImages, XorShift64};

fn generator() -> ci_prng::Result<Generator<XorShift64, XorShift64>> {
    let f = VectorOfImages::new(4, KNOWN_BALANCED[0].1.to_vec())?;
    Generator::new(
        GeneratorConfig::new(f, GeneratorConfig::strict_k(4), 0),
        XorShift64::new(XorShift64::REFERENCE_SEED)?,
        XorShift64::for_stream(XorShift64::REFERENCE_SEED, 1),
    )
}

fn main() -> ci_prng::Result<()> {
    let config = BatteryConfig::default();

    let stream = generator()?.bit_stream(250_000, false)?;
    println!("F'1, 10^6 bits");
    print!("{}", run_battery(&stream, &config)?.to_text());

    let states = generator()?.states(100_000)?;
    println!("chi-square over 10^5 outputs: p = {:.6}", chi_square_symbols(&states, 4)?);

    println!("\nall zeros");
    print!("{}", run_battery(&vec![0; 10_000], &config)?.to_porcelain());
    println!("\nalternating");
    let alternating: Vec<u8> = (0..10_000).map(|i| (i % 2) as u8).collect();
    print!("{}", run_battery(&alternating, &config)?.to_porcelain());
    Ok(())
}
