//! Independently seeded streams for every known balanced function, each run
//! through the battery. Streams are generated and tested in parallel.
//!
//! cargo run --release --example parallel_streams -- [streams] [bits]

use std::time::Instant;

use rayon::prelude::*;

use ci_prng::catalog::KNOWN_BALANCED;
use ci_prng::stats::{run_battery, BatteryConfig, TestKind};
use ci_prng::{Generator, GeneratorConfig, VectorOfImages, XorShift64};

fn main() -> ci_prng::Result<()> {
    let mut args = std::env::args().skip(1);
    let streams: u64 = args.next().map_or(20, |s| s.parse().expect("stream count"));
    let bits: usize = args.next().map_or(1_000_000, |s| s.parse().expect("bit count"));
    let config = BatteryConfig::default();
    let started = Instant::now();

    for (name, images) in KNOWN_BALANCED {
        let f = VectorOfImages::new(4, images.to_vec())?;
        let reports = (0..streams)
            .into_par_iter()
            .map(|i| {
                let gen_config = GeneratorConfig::new(f.clone(), GeneratorConfig::strict_k(4), 0);
                let prng1 = XorShift64::for_stream(XorShift64::REFERENCE_SEED, 2 * i);
                let prng2 = XorShift64::for_stream(XorShift64::REFERENCE_SEED, 2 * i + 1);
                let mut generator = Generator::new(gen_config, prng1, prng2)?;
                let stream = generator.bit_stream(bits / 4, false)?;
                run_battery(&stream, &config)
            })
            .collect::<ci_prng::Result<Vec<_>>>()?;

        let passes: Vec<String> = TestKind::ALL
            .iter()
            .map(|&kind| {
                let n = reports
                    .iter()
                    .filter(|r| r.test_passed(kind) == Some(true))
                    .count();
                format!("{} {n}/{streams}", kind.name())
            })
            .collect();
        println!("{name}: {}", passes.join(", "));
    }
    println!("elapsed: {:.1?}", started.elapsed());
    Ok(())
}
