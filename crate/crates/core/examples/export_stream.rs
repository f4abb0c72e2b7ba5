//! Writes a generated stream in both export encodings, ready for external
//! suites (the ASCII form is what the NIST STS `assess` tool reads).
//!
//! cargo run --release --example export_stream -- OUT_DIR [bytes]

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use ci_prng::stats::{export_stream, import_stream, ExportFormat};
use ci_prng::{Generator, GeneratorConfig, VectorOfImages, XorShift64};

fn main() -> ci_prng::Result<()> {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| ".".into()));
    let n_bytes: usize = args.next().map_or(125_000, |s| s.parse().expect("byte count"));

    let f = VectorOfImages::negation(4)?;
    let mut generator = Generator::new(
        GeneratorConfig::new(f, GeneratorConfig::strict_k(4), 0),
        XorShift64::new(XorShift64::REFERENCE_SEED)?,
        XorShift64::for_stream(XorShift64::REFERENCE_SEED, 1),
    )?;
    let packed = generator.byte_stream(n_bytes)?;
    let bits = ci_prng::bits::unpack_msb_first(&packed);

    for (format, name) in [(ExportFormat::RawBytes, "stream.bin"), (ExportFormat::Ascii01, "stream.txt")] {
        let path = dir.join(name);
        export_stream(&bits, format, BufWriter::new(File::create(&path)?))?;
        let back = import_stream(&std::fs::read(&path)?, format)?;
        assert_eq!(back, bits);
        println!("{} ({} bits)", path.display(), bits.len());
    }
    Ok(())
}
