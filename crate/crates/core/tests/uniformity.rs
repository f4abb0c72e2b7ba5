use ci_prng::catalog::KNOWN_BALANCED;
use ci_prng::stats::chi_square_symbols;
use ci_prng::{Generator, GeneratorConfig, VectorOfImages, XorShift64};

#[test]
fn integer_outputs_are_uniform() {
    let f = VectorOfImages::new(4, KNOWN_BALANCED[0].1.to_vec()).unwrap();
    let mut generator = Generator::new(
        GeneratorConfig::new(f, GeneratorConfig::strict_k(4), 0),
        XorShift64::new(XorShift64::REFERENCE_SEED).unwrap(),
        XorShift64::for_stream(XorShift64::REFERENCE_SEED, 1),
    )
    .unwrap();
    let states = generator.states(100_000).unwrap();
    let p = chi_square_symbols(&states, 4).unwrap();
    assert!(p >= 0.01, "{p}");
}

#[test]
fn identity_never_leaves_the_seed() {
    let f = VectorOfImages::identity(4).unwrap();
    let mut generator = Generator::new(
        GeneratorConfig::new(f, GeneratorConfig::strict_k(4), 9),
        XorShift64::new(1).unwrap(),
        XorShift64::new(2).unwrap(),
    )
    .unwrap();
    assert!(generator.states(1000).unwrap().iter().all(|&s| s == 9));
}
