//! Chaotic-iteration pseudo-random number generators.
//!
//! A generator iterates a Boolean map `f: B^N -> B^N` one coordinate at a
//! time, with the coordinate chosen by an entropy source. The crate covers:
//!
//! * [`func`]: iteration functions as vectors of images, mapping matrices,
//!   balance checks and the paired-mutation search for new balanced maps;
//! * [`graph`]: iteration graphs and the strong-connectivity chaos check;
//! * [`sources`]: xorshift and scripted entropy inputs;
//! * [`generator`]: the round itself, with state, bit and byte outputs;
//! * [`stats`]: a seven-test statistical battery, a chi-square check on
//!   round outputs, and stream export for external suites;
//! * [`cli`]: the `ciprng` command-line front end.
//!
//! ```
//! use ci_prng::func::{is_balanced, mutate_pair, negation};
//! use ci_prng::graph::chaos_verdict;
//!
//! let f = mutate_pair(&negation(4)?, 1, 1)?;
//! assert_eq!(&f.images()[..3], &[14, 15, 13]);
//! assert!(is_balanced(&f).balanced);
//! assert!(chaos_verdict(&f)?.strongly_connected);
//! # Ok::<(), ci_prng::Error>(())
//! ```

pub mod bits;
pub mod catalog;
pub mod cli;
mod error;
pub mod func;
pub mod generator;
pub mod graph;
pub mod sources;
pub mod stats;

pub use error::{Error, ParseError, Result};
pub use func::VectorOfImages;
pub use generator::{Generator, GeneratorConfig, KMode};
pub use sources::{EntropySource, Scripted, Source, XorShift64};
