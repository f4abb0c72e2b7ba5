//! Prints the mapping matrix of the negation (or of `f` read from a file)
//! and checks that every row is a permutation.
//!
//! cargo run --example mapping_matrix [-- FUNCTION_FILE]

use ci_prng::func::{is_balanced, mapping_matrix};
use ci_prng::VectorOfImages;

fn main() -> ci_prng::Result<()> {
    let f = match std::env::args().nth(1) {
        Some(path) => VectorOfImages::read_file(path)?,
        None => VectorOfImages::negation(4)?,
    };
    let m = mapping_matrix(&f);
    let width = m.state_count().to_string().len();

    print!("{:>3} |", "p\\q");
    for q in 0..m.state_count() {
        print!(" {q:>width$}");
    }
    println!();
    for p in 1..=m.n_bits() {
        print!("{p:>3} |");
        for cell in m.row(p) {
            print!(" {cell:>width$}");
        }
        println!();
    }
    println!("balanced: {}", is_balanced(&f).balanced);
    Ok(())
}
