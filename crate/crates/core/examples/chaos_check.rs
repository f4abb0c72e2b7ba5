//! Strong-connectivity verdicts for a few functions, and the DOT export of
//! the smallest iteration graph.
//!
//! cargo run --example chaos_check > /dev/null   # verdicts go to stderr
//! cargo run --example chaos_check | dot -Tsvg > negation2.svg

use ci_prng::catalog::KNOWN_BALANCED;
use ci_prng::graph::{build_graph, chaos_verdict, export_dot};
use ci_prng::VectorOfImages;

fn main() -> ci_prng::Result<()> {
    let mut cases = vec![
        ("negation", VectorOfImages::negation(4)?),
        ("identity", VectorOfImages::identity(4)?),
        ("constant 0", VectorOfImages::new(4, vec![0; 16])?),
    ];
    for (name, images) in KNOWN_BALANCED {
        cases.push((name, VectorOfImages::new(4, images.to_vec())?));
    }
    for (name, f) in &cases {
        let v = chaos_verdict(f)?;
        match v.witness {
            None => eprintln!("{name:>10}: strongly connected"),
            Some((from, to)) => eprintln!(
                "{name:>10}: {} components, no path {from} -> {to}",
                v.scc_count
            ),
        }
    }
    print!("{}", export_dot(&build_graph(&VectorOfImages::negation(2)?)?));
    Ok(())
}
