use std::collections::HashSet;

use ci_prng::catalog::KNOWN_BALANCED;
use ci_prng::func::search_functions;

#[test]
fn eight_pair_search_contains_the_known_functions() {
    let found = search_functions(4, 8, true).unwrap();
    let set: HashSet<Vec<u32>> = found.iter().map(|f| f.images().to_vec()).collect();
    for (name, images) in KNOWN_BALANCED {
        assert!(set.contains(images), "{name} missing");
    }
    // hypercube Q4 matchings of every size, minus the perfect matchings
    // whose graph splits (272 - 268)
    assert_eq!(found.len(), 41_021);
    assert_eq!(search_functions(4, 8, false).unwrap().len(), 41_025);
}
