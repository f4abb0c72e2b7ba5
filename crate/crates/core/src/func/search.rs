use std::collections::HashSet;

use rayon::prelude::*;

use super::balance::{apply_pair, is_balanced};
use super::{Limits, VectorOfImages};
use crate::error::{Error, Result};
use crate::graph;

/// Enumerates functions reachable from the negation by at most
/// `max_mutations` paired mutations, keeping the balanced ones and, when
/// `require_chaos` is set, those whose iteration graph is strongly connected.
///
/// Order: breadth-first by mutation count, then by parent order, then
/// lexicographically by `(j, i)`. Duplicates keep their first occurrence.
pub fn search_functions(
    n_bits: u32,
    max_mutations: usize,
    require_chaos: bool,
) -> Result<Vec<VectorOfImages>> {
    search_functions_with_limits(n_bits, max_mutations, require_chaos, &Limits::default())
}

pub fn search_functions_with_limits(
    n_bits: u32,
    max_mutations: usize,
    require_chaos: bool,
    limits: &Limits,
) -> Result<Vec<VectorOfImages>> {
    limits.check_graph(n_bits)?;
    let root = VectorOfImages::negation_with_limits(n_bits, limits)?;
    let mask = root.mask();

    let mut seen: HashSet<VectorOfImages> = HashSet::from([root.clone()]);
    let mut found = vec![root.clone()];
    let mut frontier = vec![root];
    for _ in 0..max_mutations {
        let mut next = Vec::new();
        for f in &frontier {
            for q in 0..f.state_count() {
                // only extend with pairs that are still untouched
                if f.image(q as u32) != mask ^ q as u32 {
                    continue;
                }
                for bit in 1..=n_bits {
                    let Some(g) = apply_pair(f, q, bit) else {
                        continue;
                    };
                    if seen.contains(&g) {
                        continue;
                    }
                    if seen.len() >= limits.max_candidates {
                        return Err(Error::CandidateCap {
                            cap: limits.max_candidates,
                        });
                    }
                    seen.insert(g.clone());
                    next.push(g);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        found.extend(next.iter().cloned());
        frontier = next;
    }

    let keep: Vec<bool> = found
        .par_iter()
        .map(|f| {
            if !is_balanced(f).balanced {
                return Ok(false);
            }
            if !require_chaos {
                return Ok(true);
            }
            let g = graph::build_graph_with_limits(f, limits)?;
            Ok(graph::is_strongly_connected(&g).strongly_connected)
        })
        .collect::<Result<_>>()?;

    Ok(found
        .into_iter()
        .zip(keep)
        .filter_map(|(f, k)| k.then_some(f))
        .collect())
}
