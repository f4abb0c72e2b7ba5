//! Brute-force oracles shared by the integration tests. They work on
//! explicit Boolean vectors and never call into the library.

#![allow(dead_code)]

use std::collections::VecDeque;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// `x` as `(x_1, ..., x_N)`, `x_1` printed leftmost.
pub fn to_vector(x: u32, n: u32) -> Vec<bool> {
    (0..n).map(|i| (x >> (n - 1 - i)) & 1 == 1).collect()
}

pub fn from_vector(v: &[bool]) -> u32 {
    v.iter().fold(0, |acc, &b| (acc << 1) | b as u32)
}

/// One chaotic-iteration step: `x_s <- f(x)_s`, `s` in `1..=n`.
pub fn step(images: &[u32], n: u32, x: u32, s: u32) -> u32 {
    let fx = to_vector(images[x as usize], n);
    let mut v = to_vector(x, n);
    v[(s - 1) as usize] = fx[(s - 1) as usize];
    from_vector(&v)
}

/// Every single-coordinate update is a bijection of the state space.
pub fn balanced(images: &[u32], n: u32) -> bool {
    let size = 1usize << n;
    (1..=n).all(|s| {
        let mut seen = vec![false; size];
        for q in 0..size as u32 {
            seen[step(images, n, q, s) as usize] = true;
        }
        seen.iter().all(|&b| b)
    })
}

/// States reachable from `start`, following arcs forwards.
pub fn reachable(images: &[u32], n: u32, start: u32) -> Vec<bool> {
    let size = 1usize << n;
    let mut seen = vec![false; size];
    let mut queue = VecDeque::from([start]);
    seen[start as usize] = true;
    while let Some(x) = queue.pop_front() {
        for s in 1..=n {
            let y = step(images, n, x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Number of strongly connected components, from the full reachability
/// relation.
pub fn scc_count(images: &[u32], n: u32) -> usize {
    let size = 1usize << n;
    let reach: Vec<Vec<bool>> = (0..size as u32).map(|x| reachable(images, n, x)).collect();
    let mut assigned = vec![false; size];
    let mut count = 0;
    for x in 0..size {
        if assigned[x] {
            continue;
        }
        count += 1;
        for y in x..size {
            if reach[x][y] && reach[y][x] {
                assigned[y] = true;
            }
        }
    }
    count
}

pub fn strongly_connected(images: &[u32], n: u32) -> bool {
    let size = 1u32 << n;
    let from_zero = reachable(images, n, 0);
    from_zero.iter().all(|&b| b) && (1..size).all(|x| reachable(images, n, x)[0])
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_images(rng: &mut StdRng, n: u32) -> Vec<u32> {
    (0..1u32 << n).map(|_| rng.gen_range(0..1u32 << n)).collect()
}

/// The negation with a random set of disjoint hypercube edges "pinned":
/// for an edge `(q, q ^ w)`, bit `w` of both images is copied from the
/// source. Always balanced, often but not always strongly connected.
pub fn random_pinned_negation(rng: &mut StdRng, n: u32) -> Vec<u32> {
    let size = 1u32 << n;
    let mask = size - 1;
    let mut images: Vec<u32> = (0..size).map(|q| mask ^ q).collect();
    let mut used = vec![false; size as usize];
    let attempts = rng.gen_range(0..=size);
    for _ in 0..attempts {
        let q = rng.gen_range(0..size);
        let w = 1 << rng.gen_range(0..n);
        let partner = q ^ w;
        if used[q as usize] || used[partner as usize] {
            continue;
        }
        used[q as usize] = true;
        used[partner as usize] = true;
        images[q as usize] ^= w;
        images[partner as usize] ^= w;
    }
    images
}
