//! Balance of iteration functions.
//!
//! Two independent checks live here. [`is_balanced`] is definitional: every
//! row of the mapping matrix must be a permutation of the states.
//! [`balance_rule_check`] is the paired-mutation rule that characterises the
//! functions obtained from the negation by single-bit edits, and
//! [`mutate_pair`] is the edit itself.

use super::{mapping_matrix, VectorOfImages};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `value` occurs `count` times in row `row` of the mapping matrix
    /// (0 = missing, 2 or more = duplicated).
    Row { row: u32, value: u32, count: u32 },
    /// The image at `position` differs from the negation's in several bits,
    /// which the paired-mutation rule does not cover.
    MultiBit {
        position: usize,
        image: u32,
        negation: u32,
    },
    /// The image at `position` flips bit `bit` but the compensating entry at
    /// `partner` does not hold the value required to restore balance.
    Unpaired {
        position: usize,
        bit: u32,
        partner: usize,
        expected: u32,
        found: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BalanceVerdict {
    pub balanced: bool,
    pub first_violation: Option<Violation>,
}

impl BalanceVerdict {
    fn pass() -> Self {
        BalanceVerdict {
            balanced: true,
            first_violation: None,
        }
    }

    fn fail(violation: Violation) -> Self {
        BalanceVerdict {
            balanced: false,
            first_violation: Some(violation),
        }
    }
}

/// Row-permutation check on the mapping matrix.
pub fn is_balanced(f: &VectorOfImages) -> BalanceVerdict {
    let matrix = mapping_matrix(f);
    let mut counts = vec![0u32; f.state_count()];
    for row in 1..=f.n_bits() {
        counts.iter_mut().for_each(|c| *c = 0);
        for &cell in matrix.row(row) {
            counts[cell as usize] += 1;
        }
        if let Some((value, &count)) = counts.iter().enumerate().find(|(_, &c)| c != 1) {
            return BalanceVerdict::fail(Violation::Row {
                row,
                value: value as u32,
                count,
            });
        }
    }
    BalanceVerdict::pass()
}

/// Paired-mutation balance rule relative to the negation `F_j = 2^N - j`.
///
/// Each image must either equal the negation's or differ from it in exactly
/// one bit `i`. In the latter case, with `C = F'_j` and the 1-based
/// position `j = q + 1`, the compensating position `2^N - C` must hold
/// `2^N - j`.
pub fn balance_rule_check(f: &VectorOfImages) -> BalanceVerdict {
    let size = f.state_count() as u64;
    let mask = f.mask();
    for (q, &image) in f.images().iter().enumerate() {
        let j = q as u64 + 1;
        let negation = (size - j) as u32;
        let delta = image ^ negation;
        if delta == 0 {
            continue;
        }
        if !delta.is_power_of_two() {
            return BalanceVerdict::fail(Violation::MultiBit {
                position: q,
                image,
                negation,
            });
        }
        let bit = delta.trailing_zeros() + 1;
        let weight = delta;
        // C = F_j - (F_j & 2^(i-1)) + ((j-1) & 2^(i-1))
        let c = negation - (negation & weight) + (q as u32 & weight);
        debug_assert_eq!(c, image);
        // 1-based position 2^N - C, stored at 0-based index 2^N - C - 1.
        let partner = (mask - c) as usize;
        let expected = (size - j) as u32;
        let found = f.images()[partner];
        if found != expected {
            return BalanceVerdict::fail(Violation::Unpaired {
                position: q,
                bit,
                partner,
                expected,
                found,
            });
        }
    }
    BalanceVerdict::pass()
}

/// Flips bit `bit` of the image at 1-based position `j`, and compensates at
/// position `2^N - F'_j` so the result stays balanced.
///
/// On an untouched pair this sets `F'_{2^N - F'_j} = 2^N - j`. Applying the
/// same `(j, bit)` again undoes the pair. Errors when `f` is unbalanced or
/// when either entry of the pair was already changed in another bit.
pub fn mutate_pair(f: &VectorOfImages, j: usize, bit: u32) -> Result<VectorOfImages> {
    let mutation_error = |reason: &str| Error::Mutation {
        position: j,
        bit,
        reason: reason.to_string(),
    };
    if j == 0 || j > f.state_count() {
        return Err(mutation_error("position outside 1..=2^N"));
    }
    if bit == 0 || bit > f.n_bits() {
        return Err(mutation_error("bit outside 1..=N"));
    }
    if !is_balanced(f).balanced {
        return Err(mutation_error("function is not balanced"));
    }
    apply_pair(f, j - 1, bit).ok_or_else(|| {
        mutation_error("compensating entry collides with a previously mutated entry")
    })
}

/// Paired flip without the balance precondition. Returns `None` when the
/// result would leave the single-bit paired family.
pub(crate) fn apply_pair(f: &VectorOfImages, q: usize, bit: u32) -> Option<VectorOfImages> {
    let weight = 1u32 << (bit - 1);
    let mask = f.mask();
    let partner = q ^ weight as usize;
    let mut out = f.clone();
    let images = out.images_mut();
    images[q] ^= weight;
    images[partner] ^= weight;

    let delta_q = images[q] ^ (mask ^ q as u32);
    let delta_partner = images[partner] ^ (mask ^ partner as u32);
    let in_family = |d: u32| d == 0 || d == weight;
    (in_family(delta_q) && delta_q == delta_partner).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::func::negation;
    use crate::catalog::KNOWN_BALANCED;
    use proptest::prelude::*;

    fn vector(images: &[u32]) -> VectorOfImages {
        let n_bits = images.len().trailing_zeros();
        VectorOfImages::new(n_bits, images.to_vec()).unwrap()
    }

    #[test]
    fn negation_is_balanced_up_to_sixteen_bits() {
        for n in 2..=16 {
            let f = negation(n).unwrap();
            assert!(is_balanced(&f).balanced, "N={n}");
            assert!(balance_rule_check(&f).balanced, "N={n}");
        }
    }

    #[test]
    fn constant_function_duplicates_row_one() {
        let verdict = is_balanced(&vector(&[0, 0, 0, 0]));
        assert!(!verdict.balanced);
        match verdict.first_violation {
            Some(Violation::Row { row: 1, count, .. }) => assert!(count >= 2),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn published_vectors_are_balanced() {
        for (name, images) in KNOWN_BALANCED {
            let f = vector(images);
            assert!(is_balanced(&f).balanced, "{name}");
            assert!(balance_rule_check(&f).balanced, "{name}");
        }
    }

    #[test]
    fn rule_rejects_a_missing_partner() {
        let mut images = negation(4).unwrap().into_images();
        images[0] = 14;
        images[1] = 14;
        let verdict = balance_rule_check(&vector(&images));
        assert_eq!(
            verdict.first_violation,
            Some(Violation::Unpaired {
                position: 0,
                bit: 1,
                partner: 1,
                expected: 15,
                found: 14,
            })
        );
    }

    #[test]
    fn rule_rejects_multi_bit_entries() {
        let verdict = balance_rule_check(&VectorOfImages::identity(3).unwrap());
        assert!(matches!(
            verdict.first_violation,
            Some(Violation::MultiBit { position: 0, .. })
        ));
    }

    #[test]
    fn single_pair_gives_first_published_vector() {
        let f = mutate_pair(&negation(4).unwrap(), 1, 1).unwrap();
        assert_eq!(f.images(), KNOWN_BALANCED[0].1);
    }

    #[test]
    fn second_published_vector_is_two_pairs_from_negation() {
        // brute force over every (j, i) applied to the first vector
        let first = vector(KNOWN_BALANCED[0].1);
        let hits: Vec<(usize, u32)> = (1..=16)
            .flat_map(|j| (1..=4).map(move |i| (j, i)))
            .filter(|&(j, i)| {
                mutate_pair(&first, j, i)
                    .map(|g| g.images() == KNOWN_BALANCED[1].1)
                    .unwrap_or(false)
            })
            .collect();
        // positions 5 and 7 (q = 4, 6) share bit 2
        assert_eq!(hits, vec![(5, 2), (7, 2)]);
    }

    #[test]
    fn mutation_matches_closed_form_on_untouched_pairs() {
        // F'_j = F_j with bit i flipped; k = 2^N - F'_j; F'_k = 2^N - j.
        let f = negation(4).unwrap();
        for j in 1..=16usize {
            for i in 1..=4u32 {
                let g = mutate_pair(&f, j, i).unwrap();
                let fj = 16 - j as u32;
                let fj_new = fj - (fj & (1 << (i - 1))) + ((j as u32 - 1) & (1 << (i - 1)));
                let k = 16 - fj_new as usize;
                assert_eq!(g.images()[j - 1], fj_new);
                assert_eq!(g.images()[k - 1], 16 - j as u32);
                let changed = (0..16).filter(|&q| g.images()[q] != f.images()[q]).count();
                assert_eq!(changed, 2);
            }
        }
    }

    #[test]
    fn mutation_errors() {
        let f = negation(4).unwrap();
        assert!(mutate_pair(&f, 0, 1).is_err());
        assert!(mutate_pair(&f, 17, 1).is_err());
        assert!(mutate_pair(&f, 1, 5).is_err());
        let unbalanced = vector(&[0, 0, 0, 0]);
        assert!(mutate_pair(&unbalanced, 1, 1).is_err());
        // position 1 already flipped in bit 1; flipping its bit 2 collides
        let g = mutate_pair(&f, 1, 1).unwrap();
        assert!(matches!(
            mutate_pair(&g, 1, 2),
            Err(Error::Mutation { position: 1, bit: 2, .. })
        ));
    }

    fn pair_sequence() -> impl Strategy<Value = Vec<(usize, u32)>> {
        proptest::collection::vec((1usize..=16, 1u32..=4), 0..12)
    }

    proptest! {
        #[test]
        fn mutations_preserve_balance_and_rule(steps in pair_sequence()) {
            let mut f = negation(4).unwrap();
            for (j, i) in steps {
                if let Ok(g) = mutate_pair(&f, j, i) {
                    prop_assert!(is_balanced(&g).balanced);
                    prop_assert!(balance_rule_check(&g).balanced);
                    prop_assert_eq!(mutate_pair(&g, j, i).unwrap(), f.clone());
                    f = g;
                }
            }
        }
    }
}
